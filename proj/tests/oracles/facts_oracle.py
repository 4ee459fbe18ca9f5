#!/usr/bin/env python3
"""Independent recomputation of the catalog facts.

Algebras are rebuilt from concrete matrix realizations (or cross products)
rather than from the C++ structure constants. Derivation dimensions come from
substituting a symbolic matrix into the Leibniz rule.

Usage: facts_oracle.py [--check FROZEN.json]
"""
import argparse
import itertools
import json
import sys

import sympy as sp


def unit(n, i, j):
    m = sp.zeros(n, n)
    m[i, j] = 1
    return m


def from_matrices(basis):
    """Structure constants of the span of `basis` under the commutator."""
    flat = sp.Matrix([[x for x in b] for b in basis]).T
    n = len(basis)
    c = {}
    for i, j in itertools.product(range(n), repeat=2):
        br = basis[i] * basis[j] - basis[j] * basis[i]
        coords = flat.solve_least_squares(sp.Matrix([x for x in br]))
        assert flat * coords == sp.Matrix([x for x in br]), "basis not closed"
        for k in range(n):
            if coords[k] != 0:
                c[(i, j, k)] = sp.Rational(coords[k])
    return n, c


def from_rule(n, rule):
    c = {}
    for i, j in itertools.product(range(n), repeat=2):
        for k, v in rule(i, j).items():
            if v != 0:
                c[(i, j, k)] = sp.Rational(v)
    return n, c


def abelian(n):
    return n, {}


def heisenberg3():
    return from_matrices([unit(3, 0, 1), unit(3, 1, 2), unit(3, 0, 2)])


def aff1():
    return from_matrices([unit(2, 0, 0), unit(2, 0, 1)])


def sl2():
    return from_matrices([sp.Matrix([[1, 0], [0, -1]]), unit(2, 0, 1), unit(2, 1, 0)])


def so3():
    e = [sp.Matrix([1 if t == s else 0 for t in range(3)]) for s in range(3)]

    def rule(i, j):
        v = e[i].cross(e[j])
        return {k: v[k] for k in range(3)}

    return from_rule(3, rule)


def gl(n):
    return from_matrices([unit(n, i, j) for i in range(n) for j in range(n)])


def upper_triangular(n):
    return from_matrices([unit(n, i, j) for i in range(n) for j in range(i, n)])


def sl2_rad2():
    # affine sl2: [[A, v], [0, 0]] with A traceless
    h = sp.zeros(3, 3)
    h[0, 0], h[1, 1] = 1, -1
    return from_matrices([h, unit(3, 0, 1), unit(3, 1, 0), unit(3, 0, 2), unit(3, 1, 2)])


def direct_sum(a, b):
    na, ca = a
    nb, cb = b
    c = dict(ca)
    for (i, j, k), v in cb.items():
        c[(i + na, j + na, k + na)] = v
    return na + nb, c


def ad(alg, i):
    n, c = alg
    m = sp.zeros(n, n)
    for j in range(n):
        for k in range(n):
            m[k, j] = c.get((i, j, k), 0)
    return m


def bracket_vec(alg, x, y):
    n, c = alg
    out = sp.zeros(n, 1)
    for (i, j, k), v in c.items():
        out[k] += x[i] * y[j] * v
    return out


def center_dim(alg):
    n, _ = alg
    if n == 0:
        return 0
    # x is central iff sum_i x_i ad_i = 0
    cols = sp.Matrix.hstack(*[sp.Matrix(list(ad(alg, i))) for i in range(n)])
    return n - cols.rank()


def derived_basis(alg):
    n, _ = alg
    e = sp.eye(n)
    vecs = [bracket_vec(alg, e[:, i], e[:, j]) for i, j in itertools.combinations(range(n), 2)]
    space = sp.Matrix.hstack(*vecs).columnspace() if vecs else []
    return sp.Matrix.hstack(*space) if space else sp.zeros(n, 0)


def killing(alg):
    n, _ = alg
    ads = [ad(alg, i) for i in range(n)]
    return sp.Matrix(n, n, lambda i, j: (ads[i] * ads[j]).trace())


def radical_dim(alg):
    n, _ = alg
    d = derived_basis(alg)
    if d.shape[1] == 0:
        return n
    constraints = d.T * killing(alg)
    return n - constraints.rank()


def derivation_dim(alg):
    n, c = alg
    syms = sp.symbols(f"f0:{n * n}")
    f = sp.Matrix(n, n, syms)
    eqs = []
    basis = [sp.eye(n)[:, i] for i in range(n)]
    for i, j in itertools.combinations(range(n), 2):
        lhs = f * bracket_vec(alg, basis[i], basis[j])
        rhs = bracket_vec(alg, f * basis[i], basis[j]) + bracket_vec(alg, basis[i], f * basis[j])
        eqs.extend(list(lhs - rhs))
    eqs = [e for e in eqs if e != 0]
    if not eqs:
        return n * n
    a, _ = sp.linear_eq_to_matrix(eqs, syms)
    return n * n - a.rank()


def facts(alg):
    n, _ = alg
    center = center_dim(alg)
    derived = derived_basis(alg).shape[1]
    radical = radical_dim(alg)
    der = derivation_dim(alg)
    return {
        "dim": n,
        "center": center,
        "derived": derived,
        "radical": radical,
        "derivations": der,
        "perfect": derived == n,
        "complete": center == 0 and der == n,
        "semisimple": n > 0 and killing(alg).det() != 0,
    }


CATALOG = {
    "abelian(1)": lambda: abelian(1),
    "abelian(2)": lambda: abelian(2),
    "abelian(3)": lambda: abelian(3),
    "abelian(4)": lambda: abelian(4),
    "heisenberg3": heisenberg3,
    "aff1": aff1,
    "sl2": sl2,
    "so3": so3,
    "gl2": lambda: gl(2),
    "upper_triangular(3)": lambda: upper_triangular(3),
    "sl2_rad2": sl2_rad2,
    "sl2_sum_aff1": lambda: direct_sum(sl2(), aff1()),
    "so3_sum_so3": lambda: direct_sum(so3(), so3()),
    "sl2_sum_so3": lambda: direct_sum(sl2(), so3()),
}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--check", help="frozen JSON to compare against")
    args = ap.parse_args()
    table = {name: facts(build()) for name, build in CATALOG.items()}
    if args.check:
        with open(args.check) as fh:
            frozen = json.load(fh)
        if frozen != table:
            for name in sorted(set(frozen) | set(table)):
                if frozen.get(name) != table.get(name):
                    print(f"mismatch {name}: frozen={frozen.get(name)} oracle={table.get(name)}")
            return 1
        print(f"{len(table)} entries agree")
        return 0
    json.dump(table, sys.stdout, indent=2, sort_keys=True)
    print()
    return 0


if __name__ == "__main__":
    sys.exit(main())
