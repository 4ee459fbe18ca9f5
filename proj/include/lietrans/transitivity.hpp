#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lietrans/derivations.hpp"
#include "lietrans/lie_algebra.hpp"

namespace lietrans {

/// h = l_0 <| l_1 <| ... <| l_n = top, all subalgebras of one parent.
class IdealChain {
 public:
  /// Throws PreconditionError unless each entry is an ideal of the next.
  explicit IdealChain(std::vector<Subalgebra> links);

  const std::vector<Subalgebra>& links() const { return links_; }
  std::size_t length() const { return links_.size(); }
  const Subalgebra& front() const { return links_.front(); }
  const Subalgebra& back() const { return links_.back(); }

  /// Re-checks every link from scratch.
  bool verify() const;

 private:
  std::vector<Subalgebra> links_;
};

/// Smallest ideal of `within` containing h (h must lie inside `within`).
Subspace ideal_closure_in(const LieAlgebra& g, const Subspace& within, const Subspace& h);
Subalgebra ideal_closure(const LieAlgebra& g, const Subalgebra& h);

struct SubidealResult {
  std::optional<IdealChain> chain;  // set iff h is a subideal
  std::vector<Subspace> series;     // top, closure in top, closure in that, ...
  bool is_subideal() const { return chain.has_value(); }
  /// Where the descending series stopped; equals h exactly for subideals.
  const Subspace& floor() const { return series.back(); }
};

/// Decides whether h is a subideal of k via the descending ideal-closure
/// series. Positive answers carry a verified chain from h up to k.
SubidealResult subideal_chain(const Subalgebra& k, const Subalgebra& h);
SubidealResult subideal_chain(const LieAlgebra& g, const Subalgebra& h);

/// Outcome of a theorem check. HypothesisNotSatisfied is not a failure.
enum class Verdict { Pass, Fail, HypothesisNotSatisfied };
std::string to_string(Verdict v);

struct PerfectTransitivityReport {
  IdealChain chain;
  bool is_ideal = false;
  Verdict verdict() const { return is_ideal ? Verdict::Pass : Verdict::Fail; }
};
/// h perfect and a subideal of g implies h is an ideal of g. Throws
/// PreconditionError unless h is perfect and a subideal.
PerfectTransitivityReport check_perfect_transitivity(const LieAlgebra& g, const Subalgebra& h);

/// Constructive witness that a non-perfect h is not transitive:
/// k = h + h/[h,h], f(X, Y) = (0, pi(X)), ambient = H(k).
struct CounterexampleCertificate {
  LieAlgebra h;
  LieAlgebra k;
  Mat derivation_f;        // f on k
  LieAlgebra ambient;      // H(k)
  IdealChain chain;        // [h x| 0, k x| 0, H(k)]
  std::size_t x_index = 0; // X_o = e_{x_index} of h, pi(X_o) != 0
  Vec witness_left;        // (X_o, 0, 0)
  Vec witness_right;       // (0, 0, f)
  Vec escaping_value;      // bracket of the witness pair

  /// Re-derives every recorded claim from scratch. In particular the escaping
  /// value must lie outside h x| 0.
  bool verify() const;
};
/// Throws PreconditionError("h is perfect") when h = [h, h].
CounterexampleCertificate counterexample_extension(const LieAlgebra& h);

struct CompleteSubidealReport {
  bool is_ideal = false;
  Subspace centralizer;  // c_k(h)
  bool sum_is_k = false;
  bool intersection_zero = false;
  bool cross_bracket_zero = false;
  bool decomposition_holds() const { return sum_is_k && intersection_zero && cross_bracket_zero; }
  Verdict verdict() const { return is_ideal && decomposition_holds() ? Verdict::Pass : Verdict::Fail; }
};
/// h complete, h <| k <| g, k centerless. Throws PreconditionError otherwise.
CompleteSubidealReport check_complete_subideal(const LieAlgebra& g, const Subalgebra& h, const Subalgebra& k);

struct RadicalIntersectionReport {
  Subspace radical_h;
  Subspace radical_g_cap_h;
  bool equal() const { return radical_h == radical_g_cap_h; }
};
/// Throws PreconditionError when h is not a subideal of g.
RadicalIntersectionReport check_radical_intersection(const LieAlgebra& g, const Subalgebra& h);

struct LeviCriterionReport {
  bool ideal = false;            // h <| g
  bool radical_ideal = false;    // r_h <| g
  bool radical_bracket = false;  // [r_h, g] in h
  bool agree() const { return ideal == radical_ideal && radical_ideal == radical_bracket; }
};
/// Throws PreconditionError when h is not a subideal of g.
LeviCriterionReport levi_criterion(const LieAlgebra& g, const Subalgebra& h);

struct SkewFormHypotheses {
  Inertia on_h;
  Inertia on_complement;
  bool skew = false;
  bool nondegenerate_on_h() const { return on_h.nondegenerate(); }
  bool positive_on_complement() const { return on_complement.positive_definite(); }
  bool hold() const { return nondegenerate_on_h() && positive_on_complement() && skew; }
};
/// B nondegenerate on h, positive definite on the B-orthogonal complement of
/// h, and ad_X skew for X in h.
SkewFormHypotheses skew_form_hypotheses(const SymForm& b, const Subalgebra& h);
/// ad_X skew with respect to B for every basis vector X of s.
bool ad_skew_on(const SymForm& b, const Subspace& s);

struct SkewFormReport {
  SkewFormHypotheses hypotheses;
  bool subideal = false;
  bool ideal = false;
  Verdict verdict() const {
    if (!hypotheses.hold()) return Verdict::HypothesisNotSatisfied;
    return subideal == ideal ? Verdict::Pass : Verdict::Fail;
  }
};
/// Throws PreconditionError unless h is inside k (both subalgebras of B's algebra).
SkewFormReport check_skew_form_criterion(const SymForm& b, const Subalgebra& h, const Subalgebra& k);

struct CartanDecomposition {
  Subalgebra u;   // +1 eigenspace
  Subspace p;     // -1 eigenspace
  SymForm inner;  // <X, Y> = -K(X, theta Y), positive definite
  Inertia killing_on_u;
  Inertia killing_on_p;
};
/// Throws PreconditionError when theta is not an involutive automorphism, g
/// is not semisimple, or <,> is not positive definite; InvariantViolation if
/// the resulting eigenspaces break the bracket relations of a Cartan pair.
CartanDecomposition cartan_eigenspaces(const LieAlgebra& g, const LinMap& theta);

struct CartanCriterionReport {
  bool contains_u = false;
  bool contains_p = false;
  bool subideal = false;
  bool ideal = false;
  Verdict verdict() const { return subideal == ideal ? Verdict::Pass : Verdict::Fail; }
};
/// Throws PreconditionError unless h contains u or p and h is inside k.
CartanCriterionReport check_cartan_criterion(const LieAlgebra& g, const LinMap& theta, const Subalgebra& h,
                                             const Subalgebra& k);

/// h, N(h), N(N(h)), ... until it stops growing.
std::vector<Subalgebra> normalizer_tower(const LieAlgebra& g, const Subalgebra& h);
bool is_self_normalizing(const LieAlgebra& g, const Subalgebra& h);

namespace hypothesis {
struct Perfect {};
struct RadicalCentral {};
struct SkewForm { SymForm form; };
struct CompactType { SymForm form; };
struct CompactlyEmbedded { SymForm form; };
struct CartanEigenspace { LinMap theta; };
}  // namespace hypothesis

using SelfNormalizingHypothesis =
    std::variant<hypothesis::Perfect, hypothesis::RadicalCentral, hypothesis::SkewForm, hypothesis::CompactType,
                 hypothesis::CompactlyEmbedded, hypothesis::CartanEigenspace>;

/// Roman-numeral tag of the case: "i", "ii", "iii", "iv", "v" or "vi".
std::string hypothesis_tag(const SelfNormalizingHypothesis& h);

struct SelfNormalizingReport {
  std::string tag;
  bool hypothesis_holds = false;
  std::string hypothesis_detail;
  std::optional<Subalgebra> normalizer;
  std::size_t tower_length = 0;  // of the normalizer's own tower
  Verdict verdict() const {
    if (!hypothesis_holds) return Verdict::HypothesisNotSatisfied;
    return tower_length == 1 ? Verdict::Pass : Verdict::Fail;
  }
};
SelfNormalizingReport check_self_normalizing_theorem(const LieAlgebra& g, const Subalgebra& h,
                                                     const SelfNormalizingHypothesis& hyp);

}  // namespace lietrans
