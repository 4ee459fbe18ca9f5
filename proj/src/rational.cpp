#include "lietrans/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "lietrans/errors.hpp"

namespace lietrans {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

mpq_class& scratch() {
  thread_local mpq_class tmp;
  return tmp;
}

}  // namespace

Rat::Rat(long num, long den) : v_(num, den) {
  if (den == 0) throw std::domain_error("Rat: zero denominator");
  v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);

  std::string_view digits = num;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (!all_digits(digits)) throw ParseError("", "malformed rational '" + std::string(text) + "'");
  if (slash != std::string_view::npos && !all_digits(den))
    throw ParseError("", "malformed rational '" + std::string(text) + "'");

  mpz_class n(std::string(digits), 10);
  if (num.front() == '-') n = -n;
  mpz_class d(1);
  if (slash != std::string_view::npos) {
    d = mpz_class(std::string(den), 10);
    if (d == 0) throw ParseError("", "zero denominator in '" + std::string(text) + "'");
  }
  mpq_class q(n, d);
  q.canonicalize();
  return Rat(q);
}

std::string Rat::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat Rat::inverse() const {
  if (is_zero()) throw std::domain_error("Rat: inverse of zero");
  return Rat(mpq_class(1 / v_));
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("Rat: division by zero");
  v_ /= o.v_;
  return *this;
}

void Rat::add_mul(const Rat& a, const Rat& b) {
  if (a.is_zero() || b.is_zero()) return;
  mpq_class& t = scratch();
  mpq_mul(t.get_mpq_t(), a.v_.get_mpq_t(), b.v_.get_mpq_t());
  mpq_add(v_.get_mpq_t(), v_.get_mpq_t(), t.get_mpq_t());
}

void Rat::sub_mul(const Rat& a, const Rat& b) {
  if (a.is_zero() || b.is_zero()) return;
  mpq_class& t = scratch();
  mpq_mul(t.get_mpq_t(), a.v_.get_mpq_t(), b.v_.get_mpq_t());
  mpq_sub(v_.get_mpq_t(), v_.get_mpq_t(), t.get_mpq_t());
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace lietrans
