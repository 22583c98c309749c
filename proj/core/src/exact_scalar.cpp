#include "sculpt/exact_scalar.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace sculpt {

namespace {

mpq_class parse_rational(const std::string& text) {
  mpq_class value;
  if (mpq_set_str(value.get_mpq_t(), text.c_str(), 10) != 0) {
    throw std::invalid_argument("malformed rational: '" + text + "'");
  }
  if (value.get_den() == 0) {
    throw std::invalid_argument("zero denominator in rational: '" + text + "'");
  }
  value.canonicalize();
  return value;
}

// Inverse of a nonzero element p + q*sqrt2 of Q(sqrt2):
// (p - q*sqrt2) / (p^2 - 2 q^2). The denominator cannot vanish for
// nonzero (p, q) since sqrt2 is irrational.
void invert_real_quadratic(const mpq_class& p, const mpq_class& q,
                           mpq_class& out_p, mpq_class& out_q) {
  mpq_class den = p * p - 2 * q * q;
  out_p = p / den;
  out_q = -q / den;
}

}  // namespace

ExactScalar ExactScalar::from_strings(const std::string& p, const std::string& q,
                                      const std::string& r, const std::string& s) {
  return ExactScalar(parse_rational(p), parse_rational(q), parse_rational(r),
                     parse_rational(s));
}

ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
  // Scheme amplitudes are mostly +-1; skip the full product for those.
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  if (a.is_zero() || b.is_zero()) return ExactScalar::zero();
  if (a.p_ == -1 && a.q_ == 0 && a.r_ == 0 && a.s_ == 0) return -b;
  if (b.p_ == -1 && b.q_ == 0 && b.r_ == 0 && b.s_ == 0) return -a;

  // Real and imaginary parts are elements of Q(sqrt2):
  // (p + q*sqrt2)(p' + q'*sqrt2) = (pp' + 2qq') + (pq' + qp')*sqrt2.
  // Complex product: (A + iB)(C + iD) = (AC - BD) + i(AD + BC).
  auto mul_p = [](const mpq_class& x1, const mpq_class& y1, const mpq_class& x2,
                  const mpq_class& y2) -> mpq_class { return x1 * x2 + 2 * y1 * y2; };
  auto mul_q = [](const mpq_class& x1, const mpq_class& y1, const mpq_class& x2,
                  const mpq_class& y2) -> mpq_class { return x1 * y2 + y1 * x2; };

  mpq_class p = mul_p(a.p_, a.q_, b.p_, b.q_) - mul_p(a.r_, a.s_, b.r_, b.s_);
  mpq_class q = mul_q(a.p_, a.q_, b.p_, b.q_) - mul_q(a.r_, a.s_, b.r_, b.s_);
  mpq_class r = mul_p(a.p_, a.q_, b.r_, b.s_) + mul_p(a.r_, a.s_, b.p_, b.q_);
  mpq_class s = mul_q(a.p_, a.q_, b.r_, b.s_) + mul_q(a.r_, a.s_, b.p_, b.q_);
  return ExactScalar::raw(std::move(p), std::move(q), std::move(r), std::move(s));
}

ExactScalar ExactScalar::inverse() const {
  if (is_zero()) {
    throw std::domain_error("inverse of zero");
  }
  // 1/z = conj(z) / (z * conj(z)); the norm is a nonzero element of Q(sqrt2).
  ExactScalar n = norm_squared();
  mpq_class inv_p, inv_q;
  invert_real_quadratic(n.p_, n.q_, inv_p, inv_q);
  return conj() * ExactScalar::raw(std::move(inv_p), std::move(inv_q), 0, 0);
}

int ExactScalar::cmp(const ExactScalar& a, const ExactScalar& b) {
  if (int c = ::cmp(a.p_, b.p_); c != 0) return c;
  if (int c = ::cmp(a.q_, b.q_); c != 0) return c;
  if (int c = ::cmp(a.r_, b.r_); c != 0) return c;
  return ::cmp(a.s_, b.s_);
}

namespace {

// Renders p + q*sqrt2 without redundant terms: "0", "1/2", "-1*sqrt2",
// "1 + 1/2*sqrt2".
std::string quadratic_to_string(const mpq_class& p, const mpq_class& q) {
  if (p == 0 && q == 0) return "0";
  std::ostringstream os;
  if (p != 0) os << p.get_str();
  if (q != 0) {
    if (p != 0) os << (q > 0 ? " + " : " - ") << mpq_class(abs(q)).get_str();
    else os << q.get_str();
    os << "*sqrt2";
  }
  return os.str();
}

}  // namespace

std::string ExactScalar::to_string() const {
  std::string real = quadratic_to_string(p_, q_);
  if (is_real()) return real;
  std::string imag = quadratic_to_string(r_, s_);
  if (p_ == 0 && q_ == 0) return "(" + imag + ")i";
  return "(" + real + ") + (" + imag + ")i";
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& v) {
  return os << v.to_string();
}

}  // namespace sculpt
