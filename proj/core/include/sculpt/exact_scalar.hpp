#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace sculpt {

/// Element of the field Q(sqrt2, i), stored as (p + q*sqrt2) + i*(r + s*sqrt2)
/// with exact rational components. Every amplitude appearing in a sculpting
/// scheme (+-1, powers of 1/sqrt2, and their products) lives here, so all
/// comparisons in the library are exact structural equality -- no floating
/// point anywhere.
///
/// Components are kept canonical (lowest terms, positive denominator) by
/// mpq_class; equality is componentwise.
class ExactScalar {
 public:
  ExactScalar() : p_(0), q_(0), r_(0), s_(0) {}
  ExactScalar(long value) : p_(value), q_(0), r_(0), s_(0) {}  // NOLINT: implicit by design
  ExactScalar(mpq_class p, mpq_class q, mpq_class r, mpq_class s)
      : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), s_(std::move(s)) {
    // mpq_class arithmetic keeps canonical operands canonical, but values
    // built from raw numerator/denominator pairs need not be.
    p_.canonicalize();
    q_.canonicalize();
    r_.canonicalize();
    s_.canonicalize();
  }

  static ExactScalar zero() { return ExactScalar(0); }
  static ExactScalar one() { return ExactScalar(1); }
  static ExactScalar rational(mpq_class p) { return ExactScalar(std::move(p), 0, 0, 0); }
  static ExactScalar sqrt2() { return ExactScalar(0, 1, 0, 0); }
  /// 1/sqrt2 == sqrt2/2, exactly.
  static ExactScalar inv_sqrt2() { return ExactScalar(0, mpq_class(1, 2), 0, 0); }
  static ExactScalar imaginary_unit() { return ExactScalar(0, 0, 1, 0); }

  /// Parses the four components from "num/den" (or plain "num") strings.
  /// Throws std::invalid_argument on malformed input or zero denominators.
  static ExactScalar from_strings(const std::string& p, const std::string& q,
                                  const std::string& r, const std::string& s);

  const mpq_class& p() const { return p_; }
  const mpq_class& q() const { return q_; }
  const mpq_class& r() const { return r_; }
  const mpq_class& s() const { return s_; }

  bool is_zero() const { return p_ == 0 && q_ == 0 && r_ == 0 && s_ == 0; }
  bool is_one() const { return p_ == 1 && q_ == 0 && r_ == 0 && s_ == 0; }
  bool is_real() const { return r_ == 0 && s_ == 0; }

  ExactScalar conj() const { return raw(p_, q_, -r_, -s_); }

  /// z * conj(z); always real and nonnegative.
  ExactScalar norm_squared() const { return *this * conj(); }

  /// Multiplicative inverse. Throws std::domain_error on zero.
  ExactScalar inverse() const;

  ExactScalar operator-() const { return raw(-p_, -q_, -r_, -s_); }

  friend ExactScalar operator+(const ExactScalar& a, const ExactScalar& b) {
    return raw(a.p_ + b.p_, a.q_ + b.q_, a.r_ + b.r_, a.s_ + b.s_);
  }
  friend ExactScalar operator-(const ExactScalar& a, const ExactScalar& b) {
    return raw(a.p_ - b.p_, a.q_ - b.q_, a.r_ - b.r_, a.s_ - b.s_);
  }
  friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b);
  friend ExactScalar operator/(const ExactScalar& a, const ExactScalar& b) {
    return a * b.inverse();
  }

  ExactScalar& operator+=(const ExactScalar& o) { return *this = *this + o; }
  ExactScalar& operator-=(const ExactScalar& o) { return *this = *this - o; }
  ExactScalar& operator*=(const ExactScalar& o) { return *this = *this * o; }

  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return a.p_ == b.p_ && a.q_ == b.q_ && a.r_ == b.r_ && a.s_ == b.s_;
  }
  friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }

  /// Total order on the canonical representation, for deterministic sorts.
  /// Not the numeric order of the real line.
  static int cmp(const ExactScalar& a, const ExactScalar& b);

  /// Compact human-readable form, e.g. "1", "-1/2", "1/2*sqrt2",
  /// "(1 + 1*sqrt2) + (1/2)i".
  std::string to_string() const;

  /// The four components as canonical "num/den" (or "num") strings.
  std::string p_string() const { return p_.get_str(); }
  std::string q_string() const { return q_.get_str(); }
  std::string r_string() const { return r_.get_str(); }
  std::string s_string() const { return s_.get_str(); }

 private:
  struct RawTag {};
  ExactScalar(RawTag, mpq_class p, mpq_class q, mpq_class r, mpq_class s)
      : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), s_(std::move(s)) {}

  // mpq arithmetic on canonical operands yields canonical results; skip the
  // constructor's canonicalization for values built that way.
  static ExactScalar raw(mpq_class p, mpq_class q, mpq_class r, mpq_class s) {
    return ExactScalar(RawTag{}, std::move(p), std::move(q), std::move(r), std::move(s));
  }

  mpq_class p_, q_, r_, s_;
};

std::ostream& operator<<(std::ostream& os, const ExactScalar& v);

}  // namespace sculpt
