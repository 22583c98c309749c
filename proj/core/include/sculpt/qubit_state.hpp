#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "sculpt/exact_scalar.hpp"

namespace sculpt {

/// A linear combination of n-qubit computational basis strings with exact
/// coefficients. Basis strings are read left to right: qubit 1 is the
/// leftmost character of the printed ket. Zero-coefficient terms are never
/// stored.
class QubitState {
 public:
  explicit QubitState(int qubit_count);

  int qubit_count() const { return n_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * |bits>, merging with an existing term and dropping exact zeros.
  void add(std::uint64_t bits, const ExactScalar& c);
  void add(const std::string& bits, const ExactScalar& c);

  ExactScalar coefficient(std::uint64_t bits) const;
  ExactScalar coefficient(const std::string& bits) const;

  const std::map<std::uint64_t, ExactScalar>& terms() const { return terms_; }

  QubitState scaled(const ExactScalar& c) const;
  friend QubitState operator+(const QubitState& a, const QubitState& b);

  friend bool operator==(const QubitState& a, const QubitState& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const QubitState& a, const QubitState& b) { return !(a == b); }

  std::string bits_of(std::uint64_t key) const;
  std::uint64_t key_of(const std::string& bits) const;

  /// One term per line, basis strings in lexicographic order.
  std::string to_string() const;

 private:
  int n_;
  std::map<std::uint64_t, ExactScalar> terms_;
};

/// The unique nonzero lambda with a == lambda * b, if it exists. Returns
/// nullopt when either state is zero or the states are not proportional.
/// Throws std::invalid_argument on mismatched qubit counts.
std::optional<ExactScalar> equal_up_to_scalar(const QubitState& a, const QubitState& b);

}  // namespace sculpt
