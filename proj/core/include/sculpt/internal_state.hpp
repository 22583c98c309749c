#pragma once

#include <optional>
#include <string>

#include "sculpt/exact_scalar.hpp"

namespace sculpt {

/// The two boson internal levels that creation/annihilation operators act on.
enum class Level { Plus, Minus };

/// A single-boson internal state, expanded in the {+,-} level basis.
///
/// The four canonical states used by sculpting schemes:
///   plus  = |+>
///   minus = |->
///   zero  = (|+> + |->)/sqrt2
///   one   = (|+> - |->)/sqrt2
/// They serialize as the symbols '+', '-', '0', '1' and render as the edge
/// colors solid black, dashed black, red, blue.
class InternalState {
 public:
  InternalState(ExactScalar c_plus, ExactScalar c_minus)
      : c_plus_(std::move(c_plus)), c_minus_(std::move(c_minus)) {}

  static InternalState plus() { return {1, 0}; }
  static InternalState minus() { return {0, 1}; }
  static InternalState zero() { return {ExactScalar::inv_sqrt2(), ExactScalar::inv_sqrt2()}; }
  static InternalState one() { return {ExactScalar::inv_sqrt2(), -ExactScalar::inv_sqrt2()}; }

  /// Throws std::invalid_argument for anything but '+', '-', '0', '1'.
  static InternalState from_symbol(char symbol);

  const ExactScalar& c_plus() const { return c_plus_; }
  const ExactScalar& c_minus() const { return c_minus_; }

  /// |c_plus|^2 + |c_minus|^2 == 1, exactly.
  bool is_normalized() const;

  /// <this|other> == 0, exactly.
  bool orthogonal_to(const InternalState& other) const;

  /// The canonical symbol, if this is one of the four canonical states.
  std::optional<char> symbol() const;

  friend bool operator==(const InternalState& a, const InternalState& b) {
    return a.c_plus_ == b.c_plus_ && a.c_minus_ == b.c_minus_;
  }
  friend bool operator!=(const InternalState& a, const InternalState& b) { return !(a == b); }

  static int cmp(const InternalState& a, const InternalState& b);

  std::string to_string() const;

 private:
  ExactScalar c_plus_, c_minus_;
};

}  // namespace sculpt
