#include "sculpt/internal_state.hpp"

#include <stdexcept>

namespace sculpt {

InternalState InternalState::from_symbol(char symbol) {
  switch (symbol) {
    case '+': return plus();
    case '-': return minus();
    case '0': return zero();
    case '1': return one();
    default:
      throw std::invalid_argument(std::string("unknown internal state symbol: '") +
                                  symbol + "'");
  }
}

bool InternalState::is_normalized() const {
  return c_plus_.norm_squared() + c_minus_.norm_squared() == ExactScalar::one();
}

bool InternalState::orthogonal_to(const InternalState& other) const {
  return (c_plus_.conj() * other.c_plus_ + c_minus_.conj() * other.c_minus_).is_zero();
}

std::optional<char> InternalState::symbol() const {
  for (char c : {'+', '-', '0', '1'}) {
    if (*this == from_symbol(c)) return c;
  }
  return std::nullopt;
}

int InternalState::cmp(const InternalState& a, const InternalState& b) {
  if (int c = ExactScalar::cmp(a.c_plus_, b.c_plus_); c != 0) return c;
  return ExactScalar::cmp(a.c_minus_, b.c_minus_);
}

std::string InternalState::to_string() const {
  if (auto s = symbol()) return std::string(1, *s);
  return "(" + c_plus_.to_string() + ")|+> + (" + c_minus_.to_string() + ")|->";
}

}  // namespace sculpt
