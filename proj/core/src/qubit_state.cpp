#include "sculpt/qubit_state.hpp"

#include <sstream>
#include <stdexcept>

namespace sculpt {

QubitState::QubitState(int qubit_count) : n_(qubit_count) {
  if (qubit_count < 0 || qubit_count > 63) {
    throw std::invalid_argument("qubit count out of range: " + std::to_string(qubit_count));
  }
}

void QubitState::add(std::uint64_t bits, const ExactScalar& c) {
  if (n_ < 64 && bits >> n_) {
    throw std::invalid_argument("basis string out of range for qubit count");
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(bits, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void QubitState::add(const std::string& bits, const ExactScalar& c) {
  add(key_of(bits), c);
}

ExactScalar QubitState::coefficient(std::uint64_t bits) const {
  auto it = terms_.find(bits);
  return it == terms_.end() ? ExactScalar::zero() : it->second;
}

ExactScalar QubitState::coefficient(const std::string& bits) const {
  return coefficient(key_of(bits));
}

QubitState QubitState::scaled(const ExactScalar& c) const {
  QubitState out(n_);
  if (c.is_zero()) return out;
  for (const auto& [bits, coeff] : terms_) out.terms_.emplace(bits, coeff * c);
  return out;
}

QubitState operator+(const QubitState& a, const QubitState& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("qubit count mismatch in addition");
  QubitState out = a;
  for (const auto& [bits, coeff] : b.terms_) out.add(bits, coeff);
  return out;
}

std::string QubitState::bits_of(std::uint64_t key) const {
  std::string out(static_cast<std::size_t>(n_), '0');
  for (int i = 0; i < n_; ++i) {
    if (key >> (n_ - 1 - i) & 1) out[static_cast<std::size_t>(i)] = '1';
  }
  return out;
}

std::uint64_t QubitState::key_of(const std::string& bits) const {
  if (static_cast<int>(bits.size()) != n_) {
    throw std::invalid_argument("basis string '" + bits + "' has wrong length");
  }
  std::uint64_t key = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("basis string '" + bits + "' has non-binary character");
    }
    key = key << 1 | static_cast<std::uint64_t>(c == '1');
  }
  return key;
}

std::string QubitState::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [bits, coeff] : terms_) {
    if (!first) os << "\n";
    first = false;
    os << "(" << coeff.to_string() << ") |" << bits_of(bits) << ">";
  }
  return os.str();
}

std::optional<ExactScalar> equal_up_to_scalar(const QubitState& a, const QubitState& b) {
  if (a.qubit_count() != b.qubit_count()) {
    throw std::invalid_argument("qubit count mismatch in proportionality check");
  }
  if (a.is_zero() || b.is_zero()) return std::nullopt;
  const auto& [bits, coeff] = *b.terms().begin();
  ExactScalar a_coeff = a.coefficient(bits);
  if (a_coeff.is_zero()) return std::nullopt;
  ExactScalar lambda = a_coeff / coeff;
  if (a == b.scaled(lambda)) return lambda;
  return std::nullopt;
}

}  // namespace sculpt
