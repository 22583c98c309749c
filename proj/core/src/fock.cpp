#include "sculpt/fock.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace sculpt {

namespace {

FockState canonicalize(std::map<OccupancyMap, ExactScalar> accum) {
  std::vector<FockTerm> terms;
  terms.reserve(accum.size());
  for (auto& [occ, coeff] : accum) {
    if (!coeff.is_zero()) terms.push_back(FockTerm{std::move(coeff), occ});
  }
  FockState out = FockState::from_terms(std::move(terms));
  return out;
}

std::string occupancy_to_string(const OccupancyMap& occ) {
  if (occ.empty()) return "|vac>";
  std::ostringstream os;
  for (const auto& [label, counts] : occ) {
    for (int i = 0; i < counts.plus; ++i) os << "adag[" << label << ",+]";
    for (int i = 0; i < counts.minus; ++i) os << "adag[" << label << ",-]";
  }
  os << "|vac>";
  return os.str();
}

}  // namespace

FockState FockState::vacuum() {
  FockState s;
  s.terms_.push_back(FockTerm{ExactScalar::one(), {}});
  return s;
}

FockState FockState::from_terms(std::vector<FockTerm> terms) {
  std::map<OccupancyMap, ExactScalar> accum;
  for (auto& term : terms) {
    auto [it, inserted] = accum.emplace(std::move(term.occupancy), term.coefficient);
    if (!inserted) it->second += term.coefficient;
  }
  FockState out;
  out.terms_.reserve(accum.size());
  for (auto& [occ, coeff] : accum) {
    if (!coeff.is_zero()) out.terms_.push_back(FockTerm{std::move(coeff), occ});
  }
  return out;
}

FockState FockState::scaled(const ExactScalar& c) const {
  if (c.is_zero()) return zero();
  FockState out;
  out.terms_.reserve(terms_.size());
  for (const auto& term : terms_) {
    out.terms_.push_back(FockTerm{term.coefficient * c, term.occupancy});
  }
  return out;
}

FockState operator+(const FockState& a, const FockState& b) {
  std::map<OccupancyMap, ExactScalar> accum;
  for (const auto& term : a.terms_) accum.emplace(term.occupancy, term.coefficient);
  for (const auto& term : b.terms_) {
    auto [it, inserted] = accum.emplace(term.occupancy, term.coefficient);
    if (!inserted) it->second += term.coefficient;
  }
  return canonicalize(std::move(accum));
}

bool operator==(const FockState& a, const FockState& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].occupancy != b.terms_[i].occupancy) return false;
    if (a.terms_[i].coefficient != b.terms_[i].coefficient) return false;
  }
  return true;
}

std::string FockState::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& term : terms_) {
    if (!first) os << "\n";
    first = false;
    os << "(" << term.coefficient.to_string() << ") " << occupancy_to_string(term.occupancy);
  }
  return os.str();
}

std::string AnnihilationOp::to_string() const {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (const auto& summand : summands) {
    std::string amp = summand.amplitude.to_string();
    if (!first) os << " + ";
    first = false;
    if (!summand.amplitude.is_one()) os << "(" << amp << ")*";
    os << "a[" << summand.mode.label << "," << summand.state.to_string() << "]";
  }
  os << ")";
  return os.str();
}

std::string SculptingOperator::to_string() const {
  std::ostringstream os;
  for (const auto& factor : factors) os << factor.to_string();
  return os.str();
}

namespace {

std::vector<OpSummand> sorted_summands(const AnnihilationOp& op) {
  std::vector<OpSummand> out = op.summands;
  std::sort(out.begin(), out.end(), [](const OpSummand& a, const OpSummand& b) {
    if (a.mode.label != b.mode.label) return a.mode.label < b.mode.label;
    return InternalState::cmp(a.state, b.state) < 0;
  });
  return out;
}

}  // namespace

bool same_operator(const SculptingOperator& a, const SculptingOperator& b) {
  if (a.factors.size() != b.factors.size()) return false;
  for (std::size_t i = 0; i < a.factors.size(); ++i) {
    auto lhs = sorted_summands(a.factors[i]);
    auto rhs = sorted_summands(b.factors[i]);
    if (lhs.size() != rhs.size()) return false;
    for (std::size_t j = 0; j < lhs.size(); ++j) {
      if (lhs[j].mode != rhs[j].mode || lhs[j].state != rhs[j].state ||
          lhs[j].amplitude != rhs[j].amplitude) {
        return false;
      }
    }
  }
  return true;
}

FockState initial_state(const std::vector<ModeId>& modes) {
  OccupancyMap occ;
  for (const auto& mode : modes) {
    Occupancy counts = mode.kind == ModeKind::Qubit ? Occupancy{1, 1} : Occupancy{1, 0};
    if (!occ.emplace(mode.label, counts).second) {
      throw std::invalid_argument("duplicate mode label: '" + mode.label + "'");
    }
  }
  return FockState::from_terms({FockTerm{ExactScalar::one(), std::move(occ)}});
}

FockState apply_single(const std::string& mode_label, Level level, const FockState& state) {
  std::vector<FockTerm> terms;
  terms.reserve(state.terms().size());
  for (const auto& term : state.terms()) {
    auto it = term.occupancy.find(mode_label);
    if (it == term.occupancy.end()) continue;
    int n = level == Level::Plus ? it->second.plus : it->second.minus;
    if (n == 0) continue;
    FockTerm next = term;
    next.coefficient *= ExactScalar(n);
    Occupancy& counts = next.occupancy[mode_label];
    (level == Level::Plus ? counts.plus : counts.minus) = n - 1;
    if (counts.total() == 0) next.occupancy.erase(mode_label);
    terms.push_back(std::move(next));
  }
  return FockState::from_terms(std::move(terms));
}

FockState apply_annihilation(const AnnihilationOp& op, const FockState& state) {
  if (op.summands.empty()) {
    throw std::invalid_argument("annihilation operator with no summands");
  }
  FockState result;
  for (const auto& summand : op.summands) {
    if (summand.amplitude.is_zero()) {
      throw std::invalid_argument("annihilation summand with zero amplitude");
    }
    ExactScalar w_plus = summand.amplitude * summand.state.c_plus().conj();
    ExactScalar w_minus = summand.amplitude * summand.state.c_minus().conj();
    if (!w_plus.is_zero()) {
      result = result + apply_single(summand.mode.label, Level::Plus, state).scaled(w_plus);
    }
    if (!w_minus.is_zero()) {
      result = result + apply_single(summand.mode.label, Level::Minus, state).scaled(w_minus);
    }
  }
  return result;
}

namespace {

// The sculpting chain runs on a packed representation: mode labels interned
// to indices, occupancies flattened to a byte vector (2*i holds n_plus of
// mode i, 2*i+1 holds n_minus). Cancelling terms are erased as they appear,
// which keeps intermediate states small for schemes whose non-matching
// assignments annihilate.
using PackedKey = std::vector<std::int8_t>;

struct PackedSummand {
  std::size_t mode;
  ExactScalar w_plus;
  ExactScalar w_minus;
};

void accumulate(std::map<PackedKey, ExactScalar>& terms, PackedKey key, ExactScalar coeff) {
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(std::move(key), std::move(coeff));
  } else {
    it->second += coeff;
    if (it->second.is_zero()) terms.erase(it);
  }
}

}  // namespace

FockState apply_sculpting(const SculptingOperator& op, const FockState& state) {
  std::map<std::string, std::size_t> index;
  std::vector<std::string> labels;
  auto intern = [&](const std::string& label) {
    auto [it, fresh] = index.emplace(label, labels.size());
    if (fresh) labels.push_back(label);
    return it->second;
  };
  for (const auto& term : state.terms()) {
    for (const auto& [label, occ] : term.occupancy) intern(label);
  }
  for (const auto& factor : op.factors) {
    if (factor.summands.empty()) {
      throw std::invalid_argument("annihilation operator with no summands");
    }
    for (const auto& summand : factor.summands) {
      if (summand.amplitude.is_zero()) {
        throw std::invalid_argument("annihilation summand with zero amplitude");
      }
      intern(summand.mode.label);
    }
  }
  const std::size_t mode_count = labels.size();

  std::map<PackedKey, ExactScalar> current;
  for (const auto& term : state.terms()) {
    PackedKey key(2 * mode_count, 0);
    for (const auto& [label, occ] : term.occupancy) {
      if (occ.plus > 127 || occ.minus > 127) {
        throw std::invalid_argument("occupancy too large for the sculpting chain");
      }
      std::size_t i = index.at(label);
      key[2 * i] = static_cast<std::int8_t>(occ.plus);
      key[2 * i + 1] = static_cast<std::int8_t>(occ.minus);
    }
    current.emplace(std::move(key), term.coefficient);
  }

  for (const auto& factor : op.factors) {
    std::vector<PackedSummand> packed;
    packed.reserve(factor.summands.size());
    for (const auto& summand : factor.summands) {
      packed.push_back(PackedSummand{index.at(summand.mode.label),
                                     summand.amplitude * summand.state.c_plus().conj(),
                                     summand.amplitude * summand.state.c_minus().conj()});
    }
    std::map<PackedKey, ExactScalar> next;
    for (const auto& [key, coeff] : current) {
      for (const auto& summand : packed) {
        const std::size_t plus_slot = 2 * summand.mode;
        if (!summand.w_plus.is_zero() && key[plus_slot] > 0) {
          PackedKey lowered = key;
          int n = lowered[plus_slot]--;
          ExactScalar c = coeff * summand.w_plus;
          if (n > 1) c *= ExactScalar(n);
          accumulate(next, std::move(lowered), std::move(c));
        }
        if (!summand.w_minus.is_zero() && key[plus_slot + 1] > 0) {
          PackedKey lowered = key;
          int n = lowered[plus_slot + 1]--;
          ExactScalar c = coeff * summand.w_minus;
          if (n > 1) c *= ExactScalar(n);
          accumulate(next, std::move(lowered), std::move(c));
        }
      }
    }
    current = std::move(next);
    if (current.empty()) break;
  }

  std::vector<FockTerm> terms;
  terms.reserve(current.size());
  for (auto& [key, coeff] : current) {
    OccupancyMap occ;
    for (std::size_t i = 0; i < mode_count; ++i) {
      Occupancy counts{key[2 * i], key[2 * i + 1]};
      if (counts.total() > 0) occ.emplace(labels[i], counts);
    }
    terms.push_back(FockTerm{std::move(coeff), std::move(occ)});
  }
  return FockState::from_terms(std::move(terms));
}

bool check_no_bunching(const FockState& state, const std::vector<ModeId>& qubit_modes,
                       const std::vector<ModeId>& ancilla_modes) {
  std::set<std::string> qubit_labels;
  for (const auto& mode : qubit_modes) qubit_labels.insert(mode.label);
  std::set<std::string> ancilla_labels;
  for (const auto& mode : ancilla_modes) ancilla_labels.insert(mode.label);

  for (const auto& term : state.terms()) {
    for (const auto& label : qubit_labels) {
      auto it = term.occupancy.find(label);
      if (it == term.occupancy.end() || it->second.total() != 1) return false;
    }
    for (const auto& [label, counts] : term.occupancy) {
      if (ancilla_labels.count(label)) return false;
      if (!qubit_labels.count(label)) return false;  // boson outside the scheme
    }
  }
  return true;
}

QubitState to_qubit_state(const FockState& state, const std::vector<ModeId>& ordered_qubit_modes) {
  const int n = static_cast<int>(ordered_qubit_modes.size());
  if (n > 24) {
    throw std::invalid_argument("qubit projection limited to 24 modes");
  }
  QubitState out(n);

  // Per mode, adag_+ -> (|0> + |1>)/sqrt2 and adag_- -> (|0> - |1>)/sqrt2,
  // so the coefficient of |b> is (1/sqrt2)^n sum_terms c * (-1)^(b & mask)
  // with mask marking the minus-level modes of the term. That is a
  // Walsh-Hadamard transform of the mask-indexed coefficients.
  std::vector<ExactScalar> slots(std::size_t{1} << n);
  for (const auto& term : state.terms()) {
    if (term.occupancy.size() != static_cast<std::size_t>(n)) {
      throw std::invalid_argument("bunched or incomplete term: " +
                                  occupancy_to_string(term.occupancy));
    }
    std::uint64_t mask = 0;
    for (int i = 0; i < n; ++i) {
      auto it = term.occupancy.find(ordered_qubit_modes[static_cast<std::size_t>(i)].label);
      if (it == term.occupancy.end() || it->second.total() != 1) {
        throw std::invalid_argument("bunched or incomplete term: " +
                                    occupancy_to_string(term.occupancy));
      }
      if (it->second.minus == 1) mask |= std::uint64_t{1} << (n - 1 - i);
    }
    slots[mask] += term.coefficient;
  }

  for (int bit = 0; bit < n; ++bit) {
    const std::size_t stride = std::size_t{1} << bit;
    for (std::size_t block = 0; block < slots.size(); block += 2 * stride) {
      for (std::size_t i = block; i < block + stride; ++i) {
        ExactScalar low = slots[i] + slots[i + stride];
        ExactScalar high = slots[i] - slots[i + stride];
        slots[i] = std::move(low);
        slots[i + stride] = std::move(high);
      }
    }
  }

  ExactScalar scale = ExactScalar::one();
  for (int i = 0; i < n; ++i) scale *= ExactScalar::inv_sqrt2();
  for (std::size_t bits = 0; bits < slots.size(); ++bits) {
    if (!slots[bits].is_zero()) out.add(bits, slots[bits] * scale);
  }
  return out;
}

}  // namespace sculpt
