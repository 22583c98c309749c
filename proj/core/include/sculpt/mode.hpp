#pragma once

#include <string>
#include <vector>

namespace sculpt {

/// Qubit modes start doubly occupied and carry the surviving boson; ancilla
/// modes start with a single + boson and must end empty (heralded away).
enum class ModeKind { Qubit, Ancilla };

/// A spatial mode of the scheme. Labels are unique within a scheme; qubit
/// output ordering is carried separately by ordered mode lists.
struct ModeId {
  std::string label;
  ModeKind kind = ModeKind::Qubit;

  friend bool operator==(const ModeId& a, const ModeId& b) {
    return a.label == b.label && a.kind == b.kind;
  }
  friend bool operator!=(const ModeId& a, const ModeId& b) { return !(a == b); }
};

inline ModeId qubit_mode(std::string label) { return {std::move(label), ModeKind::Qubit}; }
inline ModeId ancilla_mode(std::string label) { return {std::move(label), ModeKind::Ancilla}; }

/// Orders labels numerically when both are nonnegative integers ("2" < "10"),
/// lexicographically otherwise. Used for qubit output ordering of schemes
/// loaded from files.
bool natural_label_less(const std::string& a, const std::string& b);

/// Sorted copy under natural_label_less.
std::vector<ModeId> natural_sorted(std::vector<ModeId> modes);

}  // namespace sculpt
