#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "sculpt/exact_scalar.hpp"
#include "sculpt/internal_state.hpp"
#include "sculpt/mode.hpp"
#include "sculpt/qubit_state.hpp"

namespace sculpt {

/// Boson count per internal level of one mode.
struct Occupancy {
  int plus = 0;
  int minus = 0;
  int total() const { return plus + minus; }
  friend auto operator<=>(const Occupancy&, const Occupancy&) = default;
};

/// Modes with occupancy (0,0) are absent; keys are mode labels, kept sorted
/// by std::map so structurally equal monomials compare equal.
using OccupancyMap = std::map<std::string, Occupancy>;

/// coefficient * prod_modes (adag_{j,+})^plus (adag_{j,-})^minus |vac>.
/// Monomials are unnormalized operator products on vacuum, so the ladder
/// rule is a (adag)^n |vac> = n (adag)^(n-1) |vac> with no factorial roots.
struct FockTerm {
  ExactScalar coefficient;
  OccupancyMap occupancy;
};

/// A finite linear combination of FockTerms. Always canonical: terms sorted
/// by occupancy, no duplicate occupancies, no zero coefficients.
class FockState {
 public:
  FockState() = default;

  static FockState zero() { return FockState(); }
  /// The single empty monomial with coefficient 1.
  static FockState vacuum();

  static FockState from_terms(std::vector<FockTerm> terms);

  const std::vector<FockTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  FockState scaled(const ExactScalar& c) const;
  friend FockState operator+(const FockState& a, const FockState& b);

  friend bool operator==(const FockState& a, const FockState& b);
  friend bool operator!=(const FockState& a, const FockState& b) { return !(a == b); }

  std::string to_string() const;

 private:
  std::vector<FockTerm> terms_;
};

/// One summand of an annihilation-operator sum: amplitude * a_{mode,state}.
struct OpSummand {
  ModeId mode;
  InternalState state;
  ExactScalar amplitude;
};

/// A^{(l)} = sum_j amplitude_j * a_{mode_j, state_j}. At least one summand;
/// amplitudes nonzero.
struct AnnihilationOp {
  std::vector<OpSummand> summands;

  std::string to_string() const;
};

/// The full sculpting operator: an ordered product of annihilation sums,
/// one factor per dot of the scheme. Factors mutually commute, so the order
/// only affects presentation.
struct SculptingOperator {
  std::vector<AnnihilationOp> factors;

  std::string to_string() const;
};

/// Structural equality after sorting each factor's summands canonically.
/// Factor order is significant.
bool same_operator(const SculptingOperator& a, const SculptingOperator& b);

/// The symmetric initial state: one term, coefficient 1, qubit modes doubly
/// occupied as (1,1), ancilla modes singly occupied as (1,0).
/// Throws std::invalid_argument on duplicate labels.
FockState initial_state(const std::vector<ModeId>& modes);

/// Bosonic ladder action of a_{mode,level}: occupancies n drop to n-1 and
/// coefficients pick up the factor n; terms with n == 0 vanish.
FockState apply_single(const std::string& mode_label, Level level, const FockState& state);

/// a_{j,psi} acts as conj(psi_plus) a_{j,+} + conj(psi_minus) a_{j,-},
/// summed over the operator's summands with their amplitudes.
FockState apply_annihilation(const AnnihilationOp& op, const FockState& state);

/// Applies the factors left to right. The empty product is the identity.
FockState apply_sculpting(const SculptingOperator& op, const FockState& state);

/// True iff every term has exactly one boson in each qubit mode, none in any
/// ancilla mode, and no occupancy outside the given modes. Vacuously true
/// for the zero state.
bool check_no_bunching(const FockState& state, const std::vector<ModeId>& qubit_modes,
                       const std::vector<ModeId>& ancilla_modes);

/// Rewrites each surviving boson from the {+,-} levels into the {0,1} basis
/// (adag_+ |vac> -> (|0>+|1>)/sqrt2 per mode, adag_- -> (|0>-|1>)/sqrt2) and
/// collects the result over the given qubit ordering.
/// Throws std::invalid_argument naming the offending term when the input is
/// bunched.
QubitState to_qubit_state(const FockState& state, const std::vector<ModeId>& ordered_qubit_modes);

}  // namespace sculpt
