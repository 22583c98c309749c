#pragma once

#include <cstddef>
#include <optional>

#include "sculpt/compiler.hpp"
#include "sculpt/fock.hpp"
#include "sculpt/oracle.hpp"
#include "sculpt/qubit_state.hpp"

namespace sculpt {

/// Everything the end-to-end pipeline produces for one spec. An oracle
/// mismatch shows up as an empty oracle_match, not an error.
struct PipelineReport {
  CompiledScheme scheme;
  FockState fock_final;
  QubitState qubit_state{0};
  bool no_bunching = false;
  /// qubit_state == lambda * caterpillar_target(spec, Hadamard), when such a
  /// nonzero lambda exists.
  std::optional<ExactScalar> oracle_match;
  std::size_t pm_count = 0;

  bool pass() const { return no_bunching && oracle_match.has_value(); }
};

/// compile -> operator -> initial state -> sculpt -> no-bunching check ->
/// qubit projection -> oracle comparison, plus the directed-PM count.
PipelineReport run_pipeline(const CaterpillarSpec& spec);

/// Independent decomposition oracle: for each directed PM, restrict every
/// factor to the summand(s) drawn from its matched source, apply the
/// restricted chain to the initial state, and sum over PMs. For
/// effective-perfect-matching schemes this equals the full apply_sculpting
/// result exactly.
FockState pm_expansion_state(const CompiledScheme& scheme);

/// Restriction oracle for any digraph, given its mode list.
FockState pm_expansion_state(const SculptingDigraph& digraph);

struct GhzReport {
  int n = 0;
  std::size_t pm_count = 0;
  QubitState state{0};
  bool no_bunching = false;
  /// Set when the output is exactly |0...0> + sign * |1...1|; +1 or -1.
  std::optional<int> sign;

  bool pass() const { return no_bunching && sign.has_value(); }
};

/// Simulates the n-partite GHZ scheme and reports the two-term structure and
/// relative sign. Throws std::domain_error for n < 2.
GhzReport run_ghz(int n);

}  // namespace sculpt
