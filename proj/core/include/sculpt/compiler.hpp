#pragma once

#include <vector>

#include "sculpt/caterpillar_spec.hpp"
#include "sculpt/central_path.hpp"
#include "sculpt/fock.hpp"
#include "sculpt/graph.hpp"

namespace sculpt {

/// A caterpillar spec lowered to its sculpting digraph. Qubit labels are
/// assigned contiguously left to right along the path ("1".."N"), with the
/// last label of each star gadget the star center; the digraph vertex order
/// is qubits 1..N, then A_1..A_m, then C, which is also the factor order of
/// the scheme's operator.
struct CompiledScheme {
  SculptingDigraph digraph;
  std::vector<ModeId> qubit_order;    // "1".."N"
  std::vector<ModeId> ancilla_order;  // C, A_1..A_m
  CaterpillarSpec source_spec;

  /// All modes in digraph vertex order.
  const std::vector<ModeId>& all_modes() const { return digraph.vertices(); }
};

/// The four-step lowering: draw the central path digraph for the spec's path
/// (a degenerate 2x2 all-ones matrix over (C, A_1) when there is a single
/// path vertex), then replace each A_j loop with its star gadget and label
/// the new circles. Deterministic: equal specs compile to equal schemes.
CompiledScheme compile(const CaterpillarSpec& spec);

/// The scheme's sculpting operator: one factor per vertex, qubit dots in
/// label order, then A_1..A_m, then C.
SculptingOperator operator_of(const CompiledScheme& scheme);

/// The N-partite GHZ bigraph: circles 1..n, dot l carrying a 0-colored edge
/// to circle l (weight w) and a 1-colored edge to circle l+1 mod n
/// (weight -w), with w = 1/sqrt2 when normalized and 1 otherwise. Dots are
/// labelled like their circles, so the identity owner map fuses the graph.
/// Throws std::domain_error for n < 2.
SculptingBigraph ghz_bigraph(int n, bool normalized);

/// The fused digraph: a 0-colored loop on every vertex plus the 1-colored
/// cycle edge j+1 -> j.
SculptingDigraph ghz_digraph(int n, bool normalized);

}  // namespace sculpt
