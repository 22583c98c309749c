#pragma once

#include <utility>
#include <vector>

#include "sculpt/caterpillar_spec.hpp"
#include "sculpt/qubit_state.hpp"

namespace sculpt {

/// Undirected simple graph on vertices 1..n: no loops, no multi-edges.
struct SimpleGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  /// Throws std::invalid_argument on out-of-range endpoints, loops, or
  /// repeated edges.
  void validate() const;
};

/// |+>^n with exact (1/sqrt2)^n coefficients.
QubitState plus_state(int n);

/// Controlled-Z between qubits j and k (1-based): negates the coefficient of
/// every basis string with both bits set. An involution.
QubitState cz_apply(const QubitState& state, int j, int k);

/// Hadamard on qubit j: |0> -> (|0>+|1>)/sqrt2, |1> -> (|0>-|1>)/sqrt2.
QubitState hadamard_apply(const QubitState& state, int j);

/// The graph state: CZ over every edge applied to |+>^n.
QubitState graph_state(const SimpleGraph& g);

/// K-qubit star graph state in closed form, center last:
/// |++...+0> + |--...-1>, the |+-> symbols expanded exactly. Equals
/// graph_state of the star up to a positive scalar. Throws std::domain_error
/// for k < 2.
QubitState star_state(int k);

/// L-qubit path graph state in closed form:
/// sum over bitstrings of (-1)^(sum_k i_k i_{k+1}) |i_1...i_L>, coefficients
/// exactly +-1. Throws std::domain_error for L < 2.
QubitState path_state(int length);

/// Builds a basis-symbol product such as "+0-1" into a QubitState (|+-> carry
/// exact 1/sqrt2 factors). Test and oracle helper.
QubitState symbol_product_state(const std::string& symbols);

/// The caterpillar graph in compiler numbering: per path vertex, the leaf
/// qubits come first and the star center is the last label; leaf edges run
/// to the center and path edges connect consecutive centers.
SimpleGraph caterpillar_graph(const CaterpillarSpec& spec);

/// The center (star-center) qubit indices of the spec, one per path vertex.
std::vector<int> caterpillar_centers(const CaterpillarSpec& spec);

enum class LeafBasis {
  Computational,  // the plain graph state
  Hadamard,       // additionally rotate every leaf qubit by H
};

/// Ground truth for the verifier. Sculpted schemes emit leaf qubits in the
/// Hadamard-conjugate basis, so the pipeline compares against
/// caterpillar_target(spec, LeafBasis::Hadamard); for leafless specs the two
/// bases coincide.
QubitState caterpillar_target(const CaterpillarSpec& spec, LeafBasis leaf_basis);

}  // namespace sculpt
