#pragma once

#include <string>
#include <vector>

#include "sculpt/graph.hpp"
#include "sculpt/matrix.hpp"

namespace sculpt {

/// Adjacency matrix of the ancilla central-path digraph over the vertex
/// order (C, A_1, ..., A_{l+1}). Row = target, column = source.
struct CentralPathMatrix {
  int l = 0;
  std::vector<std::string> vertex_labels;
  ScalarMatrix entries;
};

/// The (l+2)x(l+2) central-path matrix:
///   P(1) = [[1, 1, 1],
///           [1, 1, 0],
///           [1,-1, 1]]
/// and P(l) extends P(l-1) with a new trailing column (1, 0, ..., 0) and a
/// new bottom row (1, 1, ..., 1, -1, 1). Throws std::domain_error for l < 1.
CentralPathMatrix build_path_matrix(int l);

/// The digraph over (C, A_1..A_{l+1}) with one +-colored weighted edge per
/// nonzero matrix entry, loops included. All vertices are ancilla modes.
SculptingDigraph path_digraph(int l);

/// Grafts a qubit chain gadget in place of the loop at `vertex` (an A_j):
///   dot(q_i), i < k:  -a_{q_i,1} + a_{q_{i+1},0}
///   dot(q_k):         -a_{q_k,1} + a_{vertex,+}
///   dot(vertex):      the former loop becomes +a_{q_1,0}
/// q_k is the star center. k == 1 is the Bell gadget. Throws
/// std::invalid_argument if the vertex has no loop, k != |qubit_labels|,
/// or a qubit label collides with an existing vertex.
SculptingDigraph replace_loop_with_star(const SculptingDigraph& g, const std::string& vertex,
                                        int k, const std::vector<std::string>& qubit_labels);

/// path_digraph(n-1) with every A-loop replaced by a Bell (k = 1) gadget;
/// the scheme for the n-qubit linear graph state. Throws std::domain_error
/// for n < 2.
SculptingDigraph linear_graph_digraph(int n);

}  // namespace sculpt
