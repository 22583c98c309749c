#include "sculpt/central_path.hpp"

#include <stdexcept>

namespace sculpt {

CentralPathMatrix build_path_matrix(int l) {
  if (l < 1) {
    throw std::domain_error("central path index must be >= 1, got " + std::to_string(l));
  }
  const std::size_t n = static_cast<std::size_t>(l) + 2;
  ScalarMatrix m(n, n);

  // P(1) base case.
  const ExactScalar one = ExactScalar::one();
  m.at(0, 0) = one;
  m.at(0, 1) = one;
  m.at(0, 2) = one;
  m.at(1, 0) = one;
  m.at(1, 1) = one;
  m.at(2, 0) = one;
  m.at(2, 1) = -one;
  m.at(2, 2) = one;

  // Each extension appends the column (1, 0, ..., 0) and the bottom row
  // (1, 1, ..., 1, -1, 1).
  for (std::size_t size = 4; size <= n; ++size) {
    std::size_t last = size - 1;
    m.at(0, last) = one;
    for (std::size_t col = 0; col + 2 < size; ++col) m.at(last, col) = one;
    m.at(last, size - 2) = -one;
    m.at(last, last) = one;
  }

  CentralPathMatrix out{l, {"C"}, std::move(m)};
  for (int j = 1; j <= l + 1; ++j) out.vertex_labels.push_back("A" + std::to_string(j));
  return out;
}

SculptingDigraph path_digraph(int l) {
  CentralPathMatrix matrix = build_path_matrix(l);
  SculptingDigraph g;
  for (const auto& label : matrix.vertex_labels) g.add_vertex(ancilla_mode(label));
  const std::size_t n = matrix.vertex_labels.size();
  for (std::size_t target = 0; target < n; ++target) {
    for (std::size_t source = 0; source < n; ++source) {
      const ExactScalar& amplitude = matrix.entries.at(target, source);
      if (amplitude.is_zero()) continue;
      g.add_edge(DigraphEdge{matrix.vertex_labels[source], matrix.vertex_labels[target],
                             amplitude, InternalState::plus()});
    }
  }
  return g;
}

SculptingDigraph replace_loop_with_star(const SculptingDigraph& g, const std::string& vertex,
                                        int k, const std::vector<std::string>& qubit_labels) {
  if (k < 1 || static_cast<std::size_t>(k) != qubit_labels.size()) {
    throw std::invalid_argument("gadget size k must match the qubit label count and be >= 1");
  }
  if (!g.has_vertex(vertex)) {
    throw std::invalid_argument("unknown vertex: '" + vertex + "'");
  }
  auto loops = g.loops_of(vertex);
  if (loops.size() != 1) {
    throw std::invalid_argument("vertex '" + vertex + "' must carry exactly one loop, has " +
                                std::to_string(loops.size()));
  }
  const DigraphEdge loop = loops.front();

  SculptingDigraph out;
  for (const auto& v : g.vertices()) out.add_vertex(v);
  for (const auto& label : qubit_labels) out.add_vertex(qubit_mode(label));

  const ExactScalar one = ExactScalar::one();
  for (const auto& edge : g.edges()) {
    if (edge.source == loop.source && edge.target == loop.target && edge.state == loop.state) {
      // The loop term turns into the gadget's entry point.
      out.add_edge(DigraphEdge{qubit_labels.front(), vertex, one, InternalState::zero()});
      continue;
    }
    out.add_edge(edge);
  }

  for (int i = 0; i < k; ++i) {
    const std::string& q = qubit_labels[static_cast<std::size_t>(i)];
    out.add_edge(DigraphEdge{q, q, -one, InternalState::one()});
    if (i + 1 < k) {
      out.add_edge(DigraphEdge{qubit_labels[static_cast<std::size_t>(i) + 1], q, one,
                               InternalState::zero()});
    } else {
      out.add_edge(DigraphEdge{vertex, q, one, InternalState::plus()});
    }
  }
  return out;
}

SculptingDigraph linear_graph_digraph(int n) {
  if (n < 2) {
    throw std::domain_error("linear graph needs at least 2 qubits, got " + std::to_string(n));
  }
  SculptingDigraph g = path_digraph(n - 1);
  for (int j = 1; j <= n; ++j) {
    g = replace_loop_with_star(g, "A" + std::to_string(j), 1, {std::to_string(j)});
  }
  return g;
}

}  // namespace sculpt
