#include "sculpt/compiler.hpp"

#include <stdexcept>

namespace sculpt {

namespace {

// Single-path-vertex schemes have no P(l) with l >= 1 to start from; the
// degenerate 2x2 all-ones matrix over (C, A_1) plays that role.
SculptingDigraph degenerate_path_digraph() {
  SculptingDigraph g;
  g.add_vertex(ancilla_mode("C"));
  g.add_vertex(ancilla_mode("A1"));
  const ExactScalar one = ExactScalar::one();
  for (const char* source : {"C", "A1"}) {
    for (const char* target : {"C", "A1"}) {
      g.add_edge(DigraphEdge{source, target, one, InternalState::plus()});
    }
  }
  return g;
}

// Rebuilds the digraph with vertices in scheme order: qubits first (their
// label order), then A_1..A_m, then C. Edges are label-based, so only the
// vertex sequence changes.
SculptingDigraph reorder_for_scheme(const SculptingDigraph& g,
                                    const std::vector<ModeId>& qubit_order,
                                    const std::vector<ModeId>& ancilla_order) {
  SculptingDigraph out;
  for (const auto& mode : qubit_order) out.add_vertex(mode);
  for (std::size_t i = 1; i < ancilla_order.size(); ++i) out.add_vertex(ancilla_order[i]);
  out.add_vertex(ancilla_order.front());  // C last
  for (const auto& edge : g.canonical_edges()) out.add_edge(edge);
  return out;
}

}  // namespace

CompiledScheme compile(const CaterpillarSpec& spec) {
  spec.validate();
  const int m = spec.path_vertex_count();

  SculptingDigraph g = m == 1 ? degenerate_path_digraph() : path_digraph(m - 1);

  std::vector<ModeId> qubit_order;
  int next_label = 1;
  for (int j = 1; j <= m; ++j) {
    const int star = spec.star_size(j);
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(star));
    for (int i = 0; i < star; ++i) labels.push_back(std::to_string(next_label++));
    g = replace_loop_with_star(g, "A" + std::to_string(j), star, labels);
    for (const auto& label : labels) qubit_order.push_back(qubit_mode(label));
  }

  std::vector<ModeId> ancilla_order{ancilla_mode("C")};
  for (int j = 1; j <= m; ++j) ancilla_order.push_back(ancilla_mode("A" + std::to_string(j)));

  CompiledScheme scheme;
  scheme.digraph = reorder_for_scheme(g, qubit_order, ancilla_order);
  scheme.qubit_order = std::move(qubit_order);
  scheme.ancilla_order = std::move(ancilla_order);
  scheme.source_spec = spec;
  return scheme;
}

SculptingOperator operator_of(const CompiledScheme& scheme) {
  return digraph_to_operator(scheme.digraph);
}

SculptingBigraph ghz_bigraph(int n, bool normalized) {
  if (n < 2) {
    throw std::domain_error("GHZ bigraph needs at least 2 parties, got " + std::to_string(n));
  }
  const ExactScalar w = normalized ? ExactScalar::inv_sqrt2() : ExactScalar::one();

  SculptingBigraph g;
  for (int j = 1; j <= n; ++j) g.add_circle(qubit_mode(std::to_string(j)));
  for (int j = 1; j <= n; ++j) g.add_dot(std::to_string(j));
  for (int j = 1; j <= n; ++j) {
    const std::string dot = std::to_string(j);
    const std::string next = std::to_string(j % n + 1);
    g.add_edge(BigraphEdge{dot, dot, w, InternalState::zero()});
    g.add_edge(BigraphEdge{next, dot, -w, InternalState::one()});
  }
  return g;
}

SculptingDigraph ghz_digraph(int n, bool normalized) {
  SculptingBigraph bigraph = ghz_bigraph(n, normalized);
  std::map<std::string, std::string> identity;
  for (const auto& dot : bigraph.dots()) identity[dot] = dot;
  return bigraph_to_digraph(bigraph, identity);
}

}  // namespace sculpt
