#include "sculpt/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sculpt {

namespace {

// Canonical states sort by their serialization symbol ('+' < '-' < '0' < '1');
// anything else falls back to the component order.
int state_order(const InternalState& a, const InternalState& b) {
  auto sa = a.symbol();
  auto sb = b.symbol();
  if (sa && sb) return *sa == *sb ? 0 : (*sa < *sb ? -1 : 1);
  if (sa) return -1;
  if (sb) return 1;
  return InternalState::cmp(a, b);
}

bool digraph_edge_less(const DigraphEdge& a, const DigraphEdge& b) {
  if (a.target != b.target) return a.target < b.target;
  if (a.source != b.source) return a.source < b.source;
  return state_order(a.state, b.state) < 0;
}

bool bigraph_edge_less(const BigraphEdge& a, const BigraphEdge& b) {
  if (a.dot != b.dot) return a.dot < b.dot;
  if (a.circle != b.circle) return a.circle < b.circle;
  return state_order(a.state, b.state) < 0;
}

bool same_edge(const DigraphEdge& a, const DigraphEdge& b) {
  return a.source == b.source && a.target == b.target && a.state == b.state &&
         a.amplitude == b.amplitude;
}

bool same_edge(const BigraphEdge& a, const BigraphEdge& b) {
  return a.circle == b.circle && a.dot == b.dot && a.state == b.state &&
         a.amplitude == b.amplitude;
}

}  // namespace

void SculptingDigraph::add_vertex(ModeId mode) {
  if (!index_.emplace(mode.label, vertices_.size()).second) {
    throw std::invalid_argument("duplicate vertex label: '" + mode.label + "'");
  }
  vertices_.push_back(std::move(mode));
}

void SculptingDigraph::add_edge(DigraphEdge edge) {
  if (!has_vertex(edge.source)) {
    throw std::invalid_argument("edge source '" + edge.source + "' is not a vertex");
  }
  if (!has_vertex(edge.target)) {
    throw std::invalid_argument("edge target '" + edge.target + "' is not a vertex");
  }
  if (edge.amplitude.is_zero()) {
    throw std::invalid_argument("zero-amplitude edge " + edge.source + " -> " + edge.target);
  }
  for (const auto& existing : edges_) {
    if (existing.source == edge.source && existing.target == edge.target &&
        existing.state == edge.state) {
      throw std::invalid_argument("duplicate edge " + edge.source + " -> " + edge.target);
    }
  }
  edges_.push_back(std::move(edge));
}

bool SculptingDigraph::has_vertex(const std::string& label) const {
  return index_.count(label) > 0;
}

const ModeId& SculptingDigraph::vertex(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) {
    throw std::invalid_argument("unknown vertex: '" + label + "'");
  }
  return vertices_[it->second];
}

std::optional<std::size_t> SculptingDigraph::vertex_index(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<DigraphEdge> SculptingDigraph::in_edges(const std::string& label) const {
  std::vector<DigraphEdge> out;
  for (const auto& edge : edges_) {
    if (edge.target == label) out.push_back(edge);
  }
  return out;
}

std::vector<DigraphEdge> SculptingDigraph::loops_of(const std::string& label) const {
  std::vector<DigraphEdge> out;
  for (const auto& edge : edges_) {
    if (edge.is_loop() && edge.source == label) out.push_back(edge);
  }
  return out;
}

std::vector<DigraphEdge> SculptingDigraph::canonical_edges() const {
  std::vector<DigraphEdge> out = edges_;
  std::sort(out.begin(), out.end(), digraph_edge_less);
  return out;
}

bool operator==(const SculptingDigraph& a, const SculptingDigraph& b) {
  if (a.vertices_.size() != b.vertices_.size() || a.edges_.size() != b.edges_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.vertices_.size(); ++i) {
    if (a.vertices_[i] != b.vertices_[i]) return false;
  }
  auto lhs = a.canonical_edges();
  auto rhs = b.canonical_edges();
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (!same_edge(lhs[i], rhs[i])) return false;
  }
  return true;
}

void SculptingBigraph::add_circle(ModeId mode) {
  if (!circle_index_.emplace(mode.label, circles_.size()).second) {
    throw std::invalid_argument("duplicate circle label: '" + mode.label + "'");
  }
  circles_.push_back(std::move(mode));
}

void SculptingBigraph::add_dot(std::string dot_id) {
  if (!dot_index_.emplace(dot_id, dots_.size()).second) {
    throw std::invalid_argument("duplicate dot id: '" + dot_id + "'");
  }
  dots_.push_back(std::move(dot_id));
}

void SculptingBigraph::add_edge(BigraphEdge edge) {
  if (!circle_index_.count(edge.circle)) {
    throw std::invalid_argument("edge circle '" + edge.circle + "' is unknown");
  }
  if (!dot_index_.count(edge.dot)) {
    throw std::invalid_argument("edge dot '" + edge.dot + "' is unknown");
  }
  if (edge.amplitude.is_zero()) {
    throw std::invalid_argument("zero-amplitude edge at circle '" + edge.circle + "'");
  }
  for (const auto& existing : edges_) {
    if (existing.circle == edge.circle && existing.dot == edge.dot &&
        existing.state == edge.state) {
      throw std::invalid_argument("duplicate bigraph edge at circle '" + edge.circle + "'");
    }
  }
  edges_.push_back(std::move(edge));
}

std::vector<BigraphEdge> SculptingBigraph::edges_at_circle(const std::string& circle) const {
  std::vector<BigraphEdge> out;
  for (const auto& edge : edges_) {
    if (edge.circle == circle) out.push_back(edge);
  }
  return out;
}

std::vector<BigraphEdge> SculptingBigraph::edges_at_dot(const std::string& dot) const {
  std::vector<BigraphEdge> out;
  for (const auto& edge : edges_) {
    if (edge.dot == dot) out.push_back(edge);
  }
  return out;
}

std::vector<BigraphEdge> SculptingBigraph::canonical_edges() const {
  std::vector<BigraphEdge> out = edges_;
  std::sort(out.begin(), out.end(), bigraph_edge_less);
  return out;
}

bool operator==(const SculptingBigraph& a, const SculptingBigraph& b) {
  if (a.circles_.size() != b.circles_.size() || a.dots_ != b.dots_ ||
      a.edges_.size() != b.edges_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.circles_.size(); ++i) {
    if (a.circles_[i] != b.circles_[i]) return false;
  }
  auto lhs = a.canonical_edges();
  auto rhs = b.canonical_edges();
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (!same_edge(lhs[i], rhs[i])) return false;
  }
  return true;
}

std::vector<std::vector<std::size_t>> DirectedPM::cycles() const {
  const std::size_t n = source_of.size();
  std::vector<bool> visited(n, false);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t start = 0; start < n; ++start) {
    if (visited[start]) continue;
    std::vector<std::size_t> cycle;
    std::size_t v = start;
    while (!visited[v]) {
      visited[v] = true;
      cycle.push_back(v);
      v = source_of[v];
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

SculptingDigraph bigraph_to_digraph(const SculptingBigraph& g,
                                    const std::map<std::string, std::string>& dot_owner) {
  if (!g.balanced()) {
    throw std::invalid_argument("bigraph is unbalanced: " + std::to_string(g.circles().size()) +
                                " circles vs " + std::to_string(g.dots().size()) + " dots");
  }
  if (dot_owner.size() != g.dots().size()) {
    throw std::invalid_argument("dot owner map does not cover all dots");
  }
  std::set<std::string> owners_seen;
  for (const auto& dot : g.dots()) {
    auto it = dot_owner.find(dot);
    if (it == dot_owner.end()) {
      throw std::invalid_argument("dot '" + dot + "' has no owner");
    }
    if (!owners_seen.insert(it->second).second) {
      throw std::invalid_argument("circle '" + it->second + "' owns two dots");
    }
  }

  SculptingDigraph out;
  for (const auto& circle : g.circles()) {
    if (!owners_seen.count(circle.label)) {
      throw std::invalid_argument("circle '" + circle.label + "' owns no dot");
    }
    out.add_vertex(circle);
  }
  for (const auto& edge : g.edges()) {
    out.add_edge(DigraphEdge{edge.circle, dot_owner.at(edge.dot), edge.amplitude, edge.state});
  }
  return out;
}

SculptingBigraph digraph_to_bigraph(const SculptingDigraph& g) {
  SculptingBigraph out;
  for (const auto& vertex : g.vertices()) {
    out.add_circle(vertex);
  }
  for (const auto& vertex : g.vertices()) {
    out.add_dot(vertex.label);
  }
  for (const auto& edge : g.edges()) {
    out.add_edge(BigraphEdge{edge.source, edge.target, edge.amplitude, edge.state});
  }
  return out;
}

SculptingOperator digraph_to_operator(const SculptingDigraph& g) {
  SculptingOperator op;
  op.factors.reserve(g.vertices().size());
  for (const auto& vertex : g.vertices()) {
    AnnihilationOp factor;
    for (const auto& edge : g.canonical_edges()) {
      if (edge.target != vertex.label) continue;
      factor.summands.push_back(OpSummand{g.vertex(edge.source), edge.state, edge.amplitude});
    }
    if (factor.summands.empty()) {
      throw std::invalid_argument("vertex '" + vertex.label +
                                  "' has no incoming edge; its factor would be zero");
    }
    op.factors.push_back(std::move(factor));
  }
  return op;
}

SculptingDigraph operator_to_digraph(const SculptingOperator& op,
                                     const std::vector<ModeId>& dot_owners) {
  if (op.factors.size() != dot_owners.size()) {
    throw std::invalid_argument("factor count does not match dot owner count");
  }
  SculptingDigraph out;
  for (const auto& owner : dot_owners) out.add_vertex(owner);
  for (std::size_t i = 0; i < op.factors.size(); ++i) {
    for (const auto& summand : op.factors[i].summands) {
      out.add_edge(DigraphEdge{summand.mode.label, dot_owners[i].label, summand.amplitude,
                               summand.state});
    }
  }
  return out;
}

std::vector<DirectedPM> enumerate_directed_pms(const SculptingDigraph& g) {
  const std::size_t n = g.vertices().size();

  // 0/1 in-neighbour lists.
  std::vector<std::vector<std::size_t>> sources(n);
  for (const auto& edge : g.edges()) {
    std::size_t s = *g.vertex_index(edge.source);
    std::size_t t = *g.vertex_index(edge.target);
    if (std::find(sources[t].begin(), sources[t].end(), s) == sources[t].end()) {
      sources[t].push_back(s);
    }
  }
  for (auto& list : sources) std::sort(list.begin(), list.end());

  // Assign the most constrained vertices first.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (sources[a].size() != sources[b].size()) return sources[a].size() < sources[b].size();
    return a < b;
  });

  std::vector<DirectedPM> results;
  std::vector<std::size_t> assignment(n, n);
  std::vector<bool> used(n, false);

  auto backtrack = [&](auto&& self, std::size_t depth) -> void {
    if (depth == n) {
      results.push_back(DirectedPM{assignment});
      return;
    }
    std::size_t target = order[depth];
    for (std::size_t source : sources[target]) {
      if (used[source]) continue;
      used[source] = true;
      assignment[target] = source;
      self(self, depth + 1);
      used[source] = false;
    }
    assignment[target] = n;
  };
  backtrack(backtrack, 0);

  std::sort(results.begin(), results.end(), [](const DirectedPM& a, const DirectedPM& b) {
    return a.source_of < b.source_of;
  });
  return results;
}

ScalarMatrix support_matrix(const SculptingDigraph& g) {
  const std::size_t n = g.vertices().size();
  ScalarMatrix m(n, n);
  for (const auto& edge : g.edges()) {
    std::size_t s = *g.vertex_index(edge.source);
    std::size_t t = *g.vertex_index(edge.target);
    m.at(t, s) = ExactScalar::one();
  }
  return m;
}

bool is_strongly_connected(const SculptingDigraph& g) {
  const std::size_t n = g.vertices().size();
  if (n < 2) return true;

  std::vector<std::vector<std::size_t>> forward(n);
  std::vector<std::vector<std::size_t>> backward(n);
  for (const auto& edge : g.edges()) {
    if (edge.is_loop()) continue;
    std::size_t s = *g.vertex_index(edge.source);
    std::size_t t = *g.vertex_index(edge.target);
    forward[s].push_back(t);
    backward[t].push_back(s);
  }

  auto reaches_all = [n](const std::vector<std::vector<std::size_t>>& adj) {
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w : adj[v]) {
        if (!seen[w]) {
          seen[w] = true;
          ++count;
          stack.push_back(w);
        }
      }
    }
    return count == n;
  };
  return reaches_all(forward) && reaches_all(backward);
}

GenuineReport check_genuine_conditions(const SculptingDigraph& g) {
  GenuineReport report;
  report.strongly_connected = is_strongly_connected(g);
  report.qubit_vertices_ok = true;
  for (const auto& vertex : g.vertices()) {
    auto incoming = g.in_edges(vertex.label);
    bool diverse = false;
    for (std::size_t i = 0; i < incoming.size() && !diverse; ++i) {
      for (std::size_t j = i + 1; j < incoming.size() && !diverse; ++j) {
        if (incoming[i].state != incoming[j].state) diverse = true;
      }
    }
    report.vertex_color_ok.emplace_back(vertex.label, diverse);
    if (vertex.kind == ModeKind::Qubit && !diverse) report.qubit_vertices_ok = false;
  }
  return report;
}

EpmReport check_epm(const SculptingBigraph& g, bool with_semantic_check) {
  EpmReport report;
  report.pass = true;
  for (const auto& circle : g.circles()) {
    auto edges = g.edges_at_circle(circle.label);
    CircleForm form = CircleForm::Nonconforming;
    if (edges.size() == 2 && edges[0].state.orthogonal_to(edges[1].state)) {
      form = CircleForm::OrthogonalPair;
    } else if (!edges.empty()) {
      bool uniform = true;
      for (const auto& edge : edges) {
        if (edge.state != edges[0].state) {
          uniform = false;
          break;
        }
      }
      if (uniform) form = CircleForm::UniformColor;
    }
    if (form == CircleForm::Nonconforming) report.pass = false;
    report.circle_forms.emplace_back(circle.label, form);
  }

  if (with_semantic_check) {
    std::vector<ModeId> qubits;
    std::vector<ModeId> ancillas;
    for (const auto& circle : g.circles()) {
      (circle.kind == ModeKind::Qubit ? qubits : ancillas).push_back(circle);
    }
    FockState final_state = apply_sculpting(bigraph_to_operator(g), initial_state(g.circles()));
    report.no_bunching = check_no_bunching(final_state, qubits, ancillas);
  }
  return report;
}

SculptingOperator bigraph_to_operator(const SculptingBigraph& g) {
  SculptingOperator op;
  op.factors.reserve(g.dots().size());
  for (const auto& dot : g.dots()) {
    AnnihilationOp factor;
    for (const auto& edge : g.canonical_edges()) {
      if (edge.dot != dot) continue;
      ModeId mode{edge.circle, ModeKind::Qubit};
      for (const auto& circle : g.circles()) {
        if (circle.label == edge.circle) {
          mode = circle;
          break;
        }
      }
      factor.summands.push_back(OpSummand{std::move(mode), edge.state, edge.amplitude});
    }
    if (factor.summands.empty()) {
      throw std::invalid_argument("dot '" + dot + "' has no edges; its factor would be zero");
    }
    op.factors.push_back(std::move(factor));
  }
  return op;
}

namespace {

std::string dot_edge_attrs(const InternalState& state, const ExactScalar& amplitude) {
  std::string attrs;
  auto symbol = state.symbol();
  if (symbol == '+') {
    attrs = "color=black";
  } else if (symbol == '-') {
    attrs = "color=black, style=dashed";
  } else if (symbol == '0') {
    attrs = "color=red";
  } else if (symbol == '1') {
    attrs = "color=blue";
  } else {
    attrs = "color=gray, label=\"" + state.to_string() + "\"";
  }
  if (!amplitude.is_one()) {
    attrs += ", label=\"" + amplitude.to_string() + "\"";
  }
  return attrs;
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

std::string export_dot(const SculptingDigraph& g) {
  std::ostringstream os;
  os << "digraph sculpting {\n";
  for (const auto& vertex : g.vertices()) {
    os << "  " << quoted(vertex.label) << " [shape=circle";
    if (vertex.kind == ModeKind::Ancilla) os << ", style=dashed";
    os << "];\n";
  }
  for (const auto& edge : g.canonical_edges()) {
    os << "  " << quoted(edge.source) << " -> " << quoted(edge.target) << " ["
       << dot_edge_attrs(edge.state, edge.amplitude) << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string export_dot(const SculptingBigraph& g) {
  std::ostringstream os;
  os << "graph sculpting_bigraph {\n";
  for (const auto& circle : g.circles()) {
    os << "  " << quoted("c:" + circle.label) << " [shape=circle, label=" << quoted(circle.label);
    if (circle.kind == ModeKind::Ancilla) os << ", style=dashed";
    os << "];\n";
  }
  for (const auto& dot : g.dots()) {
    os << "  " << quoted("d:" + dot) << " [shape=point];\n";
  }
  for (const auto& edge : g.canonical_edges()) {
    os << "  " << quoted("c:" + edge.circle) << " -- " << quoted("d:" + edge.dot) << " ["
       << dot_edge_attrs(edge.state, edge.amplitude) << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace sculpt
