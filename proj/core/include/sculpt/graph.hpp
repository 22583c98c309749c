#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sculpt/exact_scalar.hpp"
#include "sculpt/fock.hpp"
#include "sculpt/internal_state.hpp"
#include "sculpt/matrix.hpp"
#include "sculpt/mode.hpp"

namespace sculpt {

/// Directed edge of a sculpting digraph.
///
/// Direction convention, fixed once for the whole library: the edge
/// (source -> target) contributes amplitude * a_{source,state} to the
/// annihilation sum owned by target. Equivalently, the adjacency entry at
/// row target, column source is the amplitude.
struct DigraphEdge {
  std::string source;
  std::string target;
  ExactScalar amplitude;
  InternalState state;

  bool is_loop() const { return source == target; }
};

/// Weighted, colored digraph encoding a sculpting operator: one vertex per
/// spatial mode, one incoming-edge sum per vertex. Loops are permitted; at
/// most one edge per (source, target, state) triple.
class SculptingDigraph {
 public:
  SculptingDigraph() = default;

  /// Throws std::invalid_argument on duplicate labels.
  void add_vertex(ModeId mode);
  /// Throws std::invalid_argument on unknown endpoints, zero amplitude, or a
  /// duplicate (source, target, state) triple.
  void add_edge(DigraphEdge edge);

  const std::vector<ModeId>& vertices() const { return vertices_; }
  const std::vector<DigraphEdge>& edges() const { return edges_; }

  bool has_vertex(const std::string& label) const;
  const ModeId& vertex(const std::string& label) const;
  std::optional<std::size_t> vertex_index(const std::string& label) const;

  std::vector<DigraphEdge> in_edges(const std::string& label) const;
  std::vector<DigraphEdge> loops_of(const std::string& label) const;

  /// Edges sorted by (target, source, state symbol) for deterministic output
  /// and structural comparison.
  std::vector<DigraphEdge> canonical_edges() const;

  /// Same vertex sequence (labels and kinds in order) and same edge set.
  friend bool operator==(const SculptingDigraph& a, const SculptingDigraph& b);
  friend bool operator!=(const SculptingDigraph& a, const SculptingDigraph& b) {
    return !(a == b);
  }

 private:
  std::vector<ModeId> vertices_;
  std::vector<DigraphEdge> edges_;
  std::map<std::string, std::size_t> index_;
};

/// Undirected edge of a sculpting bigraph: circle (mode) to dot (operator
/// factor), weighted by amplitude and colored by internal state.
struct BigraphEdge {
  std::string circle;
  std::string dot;
  ExactScalar amplitude;
  InternalState state;
};

/// Bipartite picture of a sculpting operator: labelled circles are spatial
/// modes, dots are the annihilation sums. Balanced (|circles| == |dots|)
/// bigraphs admit perfect matchings and convert to digraphs.
class SculptingBigraph {
 public:
  SculptingBigraph() = default;

  void add_circle(ModeId mode);
  void add_dot(std::string dot_id);
  void add_edge(BigraphEdge edge);

  const std::vector<ModeId>& circles() const { return circles_; }
  const std::vector<std::string>& dots() const { return dots_; }
  const std::vector<BigraphEdge>& edges() const { return edges_; }

  bool balanced() const { return circles_.size() == dots_.size(); }

  std::vector<BigraphEdge> edges_at_circle(const std::string& circle) const;
  std::vector<BigraphEdge> edges_at_dot(const std::string& dot) const;

  std::vector<BigraphEdge> canonical_edges() const;

  friend bool operator==(const SculptingBigraph& a, const SculptingBigraph& b);
  friend bool operator!=(const SculptingBigraph& a, const SculptingBigraph& b) {
    return !(a == b);
  }

 private:
  std::vector<ModeId> circles_;
  std::vector<std::string> dots_;
  std::vector<BigraphEdge> edges_;
  std::map<std::string, std::size_t> circle_index_;
  std::map<std::string, std::size_t> dot_index_;
};

/// A directed perfect matching: a permutation of the vertices in which every
/// vertex v receives exactly one selected incoming edge (source_of[v] -> v).
struct DirectedPM {
  std::vector<std::size_t> source_of;  // indexed by vertex position

  /// Vertex-disjoint cycles (loops are 1-cycles) covering all vertices, each
  /// cycle listed from its smallest vertex index.
  std::vector<std::vector<std::size_t>> cycles() const;
};

/// Fuses circle i with dot j' into one vertex per the owner map and turns
/// the bigraph edge (circle, dot) into the directed edge
/// (circle -> owner(dot)). Throws std::invalid_argument if the bigraph is
/// unbalanced or the owner map is not a bijection onto the circles.
SculptingDigraph bigraph_to_digraph(const SculptingBigraph& g,
                                    const std::map<std::string, std::string>& dot_owner);

/// Inverse of bigraph_to_digraph with the identity owner map: each vertex
/// splits into a circle and a dot with the vertex's label.
SculptingBigraph digraph_to_bigraph(const SculptingDigraph& g);

/// One annihilation factor per vertex, in vertex order: the sum over
/// incoming edges (Y -> X) of amplitude * a_{Y,state}. Throws
/// std::invalid_argument if some vertex has no incoming edge.
SculptingOperator digraph_to_operator(const SculptingDigraph& g);

/// Rebuilds the digraph from an operator given the dot ownership: factor i
/// belongs to dot_owners[i], each summand (amplitude, mode, state) becomes
/// the edge (mode -> dot_owners[i]).
SculptingDigraph operator_to_digraph(const SculptingOperator& op,
                                     const std::vector<ModeId>& dot_owners);

/// All directed perfect matchings, in lexicographic order of the source
/// assignment vector. Backtracking on the 0/1 edge support, most
/// constrained vertex first.
std::vector<DirectedPM> enumerate_directed_pms(const SculptingDigraph& g);

/// Adjacency support: entry (row target, column source) is 1 iff some edge
/// source -> target exists. permanent(support_matrix(g)) equals the
/// directed-PM count.
ScalarMatrix support_matrix(const SculptingDigraph& g);

/// True iff one strongly connected component spans all vertices (loops are
/// irrelevant). Graphs with fewer than two vertices count as connected.
bool is_strongly_connected(const SculptingDigraph& g);

/// Necessary-condition report for genuine multipartite entanglement.
/// A vertex is color-diverse when at least two of its incoming edges (loops
/// included) carry different internal states. The aggregate quantifies over
/// qubit vertices: ancilla vertices are reported individually but do not
/// veto, since heralded detections empty them before the output state is
/// read. A pass does not certify genuine entanglement.
struct GenuineReport {
  std::vector<std::pair<std::string, bool>> vertex_color_ok;  // per vertex, in order
  bool qubit_vertices_ok = false;
  bool strongly_connected = false;

  bool pass() const { return qubit_vertices_ok && strongly_connected; }
};

GenuineReport check_genuine_conditions(const SculptingDigraph& g);

/// Circle-local edge forms that make a bigraph an effective-perfect-matching
/// bigraph: an orthogonal pair (exactly two incident edges with orthogonal
/// states) or a uniform bundle (n >= 1 edges, all the same state).
enum class CircleForm { OrthogonalPair, UniformColor, Nonconforming };

struct EpmReport {
  std::vector<std::pair<std::string, CircleForm>> circle_forms;  // per circle, in order
  bool pass = false;
  /// Semantic fallback: simulate the scheme and test no-bunching directly.
  /// Present when requested; this is the authoritative check.
  std::optional<bool> no_bunching;
};

EpmReport check_epm(const SculptingBigraph& g, bool with_semantic_check = false);

/// Builds the operator encoded by a bigraph (one factor per dot, in dot
/// order) without fusing vertices.
SculptingOperator bigraph_to_operator(const SculptingBigraph& g);

/// Graphviz DOT rendering. Internal states map to edge styles:
/// '+' solid black, '-' dashed black, '0' red, '1' blue; amplitudes != 1 are
/// printed as edge labels. Vertex order follows the stored order; edges are
/// canonically sorted.
std::string export_dot(const SculptingDigraph& g);
std::string export_dot(const SculptingBigraph& g);

}  // namespace sculpt
