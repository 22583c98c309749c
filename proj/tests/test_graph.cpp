#include <doctest.h>

#include <algorithm>
#include <random>

#include "sculpt/compiler.hpp"
#include "sculpt/graph.hpp"

using namespace sculpt;

namespace {

// Brute-force permanent over all permutations; the independent reference for
// the Ryser implementation.
ExactScalar brute_force_permanent(const ScalarMatrix& m) {
  REQUIRE(m.rows() == m.cols());
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  ExactScalar total;
  do {
    ExactScalar prod = ExactScalar::one();
    for (std::size_t i = 0; i < n; ++i) prod *= m.at(i, perm[i]);
    total += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

SculptingDigraph two_disjoint_loops() {
  SculptingDigraph g;
  g.add_vertex(qubit_mode("a"));
  g.add_vertex(qubit_mode("b"));
  g.add_edge(DigraphEdge{"a", "a", ExactScalar::one(), InternalState::zero()});
  g.add_edge(DigraphEdge{"b", "b", ExactScalar::one(), InternalState::one()});
  return g;
}

// Balanced random bigraph with dots labelled like their circles, so the
// identity owner map applies.
SculptingBigraph random_balanced_bigraph(std::mt19937& rng) {
  std::uniform_int_distribution<int> size(1, 6);
  std::uniform_int_distribution<int> coin(0, 3);
  std::uniform_int_distribution<int> pick_amp(0, 3);
  const char symbols[] = {'+', '-', '0', '1'};
  const ExactScalar amplitudes[] = {ExactScalar::one(), -ExactScalar::one(),
                                    ExactScalar::inv_sqrt2(),
                                    ExactScalar::one() + ExactScalar::sqrt2()};
  const int n = size(rng);
  SculptingBigraph g;
  for (int i = 0; i < n; ++i) {
    g.add_circle(coin(rng) < 2 ? qubit_mode("v" + std::to_string(i))
                               : ancilla_mode("v" + std::to_string(i)));
  }
  for (int i = 0; i < n; ++i) g.add_dot("v" + std::to_string(i));
  for (int c = 0; c < n; ++c) {
    for (int d = 0; d < n; ++d) {
      if (coin(rng) != 0) continue;
      g.add_edge(BigraphEdge{"v" + std::to_string(c), "v" + std::to_string(d),
                             amplitudes[pick_amp(rng)],
                             InternalState::from_symbol(symbols[coin(rng)])});
    }
  }
  return g;
}

std::map<std::string, std::string> identity_owner(const SculptingBigraph& g) {
  std::map<std::string, std::string> owner;
  for (const auto& dot : g.dots()) owner[dot] = dot;
  return owner;
}

}  // namespace

TEST_CASE("digraph structural validation") {
  SculptingDigraph g;
  g.add_vertex(qubit_mode("a"));
  CHECK_THROWS_AS(g.add_vertex(ancilla_mode("a")), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(DigraphEdge{"a", "x", ExactScalar::one(), InternalState::plus()}),
                  std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(DigraphEdge{"a", "a", ExactScalar::zero(), InternalState::plus()}),
                  std::invalid_argument);
  g.add_edge(DigraphEdge{"a", "a", ExactScalar::one(), InternalState::plus()});
  CHECK_THROWS_AS(g.add_edge(DigraphEdge{"a", "a", ExactScalar(2), InternalState::plus()}),
                  std::invalid_argument);
  // Same endpoints, different state: a distinct edge.
  g.add_edge(DigraphEdge{"a", "a", ExactScalar::one(), InternalState::minus()});
  CHECK(g.edges().size() == 2);
}

TEST_CASE("bigraph to digraph and back") {
  SUBCASE("single circle and dot fuse to one vertex with a loop") {
    SculptingBigraph g;
    g.add_circle(qubit_mode("v"));
    g.add_dot("v");
    g.add_edge(BigraphEdge{"v", "v", ExactScalar::one(), InternalState::zero()});
    SculptingDigraph d = bigraph_to_digraph(g, identity_owner(g));
    CHECK(d.vertices().size() == 1);
    REQUIRE(d.edges().size() == 1);
    CHECK(d.edges()[0].is_loop());
  }
  SUBCASE("unbalanced bigraphs are rejected") {
    SculptingBigraph g;
    g.add_circle(qubit_mode("v"));
    CHECK_THROWS_AS(bigraph_to_digraph(g, {}), std::invalid_argument);
  }
  SUBCASE("non-bijective owner maps are rejected") {
    SculptingBigraph g;
    g.add_circle(qubit_mode("u"));
    g.add_circle(qubit_mode("v"));
    g.add_dot("d1");
    g.add_dot("d2");
    std::map<std::string, std::string> owner{{"d1", "u"}, {"d2", "u"}};
    CHECK_THROWS_AS(bigraph_to_digraph(g, owner), std::invalid_argument);
  }
  SUBCASE("empty digraph gives the empty bigraph") {
    SculptingBigraph empty = digraph_to_bigraph(SculptingDigraph{});
    CHECK(empty.circles().empty());
    CHECK(empty.dots().empty());
  }
  SUBCASE("round trip is the identity on 200 random balanced bigraphs") {
    std::mt19937 rng(20240804);
    for (int trial = 0; trial < 200; ++trial) {
      SculptingBigraph g = random_balanced_bigraph(rng);
      SculptingDigraph d = bigraph_to_digraph(g, identity_owner(g));
      CHECK(digraph_to_bigraph(d) == g);
      CHECK(bigraph_to_digraph(digraph_to_bigraph(d), identity_owner(g)) == d);
    }
  }
}

TEST_CASE("digraph to operator") {
  SUBCASE("one loop becomes a single-summand factor") {
    SculptingDigraph g;
    g.add_vertex(qubit_mode("v"));
    g.add_edge(DigraphEdge{"v", "v", ExactScalar::one(), InternalState::plus()});
    SculptingOperator op = digraph_to_operator(g);
    REQUIRE(op.factors.size() == 1);
    REQUIRE(op.factors[0].summands.size() == 1);
    CHECK(op.factors[0].summands[0].mode.label == "v");
    CHECK(op.factors[0].summands[0].state == InternalState::plus());
  }
  SUBCASE("a vertex without incoming edges is an error") {
    SculptingDigraph g;
    g.add_vertex(qubit_mode("u"));
    g.add_vertex(qubit_mode("v"));
    g.add_edge(DigraphEdge{"u", "u", ExactScalar::one(), InternalState::plus()});
    CHECK_THROWS_AS(digraph_to_operator(g), std::invalid_argument);
  }
  SUBCASE("operator reconstruction reproduces the digraph") {
    std::mt19937 rng(20240805);
    for (int trial = 0; trial < 100; ++trial) {
      SculptingBigraph big = random_balanced_bigraph(rng);
      SculptingDigraph d = bigraph_to_digraph(big, identity_owner(big));
      bool total = true;
      for (const auto& v : d.vertices()) {
        if (d.in_edges(v.label).empty()) total = false;
      }
      if (!total) continue;
      CHECK(operator_to_digraph(digraph_to_operator(d), d.vertices()) == d);
    }
  }
}

TEST_CASE("GHZ digraph structure") {
  for (int n = 2; n <= 8; ++n) {
    SculptingDigraph g = ghz_digraph(n, /*normalized=*/true);
    CAPTURE(n);
    CHECK(g.vertices().size() == static_cast<std::size_t>(n));
    // One red loop and one incoming blue edge per vertex.
    for (const auto& v : g.vertices()) {
      auto incoming = g.in_edges(v.label);
      REQUIRE(incoming.size() == 2);
    }
    CHECK(enumerate_directed_pms(g).size() == 2);
    CHECK(is_strongly_connected(g));
    CHECK(check_genuine_conditions(g).pass());
  }
}

TEST_CASE("GHZ operator matches the ring form") {
  // (a_{1,0} - a_{2,1})(a_{2,0} - a_{3,1})(a_{3,0} - a_{1,1}) up to the
  // 1/sqrt2 weights.
  SculptingDigraph g = ghz_digraph(3, /*normalized=*/true);
  SculptingOperator expected;
  const ExactScalar w = ExactScalar::inv_sqrt2();
  for (int l = 1; l <= 3; ++l) {
    AnnihilationOp factor;
    factor.summands.push_back(
        OpSummand{qubit_mode(std::to_string(l)), InternalState::zero(), w});
    factor.summands.push_back(
        OpSummand{qubit_mode(std::to_string(l % 3 + 1)), InternalState::one(), -w});
    expected.factors.push_back(factor);
  }
  CHECK(same_operator(digraph_to_operator(g), expected));
}

TEST_CASE("directed PM enumeration") {
  SUBCASE("no edges, one vertex: no matchings") {
    SculptingDigraph g;
    g.add_vertex(qubit_mode("v"));
    CHECK(enumerate_directed_pms(g).empty());
  }
  SUBCASE("matchings decompose into disjoint cycles covering all vertices") {
    std::mt19937 rng(20240806);
    for (int trial = 0; trial < 100; ++trial) {
      SculptingBigraph big = random_balanced_bigraph(rng);
      SculptingDigraph d = bigraph_to_digraph(big, identity_owner(big));
      for (const auto& pm : enumerate_directed_pms(d)) {
        std::vector<bool> covered(d.vertices().size(), false);
        for (const auto& cycle : pm.cycles()) {
          for (std::size_t v : cycle) {
            CHECK_FALSE(covered[v]);
            covered[v] = true;
          }
        }
        CHECK(std::all_of(covered.begin(), covered.end(), [](bool b) { return b; }));
      }
    }
  }
  SUBCASE("count equals the support permanent on random graphs") {
    std::mt19937 rng(20240807);
    for (int trial = 0; trial < 120; ++trial) {
      SculptingBigraph big = random_balanced_bigraph(rng);
      SculptingDigraph d = bigraph_to_digraph(big, identity_owner(big));
      if (d.vertices().size() > 8) continue;
      ExactScalar count = permanent(support_matrix(d));
      CHECK(count == ExactScalar(static_cast<long>(enumerate_directed_pms(d).size())));
    }
  }
  SUBCASE("output is lexicographically sorted and duplicate-free") {
    SculptingDigraph g = ghz_digraph(4, false);
    auto pms = enumerate_directed_pms(g);
    for (std::size_t i = 1; i < pms.size(); ++i) {
      CHECK(pms[i - 1].source_of < pms[i].source_of);
    }
  }
}

TEST_CASE("permanent") {
  SUBCASE("identity matrices") {
    for (std::size_t n = 0; n <= 6; ++n) {
      CHECK(permanent(ScalarMatrix::identity(n)) == ExactScalar::one());
    }
  }
  SUBCASE("non-square input is rejected") {
    CHECK_THROWS_AS(permanent(ScalarMatrix(2, 3)), std::invalid_argument);
  }
  SUBCASE("agrees with the brute-force definition on random matrices") {
    std::mt19937 rng(20240808);
    std::uniform_int_distribution<long> entry(-2, 2);
    for (int trial = 0; trial < 40; ++trial) {
      ScalarMatrix m(5, 5);
      for (std::size_t r = 0; r < 5; ++r) {
        for (std::size_t c = 0; c < 5; ++c) m.at(r, c) = ExactScalar(entry(rng));
      }
      CHECK(permanent(m) == brute_force_permanent(m));
    }
  }
  SUBCASE("exact on sqrt2-valued entries") {
    ScalarMatrix m(3, 3);
    for (std::size_t r = 0; r < 3; ++r) {
      for (std::size_t c = 0; c < 3; ++c) m.at(r, c) = ExactScalar::inv_sqrt2();
    }
    // 3! * (1/sqrt2)^3 = 6 * sqrt2/4 = 3/2 * sqrt2.
    CHECK(permanent(m) == ExactScalar(0, mpq_class(3, 2), 0, 0));
  }
}

TEST_CASE("strong connectivity") {
  CHECK(is_strongly_connected(ghz_digraph(5, false)));
  CHECK_FALSE(is_strongly_connected(two_disjoint_loops()));
  CHECK(is_strongly_connected(SculptingDigraph{}));

  SculptingDigraph one_way;
  one_way.add_vertex(qubit_mode("a"));
  one_way.add_vertex(qubit_mode("b"));
  one_way.add_edge(DigraphEdge{"a", "b", ExactScalar::one(), InternalState::plus()});
  CHECK_FALSE(is_strongly_connected(one_way));
}

TEST_CASE("genuine-entanglement necessary conditions") {
  SUBCASE("single-color qubit vertex fails") {
    SculptingDigraph g;
    g.add_vertex(qubit_mode("a"));
    g.add_vertex(qubit_mode("b"));
    g.add_edge(DigraphEdge{"a", "a", ExactScalar::one(), InternalState::plus()});
    g.add_edge(DigraphEdge{"b", "a", ExactScalar::one(), InternalState::plus()});
    g.add_edge(DigraphEdge{"a", "b", ExactScalar::one(), InternalState::zero()});
    g.add_edge(DigraphEdge{"b", "b", ExactScalar::one(), InternalState::one()});
    GenuineReport report = check_genuine_conditions(g);
    CHECK(report.strongly_connected);
    CHECK_FALSE(report.qubit_vertices_ok);
    CHECK_FALSE(report.pass());
    CHECK(report.vertex_color_ok[0] == std::pair<std::string, bool>{"a", false});
    CHECK(report.vertex_color_ok[1] == std::pair<std::string, bool>{"b", true});
  }
  SUBCASE("disconnected loops fail the global condition") {
    GenuineReport report = check_genuine_conditions(two_disjoint_loops());
    CHECK_FALSE(report.strongly_connected);
    CHECK_FALSE(report.pass());
  }
}

TEST_CASE("EPM circle classification") {
  SUBCASE("GHZ bigraph circles are orthogonal pairs") {
    EpmReport report = check_epm(ghz_bigraph(4, true));
    CHECK(report.pass);
    for (const auto& [label, form] : report.circle_forms) {
      CHECK(form == CircleForm::OrthogonalPair);
    }
  }
  SUBCASE("a 0/+ circle conforms to neither form") {
    SculptingBigraph g;
    g.add_circle(qubit_mode("v"));
    g.add_dot("d1");
    g.add_dot("d2");  // unbalanced is fine for classification
    g.add_edge(BigraphEdge{"v", "d1", ExactScalar::one(), InternalState::zero()});
    g.add_edge(BigraphEdge{"v", "d2", ExactScalar::one(), InternalState::plus()});
    EpmReport report = check_epm(g);
    CHECK_FALSE(report.pass);
    CHECK(report.circle_forms[0].second == CircleForm::Nonconforming);
  }
  SUBCASE("uniform bundles of any size conform") {
    SculptingBigraph g;
    g.add_circle(ancilla_mode("v"));
    g.add_dot("d1");
    g.add_dot("d2");
    g.add_dot("d3");
    for (const std::string dot : {"d1", "d2", "d3"}) {
      g.add_edge(BigraphEdge{"v", dot, ExactScalar::one(), InternalState::plus()});
    }
    EpmReport report = check_epm(g);
    CHECK(report.circle_forms[0].second == CircleForm::UniformColor);
  }
  SUBCASE("semantic fallback simulates the scheme") {
    EpmReport report = check_epm(ghz_bigraph(3, true), /*with_semantic_check=*/true);
    REQUIRE(report.no_bunching.has_value());
    CHECK(*report.no_bunching);
  }
}

TEST_CASE("DOT export") {
  SUBCASE("empty digraph is a valid empty document") {
    CHECK(export_dot(SculptingDigraph{}) == "digraph sculpting {\n}\n");
  }
  SUBCASE("GHZ N=3: three red loops, three blue cycle edges") {
    std::string dot = export_dot(ghz_digraph(3, /*normalized=*/false));
    CHECK(std::count(dot.begin(), dot.end(), '\n') == 3 + 6 + 2);
    std::size_t red = 0, blue = 0;
    for (std::size_t pos = dot.find("color=red"); pos != std::string::npos;
         pos = dot.find("color=red", pos + 1)) {
      ++red;
    }
    for (std::size_t pos = dot.find("color=blue"); pos != std::string::npos;
         pos = dot.find("color=blue", pos + 1)) {
      ++blue;
    }
    CHECK(red == 3);
    CHECK(blue == 3);
    // Loops carry weight 1 (no label); cycle edges carry -1.
    std::size_t minus_labels = 0;
    for (std::size_t pos = dot.find("label=\"-1\""); pos != std::string::npos;
         pos = dot.find("label=\"-1\"", pos + 1)) {
      ++minus_labels;
    }
    CHECK(minus_labels == 3);
  }
  SUBCASE("weighted edges carry labels") {
    std::string dot = export_dot(ghz_digraph(2, /*normalized=*/true));
    CHECK(dot.find("label=\"1/2*sqrt2\"") != std::string::npos);
    CHECK(dot.find("label=\"-1/2*sqrt2\"") != std::string::npos);
  }
  SUBCASE("bigraph export distinguishes circles and dots") {
    std::string dot = export_dot(ghz_bigraph(2, false));
    CHECK(dot.find("graph sculpting_bigraph {") == 0);
    CHECK(dot.find("shape=circle") != std::string::npos);
    CHECK(dot.find("shape=point") != std::string::npos);
    CHECK(dot.find("\"c:1\" -- \"d:1\"") != std::string::npos);
  }
}
