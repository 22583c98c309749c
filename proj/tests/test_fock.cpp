#include <doctest.h>

#include <random>

#include "sculpt/fock.hpp"

using namespace sculpt;

namespace {

FockState single_term(ExactScalar coeff, OccupancyMap occ) {
  return FockState::from_terms({FockTerm{std::move(coeff), std::move(occ)}});
}

AnnihilationOp single_op(const std::string& label, InternalState state,
                         ExactScalar amplitude = ExactScalar::one()) {
  return AnnihilationOp{{OpSummand{qubit_mode(label), std::move(state), std::move(amplitude)}}};
}

// The doubly occupied pair adag_{j,+} adag_{j,-} |vac>.
FockState qubit_pair(const std::string& label) {
  return single_term(ExactScalar::one(), {{label, Occupancy{1, 1}}});
}

int total_bosons(const FockTerm& term) {
  int total = 0;
  for (const auto& [label, occ] : term.occupancy) total += occ.total();
  return total;
}

AnnihilationOp random_annihilation(std::mt19937& rng, const std::vector<std::string>& labels) {
  std::uniform_int_distribution<std::size_t> pick_label(0, labels.size() - 1);
  std::uniform_int_distribution<int> pick_state(0, 3);
  std::uniform_int_distribution<int> pick_count(1, 3);
  std::uniform_int_distribution<long> pick_amp(1, 5);
  const char symbols[] = {'+', '-', '0', '1'};
  AnnihilationOp op;
  int count = pick_count(rng);
  for (int i = 0; i < count; ++i) {
    op.summands.push_back(
        OpSummand{qubit_mode(labels[pick_label(rng)]),
                  InternalState::from_symbol(symbols[pick_state(rng)]),
                  ExactScalar(pick_amp(rng)) * (i % 2 ? -ExactScalar::one() : ExactScalar::one())});
  }
  return op;
}

FockState random_small_state(std::mt19937& rng, const std::vector<std::string>& labels) {
  std::uniform_int_distribution<int> occ(0, 2);
  std::uniform_int_distribution<long> coeff(-4, 4);
  std::uniform_int_distribution<int> terms(1, 3);
  std::vector<FockTerm> out;
  int count = terms(rng);
  for (int t = 0; t < count; ++t) {
    OccupancyMap m;
    for (const auto& label : labels) {
      Occupancy o{occ(rng), occ(rng)};
      if (o.total() > 0) m[label] = o;
    }
    long c = coeff(rng);
    if (c == 0) c = 1;
    out.push_back(FockTerm{ExactScalar(c), std::move(m)});
  }
  return FockState::from_terms(std::move(out));
}

}  // namespace

TEST_CASE("initial state occupancies") {
  SUBCASE("two qubit modes") {
    FockState s = initial_state({qubit_mode("q1"), qubit_mode("q2")});
    REQUIRE(s.term_count() == 1);
    CHECK(s.terms()[0].coefficient == ExactScalar::one());
    CHECK(s.terms()[0].occupancy ==
          OccupancyMap{{"q1", Occupancy{1, 1}}, {"q2", Occupancy{1, 1}}});
  }
  SUBCASE("qubits plus ancillas") {
    FockState s = initial_state({qubit_mode("q1"), qubit_mode("q2"), ancilla_mode("A"),
                                 ancilla_mode("B"), ancilla_mode("C")});
    REQUIRE(s.term_count() == 1);
    CHECK(s.terms()[0].occupancy ==
          OccupancyMap{{"A", Occupancy{1, 0}},
                       {"B", Occupancy{1, 0}},
                       {"C", Occupancy{1, 0}},
                       {"q1", Occupancy{1, 1}},
                       {"q2", Occupancy{1, 1}}});
  }
  SUBCASE("no modes gives the vacuum") {
    CHECK(initial_state({}) == FockState::vacuum());
  }
  SUBCASE("duplicate labels are rejected") {
    CHECK_THROWS_AS(initial_state({qubit_mode("q"), ancilla_mode("q")}), std::invalid_argument);
  }
}

TEST_CASE("single-mode ladder action") {
  SUBCASE("removes one quantum") {
    FockState s = apply_single("j", Level::Plus, qubit_pair("j"));
    CHECK(s == single_term(ExactScalar::one(), {{"j", Occupancy{0, 1}}}));
  }
  SUBCASE("annihilates the vacuum") {
    CHECK(apply_single("j", Level::Plus, FockState::vacuum()).is_zero());
  }
  SUBCASE("double occupation brings down the factor n") {
    FockState doubly = single_term(ExactScalar::one(), {{"j", Occupancy{2, 0}}});
    CHECK(apply_single("j", Level::Plus, doubly) ==
          single_term(ExactScalar(2), {{"j", Occupancy{1, 0}}}));
  }
  SUBCASE("reduces every surviving term's boson count by one") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
      FockState s = random_small_state(rng, {"a", "b"});
      FockState lowered = apply_single("a", Level::Minus, s);
      for (const auto& term : lowered.terms()) {
        // Count against the matching source term.
        int found = -1;
        for (const auto& src : s.terms()) {
          OccupancyMap expect = src.occupancy;
          auto it = expect.find("a");
          if (it == expect.end() || it->second.minus == 0) continue;
          it->second.minus -= 1;
          if (it->second.total() == 0) expect.erase(it);
          if (expect == term.occupancy) {
            found = total_bosons(src);
            break;
          }
        }
        REQUIRE(found >= 0);
        CHECK(total_bosons(term) == found - 1);
      }
    }
  }
}

// The four operator identities on the doubly occupied pair:
//   a_{j,0} pair = adag_{j,0}|vac>,   a_{j,1} pair = -adag_{j,1}|vac>,
//   a_{j,0} a_{j,1} pair = 0,         a_{j,+-}^n pair = 0 for n >= 2.
TEST_CASE("annihilation identities on the paired mode") {
  const ExactScalar half_sqrt2 = ExactScalar::inv_sqrt2();

  FockState projector_zero = apply_annihilation(single_op("j", InternalState::zero()),
                                                qubit_pair("j"));
  FockState expected_zero =
      single_term(half_sqrt2, {{"j", Occupancy{1, 0}}}) +
      single_term(half_sqrt2, {{"j", Occupancy{0, 1}}});
  CHECK(projector_zero == expected_zero);

  FockState projector_one = apply_annihilation(single_op("j", InternalState::one()),
                                               qubit_pair("j"));
  FockState expected_one =
      single_term(-half_sqrt2, {{"j", Occupancy{1, 0}}}) +
      single_term(half_sqrt2, {{"j", Occupancy{0, 1}}});
  CHECK(projector_one == expected_one);

  SUBCASE("orthogonal pair annihilates") {
    FockState after_one = apply_annihilation(single_op("j", InternalState::one()),
                                             qubit_pair("j"));
    CHECK(apply_annihilation(single_op("j", InternalState::zero()), after_one).is_zero());
  }
  SUBCASE("same level twice annihilates") {
    for (InternalState state : {InternalState::plus(), InternalState::minus()}) {
      FockState once = apply_annihilation(single_op("j", state), qubit_pair("j"));
      CHECK_FALSE(once.is_zero());
      CHECK(apply_annihilation(single_op("j", state), once).is_zero());
    }
  }
}

TEST_CASE("sculpting product basics") {
  SUBCASE("empty factor list is the identity") {
    FockState s = qubit_pair("j");
    CHECK(apply_sculpting(SculptingOperator{}, s) == s);
  }
  SUBCASE("repeated plus subtraction kills the pair") {
    SculptingOperator op{{single_op("j", InternalState::plus()),
                          single_op("j", InternalState::plus())}};
    CHECK(apply_sculpting(op, qubit_pair("j")).is_zero());
  }
}

TEST_CASE("annihilation operators commute") {
  std::mt19937 rng(20240802);
  const std::vector<std::string> labels{"a", "b", "c"};
  for (int trial = 0; trial < 60; ++trial) {
    AnnihilationOp first = random_annihilation(rng, labels);
    AnnihilationOp second = random_annihilation(rng, labels);
    FockState state = random_small_state(rng, labels);
    FockState order_ab = apply_annihilation(second, apply_annihilation(first, state));
    FockState order_ba = apply_annihilation(first, apply_annihilation(second, state));
    CHECK(order_ab == order_ba);
  }
}

TEST_CASE("annihilation is linear") {
  std::mt19937 rng(20240803);
  const std::vector<std::string> labels{"a", "b"};
  for (int trial = 0; trial < 60; ++trial) {
    AnnihilationOp op = random_annihilation(rng, labels);
    FockState x = random_small_state(rng, labels);
    FockState y = random_small_state(rng, labels);
    ExactScalar c(3);
    CHECK(apply_annihilation(op, x + y) ==
          apply_annihilation(op, x) + apply_annihilation(op, y));
    CHECK(apply_annihilation(op, x.scaled(c)) == apply_annihilation(op, x).scaled(c));
  }
}

TEST_CASE("no-bunching predicate") {
  const std::vector<ModeId> qubits{qubit_mode("q1"), qubit_mode("q2")};
  const std::vector<ModeId> ancillas{ancilla_mode("A")};

  SUBCASE("single boson per qubit mode passes") {
    FockState s = single_term(ExactScalar::one(),
                              {{"q1", Occupancy{1, 0}}, {"q2", Occupancy{0, 1}}});
    CHECK(check_no_bunching(s, qubits, ancillas));
  }
  SUBCASE("the doubly occupied initial state fails") {
    CHECK_FALSE(check_no_bunching(initial_state(qubits), qubits, ancillas));
  }
  SUBCASE("zero state passes vacuously") {
    CHECK(check_no_bunching(FockState::zero(), qubits, ancillas));
  }
  SUBCASE("surviving ancilla boson fails") {
    FockState s = single_term(ExactScalar::one(), {{"q1", Occupancy{1, 0}},
                                                   {"q2", Occupancy{1, 0}},
                                                   {"A", Occupancy{1, 0}}});
    CHECK_FALSE(check_no_bunching(s, qubits, ancillas));
  }
  SUBCASE("missing qubit boson fails") {
    FockState s = single_term(ExactScalar::one(), {{"q1", Occupancy{1, 0}}});
    CHECK_FALSE(check_no_bunching(s, qubits, ancillas));
  }
}

TEST_CASE("projection to qubit strings") {
  const std::vector<ModeId> two{qubit_mode("q1"), qubit_mode("q2")};

  SUBCASE("(+ level) x (+ level) spreads over all strings") {
    FockState s = single_term(ExactScalar::one(),
                              {{"q1", Occupancy{1, 0}}, {"q2", Occupancy{1, 0}}});
    QubitState q = to_qubit_state(s, two);
    ExactScalar half = ExactScalar::rational(mpq_class(1, 2));
    for (const std::string& bits : {"00", "01", "10", "11"}) {
      CHECK(q.coefficient(bits) == half);
    }
  }
  SUBCASE("the 0-basis product maps to |00>") {
    // (adag_{1,+}+adag_{1,-})(adag_{2,+}+adag_{2,-})|vac>, coefficient 1/2.
    ExactScalar quarter = ExactScalar::rational(mpq_class(1, 4));
    FockState s;
    for (int first : {0, 1}) {
      for (int second : {0, 1}) {
        s = s + single_term(ExactScalar::rational(mpq_class(1, 2)),
                            {{"q1", first ? Occupancy{0, 1} : Occupancy{1, 0}},
                             {"q2", second ? Occupancy{0, 1} : Occupancy{1, 0}}});
      }
    }
    QubitState q = to_qubit_state(s, two);
    CHECK(q.term_count() == 1);
    CHECK(q.coefficient("00") == ExactScalar::one());
  }
  SUBCASE("bunched input is rejected with the offending term named") {
    FockState s = initial_state(two);
    CHECK_THROWS_WITH_AS(to_qubit_state(s, two),
                         doctest::Contains("adag[q1,+]"), std::invalid_argument);
  }
}
