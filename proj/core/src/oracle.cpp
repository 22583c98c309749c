#include "sculpt/oracle.hpp"

#include <set>
#include <stdexcept>

namespace sculpt {

void SimpleGraph::validate() const {
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : edges) {
    if (a < 1 || a > n || b < 1 || b > n) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (a == b) {
      throw std::invalid_argument("loop at vertex " + std::to_string(a));
    }
    if (!seen.insert(std::minmax(a, b)).second) {
      throw std::invalid_argument("repeated edge (" + std::to_string(a) + "," +
                                  std::to_string(b) + ")");
    }
  }
}

QubitState plus_state(int n) {
  QubitState out(n);
  ExactScalar coeff = ExactScalar::one();
  for (int i = 0; i < n; ++i) coeff *= ExactScalar::inv_sqrt2();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) out.add(bits, coeff);
  return out;
}

namespace {

void check_qubit_index(const QubitState& state, int j) {
  if (j < 1 || j > state.qubit_count()) {
    throw std::invalid_argument("qubit index out of range: " + std::to_string(j));
  }
}

}  // namespace

QubitState cz_apply(const QubitState& state, int j, int k) {
  check_qubit_index(state, j);
  check_qubit_index(state, k);
  if (j == k) {
    throw std::invalid_argument("CZ needs two distinct qubits");
  }
  const int n = state.qubit_count();
  QubitState out(n);
  for (const auto& [bits, coeff] : state.terms()) {
    bool both = (bits >> (n - j) & 1) && (bits >> (n - k) & 1);
    out.add(bits, both ? -coeff : coeff);
  }
  return out;
}

QubitState hadamard_apply(const QubitState& state, int j) {
  check_qubit_index(state, j);
  const int n = state.qubit_count();
  const std::uint64_t mask = std::uint64_t{1} << (n - j);
  const ExactScalar half_sqrt2 = ExactScalar::inv_sqrt2();
  QubitState out(n);
  for (const auto& [bits, coeff] : state.terms()) {
    ExactScalar c = coeff * half_sqrt2;
    if (bits & mask) {
      out.add(bits & ~mask, c);
      out.add(bits, -c);
    } else {
      out.add(bits, c);
      out.add(bits | mask, c);
    }
  }
  return out;
}

QubitState graph_state(const SimpleGraph& g) {
  g.validate();
  QubitState state = plus_state(g.n);
  for (auto [a, b] : g.edges) state = cz_apply(state, a, b);
  return state;
}

QubitState symbol_product_state(const std::string& symbols) {
  const int n = static_cast<int>(symbols.size());
  QubitState out(n);
  out.add(std::uint64_t{0}, ExactScalar::one());
  // Expand symbol by symbol; qubit i contributes one or two branches.
  for (int i = 0; i < n; ++i) {
    const char symbol = symbols[static_cast<std::size_t>(i)];
    const std::uint64_t mask = std::uint64_t{1} << (n - 1 - i);
    QubitState next(n);
    for (const auto& [bits, coeff] : out.terms()) {
      switch (symbol) {
        case '0': next.add(bits, coeff); break;
        case '1': next.add(bits | mask, coeff); break;
        case '+':
          next.add(bits, coeff * ExactScalar::inv_sqrt2());
          next.add(bits | mask, coeff * ExactScalar::inv_sqrt2());
          break;
        case '-':
          next.add(bits, coeff * ExactScalar::inv_sqrt2());
          next.add(bits | mask, -(coeff * ExactScalar::inv_sqrt2()));
          break;
        default:
          throw std::invalid_argument(std::string("unknown basis symbol: '") + symbol + "'");
      }
    }
    out = std::move(next);
  }
  return out;
}

QubitState star_state(int k) {
  if (k < 2) {
    throw std::domain_error("star graph needs at least 2 qubits, got " + std::to_string(k));
  }
  std::string branch0(static_cast<std::size_t>(k - 1), '+');
  std::string branch1(static_cast<std::size_t>(k - 1), '-');
  return symbol_product_state(branch0 + "0") + symbol_product_state(branch1 + "1");
}

QubitState path_state(int length) {
  if (length < 2) {
    throw std::domain_error("path graph needs at least 2 qubits, got " + std::to_string(length));
  }
  QubitState out(length);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << length); ++bits) {
    int exponent = 0;
    for (int i = 0; i + 1 < length; ++i) {
      bool a = bits >> (length - 1 - i) & 1;
      bool b = bits >> (length - 2 - i) & 1;
      if (a && b) ++exponent;
    }
    out.add(bits, exponent % 2 == 0 ? ExactScalar::one() : -ExactScalar::one());
  }
  return out;
}

std::vector<int> caterpillar_centers(const CaterpillarSpec& spec) {
  spec.validate();
  std::vector<int> centers;
  int next = 0;
  for (int j = 1; j <= spec.path_vertex_count(); ++j) {
    next += spec.star_size(j);
    centers.push_back(next);
  }
  return centers;
}

SimpleGraph caterpillar_graph(const CaterpillarSpec& spec) {
  spec.validate();
  SimpleGraph g;
  g.n = spec.qubit_count();
  std::vector<int> centers = caterpillar_centers(spec);
  int label = 1;
  for (int j = 1; j <= spec.path_vertex_count(); ++j) {
    const int center = centers[static_cast<std::size_t>(j) - 1];
    if (j >= 2) g.edges.emplace_back(centers[static_cast<std::size_t>(j) - 2], center);
    for (; label < center; ++label) g.edges.emplace_back(label, center);
    ++label;  // skip the center itself
  }
  g.validate();
  return g;
}

QubitState caterpillar_target(const CaterpillarSpec& spec, LeafBasis leaf_basis) {
  SimpleGraph g = caterpillar_graph(spec);
  QubitState state = graph_state(g);
  if (leaf_basis == LeafBasis::Hadamard) {
    std::set<int> centers;
    for (int c : caterpillar_centers(spec)) centers.insert(c);
    for (int q = 1; q <= g.n; ++q) {
      if (!centers.count(q)) state = hadamard_apply(state, q);
    }
  }
  return state;
}

}  // namespace sculpt
