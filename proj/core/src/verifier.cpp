#include "sculpt/verifier.hpp"

#include <stdexcept>

namespace sculpt {

PipelineReport run_pipeline(const CaterpillarSpec& spec) {
  PipelineReport report;
  report.scheme = compile(spec);
  const CompiledScheme& scheme = report.scheme;

  FockState initial = initial_state(scheme.all_modes());
  report.fock_final = apply_sculpting(operator_of(scheme), initial);
  report.no_bunching =
      check_no_bunching(report.fock_final, scheme.qubit_order, scheme.ancilla_order);
  report.pm_count = enumerate_directed_pms(scheme.digraph).size();

  if (report.no_bunching) {
    report.qubit_state = to_qubit_state(report.fock_final, scheme.qubit_order);
    report.oracle_match =
        equal_up_to_scalar(report.qubit_state, caterpillar_target(spec, LeafBasis::Hadamard));
  } else {
    report.qubit_state = QubitState(static_cast<int>(scheme.qubit_order.size()));
  }
  return report;
}

FockState pm_expansion_state(const SculptingDigraph& digraph) {
  const SculptingOperator full = digraph_to_operator(digraph);
  const FockState initial = initial_state(digraph.vertices());

  FockState total;
  for (const DirectedPM& pm : enumerate_directed_pms(digraph)) {
    SculptingOperator restricted;
    restricted.factors.reserve(full.factors.size());
    for (std::size_t target = 0; target < full.factors.size(); ++target) {
      const std::string& matched_source =
          digraph.vertices()[pm.source_of[target]].label;
      AnnihilationOp factor;
      for (const auto& summand : full.factors[target].summands) {
        if (summand.mode.label == matched_source) factor.summands.push_back(summand);
      }
      restricted.factors.push_back(std::move(factor));
    }
    total = total + apply_sculpting(restricted, initial);
  }
  return total;
}

FockState pm_expansion_state(const CompiledScheme& scheme) {
  return pm_expansion_state(scheme.digraph);
}

GhzReport run_ghz(int n) {
  GhzReport report;
  report.n = n;

  SculptingDigraph digraph = ghz_digraph(n, /*normalized=*/true);
  report.pm_count = enumerate_directed_pms(digraph).size();

  FockState final_state =
      apply_sculpting(digraph_to_operator(digraph), initial_state(digraph.vertices()));
  report.no_bunching = check_no_bunching(final_state, digraph.vertices(), {});
  if (!report.no_bunching) {
    report.state = QubitState(n);
    return report;
  }
  report.state = to_qubit_state(final_state, digraph.vertices());

  const std::uint64_t all_ones = (std::uint64_t{1} << n) - 1;
  ExactScalar zeros_coeff = report.state.coefficient(std::uint64_t{0});
  ExactScalar ones_coeff = report.state.coefficient(all_ones);
  if (report.state.term_count() == 2 && !zeros_coeff.is_zero() && !ones_coeff.is_zero()) {
    ExactScalar ratio = ones_coeff / zeros_coeff;
    if (ratio == ExactScalar::one()) {
      report.sign = 1;
    } else if (ratio == -ExactScalar::one()) {
      report.sign = -1;
    }
  }
  return report;
}

}  // namespace sculpt
