#include "ccqed/self_check.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "ccqed/entanglement.hpp"
#include "ccqed/jc_oracle.hpp"
#include "ccqed/observables.hpp"
#include "ccqed/oracle_fullspace.hpp"
#include "ccqed/spectra.hpp"

namespace ccqed {

namespace {

void add(std::vector<CheckResult>& out, std::string name, double value, double tolerance) {
  out.push_back({std::move(name), value, tolerance, std::isfinite(value) && value <= tolerance});
}

}  // namespace

std::vector<CheckResult> run_self_check(const ModelParams& params) {
  std::vector<CheckResult> out;
  const auto basis = enumerate_basis(2);
  const HamiltonianMatrix h = build_hamiltonian(params, basis);
  const double scale = std::max(1.0, h.entries.norm());

  add(out, "sector H symmetric (max |H - H^T|)", (h.entries - h.entries.transpose()).cwiseAbs().maxCoeff(), 0.0);
  add(out, "rule-built [H, N] max entry", excitation_commutator_max(params, *basis), 1e-12 * scale);

  const FullSpaceHamiltonian full = build_full(params, 2);
  add(out, "Kronecker-built [H, N] max entry", commutator_max(full), 1e-12 * scale);
  add(out, "sector restriction == sector H", (restrict_to_sector(full, *basis) - h.entries).cwiseAbs().maxCoeff(),
      1e-14 * scale);

  const EigenDecomposition eig = diagonalize(h);
  add(out, "Jacobi max residual / ||H||", eig.residuals.maxCoeff() / scale, 1e-10);
  add(out, "Jacobi reconstruction / ||H||",
      (eig.vectors * eig.values.asDiagonal() * eig.vectors.transpose() - h.entries).cwiseAbs().maxCoeff() / scale, 1e-9);

  const GroundStateResult sector = ground_state(h);
  const GroundStateResult oracle = sector_ground_via_fullspace(params, basis, 2);
  add(out, "ground energy: sector vs full space", std::abs(sector.energy - oracle.energy), 1e-10 * scale);
  if (!sector.degenerate) {
    const double overlap = std::abs(sector.vector.amplitudes.dot(oracle.vector.amplitudes));
    add(out, "ground state 1 - |overlap| vs full space", 1.0 - overlap, 1e-10);
  }

  const Eigen::VectorXd psi = embed(sector.vector);
  double schmidt_gap = 0.0;
  double complement_gap = 0.0;
  for (unsigned mask = 1; mask < 15; ++mask) {
    const FactorSet kept = FactorSet::from_mask(mask);
    const double s_rho = von_neumann_entropy(reduced_density(psi, kept));
    schmidt_gap = std::max(schmidt_gap, std::abs(s_rho - schmidt_entropy(psi, kept)));
    complement_gap =
        std::max(complement_gap, std::abs(s_rho - von_neumann_entropy(reduced_density(psi, kept.complement()))));
  }
  add(out, "entropy: density matrix vs Schmidt", schmidt_gap, 1e-9);
  add(out, "entropy: S(kept) vs S(complement)", complement_gap, 1e-10);

  const OrderParameters op = order_parameters(sector.vector);
  add(out, "atomic variance == p(1-p)",
      std::abs(op.var_atom_site1 - op.mean_atom_site1 * (1.0 - op.mean_atom_site1)), 1e-12);
  add(out, "sum rule <n1> + <n2> = 2",
      std::abs(expectation(sector.vector, SiteOperator::n_total_1) +
               expectation(sector.vector, SiteOperator::n_total_2) - 2.0),
      1e-12);

  if (params.hop == 0.0) {
    const AnalyticGround analytic = a0_ground_state(params, basis);
    if (!analytic.degenerate && !sector.degenerate) {
      const double fidelity = std::abs(analytic.state.amplitudes.dot(sector.vector.amplitudes));
      add(out, "zero-hopping dressed product 1 - fidelity", 1.0 - fidelity, 1e-10);
    }
    add(out, "zero-hopping dressed energy", std::abs(analytic.energy - sector.energy), 1e-10 * scale);
  }
  return out;
}

void print_check_table(std::ostream& out, const std::vector<CheckResult>& results) {
  char line[160];
  for (const auto& r : results) {
    std::snprintf(line, sizeof line, "%-4s  %-44s  %12.3e  <= %9.1e\n", r.passed ? "PASS" : "FAIL", r.name.c_str(),
                  r.value, r.tolerance);
    out << line;
  }
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

}  // namespace ccqed
