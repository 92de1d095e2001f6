#include "ccqed/model.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>

namespace ccqed {

ModelParams ModelParams::from_detuning(double delta_over_g, double hop_over_g, double g, double omega_c) {
  ModelParams p;
  p.g = g;
  p.omega_c = omega_c;
  p.omega_a = omega_c + delta_over_g * g;
  p.hop = hop_over_g * g;
  return p;
}

void ModelParams::validate() const {
  if (!std::isfinite(omega_c) || !std::isfinite(omega_a) || !std::isfinite(g) || !std::isfinite(hop)) {
    throw std::invalid_argument("model parameters must be finite");
  }
  if (!(g > 0.0)) throw std::invalid_argument("coupling g must be positive");
}

namespace {

using Lookup = std::function<std::optional<std::size_t>(const BasisConfig&)>;

// Each off-diagonal pair is generated exactly once, from the side that
// lowers an atom (coupling) or moves a photon 1 -> 2 (hopping), and written
// to both triangles.
Eigen::MatrixXd assemble(const ModelParams& p, std::span<const BasisConfig> configs, const Lookup& lookup) {
  const auto n = static_cast<Eigen::Index>(configs.size());
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  const auto set_pair = [&h](std::size_t i, std::size_t j, double v) {
    h(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v;
    h(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = v;
  };

  for (std::size_t i = 0; i < configs.size(); ++i) {
    const BasisConfig& c = configs[i];
    const auto ii = static_cast<Eigen::Index>(i);
    h(ii, ii) = p.omega_c * (c.site1.photons + c.site2.photons) + p.omega_a * (c.site1.atom + c.site2.atom);

    // g a^+ |g><e| : (e, n) -> (g, n+1), amplitude g sqrt(n+1)
    if (c.site1.atom == 1) {
      BasisConfig t = c;
      t.site1 = {0, c.site1.photons + 1};
      if (auto j = lookup(t)) set_pair(i, *j, p.g * std::sqrt(static_cast<double>(c.site1.photons + 1)));
    }
    if (c.site2.atom == 1) {
      BasisConfig t = c;
      t.site2 = {0, c.site2.photons + 1};
      if (auto j = lookup(t)) set_pair(i, *j, p.g * std::sqrt(static_cast<double>(c.site2.photons + 1)));
    }

    // A a_2^+ a_1 : (n1, n2) -> (n1-1, n2+1), amplitude A sqrt(n1 (n2+1))
    if (c.site1.photons > 0) {
      BasisConfig t = c;
      t.site1.photons -= 1;
      t.site2.photons += 1;
      if (auto j = lookup(t)) {
        set_pair(i, *j, p.hop * std::sqrt(static_cast<double>(c.site1.photons * (c.site2.photons + 1))));
      }
    }
  }
  return h;
}

}  // namespace

HamiltonianMatrix build_hamiltonian(const ModelParams& params, std::shared_ptr<const ExcitationBasis> basis) {
  params.validate();
  if (!basis || basis->size() == 0) throw std::invalid_argument("empty basis");
  const ExcitationBasis& b = *basis;
  Eigen::MatrixXd h = assemble(params, b.configs(), [&b](const BasisConfig& c) { return b.index_of(c); });
  return {std::move(basis), std::move(h)};
}

Eigen::MatrixXd build_product_space_hamiltonian(const ModelParams& params, int photon_cutoff) {
  params.validate();
  const std::size_t dim = full_space_dim(photon_cutoff);
  std::vector<BasisConfig> configs;
  configs.reserve(dim);
  for (std::size_t k = 0; k < dim; ++k) configs.push_back(config_from_full_index(k, photon_cutoff));
  return assemble(params, configs, [photon_cutoff](const BasisConfig& c) -> std::optional<std::size_t> {
    if (c.site1.photons > photon_cutoff || c.site2.photons > photon_cutoff) return std::nullopt;
    return full_space_index(c, photon_cutoff);
  });
}

Eigen::VectorXd excitation_number_diagonal(int photon_cutoff) {
  const std::size_t dim = full_space_dim(photon_cutoff);
  Eigen::VectorXd n(static_cast<Eigen::Index>(dim));
  for (std::size_t k = 0; k < dim; ++k) {
    n(static_cast<Eigen::Index>(k)) = config_from_full_index(k, photon_cutoff).excitations();
  }
  return n;
}

double excitation_commutator_max(const ModelParams& params, const ExcitationBasis& basis) {
  const int cutoff = basis.sector();
  const Eigen::MatrixXd h = build_product_space_hamiltonian(params, cutoff);
  const Eigen::VectorXd n = excitation_number_diagonal(cutoff);
  // [H, N]_ij = H_ij (N_j - N_i) for diagonal N
  double worst = 0.0;
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    for (Eigen::Index j = 0; j < h.cols(); ++j) {
      worst = std::max(worst, std::abs(h(i, j) * (n(j) - n(i))));
    }
  }
  return worst;
}

}  // namespace ccqed
