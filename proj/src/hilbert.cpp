#include "ccqed/hilbert.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ccqed {

ExcitationBasis::ExcitationBasis(int sector_n) : sector_n_(sector_n) {
  if (sector_n < 0) {
    throw std::domain_error("sector number must be non-negative, got " + std::to_string(sector_n));
  }
  // Nested loops run in lexicographic order already.
  for (int a1 = 0; a1 <= 1; ++a1) {
    for (int c1 = 0; c1 <= sector_n; ++c1) {
      for (int a2 = 0; a2 <= 1; ++a2) {
        const int c2 = sector_n - a1 - c1 - a2;
        if (c2 < 0) continue;
        configs_.push_back({{a1, c1}, {a2, c2}});
      }
    }
  }
  full_indices_.reserve(configs_.size());
  for (const auto& c : configs_) full_indices_.push_back(full_space_index(c, sector_n));
}

std::optional<std::size_t> ExcitationBasis::index_of(const BasisConfig& config) const {
  const auto it = std::lower_bound(configs_.begin(), configs_.end(), config);
  if (it == configs_.end() || *it != config) return std::nullopt;
  return static_cast<std::size_t>(it - configs_.begin());
}

std::shared_ptr<const ExcitationBasis> enumerate_basis(int sector_n) {
  return std::make_shared<const ExcitationBasis>(sector_n);
}

std::size_t full_space_index(const BasisConfig& config, int photon_cutoff) {
  if (photon_cutoff < 0) throw std::domain_error("photon cutoff must be non-negative");
  const auto in_range = [&](const SiteConfig& s) {
    return s.atom >= 0 && s.atom <= 1 && s.photons >= 0 && s.photons <= photon_cutoff;
  };
  if (!in_range(config.site1) || !in_range(config.site2)) {
    throw std::domain_error("occupancy out of range for photon cutoff " + std::to_string(photon_cutoff));
  }
  const auto field = static_cast<std::size_t>(photon_cutoff) + 1;
  std::size_t idx = static_cast<std::size_t>(config.site1.atom);
  idx = idx * field + static_cast<std::size_t>(config.site1.photons);
  idx = idx * 2 + static_cast<std::size_t>(config.site2.atom);
  idx = idx * field + static_cast<std::size_t>(config.site2.photons);
  return idx;
}

BasisConfig config_from_full_index(std::size_t index, int photon_cutoff) {
  if (index >= full_space_dim(photon_cutoff)) throw std::domain_error("full-space index out of range");
  const auto field = static_cast<std::size_t>(photon_cutoff) + 1;
  BasisConfig c;
  c.site2.photons = static_cast<int>(index % field);
  index /= field;
  c.site2.atom = static_cast<int>(index % 2);
  index /= 2;
  c.site1.photons = static_cast<int>(index % field);
  index /= field;
  c.site1.atom = static_cast<int>(index);
  return c;
}

Eigen::VectorXd embed(const StateVector& state, int photon_cutoff) {
  const auto& basis = *state.basis;
  if (photon_cutoff < basis.sector()) {
    throw std::domain_error("embedding cutoff smaller than the sector number");
  }
  Eigen::VectorXd full = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(full_space_dim(photon_cutoff)));
  for (std::size_t k = 0; k < basis.size(); ++k) {
    full(static_cast<Eigen::Index>(full_space_index(basis[k], photon_cutoff))) = state.amplitudes(static_cast<Eigen::Index>(k));
  }
  return full;
}

Eigen::VectorXd embed(const StateVector& state) { return embed(state, state.basis->sector()); }

}  // namespace ccqed
