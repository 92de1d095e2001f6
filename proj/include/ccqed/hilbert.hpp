#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace ccqed {

/// Occupation of one lattice site: a two-level atom (0 = ground, 1 = excited)
/// and a single cavity mode holding `photons` quanta.
struct SiteConfig {
  int atom = 0;
  int photons = 0;

  int excitations() const { return atom + photons; }
  auto operator<=>(const SiteConfig&) const = default;
};

struct BasisConfig {
  SiteConfig site1;
  SiteConfig site2;

  int excitations() const { return site1.excitations() + site2.excitations(); }
  auto operator<=>(const BasisConfig&) const = default;
};

/// Tensor factors of the two-site product space. The numeric value is the
/// position of the factor in the row-major multi-index used everywhere.
enum class Factor : unsigned { atom1 = 0, cavity1 = 1, atom2 = 2, cavity2 = 3 };

inline constexpr std::size_t kFactorCount = 4;

/// Per-factor dimensions (atom1, cavity1, atom2, cavity2) for a space whose
/// cavities are truncated at `photon_cutoff` photons.
constexpr std::array<std::size_t, kFactorCount> factor_dims(int photon_cutoff) {
  const auto field = static_cast<std::size_t>(photon_cutoff) + 1;
  return {2, field, 2, field};
}

constexpr std::size_t full_space_dim(int photon_cutoff) {
  const auto d = factor_dims(photon_cutoff);
  return d[0] * d[1] * d[2] * d[3];
}

/// Fixed total-excitation sector of the two-site model.
///
/// Configurations are sorted lexicographically on
/// (site1.atom, site1.photons, site2.atom, site2.photons). Because the total
/// excitation number is conserved, no cavity in sector N ever holds more than
/// N photons, so the photon cutoff N is exact rather than a truncation.
class ExcitationBasis {
 public:
  explicit ExcitationBasis(int sector_n);

  int sector() const { return sector_n_; }
  std::size_t size() const { return configs_.size(); }
  std::span<const BasisConfig> configs() const { return configs_; }
  const BasisConfig& operator[](std::size_t k) const { return configs_[k]; }

  std::optional<std::size_t> index_of(const BasisConfig& config) const;

  /// Row-major position of each config in the full product space with
  /// photon cutoff equal to the sector number.
  std::span<const std::size_t> full_indices() const { return full_indices_; }

 private:
  int sector_n_;
  std::vector<BasisConfig> configs_;
  std::vector<std::size_t> full_indices_;
};

std::shared_ptr<const ExcitationBasis> enumerate_basis(int sector_n);

/// Row-major index under factor order (atom1, cavity1, atom2, cavity2) with
/// dims (2, cutoff+1, 2, cutoff+1). Throws std::domain_error on occupancies
/// outside those ranges.
std::size_t full_space_index(const BasisConfig& config, int photon_cutoff);

/// Inverse of full_space_index.
BasisConfig config_from_full_index(std::size_t index, int photon_cutoff);

/// Real amplitudes over a sector basis.
struct StateVector {
  std::shared_ptr<const ExcitationBasis> basis;
  Eigen::VectorXd amplitudes;

  double norm() const { return amplitudes.norm(); }
};

/// Product-space amplitudes, length full_space_dim(sector). Nonzero only on
/// sector indices; norm is preserved.
Eigen::VectorXd embed(const StateVector& state);

/// Embeds into a larger product space with the given cutoff (>= sector).
Eigen::VectorXd embed(const StateVector& state, int photon_cutoff);

}  // namespace ccqed
