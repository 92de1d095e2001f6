#pragma once

#include <memory>

#include <Eigen/Dense>

#include "ccqed/hilbert.hpp"

namespace ccqed {

/// Parameters of the two-site coupled-cavity Hamiltonian (rotating-wave form):
///
///   H = sum_j [ omega_c n_c,j + omega_a n_a,j + g (a_j^+ s_j^- + a_j s_j^+) ]
///       + hop (a_1^+ a_2 + a_2^+ a_1)
///
/// Within a fixed excitation sector omega_c only shifts the spectrum, so the
/// physics depends on (delta/g, hop/g) alone.
struct ModelParams {
  double omega_c = 0.0;
  double omega_a = 0.0;
  double g = 1.0;
  double hop = 0.0;

  double delta() const { return omega_a - omega_c; }

  /// Builds parameters from detuning and hopping measured in units of g.
  static ModelParams from_detuning(double delta_over_g, double hop_over_g, double g = 1.0, double omega_c = 0.0);

  /// Throws std::invalid_argument unless g > 0 and every value is finite.
  void validate() const;
};

struct HamiltonianMatrix {
  std::shared_ptr<const ExcitationBasis> basis;
  Eigen::MatrixXd entries;

  Eigen::Index dim() const { return entries.rows(); }
};

HamiltonianMatrix build_hamiltonian(const ModelParams& params, std::shared_ptr<const ExcitationBasis> basis);

/// Applies the same matrix-element rules as build_hamiltonian to every
/// product configuration with at most `photon_cutoff` photons per cavity.
Eigen::MatrixXd build_product_space_hamiltonian(const ModelParams& params, int photon_cutoff);

/// Diagonal of the total excitation operator on the product space.
Eigen::VectorXd excitation_number_diagonal(int photon_cutoff);

/// max |[H, N]_ij| on the product space with cutoff equal to the basis sector.
double excitation_commutator_max(const ModelParams& params, const ExcitationBasis& basis);

}  // namespace ccqed
