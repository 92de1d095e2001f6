#pragma once

#include <Eigen/Dense>

#include "ccqed/hilbert.hpp"
#include "ccqed/model.hpp"
#include "ccqed/spectra.hpp"

namespace ccqed {

// Brute-force validation path. The Hamiltonian is assembled from Kronecker
// products of single-factor ladder matrices on the whole truncated product
// space and diagonalized with Eigen's Householder/QL solver, sharing no
// code with build_hamiltonian or the Jacobi solver.

struct FullSpaceHamiltonian {
  int photon_cutoff = 2;
  Eigen::MatrixXd entries;  // row-major product order (A1, C1, A2, C2)
};

FullSpaceHamiltonian build_full(const ModelParams& params, int photon_cutoff = 2);

/// max |[H, N]_ij| with N built from the same Kronecker factors.
double commutator_max(const FullSpaceHamiltonian& h);

/// Sub-matrix on the sector's product indices, in basis order.
Eigen::MatrixXd restrict_to_sector(const FullSpaceHamiltonian& h, const ExcitationBasis& basis);

/// Eigenvalues of H (ascending) whose eigenvectors lie in the sector.
Eigen::VectorXd sector_spectrum_via_fullspace(const ModelParams& params, int sector_n, int photon_cutoff);

/// Lowest full-space eigenpair that lies in the excitation sector of `basis`.
/// Eigenvalues closer than 1e-9 are grouped so cross-sector degeneracies
/// cannot mix sectors; a non-degenerate eigenvector with more than 1e-10
/// weight outside every sector raises IntegrityError.
GroundStateResult sector_ground_via_fullspace(const ModelParams& params, std::shared_ptr<const ExcitationBasis> basis,
                                              int photon_cutoff = 2);

}  // namespace ccqed
