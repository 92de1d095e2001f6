#pragma once

#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "ccqed/hilbert.hpp"
#include "ccqed/model.hpp"

namespace ccqed {

/// Full spectral decomposition, eigenvalues ascending, eigenvectors as columns.
struct EigenDecomposition {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
  Eigen::VectorXd residuals;  // ||H v - lambda v|| per pair
  int sweeps = 0;
};

class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, double off_diagonal_norm)
      : std::runtime_error(what), off_diagonal_norm_(off_diagonal_norm) {}
  double off_diagonal_norm() const { return off_diagonal_norm_; }

 private:
  double off_diagonal_norm_;
};

struct JacobiOptions {
  int max_sweeps = 100;
  double relative_tolerance = 1e-14;  // off-diagonal Frobenius norm / ||H||_F
};

/// Cyclic Jacobi eigensolver for small dense real symmetric matrices.
/// Deterministic: the same input always yields bit-identical output.
/// Throws SolverError if the off-diagonal norm has not converged after
/// `max_sweeps` full sweeps, std::invalid_argument if `h` is not symmetric.
EigenDecomposition diagonalize(const Eigen::MatrixXd& h, const JacobiOptions& options = {});

inline EigenDecomposition diagonalize(const HamiltonianMatrix& h) { return diagonalize(h.entries); }

inline constexpr double kDegeneracyTolerance = 1e-9;

struct GroundStateResult {
  double energy = 0.0;
  StateVector vector;  // largest-magnitude amplitude is positive
  double gap = 0.0;    // lambda_1 - lambda_0 (infinity for a 1-dim sector)
  bool degenerate = false;
};

/// Flips the sign of `v` so its largest-magnitude entry (first on ties) is positive.
void apply_sign_convention(Eigen::Ref<Eigen::VectorXd> v);

bool is_degenerate(double gap, double ground_energy);

GroundStateResult ground_state(const HamiltonianMatrix& h);

}  // namespace ccqed
