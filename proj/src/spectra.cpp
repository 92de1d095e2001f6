#include "ccqed/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

namespace ccqed {

namespace {

double off_diagonal_norm(const Eigen::MatrixXd& a) {
  double sum = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i != j) sum += a(i, j) * a(i, j);
    }
  }
  return std::sqrt(sum);
}

// Zeroes a(p, q) with a plane rotation applied on both sides; the
// accumulated rotations are collected in v.
void rotate(Eigen::MatrixXd& a, Eigen::MatrixXd& v, Eigen::Index p, Eigen::Index q) {
  const double apq = a(p, q);
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const Eigen::Index n = a.rows();

  for (Eigen::Index k = 0; k < n; ++k) {
    const double akp = a(k, p);
    const double akq = a(k, q);
    a(k, p) = c * akp - s * akq;
    a(k, q) = s * akp + c * akq;
  }
  for (Eigen::Index k = 0; k < n; ++k) {
    const double apk = a(p, k);
    const double aqk = a(q, k);
    a(p, k) = c * apk - s * aqk;
    a(q, k) = s * apk + c * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;

  for (Eigen::Index k = 0; k < n; ++k) {
    const double vkp = v(k, p);
    const double vkq = v(k, q);
    v(k, p) = c * vkp - s * vkq;
    v(k, q) = s * vkp + c * vkq;
  }
}

}  // namespace

EigenDecomposition diagonalize(const Eigen::MatrixXd& h, const JacobiOptions& options) {
  if (h.rows() != h.cols()) throw std::invalid_argument("matrix must be square");
  if (h != h.transpose()) throw std::invalid_argument("matrix must be symmetric");
  if (!h.allFinite()) throw std::invalid_argument("matrix has non-finite entries");

  const Eigen::Index n = h.rows();
  // Iterate on h / 2^e so the Frobenius norms cannot overflow; power-of-two
  // scaling is exact and leaves every rotation bit-identical.
  int exponent = 0;
  if (n > 0) std::frexp(h.cwiseAbs().maxCoeff(), &exponent);
  const Eigen::MatrixXd hs = h.unaryExpr([exponent](double x) { return std::ldexp(x, -exponent); });
  Eigen::MatrixXd a = hs;
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);
  const double target = options.relative_tolerance * hs.norm();

  int sweeps = 0;
  double off = off_diagonal_norm(a);
  while (off > target) {
    if (sweeps == options.max_sweeps) {
      throw SolverError("Jacobi eigensolver did not converge after " + std::to_string(sweeps) +
                            " sweeps (off-diagonal norm " + std::to_string(std::ldexp(off, exponent)) + ")",
                        std::ldexp(off, exponent));
    }
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        if (a(p, q) != 0.0) rotate(a, v, p, q);
      }
    }
    ++sweeps;
    off = off_diagonal_norm(a);
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&a](Eigen::Index x, Eigen::Index y) { return a(x, x) < a(y, y); });

  EigenDecomposition out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  out.residuals.resize(n);
  out.sweeps = sweeps;
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index src = order[static_cast<std::size_t>(k)];
    out.values(k) = std::ldexp(a(src, src), exponent);
    out.vectors.col(k) = v.col(src);
    out.residuals(k) = std::ldexp((hs * v.col(src) - a(src, src) * v.col(src)).norm(), exponent);
  }
  return out;
}

void apply_sign_convention(Eigen::Ref<Eigen::VectorXd> v) {
  Eigen::Index best = 0;
  for (Eigen::Index k = 1; k < v.size(); ++k) {
    if (std::abs(v(k)) > std::abs(v(best))) best = k;
  }
  if (v.size() > 0 && v(best) < 0.0) v = -v;
}

bool is_degenerate(double gap, double ground_energy) {
  return gap < kDegeneracyTolerance * std::max(1.0, std::abs(ground_energy));
}

GroundStateResult ground_state(const HamiltonianMatrix& h) {
  const EigenDecomposition eig = diagonalize(h.entries);
  GroundStateResult out;
  out.energy = eig.values(0);
  Eigen::VectorXd v = eig.vectors.col(0);
  v.normalize();
  apply_sign_convention(v);
  out.vector = {h.basis, std::move(v)};
  out.gap = eig.values.size() > 1 ? eig.values(1) - eig.values(0) : std::numeric_limits<double>::infinity();
  out.degenerate = is_degenerate(out.gap, out.energy);
  return out;
}

}  // namespace ccqed
