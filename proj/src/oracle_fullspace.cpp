#include "ccqed/oracle_fullspace.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "ccqed/entanglement.hpp"

namespace ccqed {

namespace {

Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

// Embeds one-factor operators into A1 (x) C1 (x) A2 (x) C2.
struct FactorOps {
  Eigen::MatrixXd id_atom = Eigen::MatrixXd::Identity(2, 2);
  Eigen::MatrixXd id_field;
  Eigen::MatrixXd sigma_minus = Eigen::MatrixXd::Zero(2, 2);  // |g><e|, order (g, e)
  Eigen::MatrixXd lower;                                      // truncated a

  explicit FactorOps(int cutoff) {
    const Eigen::Index d = cutoff + 1;
    id_field = Eigen::MatrixXd::Identity(d, d);
    sigma_minus(0, 1) = 1.0;
    lower = Eigen::MatrixXd::Zero(d, d);
    for (Eigen::Index n = 1; n < d; ++n) lower(n - 1, n) = std::sqrt(static_cast<double>(n));
  }

  Eigen::MatrixXd on(const Eigen::MatrixXd& a1, const Eigen::MatrixXd& c1, const Eigen::MatrixXd& a2,
                     const Eigen::MatrixXd& c2) const {
    return kron(kron(kron(a1, c1), a2), c2);
  }
  Eigen::MatrixXd atom1(const Eigen::MatrixXd& op) const { return on(op, id_field, id_atom, id_field); }
  Eigen::MatrixXd cavity1(const Eigen::MatrixXd& op) const { return on(id_atom, op, id_atom, id_field); }
  Eigen::MatrixXd atom2(const Eigen::MatrixXd& op) const { return on(id_atom, id_field, op, id_field); }
  Eigen::MatrixXd cavity2(const Eigen::MatrixXd& op) const { return on(id_atom, id_field, id_atom, op); }
};

Eigen::MatrixXd excitation_operator(const FactorOps& f) {
  const Eigen::MatrixXd na = f.sigma_minus.transpose() * f.sigma_minus;
  const Eigen::MatrixXd nc = f.lower.transpose() * f.lower;
  return f.atom1(na) + f.cavity1(nc) + f.atom2(na) + f.cavity2(nc);
}

std::vector<Eigen::Index> sector_rows(const ExcitationBasis& basis, int cutoff) {
  std::vector<Eigen::Index> rows;
  rows.reserve(basis.size());
  for (const auto& c : basis.configs()) rows.push_back(static_cast<Eigen::Index>(full_space_index(c, cutoff)));
  return rows;
}

struct SectorLevel {
  double energy = 0.0;
  int multiplicity = 0;
  Eigen::VectorXd vector;  // sector coordinates
};

std::vector<SectorLevel> sector_levels(const ModelParams& params, const ExcitationBasis& basis, int cutoff) {
  if (cutoff < basis.sector()) throw std::invalid_argument("photon cutoff below the sector number");
  const FullSpaceHamiltonian h = build_full(params, cutoff);
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h.entries);
  if (solver.info() != Eigen::Success) throw SolverError("full-space eigensolver failed", std::nan(""));
  const Eigen::VectorXd& values = solver.eigenvalues();
  const Eigen::MatrixXd& vectors = solver.eigenvectors();
  const std::vector<Eigen::Index> rows = sector_rows(basis, cutoff);
  const auto sector_dim = static_cast<Eigen::Index>(rows.size());

  std::vector<SectorLevel> levels;
  Eigen::Index start = 0;
  while (start < values.size()) {
    Eigen::Index stop = start + 1;
    while (stop < values.size() &&
           values(stop) - values(stop - 1) < kDegeneracyTolerance * std::max(1.0, std::abs(values(start)))) {
      ++stop;
    }
    const Eigen::Index m = stop - start;
    Eigen::MatrixXd projected(sector_dim, m);
    for (Eigen::Index r = 0; r < sector_dim; ++r) {
      projected.row(r) = vectors.block(rows[static_cast<std::size_t>(r)], start, 1, m);
    }
    const double weight = projected.squaredNorm();
    if (m == 1 && weight > 1e-10 && weight < 1.0 - 1e-10) {
      throw IntegrityError("eigenvector " + std::to_string(start) + " straddles excitation sectors (sector weight " +
                           std::to_string(weight) + ")");
    }
    const int multiplicity = static_cast<int>(std::lround(weight));
    if (multiplicity > 0) {
      const Eigen::JacobiSVD<Eigen::MatrixXd> svd(projected, Eigen::ComputeThinU);
      Eigen::VectorXd v = svd.matrixU().col(0);
      v.normalize();
      double energy = 0.0;
      for (Eigen::Index k = start; k < stop; ++k) energy += values(k);
      levels.push_back({energy / static_cast<double>(m), multiplicity, std::move(v)});
    }
    start = stop;
  }
  return levels;
}

}  // namespace

FullSpaceHamiltonian build_full(const ModelParams& params, int photon_cutoff) {
  params.validate();
  if (photon_cutoff < 0) throw std::invalid_argument("photon cutoff must be non-negative");
  const FactorOps f(photon_cutoff);
  const Eigen::MatrixXd sm = f.sigma_minus;
  const Eigen::MatrixXd sp = sm.transpose();
  const Eigen::MatrixXd a = f.lower;
  const Eigen::MatrixXd ad = a.transpose();

  Eigen::MatrixXd h = params.omega_c * (f.cavity1(ad * a) + f.cavity2(ad * a)) +
                      params.omega_a * (f.atom1(sp * sm) + f.atom2(sp * sm)) +
                      params.g * (f.cavity1(ad) * f.atom1(sm) + f.cavity1(a) * f.atom1(sp)) +
                      params.g * (f.cavity2(ad) * f.atom2(sm) + f.cavity2(a) * f.atom2(sp)) +
                      params.hop * (f.cavity1(ad) * f.cavity2(a) + f.cavity2(ad) * f.cavity1(a));
  return {photon_cutoff, std::move(h)};
}

double commutator_max(const FullSpaceHamiltonian& h) {
  const Eigen::MatrixXd n = excitation_operator(FactorOps(h.photon_cutoff));
  return (h.entries * n - n * h.entries).cwiseAbs().maxCoeff();
}

Eigen::MatrixXd restrict_to_sector(const FullSpaceHamiltonian& h, const ExcitationBasis& basis) {
  const std::vector<Eigen::Index> rows = sector_rows(basis, h.photon_cutoff);
  const auto n = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXd out(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) out(i, j) = h.entries(rows[static_cast<std::size_t>(i)], rows[static_cast<std::size_t>(j)]);
  }
  return out;
}

Eigen::VectorXd sector_spectrum_via_fullspace(const ModelParams& params, int sector_n, int photon_cutoff) {
  const ExcitationBasis basis(sector_n);
  std::vector<double> values;
  for (const SectorLevel& l : sector_levels(params, basis, photon_cutoff)) {
    for (int k = 0; k < l.multiplicity; ++k) values.push_back(l.energy);
  }
  return Eigen::Map<Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(values.size()));
}

GroundStateResult sector_ground_via_fullspace(const ModelParams& params, std::shared_ptr<const ExcitationBasis> basis,
                                              int photon_cutoff) {
  const std::vector<SectorLevel> levels = sector_levels(params, *basis, photon_cutoff);
  if (levels.empty()) throw IntegrityError("no full-space eigenvector lies in the requested sector");

  GroundStateResult out;
  out.energy = levels.front().energy;
  Eigen::VectorXd v = levels.front().vector;
  apply_sign_convention(v);
  out.vector = {std::move(basis), std::move(v)};
  if (levels.front().multiplicity > 1) {
    out.gap = 0.0;
  } else {
    out.gap = levels.size() > 1 ? levels[1].energy - levels[0].energy : std::numeric_limits<double>::infinity();
  }
  out.degenerate = is_degenerate(out.gap, out.energy);
  return out;
}

}  // namespace ccqed
