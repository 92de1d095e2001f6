#include "ccqed/entanglement.hpp"

#include <array>
#include <vector>

namespace ccqed {

std::string FactorSet::label() const {
  static constexpr std::array<const char*, kFactorCount> names{"A1", "C1", "A2", "C2"};
  std::string out;
  for (std::size_t f = 0; f < kFactorCount; ++f) {
    if (contains(static_cast<Factor>(f))) out += names[f];
  }
  return out.empty() ? "{}" : out;
}

namespace {

struct Layout {
  std::array<std::size_t, kFactorCount> dims{};
  std::size_t kept_dim = 1;
  std::size_t traced_dim = 1;
};

int cutoff_from_length(Eigen::Index length) {
  // length = 4 (c+1)^2
  for (int cutoff = 0; full_space_dim(cutoff) <= static_cast<std::size_t>(length); ++cutoff) {
    if (full_space_dim(cutoff) == static_cast<std::size_t>(length)) return cutoff;
  }
  throw std::domain_error("state length " + std::to_string(length) + " is not a two-site product dimension");
}

Layout layout_for(const Eigen::VectorXd& full_state, FactorSet kept) {
  if (!kept.is_proper()) throw std::domain_error("kept factor set must be a nonempty proper subset");
  const double norm = full_state.norm();
  if (std::abs(norm - 1.0) > 1e-10) {
    throw std::domain_error("state is not normalized (norm " + std::to_string(norm) + ")");
  }
  Layout l;
  l.dims = factor_dims(cutoff_from_length(full_state.size()));
  for (std::size_t f = 0; f < kFactorCount; ++f) {
    (kept.contains(static_cast<Factor>(f)) ? l.kept_dim : l.traced_dim) *= l.dims[f];
  }
  return l;
}

// Splits a row-major product index into (kept, traced) indices, each
// row-major over its own factors in ascending factor order.
std::pair<std::size_t, std::size_t> split_index(std::size_t index, const Layout& l, FactorSet kept) {
  std::array<std::size_t, kFactorCount> digit{};
  for (std::size_t f = kFactorCount; f-- > 0;) {
    digit[f] = index % l.dims[f];
    index /= l.dims[f];
  }
  std::size_t k = 0;
  std::size_t t = 0;
  for (std::size_t f = 0; f < kFactorCount; ++f) {
    if (kept.contains(static_cast<Factor>(f))) {
      k = k * l.dims[f] + digit[f];
    } else {
      t = t * l.dims[f] + digit[f];
    }
  }
  return {k, t};
}

}  // namespace

ReducedDensityMatrix reduced_density(const Eigen::VectorXd& full_state, FactorSet kept) {
  const Layout l = layout_for(full_state, kept);
  const auto n = static_cast<std::size_t>(full_state.size());

  std::vector<std::pair<std::size_t, std::size_t>> split(n);
  for (std::size_t i = 0; i < n; ++i) split[i] = split_index(i, l, kept);

  // rho(a, a') = sum_b psi(a b) psi(a' b)
  const auto kd = static_cast<Eigen::Index>(l.kept_dim);
  Eigen::MatrixXd rho = Eigen::MatrixXd::Zero(kd, kd);
  for (std::size_t i = 0; i < n; ++i) {
    const double ai = full_state(static_cast<Eigen::Index>(i));
    if (ai == 0.0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (split[i].second != split[j].second) continue;
      rho(static_cast<Eigen::Index>(split[i].first), static_cast<Eigen::Index>(split[j].first)) +=
          ai * full_state(static_cast<Eigen::Index>(j));
    }
  }
  // Both (a, a') and (a', a) accumulate over b in ascending order, so rho is
  // exactly symmetric.
  return {kept, std::move(rho)};
}

double shannon_bits(std::span<const double> probabilities) {
  double s = 0.0;
  for (double p : probabilities) {
    if (p > 0.0) s -= p * std::log2(p);
  }
  // a weight rounded just above 1 contributes a tiny negative term
  return std::max(s, 0.0);
}

double von_neumann_entropy(const ReducedDensityMatrix& rho) {
  const double trace = rho.entries.trace();
  if (std::abs(trace - 1.0) > 1e-9) {
    throw IntegrityError("reduced density matrix " + rho.kept.label() + " has trace " + std::to_string(trace));
  }
  const EigenDecomposition eig = diagonalize(rho.entries);
  std::vector<double> p(static_cast<std::size_t>(eig.values.size()));
  for (Eigen::Index k = 0; k < eig.values.size(); ++k) {
    const double lambda = eig.values(k);
    if (lambda < -1e-9) {
      throw IntegrityError("reduced density matrix " + rho.kept.label() + " has eigenvalue " + std::to_string(lambda));
    }
    p[static_cast<std::size_t>(k)] = std::max(lambda, 0.0);
  }
  return shannon_bits(p);
}

double schmidt_entropy(const Eigen::VectorXd& full_state, FactorSet kept) {
  const Layout l = layout_for(full_state, kept);
  const std::array<std::size_t, kFactorCount>& d = l.dims;

  // Build the kept x traced coefficient matrix by walking the multi-index.
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(l.kept_dim), static_cast<Eigen::Index>(l.traced_dim));
  std::size_t flat = 0;
  std::array<std::size_t, kFactorCount> idx{};
  for (idx[0] = 0; idx[0] < d[0]; ++idx[0]) {
    for (idx[1] = 0; idx[1] < d[1]; ++idx[1]) {
      for (idx[2] = 0; idx[2] < d[2]; ++idx[2]) {
        for (idx[3] = 0; idx[3] < d[3]; ++idx[3], ++flat) {
          std::size_t row = 0;
          std::size_t col = 0;
          for (std::size_t f = 0; f < kFactorCount; ++f) {
            if (kept.contains(static_cast<Factor>(f))) {
              row = row * d[f] + idx[f];
            } else {
              col = col * d[f] + idx[f];
            }
          }
          m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = full_state(static_cast<Eigen::Index>(flat));
        }
      }
    }
  }

  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const Eigen::VectorXd sv = svd.singularValues();
  std::vector<double> p(static_cast<std::size_t>(sv.size()));
  for (Eigen::Index k = 0; k < sv.size(); ++k) p[static_cast<std::size_t>(k)] = sv(k) * sv(k);
  return shannon_bits(p);
}

EntropyReport all_bipartite_entropies(const GroundStateResult& ground) {
  const Eigen::VectorXd psi = embed(ground.vector);
  const auto s = [&psi](FactorSet kept) { return von_neumann_entropy(reduced_density(psi, kept)); };
  EntropyReport r;
  r.site = s(cuts::site);
  r.atom = s(cuts::atom);
  r.cavity = s(cuts::cavity);
  r.atoms = s(cuts::atoms);
  r.cross = s(cuts::cross);
  r.degenerate = ground.degenerate;
  return r;
}

}  // namespace ccqed
