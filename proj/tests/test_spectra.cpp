#include <doctest.h>

#include <cmath>
#include <random>

#include "ccqed/spectra.hpp"
#include "oracles.hpp"

using namespace ccqed;

namespace {

Eigen::MatrixXd random_symmetric(Eigen::Index n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) m(i, j) = m(j, i) = u(rng);
  }
  return m;
}

void check_contract(const Eigen::MatrixXd& h, const EigenDecomposition& e) {
  const double scale = std::max(1.0, h.norm());
  for (Eigen::Index k = 1; k < e.values.size(); ++k) CHECK(e.values(k - 1) <= e.values(k));
  const Eigen::MatrixXd gram = e.vectors.transpose() * e.vectors;
  CHECK((gram - Eigen::MatrixXd::Identity(h.rows(), h.cols())).cwiseAbs().maxCoeff() <= 1e-10);
  CHECK(e.residuals.maxCoeff() <= 1e-10 * scale);
  CHECK(std::abs(e.values.sum() - h.trace()) <= 1e-10 * scale);
  CHECK((e.vectors * e.values.asDiagonal() * e.vectors.transpose() - h).cwiseAbs().maxCoeff() <= 1e-9 * scale);
}

}  // namespace

TEST_CASE("diagonal input gives the sorted diagonal and permutation vectors") {
  Eigen::MatrixXd h = Eigen::Vector4d(3.0, -1.0, 2.0, 0.5).asDiagonal();
  const EigenDecomposition e = diagonalize(h);
  CHECK(e.values(0) == -1.0);
  CHECK(e.values(1) == 0.5);
  CHECK(e.values(2) == 2.0);
  CHECK(e.values(3) == 3.0);
  CHECK(e.vectors(1, 0) == 1.0);
  CHECK(e.vectors(3, 1) == 1.0);
  CHECK(e.sweeps == 0);
}

TEST_CASE("2x2 Jaynes-Cummings block has the closed-form eigenvalues") {
  for (double delta : {-3.0, 0.0, 0.7, 10.0}) {
    const double g = 1.1;
    Eigen::Matrix2d h;
    h << 0.0, g, g, delta;
    const EigenDecomposition e = diagonalize(Eigen::MatrixXd(h));
    CHECK(e.values(0) == doctest::Approx(delta / 2 - std::sqrt(delta * delta / 4 + g * g)).epsilon(1e-14));
    CHECK(e.values(1) == doctest::Approx(delta / 2 + std::sqrt(delta * delta / 4 + g * g)).epsilon(1e-14));
  }
}

TEST_CASE("random symmetric matrices meet the solver contract") {
  std::mt19937_64 rng(11);
  for (Eigen::Index n : {1, 2, 3, 8, 20, 36, 64}) {
    CAPTURE(n);
    const Eigen::MatrixXd h = random_symmetric(n, rng);
    check_contract(h, diagonalize(h));
  }
}

TEST_CASE("sector Hamiltonians meet the solver contract and are deterministic") {
  const auto basis = enumerate_basis(2);
  for (double d : {-50.0, -10.0, 0.0, 3.0, 50.0}) {
    for (double a : {0.0, 0.01, 1.0, 10.0}) {
      const HamiltonianMatrix h = build_hamiltonian(ModelParams::from_detuning(d, a, 1.0, 0.25), basis);
      const EigenDecomposition e1 = diagonalize(h);
      const EigenDecomposition e2 = diagonalize(h);
      check_contract(h.entries, e1);
      CHECK(e1.values == e2.values);
      CHECK(e1.vectors == e2.vectors);
    }
  }
}

TEST_CASE("non-symmetric input is rejected") {
  Eigen::MatrixXd h(2, 2);
  h << 1.0, 2.0, 2.0000001, 3.0;
  CHECK_THROWS_AS(diagonalize(h), std::invalid_argument);
}

TEST_CASE("iteration cap raises SolverError with the off-diagonal norm") {
  std::mt19937_64 rng(5);
  const Eigen::MatrixXd h = random_symmetric(8, rng);
  try {
    diagonalize(h, JacobiOptions{1, 1e-14});
    FAIL("expected SolverError");
  } catch (const SolverError& e) {
    CHECK(e.off_diagonal_norm() > 0.0);
  }
}

TEST_CASE("ground state sign convention and degeneracy flag") {
  const auto b1 = enumerate_basis(1);
  HamiltonianMatrix h{b1, Eigen::MatrixXd::Zero(4, 4)};
  h.entries(0, 0) = 1.0;
  h.entries(1, 1) = -2.0;
  h.entries(2, 2) = -2.0;
  h.entries(3, 3) = 5.0;
  const GroundStateResult degenerate = ground_state(h);
  CHECK(degenerate.degenerate);
  CHECK(degenerate.gap == 0.0);

  h.entries(2, 2) = -1.0;
  const GroundStateResult g = ground_state(h);
  CHECK_FALSE(g.degenerate);
  CHECK(g.energy == -2.0);
  CHECK(g.gap == 1.0);
  CHECK(g.vector.amplitudes(1) == 1.0);

  Eigen::VectorXd v(3);
  v << 0.1, -0.9, 0.3;
  apply_sign_convention(v);
  CHECK(v(1) == 0.9);
}

TEST_CASE("atomic limit ground state") {
  const auto basis = enumerate_basis(2);
  const GroundStateResult g = ground_state(build_hamiltonian(ModelParams::from_detuning(-50.0, 0.01), basis));
  // second-order shift: each atom lowers by g^2 / |delta|
  CHECK(g.energy == doctest::Approx(-100.0 - 2.0 / 50.0).epsilon(1e-4));
  const double amp = g.vector.amplitudes(static_cast<Eigen::Index>(*basis->index_of({{1, 0}, {1, 0}})));
  CHECK(amp > 0.999);
}

TEST_CASE("extreme magnitudes neither overflow nor underflow the convergence test") {
  std::mt19937_64 rng(8);
  const Eigen::MatrixXd m = random_symmetric(8, rng);
  const EigenDecomposition ref = diagonalize(m);
  for (double s : {1e300, 1e-300}) {
    CAPTURE(s);
    const EigenDecomposition e = diagonalize(Eigen::MatrixXd(s * m));
    for (Eigen::Index k = 0; k < 8; ++k) CHECK(e.values(k) == doctest::Approx(s * ref.values(k)).epsilon(1e-12));
    CHECK(e.residuals.maxCoeff() <= 1e-10 * s * m.norm());
  }
}
