#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "ccqed/jc_oracle.hpp"
#include "ccqed/spectra.hpp"
#include "oracles.hpp"

using namespace ccqed;

namespace {

// Single-site block in (|e, n-1>, |g, n>) at fixed n.
Eigen::Matrix2d site_block(int n, const ModelParams& p) {
  Eigen::Matrix2d m;
  const double c = p.g * std::sqrt(static_cast<double>(n));
  m << p.omega_a + (n - 1) * p.omega_c, c, c, n * p.omega_c;
  return m;
}

}  // namespace

TEST_CASE("mixing angle branch and limits") {
  CHECK(mixing_angle(1, 1.0, 0.0) == doctest::Approx(std::numbers::pi / 2));
  CHECK(mixing_angle(3, 0.2, 0.0) == doctest::Approx(std::numbers::pi / 2));
  CHECK(mixing_angle(1, 1.0, 2.0) == doctest::Approx(std::numbers::pi / 4));
  CHECK(mixing_angle(1, 1.0, 1e9) < 1e-8);
  CHECK(mixing_angle(1, 1.0, -1e9) > std::numbers::pi - 1e-8);
  for (double d = -20.0; d <= 20.0; d += 0.25) {
    const double t = mixing_angle(2, 1.0, d);
    CHECK(t > 0.0);
    CHECK(t < std::numbers::pi);
    if (std::abs(d) > 1e-12) CHECK(std::tan(t) == doctest::Approx(2.0 * std::sqrt(2.0) / d).epsilon(1e-10));
  }
  CHECK_THROWS_AS(mixing_angle(0, 1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(mixing_angle(1, 0.0, 0.0), std::domain_error);
}

TEST_CASE("large positive detuning makes |1-> a pure photon, large negative a pure atom") {
  const DressedState photonic = dressed_state(1, Branch::minus, 1.0, 1e6);
  CHECK(photonic.ground == doctest::Approx(-1.0).epsilon(1e-10));
  CHECK(std::abs(photonic.excited) < 1e-6);
  const DressedState atomic = dressed_state(1, Branch::minus, 1.0, -1e6);
  CHECK(atomic.excited == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("dressed states are orthonormal") {
  for (int n = 1; n <= 3; ++n) {
    for (double d : {-7.0, -1.0, 0.0, 0.5, 12.0}) {
      const DressedState m = dressed_state(n, Branch::minus, 0.8, d);
      const DressedState p = dressed_state(n, Branch::plus, 0.8, d);
      CHECK(std::abs(m.excited * p.excited + m.ground * p.ground) < 1e-14);
      CHECK(std::abs(m.excited * m.excited + m.ground * m.ground - 1.0) < 1e-14);
      CHECK(std::abs(p.excited * p.excited + p.ground * p.ground - 1.0) < 1e-14);
    }
  }
}

TEST_CASE("dressed energies agree with the single-site block") {
  for (int n = 1; n <= 3; ++n) {
    for (double d : {-9.0, -2.0, 0.0, 1.0, 6.5}) {
      const ModelParams p = ModelParams::from_detuning(d, 0.0, 1.3, 0.4);
      const Eigen::Matrix2d block = site_block(n, p);
      const auto [lo, hi] = testing::eig2(block(0, 0), block(0, 1), block(1, 1));
      CHECK(dressed_energy(n, Branch::minus, p) == doctest::Approx(lo).epsilon(1e-12));
      CHECK(dressed_energy(n, Branch::plus, p) == doctest::Approx(hi).epsilon(1e-12));
      CHECK(dressed_energy(n, Branch::plus, p) - dressed_energy(n, Branch::minus, p) ==
            doctest::Approx(std::sqrt(d * d * 1.69 + 4.0 * 1.69 * n)).epsilon(1e-12));

      // H|n,b> = E|n,b> using the dressed amplitudes directly
      for (Branch b : {Branch::minus, Branch::plus}) {
        const DressedState s = dressed_state(n, b, p.g, p.delta());
        const Eigen::Vector2d v(s.excited, s.ground);
        CHECK((block * v - dressed_energy(n, b, p) * v).norm() < 1e-12);
      }
    }
  }
}

TEST_CASE("resonant splittings") {
  const ModelParams p = ModelParams::from_detuning(0.0, 0.0, 1.0, 2.0);
  CHECK(dressed_energy(1, Branch::minus, p) == doctest::Approx(2.0 - 1.0));
  CHECK(dressed_energy(1, Branch::plus, p) == doctest::Approx(2.0 + 1.0));
  CHECK(dressed_energy(2, Branch::plus, p) - dressed_energy(2, Branch::minus, p) == doctest::Approx(2.0 * std::sqrt(2.0)));
  CHECK(dressed_energy(0, Branch::minus, p) == 0.0);
}

TEST_CASE("zero-hopping analytic ground state") {
  const auto basis = enumerate_basis(2);

  SUBCASE("resonance picks |1-,1->") {
    const ModelParams p = ModelParams::from_detuning(0.0, 0.0, 1.0, 0.5);
    const AnalyticGround a = a0_ground_state(p, basis);
    CHECK(a.label == "1-,1-");
    CHECK(a.energy == doctest::Approx(2.0 * (0.5 - 1.0)));
    CHECK_FALSE(a.degenerate);
    CHECK(a.state.norm() == doctest::Approx(1.0));
  }
  SUBCASE("large negative detuning is atomic") {
    const AnalyticGround a = a0_ground_state(ModelParams::from_detuning(-50.0, 0.0), basis);
    const double amp = a.state.amplitudes(static_cast<Eigen::Index>(*basis->index_of({{1, 0}, {1, 0}})));
    CHECK(amp * amp > 0.999);
  }
  SUBCASE("large positive detuning is photonic") {
    const AnalyticGround a = a0_ground_state(ModelParams::from_detuning(50.0, 0.0), basis);
    const double amp = a.state.amplitudes(static_cast<Eigen::Index>(*basis->index_of({{0, 1}, {0, 1}})));
    CHECK(amp * amp > 0.999);
  }
  SUBCASE("nonzero hopping is rejected") {
    CHECK_THROWS_AS(a0_ground_state(ModelParams::from_detuning(0.0, 0.1), basis), std::invalid_argument);
  }
}

TEST_CASE("numerical zero-hopping ground state matches the dressed product") {
  const auto basis = enumerate_basis(2);
  for (double d = -30.0; d <= 30.0; d += 0.5) {
    const ModelParams p = ModelParams::from_detuning(d, 0.0);
    const AnalyticGround a = a0_ground_state(p, basis);
    const GroundStateResult g = ground_state(build_hamiltonian(p, basis));
    if (a.degenerate || g.degenerate) continue;
    CAPTURE(d);
    CHECK(1.0 - std::abs(a.state.amplitudes.dot(g.vector.amplitudes)) <= 1e-10);
    CHECK(std::abs(a.energy - g.energy) < 1e-10);
  }
}

TEST_CASE("zero-hopping sector spectrum is every sum of single-site dressed energies") {
  const auto basis = enumerate_basis(2);
  for (double d : {-4.0, 0.0, 2.5}) {
    const ModelParams p = ModelParams::from_detuning(d, 0.0, 1.0, 0.3);
    std::vector<double> sums;
    const auto levels = [&p](int n) -> std::vector<double> {
      if (n == 0) return {0.0};
      return {dressed_energy(n, Branch::minus, p), dressed_energy(n, Branch::plus, p)};
    };
    for (int n1 = 0; n1 <= 2; ++n1) {
      for (double e1 : levels(n1)) {
        for (double e2 : levels(2 - n1)) sums.push_back(e1 + e2);
      }
    }
    std::sort(sums.begin(), sums.end());
    const EigenDecomposition eig = diagonalize(build_hamiltonian(p, basis));
    REQUIRE(sums.size() == static_cast<std::size_t>(eig.values.size()));
    for (std::size_t k = 0; k < sums.size(); ++k) {
      CHECK(eig.values(static_cast<Eigen::Index>(k)) == doctest::Approx(sums[k]).epsilon(1e-12));
    }
  }
}
