// Regenerates tests/golden/phase_boundary.json:
//   build/tests/phase_oracle > tests/golden/phase_boundary.json
//
// Dense line scans of var(n1) through the Kronecker-product Hamiltonian and
// Eigen's solver, with crossings of half the maximum located by bisection.
// Shares no code with the sweep, boundary or Jacobi paths.

#include <algorithm>
#include <cmath>
#include <iostream>
#include <vector>

#include <json.hpp>

#include "ccqed/oracle_fullspace.hpp"

namespace {

double var_total(double delta, double hop) {
  static const auto basis = ccqed::enumerate_basis(2);
  const ccqed::GroundStateResult g = ccqed::sector_ground_via_fullspace(ccqed::ModelParams::from_detuning(delta, hop), basis);
  double mean = 0.0;
  double second = 0.0;
  for (std::size_t k = 0; k < basis->size(); ++k) {
    const double p = g.vector.amplitudes(static_cast<Eigen::Index>(k)) * g.vector.amplitudes(static_cast<Eigen::Index>(k));
    const double n1 = (*basis)[k].site1.atom + (*basis)[k].site1.photons;
    mean += p * n1;
    second += p * n1 * n1;
  }
  return second - mean * mean;
}

}  // namespace

int main() {
  constexpr double kLo = -30.0;
  constexpr double kHi = 10.0;
  constexpr int kDense = 4001;
  const auto at = [](int i) { return kLo + (kHi - kLo) * i / (kDense - 1); };

  // Maximum over the default hopping axis with a dense detuning axis.
  double maximum = 0.0;
  for (int k = 0; k < 81; ++k) {
    const double hop = 0.01 * std::pow(20.0 / 0.01, k / 80.0);
    for (int i = 0; i < kDense; ++i) maximum = std::max(maximum, var_total(at(i), hop));
  }
  const double level = 0.5 * maximum;

  nlohmann::json lines = nlohmann::json::array();
  for (double hop : {0.01, 10.0}) {
    std::vector<double> crossings;
    double prev = var_total(at(0), hop) - level;
    for (int i = 1; i < kDense; ++i) {
      const double cur = var_total(at(i), hop) - level;
      if ((prev < 0.0) != (cur < 0.0)) {
        double a = at(i - 1);
        double b = at(i);
        double fa = prev;
        for (int it = 0; it < 60; ++it) {
          const double m = 0.5 * (a + b);
          const double fm = var_total(m, hop) - level;
          if ((fa < 0.0) == (fm < 0.0)) {
            a = m;
            fa = fm;
          } else {
            b = m;
          }
        }
        crossings.push_back(0.5 * (a + b));
      }
      prev = cur;
    }
    lines.push_back({{"hop_over_g", hop}, {"crossings", crossings}});
  }

  nlohmann::json doc = {{"order_parameter", "var_total"},
                        {"delta_range", {kLo, kHi}},
                        {"dense_steps", kDense},
                        {"maximum", maximum},
                        {"level", level},
                        {"lines", lines}};
  std::cout << doc.dump(2) << '\n';
}
