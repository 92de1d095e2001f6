#include "ccqed/jc_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace ccqed {

double mixing_angle(int n, double g, double delta) {
  if (n < 1) throw std::domain_error("dressed states need n >= 1");
  if (!(g > 0.0)) throw std::domain_error("coupling g must be positive");
  return std::atan2(2.0 * g * std::sqrt(static_cast<double>(n)), delta);
}

DressedState dressed_state(int n, Branch branch, double g, double delta) {
  DressedState s;
  s.n = n;
  s.branch = branch;
  s.theta = mixing_angle(n, g, delta);
  const double sh = std::sin(s.theta / 2.0);
  const double ch = std::cos(s.theta / 2.0);
  if (branch == Branch::minus) {
    s.excited = sh;
    s.ground = -ch;
  } else {
    s.excited = ch;
    s.ground = sh;
  }
  return s;
}

double dressed_energy(int n, Branch branch, const ModelParams& params) {
  if (n < 0) throw std::domain_error("excitation number must be non-negative");
  if (n == 0) return 0.0;
  const double delta = params.delta();
  const double split = 0.5 * std::sqrt(delta * delta + 4.0 * params.g * params.g * n);
  const double centre = n * params.omega_c + 0.5 * delta;
  return branch == Branch::minus ? centre - split : centre + split;
}

namespace {

// One single-site eigenstate, as amplitudes over (atom, photons).
struct SiteEigenstate {
  int n = 0;
  Branch branch = Branch::minus;
  double energy = 0.0;
  double excited = 0.0;  // on (1, n-1)
  double ground = 1.0;   // on (0, n)

  double amplitude(const SiteConfig& c) const {
    if (c.excitations() != n) return 0.0;
    return c.atom == 1 ? excited : ground;
  }

  std::string label() const {
    if (n == 0) return "0";
    return std::to_string(n) + (branch == Branch::minus ? "-" : "+");
  }
};

std::vector<SiteEigenstate> site_eigenstates(int n, const ModelParams& params) {
  if (n == 0) return {SiteEigenstate{}};
  std::vector<SiteEigenstate> out;
  for (Branch b : {Branch::minus, Branch::plus}) {
    const DressedState d = dressed_state(n, b, params.g, params.delta());
    out.push_back({n, b, dressed_energy(n, b, params), d.excited, d.ground});
  }
  return out;
}

struct Candidate {
  SiteEigenstate left;
  SiteEigenstate right;
  double energy = 0.0;
};

}  // namespace

AnalyticGround a0_ground_state(const ModelParams& params, std::shared_ptr<const ExcitationBasis> basis) {
  params.validate();
  if (params.hop != 0.0) throw std::invalid_argument("analytic ground state requires zero hopping");
  const int total = basis->sector();

  std::vector<Candidate> candidates;
  for (int n1 = 0; n1 <= total; ++n1) {
    for (const auto& s1 : site_eigenstates(n1, params)) {
      for (const auto& s2 : site_eigenstates(total - n1, params)) {
        candidates.push_back({s1, s2, s1.energy + s2.energy});
      }
    }
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) { return a.energy < b.energy; });

  const Candidate& best = candidates.front();
  const bool swapped_partner = best.left.label() != best.right.label();

  AnalyticGround out;
  out.energy = best.energy;
  out.label = best.left.label() + "," + best.right.label();
  out.degenerate = swapped_partner;
  for (std::size_t k = 1; k < candidates.size() && !out.degenerate; ++k) {
    const Candidate& c = candidates[k];
    const bool is_mirror = c.left.label() == best.right.label() && c.right.label() == best.left.label();
    if (!is_mirror && c.energy - best.energy < kAnalyticDegeneracyTolerance) out.degenerate = true;
  }

  Eigen::VectorXd amps(static_cast<Eigen::Index>(basis->size()));
  for (std::size_t k = 0; k < basis->size(); ++k) {
    const BasisConfig& c = (*basis)[k];
    double a = best.left.amplitude(c.site1) * best.right.amplitude(c.site2);
    if (swapped_partner) a = (a + best.right.amplitude(c.site1) * best.left.amplitude(c.site2)) / std::sqrt(2.0);
    amps(static_cast<Eigen::Index>(k)) = a;
  }
  out.state = {std::move(basis), std::move(amps)};
  return out;
}

}  // namespace ccqed
