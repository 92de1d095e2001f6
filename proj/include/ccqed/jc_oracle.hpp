#pragma once

#include <memory>
#include <string>

#include "ccqed/hilbert.hpp"
#include "ccqed/model.hpp"

namespace ccqed {

// Analytic single-site Jaynes-Cummings solution. Used as the zero-hopping
// cross-check for the numerical pipeline.

enum class Branch { minus, plus };

/// Mixing angle theta_n in (0, pi) with tan(theta_n) = 2 g sqrt(n) / delta,
/// taken as atan2(2 g sqrt(n), delta) so it is continuous in delta:
/// theta -> 0 as delta -> +inf and theta -> pi as delta -> -inf.
double mixing_angle(int n, double g, double delta);

/// Dressed state |n,branch> = excited * |e, n-1> + ground * |g, n>.
///
///   |n-> =  sin(theta/2) |e,n-1> - cos(theta/2) |g,n>
///   |n+> =  cos(theta/2) |e,n-1> + sin(theta/2) |g,n>
///
/// With this phase choice |1-> tends to -|g,1> for large positive detuning.
struct DressedState {
  int n = 1;
  Branch branch = Branch::minus;
  double theta = 0.0;
  double excited = 0.0;  // amplitude on |e, n-1>
  double ground = 0.0;   // amplitude on |g, n>
};

DressedState dressed_state(int n, Branch branch, double g, double delta);

/// E_n(+/-) = n omega_c + delta/2 +/- sqrt(delta^2 + 4 g^2 n) / 2.
/// The n = 0 vacuum |g,0> has energy 0 irrespective of branch.
double dressed_energy(int n, Branch branch, const ModelParams& params);

struct AnalyticGround {
  StateVector state;
  double energy = 0.0;
  std::string label;        // e.g. "1-,1-"
  bool degenerate = false;  // another product candidate within 1e-10
};

inline constexpr double kAnalyticDegeneracyTolerance = 1e-10;

/// Lowest product of single-site eigenstates with total excitation equal to
/// the basis sector. Requires params.hop == 0 (throws std::invalid_argument).
/// When the minimum pairs two different site states the site-symmetric
/// combination is returned and `degenerate` is set, since its antisymmetric
/// partner has the same energy.
AnalyticGround a0_ground_state(const ModelParams& params, std::shared_ptr<const ExcitationBasis> basis);

}  // namespace ccqed
