#include "ccqed/observables.hpp"

#include <stdexcept>
#include <string>

namespace ccqed {

namespace {

double eigenvalue(const BasisConfig& c, SiteOperator op) {
  switch (op) {
    case SiteOperator::n_total_1: return c.site1.excitations();
    case SiteOperator::n_atom_1: return c.site1.atom;
    case SiteOperator::n_photon_1: return c.site1.photons;
    case SiteOperator::n_total_2: return c.site2.excitations();
    case SiteOperator::n_atom_2: return c.site2.atom;
    case SiteOperator::n_photon_2: return c.site2.photons;
  }
  throw std::invalid_argument("unknown site operator");
}

struct Moments {
  double mean = 0.0;
  double second = 0.0;
  double variance() const { return second - mean * mean; }
};

Moments moments(const StateVector& state, SiteOperator op) {
  Moments m;
  const ExcitationBasis& basis = *state.basis;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const double a = state.amplitudes(static_cast<Eigen::Index>(k));
    const double w = a * a;
    const double v = eigenvalue(basis[k], op);
    m.mean += w * v;
    m.second += w * v * v;
  }
  return m;
}

}  // namespace

OrderParameters order_parameters(const StateVector& state) {
  const Moments total = moments(state, SiteOperator::n_total_1);
  const Moments atom = moments(state, SiteOperator::n_atom_1);
  OrderParameters out;
  out.mean_total_site1 = total.mean;
  out.var_total_site1 = total.variance();
  out.mean_atom_site1 = atom.mean;
  out.var_atom_site1 = atom.variance();
  return out;
}

SiteOperator parse_site_operator(std::string_view id) {
  if (id == "n_total_1") return SiteOperator::n_total_1;
  if (id == "n_atom_1") return SiteOperator::n_atom_1;
  if (id == "n_photon_1") return SiteOperator::n_photon_1;
  if (id == "n_total_2") return SiteOperator::n_total_2;
  if (id == "n_atom_2") return SiteOperator::n_atom_2;
  if (id == "n_photon_2") return SiteOperator::n_photon_2;
  throw std::invalid_argument("unknown site operator '" + std::string(id) + "'");
}

double expectation(const StateVector& state, SiteOperator op) { return moments(state, op).mean; }

}  // namespace ccqed
