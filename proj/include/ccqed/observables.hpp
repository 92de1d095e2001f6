#pragma once

#include <string_view>

#include "ccqed/hilbert.hpp"

namespace ccqed {

/// Number-fluctuation order parameters at site 1. The superfluid indicator is
/// the variance of n1 = a1^+ a1 + |e1><e1|, the polaritonic indicator the
/// variance of the atomic projector |e1><e1|.
struct OrderParameters {
  double mean_total_site1 = 0.0;
  double var_total_site1 = 0.0;
  double mean_atom_site1 = 0.0;
  double var_atom_site1 = 0.0;
};

/// Both operators are diagonal in the occupation basis, so this works on
/// the sector amplitudes directly.
OrderParameters order_parameters(const StateVector& state);

enum class SiteOperator { n_total_1, n_atom_1, n_photon_1, n_total_2, n_atom_2, n_photon_2 };

/// Parses "n_total_1", "n_atom_2", ...; throws std::invalid_argument otherwise.
SiteOperator parse_site_operator(std::string_view id);

double expectation(const StateVector& state, SiteOperator op);

}  // namespace ccqed
