#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ccqed/model.hpp"

namespace ccqed {

struct CheckResult {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

/// Every oracle comparison at one parameter point: matrix construction
/// against the Kronecker-product build, sector ground state against the
/// full-space solve, density-matrix entropies against Schmidt values,
/// entropy symmetries and, for zero hopping, the analytic dressed product.
std::vector<CheckResult> run_self_check(const ModelParams& params);

void print_check_table(std::ostream& out, const std::vector<CheckResult>& results);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace ccqed
