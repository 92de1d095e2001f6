#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ccqed/entanglement.hpp"
#include "ccqed/observables.hpp"

namespace ccqed {

/// Sampled parameter axis. A single-step axis is a fixed value.
struct Axis {
  double start = 0.0;
  double stop = 0.0;
  int steps = 1;
  bool log_spaced = false;

  static Axis fixed(double value) { return {value, value, 1, false}; }
  static Axis linear(double start, double stop, int steps) { return {start, stop, steps, false}; }
  static Axis logarithmic(double start, double stop, int steps) { return {start, stop, steps, true}; }

  bool is_fixed() const { return steps == 1; }

  /// Endpoints are returned exactly.
  double at(int i) const;
  std::vector<double> values() const;

  /// Throws std::invalid_argument unless values are finite and either
  /// steps == 1 with start == stop, or steps >= 2 with start < stop.
  /// Log axes additionally need start > 0.
  void validate() const;
};

/// Detuning and hopping are measured in units of g.
struct SweepSpec {
  Axis delta_over_g = Axis::linear(-10.0, 10.0, 401);
  Axis hop_over_g = Axis::fixed(0.01);
  double g = 1.0;
  double omega_c = 0.0;

  /// Requires a sampled (steps >= 2) detuning axis.
  void validate() const;
  std::size_t point_count() const;
};

enum class RowStatus { ok, degenerate, failed };

const char* to_string(RowStatus status);
RowStatus parse_row_status(const std::string& text);

struct SweepRow {
  double delta_over_g = 0.0;
  double hop_over_g = 0.0;
  double energy = 0.0;
  double gap = 0.0;
  bool degenerate = false;
  EntropyReport entropies;
  OrderParameters order;
  RowStatus status = RowStatus::ok;
  std::string error;  // set when status == failed
};

/// Ground state, entropies and order parameters at one parameter point.
/// Never throws for numerical trouble: failures come back as status failed.
SweepRow evaluate_point(double delta_over_g, double hop_over_g, double g = 1.0, double omega_c = 0.0);

/// Reference implementation: one point after another, hop-major then delta.
std::vector<SweepRow> run_sweep_serial(const SweepSpec& spec);

/// Evaluates grid points concurrently with OpenMP. Rows come back in the
/// same (hop, delta) order as run_sweep_serial and are bit-identical to it.
/// workers <= 0 uses the OpenMP default.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, int workers = 0);

std::size_t failed_count(const std::vector<SweepRow>& rows);

}  // namespace ccqed
