#include "ccqed/sweep.hpp"

#include <cmath>
#include <exception>
#include <limits>
#include <stdexcept>

#include <omp.h>

#include "ccqed/model.hpp"

namespace ccqed {

double Axis::at(int i) const {
  if (steps == 1 || i == 0) return start;
  if (i == steps - 1) return stop;
  const double t = static_cast<double>(i) / static_cast<double>(steps - 1);
  if (log_spaced) return start * std::pow(stop / start, t);
  return start + t * (stop - start);
}

std::vector<double> Axis::values() const {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(std::max(steps, 0)));
  for (int i = 0; i < steps; ++i) out.push_back(at(i));
  return out;
}

void Axis::validate() const {
  if (!std::isfinite(start) || !std::isfinite(stop)) throw std::invalid_argument("axis bounds must be finite");
  if (steps == 1) {
    if (start != stop) throw std::invalid_argument("single-step axis needs start == stop");
  } else {
    if (steps < 2) throw std::invalid_argument("axis needs at least 2 steps");
    if (!(start < stop)) throw std::invalid_argument("axis needs start < stop");
  }
  if (log_spaced && !(start > 0.0)) throw std::invalid_argument("log-spaced axis needs a positive start");
}

void SweepSpec::validate() const {
  delta_over_g.validate();
  hop_over_g.validate();
  if (delta_over_g.is_fixed()) throw std::invalid_argument("detuning axis needs at least 2 steps");
  ModelParams::from_detuning(0.0, 0.0, g, omega_c).validate();
}

std::size_t SweepSpec::point_count() const {
  return static_cast<std::size_t>(delta_over_g.steps) * static_cast<std::size_t>(hop_over_g.steps);
}

const char* to_string(RowStatus status) {
  switch (status) {
    case RowStatus::ok: return "ok";
    case RowStatus::degenerate: return "degenerate";
    case RowStatus::failed: return "failed";
  }
  return "failed";
}

RowStatus parse_row_status(const std::string& text) {
  if (text == "ok") return RowStatus::ok;
  if (text == "degenerate") return RowStatus::degenerate;
  if (text == "failed") return RowStatus::failed;
  throw std::invalid_argument("unknown row status '" + text + "'");
}

SweepRow evaluate_point(double delta_over_g, double hop_over_g, double g, double omega_c) {
  static const auto basis = enumerate_basis(2);

  SweepRow row;
  row.delta_over_g = delta_over_g;
  row.hop_over_g = hop_over_g;
  try {
    const ModelParams params = ModelParams::from_detuning(delta_over_g, hop_over_g, g, omega_c);
    const GroundStateResult ground = ground_state(build_hamiltonian(params, basis));
    row.energy = ground.energy;
    row.gap = ground.gap;
    row.degenerate = ground.degenerate;
    row.entropies = all_bipartite_entropies(ground);
    row.order = order_parameters(ground.vector);
    row.status = ground.degenerate ? RowStatus::degenerate : RowStatus::ok;
  } catch (const std::exception& e) {
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    row.energy = row.gap = nan;
    row.entropies = {nan, nan, nan, nan, nan, false};
    row.order = {nan, nan, nan, nan};
    row.status = RowStatus::failed;
    row.error = e.what();
  }
  return row;
}

namespace {

SweepRow evaluate_index(const SweepSpec& spec, std::size_t k) {
  const auto nd = static_cast<std::size_t>(spec.delta_over_g.steps);
  const int id = static_cast<int>(k % nd);
  const int ih = static_cast<int>(k / nd);
  return evaluate_point(spec.delta_over_g.at(id), spec.hop_over_g.at(ih), spec.g, spec.omega_c);
}

}  // namespace

std::vector<SweepRow> run_sweep_serial(const SweepSpec& spec) {
  spec.validate();
  std::vector<SweepRow> rows;
  rows.reserve(spec.point_count());
  for (std::size_t k = 0; k < spec.point_count(); ++k) rows.push_back(evaluate_index(spec, k));
  return rows;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, int workers) {
  spec.validate();
  const auto n = static_cast<std::int64_t>(spec.point_count());
  std::vector<SweepRow> rows(static_cast<std::size_t>(n));
  const int threads = workers > 0 ? workers : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
  for (std::int64_t k = 0; k < n; ++k) {
    rows[static_cast<std::size_t>(k)] = evaluate_index(spec, static_cast<std::size_t>(k));
  }
  return rows;
}

std::size_t failed_count(const std::vector<SweepRow>& rows) {
  std::size_t n = 0;
  for (const auto& r : rows) n += r.status == RowStatus::failed ? 1 : 0;
  return n;
}

}  // namespace ccqed
