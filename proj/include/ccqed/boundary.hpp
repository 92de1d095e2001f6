#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ccqed/sweep.hpp"

namespace ccqed {

/// Scalar field on a rectilinear (x, y) grid, stored row-major in y:
/// value(i, j) = values[j * x.size() + i]. Masked-out nodes are skipped by
/// contouring, and so is every cell touching one.
struct ScalarGrid {
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> values;
  std::vector<bool> valid;

  double value(std::size_t i, std::size_t j) const { return values[j * x.size() + i]; }
  bool is_valid(std::size_t i, std::size_t j) const { return valid.empty() || valid[j * x.size() + i]; }
};

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

using Polyline = std::vector<Point2>;

struct Boundary {
  double level = 0.0;
  double maximum = 0.0;
  std::vector<Polyline> polylines;
  std::string warning;  // non-empty when no boundary could be drawn
};

/// Marching-squares level set. Every vertex lies on a grid edge at the
/// linearly interpolated crossing; segments are chained into polylines.
/// Ambiguous saddle cells are resolved with the cell-centre average.
Boundary extract_level_set(const ScalarGrid& grid, double level);

/// Level set at half the maximum over the valid grid nodes. A field whose
/// maximum is not positive yields no polylines and a warning.
Boundary extract_half_maximum(const ScalarGrid& grid);

/// x coordinates where the boundary crosses the horizontal line y = y0,
/// sorted ascending.
std::vector<double> crossings_at(const Boundary& boundary, double y0);

enum class OrderParameterKind { var_total, var_atom };

const char* to_string(OrderParameterKind kind);

/// (delta, hop) grid of one order parameter from sweep rows in run_sweep
/// order. Degenerate and failed rows are masked out.
ScalarGrid order_parameter_grid(const SweepSpec& spec, const std::vector<SweepRow>& rows, OrderParameterKind kind);

/// Polyline at the half-maximum of the chosen order parameter.
Boundary extract_boundary(const SweepSpec& spec, const std::vector<SweepRow>& rows, OrderParameterKind kind);

struct PhaseDiagram {
  SweepSpec spec;
  std::vector<SweepRow> rows;
  Boundary superfluid;   // from var_total_site1
  Boundary polaritonic;  // from var_atom_site1
};

/// Default grid: delta/g in [-30, 10], hop/g log-spaced in [0.01, 20].
SweepSpec default_phase_spec(int delta_steps = 161, int hop_steps = 81);

PhaseDiagram build_phase_diagram(const SweepSpec& spec, int workers = 0);

}  // namespace ccqed
