#include "ccqed/boundary.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <utility>

namespace ccqed {

namespace {

using EdgeId = std::size_t;

class Contourer {
 public:
  Contourer(const ScalarGrid& grid, double level) : g_(grid), level_(level), nx_(grid.x.size()) {}

  std::vector<Polyline> run() {
    if (g_.x.size() < 2 || g_.y.size() < 2) return {};
    for (std::size_t j = 0; j + 1 < g_.y.size(); ++j) {
      for (std::size_t i = 0; i + 1 < nx_; ++i) cell(i, j);
    }
    return chain();
  }

 private:
  EdgeId horizontal(std::size_t i, std::size_t j) const { return 2 * (j * nx_ + i); }
  EdgeId vertical(std::size_t i, std::size_t j) const { return 2 * (j * nx_ + i) + 1; }

  bool above(std::size_t i, std::size_t j) const { return g_.value(i, j) > level_; }

  void cell(std::size_t i, std::size_t j) {
    if (!g_.is_valid(i, j) || !g_.is_valid(i + 1, j) || !g_.is_valid(i + 1, j + 1) || !g_.is_valid(i, j + 1)) return;
    const std::array<bool, 4> b{above(i, j), above(i + 1, j), above(i + 1, j + 1), above(i, j + 1)};
    // bottom, right, top, left
    const std::array<EdgeId, 4> e{horizontal(i, j), vertical(i + 1, j), horizontal(i, j + 1), vertical(i, j)};
    std::array<bool, 4> cut{b[0] != b[1], b[1] != b[2], b[3] != b[2], b[0] != b[3]};

    std::vector<int> hits;
    for (int k = 0; k < 4; ++k) {
      if (cut[static_cast<std::size_t>(k)]) hits.push_back(k);
    }
    if (hits.size() == 2) {
      link(e[static_cast<std::size_t>(hits[0])], e[static_cast<std::size_t>(hits[1])]);
    } else if (hits.size() == 4) {
      const double centre = 0.25 * (g_.value(i, j) + g_.value(i + 1, j) + g_.value(i + 1, j + 1) + g_.value(i, j + 1));
      if ((centre > level_) == b[0]) {
        link(e[0], e[1]);  // isolate corner (i+1, j)
        link(e[2], e[3]);  // isolate corner (i, j+1)
      } else {
        link(e[3], e[0]);
        link(e[1], e[2]);
      }
    }
  }

  void link(EdgeId a, EdgeId b) {
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }

  Point2 point(EdgeId id) const {
    const std::size_t node = id / 2;
    const std::size_t i = node % nx_;
    const std::size_t j = node / nx_;
    const bool is_vertical = (id % 2) == 1;
    const std::size_t i2 = is_vertical ? i : i + 1;
    const std::size_t j2 = is_vertical ? j + 1 : j;
    const double va = g_.value(i, j);
    const double vb = g_.value(i2, j2);
    const double t = (level_ - va) / (vb - va);
    return {g_.x[i] + t * (g_.x[i2] - g_.x[i]), g_.y[j] + t * (g_.y[j2] - g_.y[j])};
  }

  Polyline walk(EdgeId start) {
    Polyline line;
    EdgeId cur = start;
    while (true) {
      visited_[cur] = true;
      line.push_back(point(cur));
      const auto& next = adjacency_.at(cur);
      const auto it = std::find_if(next.begin(), next.end(), [this](EdgeId n) { return !visited_[n]; });
      if (it == next.end()) {
        const bool closes = std::find(next.begin(), next.end(), start) != next.end();
        if (closes && line.size() > 2) line.push_back(line.front());
        break;
      }
      cur = *it;
    }
    return line;
  }

  std::vector<Polyline> chain() {
    std::vector<Polyline> out;
    for (const auto& [id, next] : adjacency_) {
      if (next.size() == 1 && !visited_[id]) out.push_back(walk(id));
    }
    for (const auto& [id, next] : adjacency_) {
      if (!visited_[id]) out.push_back(walk(id));
    }
    return out;
  }

  const ScalarGrid& g_;
  double level_;
  std::size_t nx_;
  std::map<EdgeId, std::vector<EdgeId>> adjacency_;
  std::map<EdgeId, bool> visited_;
};

}  // namespace

Boundary extract_level_set(const ScalarGrid& grid, double level) {
  if (grid.values.size() != grid.x.size() * grid.y.size()) throw std::invalid_argument("grid shape mismatch");
  if (!grid.valid.empty() && grid.valid.size() != grid.values.size()) throw std::invalid_argument("mask shape mismatch");
  Boundary b;
  b.level = level;
  b.maximum = std::numeric_limits<double>::quiet_NaN();
  b.polylines = Contourer(grid, level).run();
  return b;
}

Boundary extract_half_maximum(const ScalarGrid& grid) {
  double maximum = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < grid.y.size(); ++j) {
    for (std::size_t i = 0; i < grid.x.size(); ++i) {
      if (grid.is_valid(i, j) && std::isfinite(grid.value(i, j))) maximum = std::max(maximum, grid.value(i, j));
    }
  }
  Boundary b;
  if (!(maximum > 0.0)) {
    b.maximum = std::isfinite(maximum) ? maximum : 0.0;
    b.level = 0.5 * b.maximum;
    b.warning = "order parameter has no positive maximum on the grid; boundary is empty";
    return b;
  }
  b = extract_level_set(grid, 0.5 * maximum);
  b.maximum = maximum;
  if (b.polylines.empty()) b.warning = "half-maximum level is not crossed inside the grid";
  return b;
}

std::vector<double> crossings_at(const Boundary& boundary, double y0) {
  std::vector<double> xs;
  for (const Polyline& line : boundary.polylines) {
    for (std::size_t k = 0; k + 1 < line.size(); ++k) {
      const Point2& p = line[k];
      const Point2& q = line[k + 1];
      if ((p.y <= y0 && y0 < q.y) || (q.y <= y0 && y0 < p.y)) {
        const double t = (y0 - p.y) / (q.y - p.y);
        xs.push_back(p.x + t * (q.x - p.x));
      }
    }
  }
  std::sort(xs.begin(), xs.end());
  return xs;
}

const char* to_string(OrderParameterKind kind) {
  return kind == OrderParameterKind::var_total ? "var_total" : "var_atom";
}

ScalarGrid order_parameter_grid(const SweepSpec& spec, const std::vector<SweepRow>& rows, OrderParameterKind kind) {
  if (rows.size() != spec.point_count()) throw std::invalid_argument("row count does not match the sweep grid");
  ScalarGrid grid;
  grid.x = spec.delta_over_g.values();
  grid.y = spec.hop_over_g.values();
  grid.values.reserve(rows.size());
  grid.valid.reserve(rows.size());
  for (const SweepRow& r : rows) {
    grid.values.push_back(kind == OrderParameterKind::var_total ? r.order.var_total_site1 : r.order.var_atom_site1);
    grid.valid.push_back(r.status == RowStatus::ok);
  }
  return grid;
}

Boundary extract_boundary(const SweepSpec& spec, const std::vector<SweepRow>& rows, OrderParameterKind kind) {
  return extract_half_maximum(order_parameter_grid(spec, rows, kind));
}

SweepSpec default_phase_spec(int delta_steps, int hop_steps) {
  SweepSpec spec;
  spec.delta_over_g = Axis::linear(-30.0, 10.0, delta_steps);
  spec.hop_over_g = Axis::logarithmic(0.01, 20.0, hop_steps);
  return spec;
}

PhaseDiagram build_phase_diagram(const SweepSpec& spec, int workers) {
  PhaseDiagram d;
  d.spec = spec;
  d.rows = run_sweep(spec, workers);
  d.superfluid = extract_boundary(spec, d.rows, OrderParameterKind::var_total);
  d.polaritonic = extract_boundary(spec, d.rows, OrderParameterKind::var_atom);
  return d;
}

}  // namespace ccqed
