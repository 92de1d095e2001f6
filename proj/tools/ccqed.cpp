// ccqed: ground-state entanglement and phase diagram of the two-site,
// two-excitation coupled-cavity model.
//
//   ccqed point      --delta D --hop A
//   ccqed sweep      --delta-range=-10:10 --steps 401 --hop 0.01 --out fig.csv --emit-gnuplot
//   ccqed phase      --out phase.csv --emit-gnuplot
//   ccqed self-check [--delta D --hop A]
//
// Exit codes: 0 success, 1 usage error, 2 numerical failure.

#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include <CLI11.hpp>

#include "ccqed/boundary.hpp"
#include "ccqed/emit.hpp"
#include "ccqed/self_check.hpp"
#include "ccqed/sweep.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  double g = 1.0;
  double omega_c = 0.0;
  std::optional<double> delta;
  std::optional<std::string> delta_range;
  std::optional<int> steps;
  std::optional<double> hop;
  std::optional<std::string> hop_range;
  std::optional<int> hop_steps;
  bool log_hop = false;
  std::string format = "csv";
  std::string out;
  bool emit_gnuplot = false;
  int workers = 0;
};

std::pair<double, double> parse_range(const std::string& text, const char* flag) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError(std::string(flag) + " expects START:STOP, got '" + text + "'");
  try {
    std::size_t used_a = 0;
    std::size_t used_b = 0;
    const std::string a = text.substr(0, colon);
    const std::string b = text.substr(colon + 1);
    const double lo = std::stod(a, &used_a);
    const double hi = std::stod(b, &used_b);
    if (used_a != a.size() || used_b != b.size()) throw std::invalid_argument("trailing characters");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw UsageError(std::string(flag) + " expects numeric START:STOP, got '" + text + "'");
  }
}

ccqed::Axis delta_axis(const Options& o, double lo, double hi, int steps) {
  if (o.delta && o.delta_range) throw UsageError("--delta and --delta-range are mutually exclusive");
  if (o.delta_range) std::tie(lo, hi) = parse_range(*o.delta_range, "--delta-range");
  return ccqed::Axis::linear(lo, hi, o.steps.value_or(steps));
}

ccqed::Axis hop_axis(const Options& o, ccqed::Axis fallback) {
  if (o.hop && o.hop_range) throw UsageError("--hop and --hop-range are mutually exclusive");
  if (o.hop) return ccqed::Axis::fixed(*o.hop);
  if (o.hop_range) {
    const auto [lo, hi] = parse_range(*o.hop_range, "--hop-range");
    return {lo, hi, o.hop_steps.value_or(fallback.is_fixed() ? 21 : fallback.steps), o.log_hop};
  }
  if (o.hop_steps && !fallback.is_fixed()) fallback.steps = *o.hop_steps;
  return fallback;
}

void emit_text(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
  } else {
    ccqed::write_text_file(path, content);
  }
}

std::string rows_text(const Options& o, const ccqed::SweepSpec& spec, const std::vector<ccqed::SweepRow>& rows,
                      const std::vector<std::pair<ccqed::OrderParameterKind, ccqed::Boundary>>& boundaries = {}) {
  if (ccqed::parse_format(o.format) == ccqed::Format::json) {
    return ccqed::sweep_to_json(spec, rows, boundaries).dump(2) + "\n";
  }
  return ccqed::to_csv(rows);
}

int report_failures(const std::vector<ccqed::SweepRow>& rows) {
  const std::size_t failed = ccqed::failed_count(rows);
  if (failed == 0) return EXIT_SUCCESS;
  std::cerr << "ccqed: numerical failure at " << failed << " of " << rows.size() << " points\n";
  for (const auto& r : rows) {
    if (r.status == ccqed::RowStatus::failed) {
      std::cerr << "  delta/g=" << r.delta_over_g << " hop/g=" << r.hop_over_g << ": " << r.error << '\n';
    }
  }
  return kExitNumerical;
}

int run_point(const Options& o) {
  if (o.delta_range || o.hop_range) throw UsageError("point takes --delta and --hop, not ranges");
  ccqed::SweepSpec spec;
  const double d = o.delta.value_or(0.0);
  spec.delta_over_g = ccqed::Axis::fixed(d);
  spec.hop_over_g = ccqed::Axis::fixed(o.hop.value_or(0.01));
  spec.g = o.g;
  spec.omega_c = o.omega_c;
  ccqed::ModelParams::from_detuning(d, spec.hop_over_g.start, o.g, o.omega_c).validate();
  const std::vector<ccqed::SweepRow> rows{ccqed::evaluate_point(d, spec.hop_over_g.start, o.g, o.omega_c)};
  emit_text(o.out, rows_text(o, spec, rows));
  return report_failures(rows);
}

int run_sweep_command(const Options& o) {
  ccqed::SweepSpec spec;
  spec.delta_over_g = delta_axis(o, -10.0, 10.0, 401);
  spec.hop_over_g = hop_axis(o, ccqed::Axis::fixed(0.01));
  spec.g = o.g;
  spec.omega_c = o.omega_c;
  spec.validate();

  const auto rows = ccqed::run_sweep(spec, o.workers);
  emit_text(o.out, rows_text(o, spec, rows));
  if (o.emit_gnuplot) {
    if (o.out.empty() || o.out == "-") throw UsageError("--emit-gnuplot needs --out");
    const std::filesystem::path out(o.out);
    ccqed::write_text_file(out.string() + ".gp", ccqed::gnuplot_script(ccqed::PlotKind::entropies, out.filename().string()));
  }
  return report_failures(rows);
}

int run_phase_command(const Options& o) {
  if (o.out.empty() || o.out == "-") throw UsageError("phase needs --out PATH (boundary files are written next to it)");
  ccqed::SweepSpec spec = ccqed::default_phase_spec();
  spec.delta_over_g = delta_axis(o, -30.0, 10.0, 161);
  if (o.hop) throw UsageError("phase needs a hop range, not a fixed --hop");
  Options hop_opts = o;
  hop_opts.log_hop = o.hop_range ? o.log_hop : true;
  spec.hop_over_g = hop_axis(hop_opts, spec.hop_over_g);
  spec.g = o.g;
  spec.omega_c = o.omega_c;
  spec.validate();

  const ccqed::PhaseDiagram diagram = ccqed::build_phase_diagram(spec, o.workers);
  for (const auto* b : {&diagram.superfluid, &diagram.polaritonic}) {
    if (!b->warning.empty()) std::cerr << "ccqed: warning: " << b->warning << '\n';
  }

  const std::filesystem::path out(o.out);
  const std::filesystem::path stem = out.parent_path() / out.stem();
  if (ccqed::parse_format(o.format) == ccqed::Format::json) {
    emit_text(o.out, rows_text(o, spec, diagram.rows,
                               {{ccqed::OrderParameterKind::var_total, diagram.superfluid},
                                {ccqed::OrderParameterKind::var_atom, diagram.polaritonic}}));
  } else {
    emit_text(o.out, ccqed::to_csv(diagram.rows));
  }
  const std::string sf_name = stem.filename().string() + "_superfluid_boundary.csv";
  const std::string pol_name = stem.filename().string() + "_polaritonic_boundary.csv";
  std::ostringstream sf;
  std::ostringstream pol;
  ccqed::write_boundary_csv(sf, diagram.superfluid);
  ccqed::write_boundary_csv(pol, diagram.polaritonic);
  ccqed::write_text_file(out.parent_path() / sf_name, sf.str());
  ccqed::write_text_file(out.parent_path() / pol_name, pol.str());
  if (o.emit_gnuplot) {
    ccqed::write_text_file(out.string() + ".gp", ccqed::gnuplot_script(ccqed::PlotKind::phase, out.filename().string(),
                                                                       sf_name, pol_name));
  }
  return report_failures(diagram.rows);
}

int run_self_check_command(const Options& o) {
  std::vector<std::pair<double, double>> points;
  if (o.delta || o.hop) {
    points.emplace_back(o.delta.value_or(0.0), o.hop.value_or(0.01));
  } else {
    points = {{-50.0, 0.01}, {0.0, 0.01}, {50.0, 0.01}, {-10.0, 10.0}, {0.0, 0.0}, {-3.0, 0.0}, {2.5, 1.5}};
  }
  bool ok = true;
  for (const auto& [d, a] : points) {
    const auto params = ccqed::ModelParams::from_detuning(d, a, o.g, o.omega_c);
    params.validate();
    std::cout << "== delta/g = " << d << ", hop/g = " << a << '\n';
    const auto results = ccqed::run_self_check(params);
    ccqed::print_check_table(std::cout, results);
    ok = ok && ccqed::all_passed(results);
  }
  std::cout << (ok ? "self-check: all checks passed\n" : "self-check: FAILURES\n");
  return ok ? EXIT_SUCCESS : kExitNumerical;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ground-state entanglement of the two-site coupled-cavity model"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_config("--config", "", "flat key = value file mirroring the long flags; command-line flags win");

  Options o;
  app.add_option("--g", o.g, "atom-cavity coupling (energy unit)")->capture_default_str();
  app.add_option("--omega-c", o.omega_c, "cavity frequency; only shifts energies within a sector")->capture_default_str();
  app.add_option("--delta", o.delta, "detuning omega_a - omega_c in units of g");
  app.add_option("--delta-range", o.delta_range, "detuning range START:STOP in units of g (use --delta-range=-10:10)");
  app.add_option("--steps", o.steps, "points along the detuning axis");
  app.add_option("--hop", o.hop, "hopping A in units of g");
  app.add_option("--hop-range", o.hop_range, "hopping range START:STOP in units of g");
  app.add_option("--hop-steps", o.hop_steps, "points along the hopping axis");
  app.add_flag("--log-hop", o.log_hop, "log-space the hopping axis");
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  app.add_option("--out", o.out, "output path ('-' or empty for stdout)");
  app.add_flag("--emit-gnuplot", o.emit_gnuplot, "write a gnuplot script next to --out");
  app.add_option("--workers", o.workers, "OpenMP threads for sweeps (0 = default)")->capture_default_str();

  auto* point = app.add_subcommand("point", "evaluate one (delta, hop) point");
  auto* sweep = app.add_subcommand("sweep", "sweep detuning (and optionally hopping)");
  auto* phase = app.add_subcommand("phase", "phase-diagram grid and half-maximum boundaries");
  auto* check = app.add_subcommand("self-check", "compare every oracle path and print a pass/fail table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*point) return run_point(o);
    if (*sweep) return run_sweep_command(o);
    if (*phase) return run_phase_command(o);
    if (*check) return run_self_check_command(o);
  } catch (const UsageError& e) {
    std::cerr << "ccqed: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ccqed::IoError& e) {
    std::cerr << "ccqed: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "ccqed: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "ccqed: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitUsage;
}
