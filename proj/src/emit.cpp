#include "ccqed/emit.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ccqed {

Format parse_format(const std::string& text) {
  if (text == "csv") return Format::csv;
  if (text == "json") return Format::json;
  throw std::invalid_argument("unknown format '" + text + "' (expected csv or json)");
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

const std::string& csv_header() {
  static const std::string header =
      "delta_over_g,hop_over_g,energy,gap,degenerate,S_site,S_atom,S_cavity,S_atoms,S_cross,"
      "mean_n1,var_n1,mean_na1,var_na1,status";
  return header;
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << csv_header() << '\n';
  for (const SweepRow& r : rows) {
    const EntropyReport& s = r.entropies;
    const OrderParameters& o = r.order;
    out << format_number(r.delta_over_g) << ',' << format_number(r.hop_over_g) << ',' << format_number(r.energy) << ','
        << format_number(r.gap) << ',' << (r.degenerate ? 1 : 0) << ',' << format_number(s.site) << ','
        << format_number(s.atom) << ',' << format_number(s.cavity) << ',' << format_number(s.atoms) << ','
        << format_number(s.cross) << ',' << format_number(o.mean_total_site1) << ','
        << format_number(o.var_total_site1) << ',' << format_number(o.mean_atom_site1) << ','
        << format_number(o.var_atom_site1) << ',' << to_string(r.status) << '\n';
  }
}

std::string to_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  write_csv(os, rows);
  return os.str();
}

void write_boundary_csv(std::ostream& out, const Boundary& boundary) {
  out << "polyline,delta_over_g,hop_over_g\n";
  for (std::size_t k = 0; k < boundary.polylines.size(); ++k) {
    for (const Point2& p : boundary.polylines[k]) {
      out << k << ',' << format_number(p.x) << ',' << format_number(p.y) << '\n';
    }
  }
}

namespace {

double number_or_nan(const nlohmann::json& j) {
  return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

nlohmann::json axis_to_json(const Axis& a) {
  return {{"start", a.start}, {"stop", a.stop}, {"steps", a.steps}, {"log", a.log_spaced}};
}

}  // namespace

nlohmann::json row_to_json(const SweepRow& r) {
  nlohmann::json j = {
      {"delta_over_g", r.delta_over_g},
      {"hop_over_g", r.hop_over_g},
      {"energy", r.energy},
      {"gap", r.gap},
      {"degenerate", r.degenerate},
      {"S_site", r.entropies.site},
      {"S_atom", r.entropies.atom},
      {"S_cavity", r.entropies.cavity},
      {"S_atoms", r.entropies.atoms},
      {"S_cross", r.entropies.cross},
      {"mean_n1", r.order.mean_total_site1},
      {"var_n1", r.order.var_total_site1},
      {"mean_na1", r.order.mean_atom_site1},
      {"var_na1", r.order.var_atom_site1},
      {"status", to_string(r.status)},
  };
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

SweepRow row_from_json(const nlohmann::json& j) {
  SweepRow r;
  r.delta_over_g = number_or_nan(j.at("delta_over_g"));
  r.hop_over_g = number_or_nan(j.at("hop_over_g"));
  r.energy = number_or_nan(j.at("energy"));
  r.gap = number_or_nan(j.at("gap"));
  r.degenerate = j.at("degenerate").get<bool>();
  r.entropies.site = number_or_nan(j.at("S_site"));
  r.entropies.atom = number_or_nan(j.at("S_atom"));
  r.entropies.cavity = number_or_nan(j.at("S_cavity"));
  r.entropies.atoms = number_or_nan(j.at("S_atoms"));
  r.entropies.cross = number_or_nan(j.at("S_cross"));
  r.entropies.degenerate = r.degenerate;
  r.order.mean_total_site1 = number_or_nan(j.at("mean_n1"));
  r.order.var_total_site1 = number_or_nan(j.at("var_n1"));
  r.order.mean_atom_site1 = number_or_nan(j.at("mean_na1"));
  r.order.var_atom_site1 = number_or_nan(j.at("var_na1"));
  r.status = parse_row_status(j.at("status").get<std::string>());
  if (j.contains("error")) r.error = j.at("error").get<std::string>();
  return r;
}

nlohmann::json boundary_to_json(const Boundary& b, OrderParameterKind kind) {
  nlohmann::json lines = nlohmann::json::array();
  for (const Polyline& line : b.polylines) {
    nlohmann::json pts = nlohmann::json::array();
    for (const Point2& p : line) pts.push_back({p.x, p.y});
    lines.push_back(std::move(pts));
  }
  nlohmann::json j = {{"order_parameter", to_string(kind)}, {"maximum", b.maximum}, {"level", b.level}, {"polylines", lines}};
  if (!b.warning.empty()) j["warning"] = b.warning;
  return j;
}

nlohmann::json sweep_to_json(const SweepSpec& spec, const std::vector<SweepRow>& rows,
                             const std::vector<std::pair<OrderParameterKind, Boundary>>& boundaries) {
  nlohmann::json doc;
  doc["schema_version"] = kJsonSchemaVersion;
  doc["params"] = {{"g", spec.g},
                   {"omega_c", spec.omega_c},
                   {"delta_over_g", axis_to_json(spec.delta_over_g)},
                   {"hop_over_g", axis_to_json(spec.hop_over_g)}};
  nlohmann::json jrows = nlohmann::json::array();
  for (const SweepRow& r : rows) jrows.push_back(row_to_json(r));
  doc["rows"] = std::move(jrows);
  if (!boundaries.empty()) {
    nlohmann::json jb = nlohmann::json::array();
    for (const auto& [kind, b] : boundaries) jb.push_back(boundary_to_json(b, kind));
    doc["boundaries"] = std::move(jb);
  }
  return doc;
}

std::vector<SweepRow> rows_from_json(const nlohmann::json& doc) {
  try {
    const int version = doc.at("schema_version").get<int>();
    if (version != kJsonSchemaVersion) {
      throw std::runtime_error("unsupported schema_version " + std::to_string(version));
    }
    std::vector<SweepRow> rows;
    for (const auto& j : doc.at("rows")) rows.push_back(row_from_json(j));
    return rows;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("malformed sweep document: ") + e.what());
  }
}

std::string gnuplot_script(PlotKind kind, const std::string& csv_name, const std::string& superfluid_csv,
                           const std::string& polaritonic_csv) {
  std::ostringstream s;
  s << "# gnuplot script; run from this directory: gnuplot <script>\n"
    << "set datafile separator ','\n"
    << "set key autotitle columnhead\n";
  if (kind == PlotKind::entropies) {
    s << "set terminal pngcairo size 900,600\n"
      << "set output '" << csv_name << ".png'\n"
      << "set xlabel 'Delta / g'\n"
      << "set ylabel 'entropy (bits)'\n"
      << "set yrange [0:2.4]\n"
      << "plot '" << csv_name << "' using 1:6 with lines title 'S(A1C1) site', \\\n"
      << "     '' using 1:7 with lines title 'S(A1) atom', \\\n"
      << "     '' using 1:8 with lines title 'S(C1) cavity', \\\n"
      << "     '' using 1:9 with lines title 'S(A1A2) atoms', \\\n"
      << "     '' using 1:10 with lines title 'S(A1C2) cross'\n";
    return s.str();
  }
  s << "set terminal pngcairo size 900,700\n"
    << "set output '" << csv_name << ".png'\n"
    << "set xlabel 'Delta / g'\n"
    << "set ylabel 'A / g'\n"
    << "set logscale y\n"
    << "set cblabel 'var(n1)'\n"
    << "set palette rgbformulae 33,13,10\n"
    << "# regions separated by the half-maximum boundaries\n"
    << "set label 1 'atomic insulator' at -25,0.05 front\n"
    << "set label 2 'polaritonic insulator' at -3,0.03 front\n"
    << "set label 3 'photonic superfluid' at 2,5 front\n"
    << "set label 4 'polaritonic superfluid' at -18,12 front\n"
    << "plot '" << csv_name << "' using 1:2:12 with points pt 5 ps 0.6 palette notitle";
  if (!superfluid_csv.empty()) {
    s << ", \\\n      '" << superfluid_csv << "' using 2:3 with points pt 7 ps 0.4 lc rgb 'white' title 'superfluid boundary'";
  }
  if (!polaritonic_csv.empty()) {
    s << ", \\\n      '" << polaritonic_csv << "' using 2:3 with points pt 7 ps 0.4 lc rgb 'cyan' title 'polaritonic boundary'";
  }
  s << '\n';
  return s.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing: " + std::strerror(errno));
  out << content;
  out.flush();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace ccqed
