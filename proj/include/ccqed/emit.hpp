#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ccqed/boundary.hpp"
#include "ccqed/sweep.hpp"

namespace ccqed {

inline constexpr int kJsonSchemaVersion = 1;

enum class Format { csv, json };

Format parse_format(const std::string& text);

/// Shortest-exact ("%.17g") rendering; NaN prints as "nan".
std::string format_number(double value);

/// delta_over_g,hop_over_g,energy,gap,degenerate,S_site,S_atom,S_cavity,
/// S_atoms,S_cross,mean_n1,var_n1,mean_na1,var_na1,status
const std::string& csv_header();

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);
std::string to_csv(const std::vector<SweepRow>& rows);

/// Columns polyline,delta_over_g,hop_over_g; one line per vertex.
void write_boundary_csv(std::ostream& out, const Boundary& boundary);

nlohmann::json row_to_json(const SweepRow& row);
SweepRow row_from_json(const nlohmann::json& j);
nlohmann::json boundary_to_json(const Boundary& boundary, OrderParameterKind kind);

/// {schema_version, params, rows[], boundaries[]?}
nlohmann::json sweep_to_json(const SweepSpec& spec, const std::vector<SweepRow>& rows,
                             const std::vector<std::pair<OrderParameterKind, Boundary>>& boundaries = {});

/// Parses rows back out of sweep_to_json output. Throws std::runtime_error
/// on a schema_version mismatch or a malformed document.
std::vector<SweepRow> rows_from_json(const nlohmann::json& doc);

enum class PlotKind { entropies, phase };

/// Gnuplot script reading `csv_name` relative to the script's directory.
/// For phase plots the two boundary files are overlaid on the var_n1 map.
std::string gnuplot_script(PlotKind kind, const std::string& csv_name, const std::string& superfluid_csv = {},
                           const std::string& polaritonic_csv = {});

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Writes `content` to `path`, throwing IoError naming the path on failure.
void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace ccqed
