#pragma once

// Serialization: CSV tables for grids and spectra, JSON run reports.

#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "deltaho/error.hpp"
#include "deltaho/spectrum.hpp"
#include "json.hpp"

namespace deltaho::report {

using json = nlohmann::json;

inline constexpr const char* tool_version = "1.0.0";

/// 6 significant digits, or 17 (round-trip exact) with full precision.
inline std::string format_number(double x, bool full_precision) {
  char buf[40];
  std::snprintf(buf, sizeof buf, full_precision ? "%.17g" : "%.6g", x);
  return buf;
}

/// Fixed decimals, e.g. for four-decimal table cells.
inline std::string format_fixed(double x, int decimals) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
  std::string s = buf;
  if (s.starts_with("-")) {
    // Never print "-0.0000".
    bool all_zero = true;
    for (char c : s.substr(1)) all_zero &= (c == '0' || c == '.');
    if (all_zero) s.erase(0, 1);
  }
  return s;
}

/// RFC 4180 field quoting.
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

/// A CSV document: '#'-prefixed comment lines, a header row, data rows.
struct CsvTable {
  std::vector<std::string> comments;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  [[nodiscard]] std::string str() const {
    std::ostringstream os;
    for (const auto& c : comments) os << "# " << c << '\n';
    auto line = [&os](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) os << ',';
        os << csv_field(cells[i]);
      }
      os << '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
    return os.str();
  }
};

/// Result of one `solve` run.
struct RunReport {
  double g = 0.0;
  std::vector<EigenSolution> states;
  std::vector<double> residuals;  ///< jump-condition residual per state (0 for odd)
  std::optional<std::vector<double>> oracle_gaps;
  json config = json::object();
  std::string version = tool_version;
  std::optional<std::string> timestamp;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

inline Parity parse_parity(const std::string& s) {
  if (s == "even") return Parity::even;
  if (s == "odd") return Parity::odd;
  throw error("unknown parity '" + s + "'");
}

inline json to_json(const RunReport& r) {
  json states = json::array();
  for (const auto& s : r.states) {
    states.push_back({{"index", s.index},
                      {"parity", to_string(s.parity)},
                      {"nu", s.nu},
                      {"epsilon", s.epsilon}});
  }
  json j = {{"g", r.g}, {"states", states}, {"residuals", r.residuals}, {"config", r.config}};
  if (r.oracle_gaps) j["oracle_gaps"] = *r.oracle_gaps;
  j["metadata"] = {{"tool_version", r.version}};
  if (r.timestamp) j["metadata"]["timestamp"] = *r.timestamp;
  return j;
}

inline RunReport run_report_from_json(const json& j) {
  RunReport r;
  r.g = j.at("g").get<double>();
  for (const auto& s : j.at("states")) {
    EigenSolution e;
    e.index = s.at("index").get<std::size_t>();
    e.parity = parse_parity(s.at("parity").get<std::string>());
    e.nu = s.at("nu").get<double>();
    e.epsilon = s.at("epsilon").get<double>();
    r.states.push_back(e);
  }
  r.residuals = j.at("residuals").get<std::vector<double>>();
  if (j.contains("oracle_gaps")) r.oracle_gaps = j.at("oracle_gaps").get<std::vector<double>>();
  r.config = j.value("config", json::object());
  const auto& meta = j.at("metadata");
  r.version = meta.at("tool_version").get<std::string>();
  if (meta.contains("timestamp")) r.timestamp = meta.at("timestamp").get<std::string>();
  return r;
}

/// Spectrum as CSV: index, parity, nu, epsilon, residual.
inline CsvTable to_csv(const RunReport& r, bool full_precision) {
  CsvTable t;
  t.comments.push_back("deltaho " + r.version + " solve g=" + format_number(r.g, true));
  if (r.timestamp) t.comments.push_back("timestamp " + *r.timestamp);
  t.header = {"index", "parity", "nu", "epsilon", "residual"};
  if (r.oracle_gaps) t.header.push_back("oracle_gap");
  for (std::size_t i = 0; i < r.states.size(); ++i) {
    const auto& s = r.states[i];
    std::vector<std::string> row = {std::to_string(s.index), to_string(s.parity),
                                    format_number(s.nu, full_precision),
                                    format_number(s.epsilon, full_precision),
                                    format_number(r.residuals.at(i), full_precision)};
    if (r.oracle_gaps) row.push_back(format_number(r.oracle_gaps->at(i), full_precision));
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace deltaho::report
