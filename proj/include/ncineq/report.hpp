#pragma once

// Run configuration and report types shared by the command-line tool: typed
// parameter maps, deterministic JSON/CSV serialization, and the empirical
// calibration fit for the sampling tail model.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "ncineq/errors.hpp"

namespace ncineq::report {

inline constexpr const char* kSchema = "ncineq-report/1";
inline constexpr const char* kVersion = "1.0.0";

using ordered_json = nlohmann::ordered_json;
using Param = std::variant<std::int64_t, double, std::string, bool>;

struct RunConfig {
  std::string subcommand;                // e.g. "mc dominance"
  std::map<std::string, Param> params;   // flat typed key/value map
  std::uint64_t seed = 0;
  bool has_seed = false;
  std::string out_path;                  // empty = stdout
  std::string format = "json";           // json | csv
};

struct RunReport {
  RunConfig config;
  ordered_json records = ordered_json::array();
  ordered_json summary;  // optional object (e.g. fitted constants); null if unused
  bool pass = true;
  std::int64_t wall_time_ms = 0;
};

inline ordered_json param_to_json(const Param& p) {
  if (std::holds_alternative<std::int64_t>(p)) return std::get<std::int64_t>(p);
  if (std::holds_alternative<double>(p)) return std::get<double>(p);
  if (std::holds_alternative<bool>(p)) return std::get<bool>(p);
  return std::get<std::string>(p);
}

inline ordered_json config_to_json(const RunConfig& c) {
  ordered_json j;
  j["subcommand"] = c.subcommand;
  ordered_json pj = ordered_json::object();
  for (const auto& [k, v] : c.params) pj[k] = param_to_json(v);
  j["params"] = pj;
  if (c.has_seed) j["seed"] = c.seed;
  j["format"] = c.format;
  if (!c.out_path.empty()) j["out_path"] = c.out_path;
  return j;
}

inline ordered_json report_to_json(const RunReport& r) {
  ordered_json j;
  j["schema"] = kSchema;
  j["version"] = kVersion;
  j["config"] = config_to_json(r.config);
  j["records"] = r.records;
  if (!r.summary.is_null()) j["summary"] = r.summary;
  j["pass"] = r.pass;
  j["wall_time_ms"] = r.wall_time_ms;
  return j;
}

namespace detail {
inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += "\"\"";
    else out += ch;
  }
  out += "\"";
  return out;
}

inline std::string csv_cell(const ordered_json& v) {
  if (v.is_string()) return csv_escape(v.get<std::string>());
  if (v.is_null()) return "";
  return v.dump();
}

// One level of flattening for CSV: nested objects join keys with '.', arrays
// of scalars join values with ';'. JSON remains the source of truth.
inline void flatten_record(const std::string& prefix, const ordered_json& v,
                           std::vector<std::pair<std::string, std::string>>& out) {
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) {
      std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
      flatten_record(key, it.value(), out);
    }
  } else if (v.is_array()) {
    std::string joined;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) joined += ";";
      joined += csv_cell(v[i]);
    }
    out.emplace_back(prefix, csv_escape(joined));
  } else {
    out.emplace_back(prefix, csv_cell(v));
  }
}
}  // namespace detail

// Flat per-point table of the records array; header order follows first
// appearance across records.
inline std::string report_to_csv(const RunReport& r) {
  std::vector<std::string> header;
  std::vector<std::vector<std::pair<std::string, std::string>>> rows;
  for (const auto& rec : r.records) {
    require(rec.is_object(), errc::usage, "csv export needs object records");
    std::vector<std::pair<std::string, std::string>> flat;
    detail::flatten_record("", rec, flat);
    for (const auto& [k, v] : flat)
      if (std::find(header.begin(), header.end(), k) == header.end()) header.push_back(k);
    rows.push_back(std::move(flat));
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < header.size(); ++i)
    os << (i ? "," : "") << detail::csv_escape(header[i]);
  os << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (i) os << ",";
      for (const auto& [k, v] : row)
        if (k == header[i]) {
          os << v;
          break;
        }
    }
    os << "\n";
  }
  return os.str();
}

enum class FitModel { csld };

struct FitPoint {
  double t = 0.0;          // scaled threshold entering the model exponent
  double empirical = 0.0;  // observed tail value at t
};

struct FitResult {
  double c_hat = 0.0;
  double beta = 0.0;      // fitted slope of log(empirical / trace) against t^2
  double residual = 0.0;  // rms misfit in log space
  std::int64_t usable = 0;
};

// Least-squares calibration of the unspecified absolute constant in the
// sampling tail model trace * exp(-t^2 / (2 C^2 e)): fits beta = -1/(2 C^2 e)
// through the origin over records with a strictly positive empirical tail.
// Reported only; never used in assertions.
inline FitResult fit_constant(const std::vector<FitPoint>& points, double trace_of_1,
                              FitModel model = FitModel::csld) {
  require(model == FitModel::csld, errc::invalid_parameter, "unknown fit model");
  require(std::isfinite(trace_of_1) && trace_of_1 > 0.0, errc::invalid_parameter,
          "trace must be > 0");
  double st2y = 0.0, st4 = 0.0;
  std::int64_t usable = 0;
  std::vector<std::pair<double, double>> pts;
  for (const auto& pt : points) {
    if (!(std::isfinite(pt.t) && pt.t > 0.0 && std::isfinite(pt.empirical) &&
          pt.empirical > 0.0))
      continue;
    double y = std::log(pt.empirical / trace_of_1);
    st2y += pt.t * pt.t * y;
    st4 += pt.t * pt.t * pt.t * pt.t;
    pts.emplace_back(pt.t, y);
    ++usable;
  }
  require(usable >= 3, errc::invalid_input,
          "fewer than 3 usable records (positive empirical tail)");
  double beta = st2y / st4;
  require(beta < 0.0, errc::degenerate_profile, "fit slope is nonnegative; model inapplicable");
  FitResult out;
  out.beta = beta;
  out.c_hat = std::sqrt(-1.0 / (2.0 * beta * std::exp(1.0)));
  double ss = 0.0;
  for (const auto& [t, y] : pts) {
    double d = y - beta * t * t;
    ss += d * d;
  }
  out.residual = std::sqrt(ss / static_cast<double>(usable));
  out.usable = usable;
  return out;
}

}  // namespace ncineq::report
