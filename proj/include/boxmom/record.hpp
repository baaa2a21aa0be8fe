#pragma once

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

namespace boxmom::cli {

using Cell = std::variant<double, std::string>;

// One command invocation's worth of output: echoed parameters, a rectangular
// table, and named scalar diagnostics (achieved error estimates and checks).
// Rendering is deterministic so identical invocations are byte-identical.
struct OutputRecord {
  std::string command;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, double>> diagnostics;
};

// Shortest round-trip-ish fixed rendering; every numeric field must be finite.
inline std::string format_double(double v) {
  if (!std::isfinite(v)) throw std::logic_error("output contains a non-finite number");
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

inline std::string to_csv(const OutputRecord& rec) {
  std::string out;
  out += "# command: " + rec.command + "\n";
  for (const auto& [k, v] : rec.params) out += "# param " + k + ": " + v + "\n";
  for (const auto& [k, v] : rec.diagnostics)
    out += "# diagnostic " + k + ": " + format_double(v) + "\n";
  for (size_t i = 0; i < rec.columns.size(); ++i) {
    if (i) out += ',';
    out += rec.columns[i];
  }
  out += '\n';
  for (const auto& row : rec.rows) {
    if (row.size() != rec.columns.size())
      throw std::logic_error("output row width does not match the header");
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      if (const double* d = std::get_if<double>(&row[i]))
        out += format_double(*d);
      else
        out += std::get<std::string>(row[i]);
    }
    out += '\n';
  }
  return out;
}

inline std::string to_json(const OutputRecord& rec) {
  nlohmann::json j;
  j["command"] = rec.command;
  j["params"] = nlohmann::json::object();
  for (const auto& [k, v] : rec.params) j["params"][k] = v;
  j["rows"] = nlohmann::json::array();
  for (const auto& row : rec.rows) {
    if (row.size() != rec.columns.size())
      throw std::logic_error("output row width does not match the header");
    nlohmann::json obj = nlohmann::json::object();
    for (size_t i = 0; i < row.size(); ++i) {
      if (const double* d = std::get_if<double>(&row[i])) {
        if (!std::isfinite(*d)) throw std::logic_error("output contains a non-finite number");
        obj[rec.columns[i]] = *d;
      } else {
        obj[rec.columns[i]] = std::get<std::string>(row[i]);
      }
    }
    j["rows"].push_back(std::move(obj));
  }
  j["diagnostics"] = nlohmann::json::object();
  for (const auto& [k, v] : rec.diagnostics) {
    if (!std::isfinite(v)) throw std::logic_error("output contains a non-finite number");
    j["diagnostics"][k] = v;
  }
  return j.dump(2) + "\n";
}

}  // namespace boxmom::cli
