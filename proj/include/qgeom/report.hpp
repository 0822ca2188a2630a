#pragma once

#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "qgeom/verify.hpp"

namespace qgeom {

// Report schema: { suite, config, entries: [{name, paper_ref, residual,
// threshold, status}] }.  Key order is fixed and no timestamps are written,
// so identical configurations give byte-identical output.
inline nlohmann::ordered_json report_json(const SuiteReport& report) {
  nlohmann::ordered_json j;
  j["suite"] = report.suite;
  j["config"] = {{"dim", report.config.dim},
                 {"cutoff", report.config.cutoff},
                 {"hbar", report.config.hbar},
                 {"seed", report.config.seed},
                 {"cases", report.config.cases},
                 {"tolerance", report.config.tolerance}};
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const SuiteEntry& e : report.entries)
    entries.push_back({{"name", e.name},
                       {"paper_ref", e.paper_ref},
                       {"residual", e.residual},
                       {"threshold", e.threshold},
                       {"status", e.status}});
  j["entries"] = entries;
  j["all_passed"] = report.all_passed;
  return j;
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += "\"";
  return out;
}

// CSV flattening of the same report: header row, UTF-8, LF line endings.
inline void write_report_csv(std::ostream& os, const SuiteReport& report) {
  os << "name,paper_ref,residual,threshold,status\n";
  os << std::setprecision(17);
  for (const SuiteEntry& e : report.entries)
    os << csv_escape(e.name) << "," << csv_escape(e.paper_ref) << "," << e.residual
       << "," << e.threshold << "," << e.status << "\n";
}

}  // namespace qgeom
