#pragma once

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "minuscule/csp.hpp"
#include "minuscule/heap.hpp"
#include "minuscule/toggle.hpp"

namespace minuscule {

// "<count> x <length>" terms, largest orbits first: e.g. "3 x 18 + 1 x 2".
inline std::string orbit_summary(const OrbitStructure& o) {
  auto ms = o.multiset();
  std::string s;
  for (auto it = ms.rbegin(); it != ms.rend(); ++it) {
    if (!s.empty()) s += " + ";
    s += std::to_string(it->second) + " x " + std::to_string(it->first);
  }
  return s.empty() ? "0 orbits" : s;
}

// One "orbit <length> <representative-bitstring>" line per orbit.
inline std::string orbit_lines(const OrbitStructure& o) {
  std::string s;
  for (const auto& orb : o.orbits)
    s += "orbit " + std::to_string(orb.length) + " " + orb.representative.to_string() + "\n";
  return s;
}

inline nlohmann::json to_json(const OrbitStructure& o) {
  nlohmann::json orbits = nlohmann::json::array();
  for (const auto& [len, count] : o.multiset())
    orbits.push_back({{"length", len}, {"count", count}});
  return {{"size", o.total},
          {"order", o.order},
          {"orbits", orbits},
          {"fixed_points", fixed_point_counts(o)}};
}

inline nlohmann::json to_json(const QPolynomial& f) { return f.coeff_strings(); }

inline nlohmann::json to_json(const CspRow& row) {
  nlohmann::json j{{"d", row.d}, {"fixed", row.fixed_count}, {"ok", row.ok}};
  if (row.evaluation.is_integer())
    j["evaluation"] = row.evaluation.value().str();
  else {
    j["evaluation"] = nullptr;
    j["residue"] = row.evaluation.residue.to_string();
  }
  return j;
}

inline nlohmann::json to_json(const CspReport& rep) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : rep.rows) rows.push_back(to_json(r));
  nlohmann::json j{{"size", rep.set_size},
                   {"order", rep.order},
                   {"rows", rows},
                   {"verdict", rep.pass ? "pass" : "fail"}};
  j["first_failing_d"] = rep.first_failing_d ? nlohmann::json(*rep.first_failing_d)
                                             : nlohmann::json(nullptr);
  return j;
}

// Aligned d / fixed / evaluation table with a verdict line.
inline std::string csp_table(const CspReport& rep) {
  std::ostringstream out;
  out << "set size " << rep.set_size << ", action order " << rep.order << "\n";
  out << std::setw(6) << "d" << std::setw(12) << "fixed" << "  evaluation\n";
  for (const auto& r : rep.rows) {
    out << std::setw(6) << r.d << std::setw(12) << r.fixed_count << "  ";
    if (r.evaluation.is_integer())
      out << r.evaluation.value().str();
    else
      out << "non-rational: " << r.evaluation.residue.to_string();
    if (!r.ok) out << "   <- mismatch";
    out << "\n";
  }
  out << "verdict: " << (rep.pass ? "pass" : "fail");
  if (rep.first_failing_d) out << " (first failing d = " << *rep.first_failing_d << ")";
  out << "\n";
  return out.str();
}

inline nlohmann::json to_json(const DivisibilityCheck& rep) {
  nlohmann::json orbits = nlohmann::json::array();
  for (const auto& [len, count] : rep.orbit_multiset)
    orbits.push_back({{"length", len}, {"count", count}});
  nlohmann::json constraints = nlohmann::json::array();
  for (const auto& c : rep.constraints)
    constraints.push_back(
        {{"length", c.length}, {"divisor", c.divisor}, {"found", c.found}, {"ok", c.ok}});
  return {{"k", rep.k},         {"n", rep.n},           {"size", rep.set_size},
          {"orbits", orbits},   {"constraints", constraints}, {"pass", rep.pass}};
}

inline nlohmann::json to_json(const StaircaseOrbitCheck& rep) {
  nlohmann::json orbits = nlohmann::json::array();
  for (const auto& [len, count] : rep.orbit_multiset)
    orbits.push_back({{"length", len}, {"count", count}});
  return {{"n", rep.n},
          {"size", rep.set_size},
          {"expected_length", rep.expected_length},
          {"orbits", orbits},
          {"pass", rep.pass}};
}

inline nlohmann::json to_json(const EquivarianceReport& rep) {
  nlohmann::json j{{"pass", rep.pass},
                   {"ideals_checked", rep.ideals_checked},
                   {"ordering", rep.ordering}};
  if (rep.counterexample) j["counterexample"] = rep.counterexample->to_string();
  return j;
}

}  // namespace minuscule
