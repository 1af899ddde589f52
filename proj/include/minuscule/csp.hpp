#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "minuscule/catalog.hpp"
#include "minuscule/errors.hpp"
#include "minuscule/poset.hpp"
#include "minuscule/qpoly.hpp"
#include "minuscule/toggle.hpp"

namespace minuscule {

struct CspRow {
  std::uint64_t d = 0;
  std::uint64_t fixed_count = 0;
  RootOfUnityValue evaluation;
  bool ok = false;
};

struct CspReport {
  std::uint64_t set_size = 0;
  std::uint64_t order = 1;
  std::vector<CspRow> rows;  // one per d in 0..order-1, kept past failures
  bool pass = true;
  std::optional<std::uint64_t> first_failing_d;
};

// Compares fixed-point counts of every power of the action against exact
// evaluations of f at the corresponding roots of unity.  The root order is
// the computed order of the action, never an assumed formula.
inline CspReport verify_csp(const OrbitStructure& o, const QPolynomial& f) {
  if (f.at_one() != o.total)
    throw MismatchedSizeError("polynomial at q=1 gives " + f.at_one().str() + ", set has " +
                              std::to_string(o.total) + " elements");
  CspReport rep;
  rep.set_size = o.total;
  rep.order = o.order;
  std::vector<std::uint64_t> fix = fixed_point_counts(o);
  for (std::uint64_t d = 0; d < o.order; ++d) {
    CspRow row;
    row.d = d;
    row.fixed_count = fix[static_cast<std::size_t>(d)];
    row.evaluation = eval_at_root(f, o.order, static_cast<std::int64_t>(d));
    row.ok = row.evaluation.is_integer() && row.evaluation.value() == row.fixed_count;
    if (!row.ok && !rep.first_failing_d) {
      rep.pass = false;
      rep.first_failing_d = d;
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

// Orbit-length constraint for J([k] x [n] x [2]): for a proper divisor l of
// k+n+1 with d = (k+n+1)/l, orbits of length l may occur only when d divides
// n or n+1.
struct DivisibilityCheck {
  int k = 0, n = 0;
  std::uint64_t set_size = 0;
  std::map<std::uint64_t, std::uint64_t> orbit_multiset;
  struct Constraint {
    std::uint64_t length = 0;   // the forbidden orbit length l
    std::uint64_t divisor = 0;  // d = (k+n+1)/l
    std::uint64_t found = 0;    // orbits of that length actually present
    bool ok = true;
  };
  std::vector<Constraint> constraints;  // only the cases the proposition forbids
  bool pass = true;
};

inline DivisibilityCheck check_orbit_divisibility(int k, int n,
                                                  std::uint64_t bound = kDefaultIdealBound) {
  if (k < 1 || n < 1) throw DomainError("box sides must be positive");
  Poset box = product(rectangle(k, n), chain(2));
  OrbitStructure o = orbit_structure(box, [&](const Bits& b) { return rowmotion(box, b); }, bound);
  DivisibilityCheck rep;
  rep.k = k;
  rep.n = n;
  rep.set_size = o.total;
  rep.orbit_multiset = o.multiset();
  std::uint64_t period = static_cast<std::uint64_t>(k) + static_cast<std::uint64_t>(n) + 1;
  for (std::uint64_t l = 1; l < period; ++l) {
    if (period % l != 0) continue;
    std::uint64_t d = period / l;
    if (n % d == 0 || (n + 1) % d == 0) continue;
    DivisibilityCheck::Constraint c;
    c.length = l;
    c.divisor = d;
    auto it = rep.orbit_multiset.find(l);
    c.found = it == rep.orbit_multiset.end() ? 0 : it->second;
    c.ok = c.found == 0;
    if (!c.ok) rep.pass = false;
    rep.constraints.push_back(c);
  }
  return rep;
}

// Every rowmotion orbit of J(([n] x [n])/S_2 x [2]) must be free of length
// 2n+1.
struct StaircaseOrbitCheck {
  int n = 0;
  std::uint64_t set_size = 0;
  std::uint64_t expected_length = 0;
  std::map<std::uint64_t, std::uint64_t> orbit_multiset;
  bool pass = true;
};

inline StaircaseOrbitCheck check_free_orbits_staircase(int n,
                                                       std::uint64_t bound = kDefaultIdealBound) {
  if (n < 1) throw DomainError("staircase size must be positive");
  Poset p = product(shifted_staircase(n), chain(2));
  OrbitStructure o = orbit_structure(p, [&](const Bits& b) { return rowmotion(p, b); }, bound);
  StaircaseOrbitCheck rep;
  rep.n = n;
  rep.set_size = o.total;
  rep.expected_length = 2 * static_cast<std::uint64_t>(n) + 1;
  rep.orbit_multiset = o.multiset();
  for (const auto& [len, count] : rep.orbit_multiset)
    if (len != rep.expected_length) rep.pass = false;
  return rep;
}

}  // namespace minuscule
