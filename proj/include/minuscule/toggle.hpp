#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <unordered_map>
#include <vector>

#include "minuscule/bits.hpp"
#include "minuscule/errors.hpp"
#include "minuscule/poset.hpp"

namespace minuscule {

// Element indices of a poset, applied left to right by apply_word.
using ToggleWord = std::vector<int>;

// Adds or removes p when the result is still an ideal; an involution.
inline Bits toggle(const Poset& p, int x, Bits ideal) {
  if (x < 0 || x >= p.size()) throw IndexError("toggle element out of range");
  std::size_t i = static_cast<std::size_t>(x);
  if (ideal.test(i)) {
    if (!p.upper_covers(x).intersects(ideal)) ideal.reset(i);
  } else {
    if (p.lower_covers(x).is_subset_of(ideal)) ideal.set(i);
  }
  return ideal;
}

// The ideal generated downward by the minimal elements of the complement.
inline Bits rowmotion(const Poset& p, const Bits& ideal) {
  Bits out(static_cast<std::size_t>(p.size()));
  for (int x = 0; x < p.size(); ++x) {
    if (!ideal.test(static_cast<std::size_t>(x)) && p.lower_covers(x).is_subset_of(ideal)) {
      out |= p.down_set(x);
      out.set(static_cast<std::size_t>(x));
    }
  }
  return out;
}

inline Bits apply_word(const Poset& p, const ToggleWord& w, Bits ideal) {
  for (int x : w) ideal = toggle(p, x, ideal);
  return ideal;
}

// All rank-i elements, in increasing index order (they commute).
inline ToggleWord rank_toggle(const Poset& p, const RankFunction& rf, int level) {
  if (level < 0 || level > rf.max_rank) throw IndexError("rank level out of range");
  ToggleWord w;
  for (int x = 0; x < p.size(); ++x)
    if (rf.rank[static_cast<std::size_t>(x)] == level) w.push_back(x);
  return w;
}

inline ToggleWord rank_toggle(const Poset& p, int level) {
  auto rf = rank_function(p);
  if (!rf) throw NotRankedError("poset is not ranked");
  return rank_toggle(p, *rf, level);
}

// Odd-rank toggles first, then even-rank toggles, so the composite applied
// left to right acts as t_even after t_odd.
inline ToggleWord even_odd_word(const Poset& p, const RankFunction& rf) {
  ToggleWord w;
  for (int parity : {1, 0})
    for (int x = 0; x < p.size(); ++x)
      if (rf.rank[static_cast<std::size_t>(x)] % 2 == parity) w.push_back(x);
  return w;
}

inline ToggleWord even_odd_word(const Poset& p) {
  auto rf = rank_function(p);
  if (!rf) throw NotRankedError("poset is not ranked");
  return even_odd_word(p, *rf);
}

struct OrbitStructure {
  struct Orbit {
    Bits representative;  // canonically least ideal of the orbit
    std::uint64_t length = 0;
  };
  std::vector<Orbit> orbits;  // representatives in increasing canonical order
  std::uint64_t order = 1;    // lcm of the lengths
  std::uint64_t total = 0;    // = |J(P)|

  // Multiplicity per orbit length.
  std::map<std::uint64_t, std::uint64_t> multiset() const {
    std::map<std::uint64_t, std::uint64_t> m;
    for (const auto& o : orbits) m[o.length]++;
    return m;
  }
};

// Full orbit decomposition of a bijection on J(P).  Ideals are indexed in
// canonical order and visited in that order, so each representative is the
// least member of its orbit.
template <class Action>
OrbitStructure orbit_structure(const Poset& p, Action&& step,
                               std::uint64_t bound = kDefaultIdealBound) {
  std::vector<Bits> ids = ideals(p, bound);
  std::unordered_map<Bits, std::uint32_t, BitsHash> index;
  index.reserve(ids.size() * 2);
  for (std::uint32_t i = 0; i < ids.size(); ++i) index.emplace(ids[i], i);

  OrbitStructure out;
  out.total = ids.size();
  std::vector<bool> visited(ids.size(), false);
  for (std::uint32_t i = 0; i < ids.size(); ++i) {
    if (visited[i]) continue;
    std::uint64_t len = 0;
    Bits cur = ids[i];
    do {
      auto it = index.find(cur);
      if (it == index.end()) throw Error("action left the ideal set");
      visited[it->second] = true;
      ++len;
      cur = step(cur);
    } while (!(cur == ids[i]));
    out.orbits.push_back({ids[i], len});
    std::uint64_t g = std::gcd(out.order, len);
    std::uint64_t factor = len / g;
    if (out.order > UINT64_MAX / factor)
      throw CapacityError("orbit order overflows 64 bits");
    out.order *= factor;
  }
  return out;
}

// fix(d) = number of ideals fixed by the d-th power of the action,
// for d = 0 .. order-1 (d = 0 is the identity).
inline std::vector<std::uint64_t> fixed_point_counts(const OrbitStructure& o) {
  if (o.order > 10'000'000) throw CapacityError("orbit order too large to tabulate");
  std::vector<std::uint64_t> fix(static_cast<std::size_t>(o.order), 0);
  for (const auto& orb : o.orbits)
    for (std::uint64_t d = 0; d < o.order; d += orb.length) fix[static_cast<std::size_t>(d)] += orb.length;
  return fix;
}

// Sorted orbit lengths; equal cycle type is the observable for conjugacy.
inline std::vector<std::uint64_t> cycle_type(const OrbitStructure& o) {
  std::vector<std::uint64_t> t;
  t.reserve(o.orbits.size());
  for (const auto& orb : o.orbits) t.push_back(orb.length);
  std::sort(t.begin(), t.end());
  return t;
}

}  // namespace minuscule
