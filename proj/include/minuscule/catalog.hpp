#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "minuscule/coxeter.hpp"
#include "minuscule/errors.hpp"
#include "minuscule/heap.hpp"
#include "minuscule/poset.hpp"

namespace minuscule {

// [a] x [b].
inline Poset rectangle(int a, int b) {
  if (a < 1 || b < 1) throw DomainError("rectangle sides must be positive");
  return product(chain(a), chain(b));
}

// ([n] x [n]) / S_2, realized as the pairs (i, j) with i <= j ordered
// componentwise.
inline Poset shifted_staircase(int n) {
  if (n < 1) throw DomainError("staircase size must be positive");
  std::vector<std::pair<int, int>> elems;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i <= j; ++i) elems.emplace_back(i, j);
  auto index = [&](int i, int j) {
    for (int t = 0; t < static_cast<int>(elems.size()); ++t)
      if (elems[static_cast<std::size_t>(t)] == std::pair{i, j}) return t;
    return -1;
  };
  std::vector<std::pair<int, int>> cov;
  for (int t = 0; t < static_cast<int>(elems.size()); ++t) {
    auto [i, j] = elems[static_cast<std::size_t>(t)];
    if (j + 1 < n) cov.emplace_back(t, index(i, j + 1));
    if (i + 1 <= j) cov.emplace_back(t, index(i + 1, j));
  }
  return Poset::from_covers(static_cast<int>(elems.size()), cov);
}

// J^{n-3}([2] x [2]), the D_n family.
inline Poset propeller(int n) {
  if (n < 3) throw DomainError("propeller index must be at least 3");
  Poset p = rectangle(2, 2);
  for (int i = 0; i < n - 3; ++i) p = ideal_lattice(p);
  return p;
}

enum class Exceptional { E6, E7 };

// J^2([2] x [3]) and J^3([2] x [3]).
inline Poset exceptional(Exceptional which) {
  Poset p = rectangle(2, 3);
  int iterations = which == Exceptional::E6 ? 2 : 3;
  for (int i = 0; i < iterations; ++i) p = ideal_lattice(p);
  return p;
}

enum class Family { Rectangle, Staircase, Propeller, E6, E7 };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::Rectangle:
      return "rectangle";
    case Family::Staircase:
      return "staircase";
    case Family::Propeller:
      return "propeller";
    case Family::E6:
      return "E6";
    case Family::E7:
      return "E7";
  }
  return {};
}

// One minuscule weight (up to poset-equal duplicates), carrying both the
// direct construction and the heap route with the isomorphism between them.
struct MinusculeEntry {
  std::string name;  // e.g. "A4:2"
  Family family = Family::Rectangle;
  RootSystem rs;
  int weight = 0;            // representative weight index
  std::vector<int> weights;  // every weight yielding this poset
  Poset poset;               // direct construction
  ParabolicQuotient quotient;
  LabeledHeap heap;
  std::vector<int> heap_iso;  // poset element -> heap element
};

namespace detail {

inline std::pair<Family, Poset> catalog_poset(const RootSystem& rs, int weight) {
  switch (rs.type()) {
    case RootType::A:
      return {Family::Rectangle, rectangle(weight, rs.rank() + 1 - weight)};
    case RootType::B:
      return {Family::Staircase, shifted_staircase(rs.rank())};
    case RootType::C:
      return {Family::Rectangle, rectangle(1, 2 * rs.rank() - 1)};
    case RootType::D:
      if (weight == rs.rank()) return {Family::Propeller, propeller(rs.rank())};
      return {Family::Staircase, shifted_staircase(rs.rank() - 1)};
    case RootType::E:
      if (rs.rank() == 6) return {Family::E6, exceptional(Exceptional::E6)};
      return {Family::E7, exceptional(Exceptional::E7)};
  }
  throw DomainError("unreachable");
}

}  // namespace detail

inline MinusculeEntry catalog_entry(const RootSystem& rs, int weight) {
  if (!is_minuscule_weight(rs, weight))
    throw NotMinusculeError("weight " + std::to_string(weight) + " of " + rs.name() +
                            " is not minuscule");
  auto [family, poset] = detail::catalog_poset(rs, weight);
  std::vector<int> J;
  for (int j = 1; j <= rs.rank(); ++j)
    if (j != weight) J.push_back(j);

  MinusculeEntry e{.name = rs.name() + ":" + std::to_string(weight),
                   .family = family,
                   .rs = rs,
                   .weight = weight,
                   .weights = {weight},
                   .poset = std::move(poset),
                   .quotient = parabolic_quotient(rs, J),
                   .heap = {},
                   .heap_iso = {}};
  e.heap = heap_of(rs, reduced_word(rs, longest_rep(e.quotient)));
  auto iso = is_isomorphic(e.poset, e.heap.poset);
  if (!iso)
    throw Error("catalog construction does not match the heap for " + e.name);
  e.heap_iso = std::move(*iso);
  // The spin weights of D and both E6 weights share one poset.
  if (rs.type() == RootType::D && weight == 1) e.weights = {1, 2};
  if (rs.type() == RootType::E && rs.rank() == 6 && weight == 1) e.weights = {1, 6};
  return e;
}

inline MinusculeEntry catalog_entry(const std::string& name) {
  auto colon = name.find(':');
  RootSystem rs = root_system(name.substr(0, colon));
  int weight;
  if (colon != std::string::npos) {
    try {
      weight = std::stoi(name.substr(colon + 1));
    } catch (...) {
      throw DomainError("bad weight in catalog name: " + name);
    }
  } else {
    switch (rs.type()) {
      case RootType::B:
        weight = 1;
        break;
      case RootType::C:
        weight = rs.rank();
        break;
      case RootType::E:
        weight = rs.rank() == 6 ? 1 : 7;
        break;
      default:
        throw DomainError("catalog name needs an explicit weight: " + name);
    }
  }
  return catalog_entry(rs, weight);
}

// Every minuscule entry of rank <= max_rank, one per distinct poset:
// A_n all n weights; B_n weight 1; C_n weight n; D_n weights {1,2} (one
// staircase entry) and n (propeller); E6 weights {1,6} (one entry); E7
// weight 7.
inline std::vector<MinusculeEntry> all_entries(int max_rank) {
  if (max_rank < 1) throw DomainError("max_rank must be positive");
  std::vector<MinusculeEntry> out;
  for (int n = 1; n <= max_rank; ++n)
    for (int k = 1; k <= n; ++k) out.push_back(catalog_entry(RootSystem(RootType::A, n), k));
  for (int n = 2; n <= max_rank; ++n)
    out.push_back(catalog_entry(RootSystem(RootType::B, n), 1));
  for (int n = 2; n <= max_rank; ++n)
    out.push_back(catalog_entry(RootSystem(RootType::C, n), n));
  for (int n = 3; n <= max_rank; ++n) {
    out.push_back(catalog_entry(RootSystem(RootType::D, n), 1));
    out.push_back(catalog_entry(RootSystem(RootType::D, n), n));
  }
  if (max_rank >= 6) out.push_back(catalog_entry(RootSystem(RootType::E, 6), 1));
  if (max_rank >= 7) out.push_back(catalog_entry(RootSystem(RootType::E, 7), 7));
  return out;
}

}  // namespace minuscule
