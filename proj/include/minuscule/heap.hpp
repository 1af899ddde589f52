#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "minuscule/coxeter.hpp"
#include "minuscule/errors.hpp"
#include "minuscule/poset.hpp"
#include "minuscule/toggle.hpp"

namespace minuscule {

// Heap of a fully commutative element.  Element j of the poset is position j
// of the source word (0-based); positions earlier in the word sit HIGHER, so
// the full ideal reads off the whole word.  phi multiplies the labels along
// an increasing linear extension with the first element as the rightmost
// factor; these two conventions must move together, and the round-trip tests
// fail immediately if either is flipped.
struct LabeledHeap {
  Poset poset;
  std::vector<int> label;        // 1-based generator index per element
  std::vector<int> source_word;  // the reduced word the heap was built from
  int rank = 0;                  // generator count of the ambient system

  // C_k in increasing heap order (empty when s_k does not occur).
  std::vector<int> label_class(int k) const {
    std::vector<int> out;
    for (std::size_t pos = source_word.size(); pos-- > 0;)
      if (source_word[pos] == k) out.push_back(static_cast<int>(pos));
    return out;
  }
};

inline LabeledHeap heap_of(const RootSystem& rs, const std::vector<int>& word) {
  for (int k : word)
    if (k < 1 || k > rs.rank()) throw IndexError("word letter out of range");
  WeylElement w = product_of_word(rs, word);
  if (length(rs, w) != static_cast<int>(word.size()))
    throw NotReducedError("word is not reduced");
  if (!detail::heap_fully_commutative(rs, word))
    throw NotFullyCommutativeError("element admits a braid move");

  std::size_t l = word.size();
  std::vector<std::pair<int, int>> rel;
  for (std::size_t p = 0; p < l; ++p)
    for (std::size_t q = p + 1; q < l; ++q)
      if (word[p] == word[q] || !rs.commutes(word[p], word[q]))
        rel.emplace_back(static_cast<int>(q), static_cast<int>(p));  // later position below

  LabeledHeap h;
  std::vector<std::string> names(l);
  for (std::size_t p = 0; p < l; ++p) names[p] = "s" + std::to_string(word[p]);
  h.poset = Poset::from_covers(static_cast<int>(l), rel, std::move(names));
  h.label = word;
  h.source_word = word;
  h.rank = rs.rank();
  return h;
}

inline bool is_minuscule_weight(const RootSystem& rs, int k) {
  if (k < 1 || k > rs.rank()) return false;
  switch (rs.type()) {
    case RootType::A:
      return true;
    case RootType::B:
      return k == 1;
    case RootType::C:
      return k == rs.rank();
    case RootType::D:
      return k == 1 || k == 2 || k == rs.rank();
    case RootType::E:
      return rs.rank() == 6 ? (k == 1 || k == 6) : k == 7;
  }
  return false;
}

// Heap of the longest element of the quotient missing node k.
inline LabeledHeap minuscule_heap(const RootSystem& rs, int k) {
  if (!is_minuscule_weight(rs, k))
    throw NotMinusculeError("weight " + std::to_string(k) + " of " + rs.name() +
                            " is not minuscule");
  std::vector<int> J;
  for (int j = 1; j <= rs.rank(); ++j)
    if (j != k) J.push_back(j);
  ParabolicQuotient pq = parabolic_quotient(rs, J);
  return heap_of(rs, reduced_word(rs, longest_rep(pq)));
}

// phi(I) = s_{i_t} ... s_{i_2} s_{i_1} along a linear extension of I.
inline WeylElement phi(const RootSystem& rs, const LabeledHeap& h, const Bits& ideal) {
  if (!is_ideal(h.poset, ideal)) throw DomainError("phi argument is not an order ideal");
  WeylElement w = WeylElement::identity(rs.rank());
  Bits placed(ideal.size());
  std::size_t todo = ideal.count();
  while (todo > 0) {
    for (int x = 0; x < h.poset.size(); ++x) {
      std::size_t xi = static_cast<std::size_t>(x);
      if (ideal.test(xi) && !placed.test(xi) && h.poset.lower_covers(x).is_subset_of(placed)) {
        w = rs.simple_reflection(h.label[xi]) * w;
        placed.set(xi);
        --todo;
      }
    }
  }
  return w;
}

// Inverse of phi: the lowest nu(k, x) elements of every label chain, where
// nu counts the letter k in any reduced word of x.
inline Bits phi_inverse(const RootSystem& rs, const LabeledHeap& h, const WeylElement& x) {
  std::vector<int> nu(static_cast<std::size_t>(rs.rank()) + 1, 0);
  for (int k : reduced_word(rs, x)) nu[static_cast<std::size_t>(k)]++;

  Bits ideal(static_cast<std::size_t>(h.poset.size()));
  for (int k = 1; k <= rs.rank(); ++k) {
    auto chain_k = h.label_class(k);
    if (nu[static_cast<std::size_t>(k)] > static_cast<int>(chain_k.size()))
      throw NotBelowError("element is not below the heap's element in weak order");
    for (int i = 0; i < nu[static_cast<std::size_t>(k)]; ++i)
      ideal.set(static_cast<std::size_t>(chain_k[static_cast<std::size_t>(i)]));
  }
  if (!is_ideal(h.poset, ideal) || !(phi(rs, h, ideal) == x))
    throw NotBelowError("element is not below the heap's element in weak order");
  return ideal;
}

// Toggles of the s_k-labeled elements; they commute, listed in increasing
// element order.
inline ToggleWord label_toggle(const LabeledHeap& h, int k) {
  ToggleWord w;
  for (int x = 0; x < static_cast<int>(h.label.size()); ++x)
    if (h.label[static_cast<std::size_t>(x)] == k) w.push_back(x);
  return w;
}

// t_{(i_1..i_n)}: toggles the s_{i_n}-labeled elements first, matching the
// Coxeter element c = s_{i_1} ... s_{i_n} acting by left translation.
inline ToggleWord coxeter_toggle_word(const LabeledHeap& h, const std::vector<int>& ordering) {
  if (static_cast<int>(ordering.size()) != h.rank)
    throw DomainError("ordering must list every generator exactly once");
  std::vector<bool> seen(static_cast<std::size_t>(h.rank) + 1, false);
  for (int k : ordering) {
    if (k < 1 || k > h.rank || seen[static_cast<std::size_t>(k)])
      throw DomainError("ordering must be a permutation of 1..rank");
    seen[static_cast<std::size_t>(k)] = true;
  }
  ToggleWord w;
  for (std::size_t i = ordering.size(); i-- > 0;) {
    ToggleWord part = label_toggle(h, ordering[i]);
    w.insert(w.end(), part.begin(), part.end());
  }
  return w;
}

// Ordering with the all-even-rank labels before the all-odd-rank ones, so the
// induced toggle composite equals t_even t_odd.
inline std::vector<int> bipartite_ordering(const LabeledHeap& h) {
  auto rf = rank_function(h.poset);
  if (!rf) throw NotRankedError("heap is not ranked");
  std::vector<int> evens, odds;
  for (int k = 1; k <= h.rank; ++k) {
    int parity = -1;
    for (int x : h.label_class(k)) {
      int p = rf->rank[static_cast<std::size_t>(x)] % 2;
      if (parity < 0)
        parity = p;
      else if (parity != p)
        throw MixedParityError("label class s" + std::to_string(k) + " meets both parities");
    }
    (parity == 1 ? odds : evens).push_back(k);  // empty classes count as even
  }
  std::vector<int> ordering = evens;
  ordering.insert(ordering.end(), odds.begin(), odds.end());
  return ordering;
}

struct EquivarianceReport {
  bool pass = true;
  std::uint64_t ideals_checked = 0;
  std::vector<int> ordering;
  // First mismatch, if any.
  std::optional<Bits> counterexample;

  explicit operator bool() const { return pass; }
};

// Checks phi(t_{(i_1..i_n)}(I)) = canonicalize(c phi(I)) over every ideal.
inline EquivarianceReport verify_equivariance(const RootSystem& rs, const LabeledHeap& h,
                                              const ParabolicQuotient& pq,
                                              const std::vector<int>& ordering,
                                              std::uint64_t bound = kDefaultIdealBound) {
  EquivarianceReport rep;
  rep.ordering = ordering;
  WeylElement c = coxeter_element(rs, ordering);
  ToggleWord word = coxeter_toggle_word(h, ordering);
  for (const Bits& ideal : ideals(h.poset, bound)) {
    ++rep.ideals_checked;
    WeylElement lhs = phi(rs, h, apply_word(h.poset, word, ideal));
    WeylElement rhs = coset_canonicalize(rs, pq.J, c * phi(rs, h, ideal));
    if (!(lhs == rhs)) {
      rep.pass = false;
      rep.counterexample = ideal;
      break;
    }
  }
  return rep;
}

}  // namespace minuscule
