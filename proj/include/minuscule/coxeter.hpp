#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "minuscule/bits.hpp"
#include "minuscule/errors.hpp"
#include "minuscule/poset.hpp"

namespace minuscule {

enum class RootType : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E' };

class WeylElement;

// Crystallographic root system data for the types that carry minuscule
// weights.  Simple roots follow the conventions
//   A_n: nodes 1..n a path;
//   B_n: alpha_1 short, double bond between nodes 1 and 2, then a path;
//   C_n: alpha_1 long, transposed B_n;
//   D_n: nodes 1 and 2 both attached to node 3, then a path 3..n;
//   E_6/E_7: node 2 attached to node 4 on the path 1-3-4-5-...-n.
// cartan[i][j] = <alpha_i, alpha_j^vee>, 0-indexed storage; generators are
// addressed 1-based throughout the public interface.
class RootSystem {
 public:
  RootSystem(RootType t, int rank) : type_(t), rank_(rank) {
    build_cartan();
    build_generators();
    build_positive_roots();
  }

  RootType type() const { return type_; }
  int rank() const { return rank_; }
  std::string name() const { return std::string(1, static_cast<char>(type_)) + std::to_string(rank_); }

  int cartan(int i, int j) const {  // 1-based
    return cartan_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
  }
  bool commutes(int i, int j) const { return i != j && cartan(i, j) == 0; }

  // Order of s_i s_j read off the Cartan matrix (2, 3 or 4 for these types).
  int coxeter_m(int i, int j) const {
    if (i == j) return 1;
    switch (cartan(i, j) * cartan(j, i)) {
      case 0:
        return 2;
      case 1:
        return 3;
      case 2:
        return 4;
      default:
        throw DomainError("bond order outside the crystallographic range");
    }
  }

  const std::vector<std::vector<int>>& positive_roots() const { return positive_roots_; }
  const WeylElement& simple_reflection(int i) const;  // 1-based

 private:
  void build_cartan() {
    auto admissible = [&] {
      switch (type_) {
        case RootType::A:
          return rank_ >= 1;
        case RootType::B:
        case RootType::C:
          return rank_ >= 2;
        case RootType::D:
          return rank_ >= 3;
        case RootType::E:
          return rank_ == 6 || rank_ == 7;
      }
      return false;
    };
    if (!admissible())
      throw DomainError("inadmissible root system " + std::string(1, static_cast<char>(type_)) +
                        std::to_string(rank_));
    std::size_t n = static_cast<std::size_t>(rank_);
    cartan_.assign(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) cartan_[i][i] = 2;
    auto bond = [&](int i, int j, int cij, int cji) {  // 1-based
      cartan_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = cij;
      cartan_[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] = cji;
    };
    switch (type_) {
      case RootType::A:
        for (int i = 1; i < rank_; ++i) bond(i, i + 1, -1, -1);
        break;
      case RootType::B:
        bond(1, 2, -1, -2);
        for (int i = 2; i < rank_; ++i) bond(i, i + 1, -1, -1);
        break;
      case RootType::C:
        bond(1, 2, -2, -1);
        for (int i = 2; i < rank_; ++i) bond(i, i + 1, -1, -1);
        break;
      case RootType::D:
        bond(1, 3, -1, -1);
        bond(2, 3, -1, -1);
        for (int i = 3; i < rank_; ++i) bond(i, i + 1, -1, -1);
        break;
      case RootType::E:
        bond(1, 3, -1, -1);
        bond(2, 4, -1, -1);
        for (int i = 3; i < rank_; ++i) bond(i, i + 1, -1, -1);
        break;
    }
  }

  void build_generators();
  void build_positive_roots();

  RootType type_;
  int rank_;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<int>> positive_roots_;
  std::vector<WeylElement> generators_;

  friend const std::vector<WeylElement>& detail_generators(const RootSystem& rs);
};

inline RootSystem root_system(RootType t, int rank) { return RootSystem(t, rank); }

// Parses "A4", "E7", ...
inline RootSystem root_system(const std::string& s) {
  if (s.size() < 2) throw DomainError("bad root system name: " + s);
  char t = s[0];
  if (t != 'A' && t != 'B' && t != 'C' && t != 'D' && t != 'E')
    throw DomainError("bad root system type: " + s);
  int rank = 0;
  try {
    rank = std::stoi(s.substr(1));
  } catch (...) {
    throw DomainError("bad root system rank: " + s);
  }
  return RootSystem(static_cast<RootType>(t), rank);
}

// Integer matrix acting on simple-root coordinates; column j holds the
// coordinates of the image of alpha_{j+1}.
class WeylElement {
 public:
  WeylElement() = default;
  explicit WeylElement(int n) : n_(n), m_(static_cast<std::size_t>(n) * n, 0) {
    for (int i = 0; i < n; ++i) m_[static_cast<std::size_t>(i) * n + i] = 1;
  }
  static WeylElement identity(int n) { return WeylElement(n); }

  int rank() const { return n_; }
  int at(int r, int c) const { return m_[static_cast<std::size_t>(r) * n_ + c]; }
  int& at(int r, int c) { return m_[static_cast<std::size_t>(r) * n_ + c]; }

  bool is_identity() const { return *this == WeylElement(n_); }

  friend WeylElement operator*(const WeylElement& a, const WeylElement& b) {
    int n = a.n_;
    WeylElement r(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        long long s = 0;
        for (int k = 0; k < n; ++k)
          s += static_cast<long long>(a.at(i, k)) * b.at(k, j);
        r.at(i, j) = static_cast<int>(s);
      }
    return r;
  }

  std::vector<int> apply(const std::vector<int>& v) const {
    std::vector<int> out(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i) {
      long long s = 0;
      for (int k = 0; k < n_; ++k) s += static_cast<long long>(at(i, k)) * v[static_cast<std::size_t>(k)];
      out[static_cast<std::size_t>(i)] = static_cast<int>(s);
    }
    return out;
  }

  bool operator==(const WeylElement&) const = default;
  bool operator<(const WeylElement& o) const { return m_ < o.m_; }

  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(n_);
    for (int v : m_) {
      h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(v)) + 0x9e3779b97f4a7c15ull +
           (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }

 private:
  int n_ = 0;
  std::vector<int> m_;
};

struct WeylHash {
  std::size_t operator()(const WeylElement& w) const { return w.hash(); }
};

inline void RootSystem::build_generators() {
  generators_.clear();
  for (int i = 1; i <= rank_; ++i) {
    // s_i(alpha_j) = alpha_j - cartan[j][i] alpha_i
    WeylElement s(rank_);
    for (int j = 1; j <= rank_; ++j) s.at(i - 1, j - 1) -= cartan(j, i);
    generators_.push_back(std::move(s));
  }
}

inline void RootSystem::build_positive_roots() {
  std::set<std::vector<int>> roots;
  std::vector<std::vector<int>> frontier;
  for (int i = 0; i < rank_; ++i) {
    std::vector<int> e(static_cast<std::size_t>(rank_), 0);
    e[static_cast<std::size_t>(i)] = 1;
    roots.insert(e);
    frontier.push_back(std::move(e));
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& v : frontier)
      for (const auto& s : generators_) {
        auto w = s.apply(v);
        if (std::all_of(w.begin(), w.end(), [](int x) { return x >= 0; }) && roots.insert(w).second)
          next.push_back(std::move(w));
      }
    frontier = std::move(next);
  }
  positive_roots_.assign(roots.begin(), roots.end());
}

inline const WeylElement& RootSystem::simple_reflection(int i) const {
  if (i < 1 || i > rank_) throw IndexError("generator index out of range");
  return generators_[static_cast<std::size_t>(i - 1)];
}

inline WeylElement generator(const RootSystem& rs, int i) { return rs.simple_reflection(i); }

namespace detail {
inline bool negative_vec(const std::vector<int>& v) {
  bool nonzero = false;
  for (int x : v) {
    if (x > 0) return false;
    if (x < 0) nonzero = true;
  }
  return nonzero;
}
}  // namespace detail

// Number of positive roots sent negative; equals the minimum word length.
inline int length(const RootSystem& rs, const WeylElement& w) {
  int l = 0;
  for (const auto& beta : rs.positive_roots())
    if (detail::negative_vec(w.apply(beta))) ++l;
  return l;
}

// l(w s_j) < l(w) iff w(alpha_j) < 0, i.e. column j of w is negative.
inline bool is_right_descent(const WeylElement& w, int j) {
  bool nonzero = false;
  for (int r = 0; r < w.rank(); ++r) {
    int x = w.at(r, j - 1);
    if (x > 0) return false;
    if (x < 0) nonzero = true;
  }
  return nonzero;
}

// Generators k with l(s_k w) < l(w): the positive roots sent to negatives of
// simple roots, found in one scan.
inline std::vector<int> left_descents(const RootSystem& rs, const WeylElement& w) {
  std::vector<int> out;
  for (const auto& beta : rs.positive_roots()) {
    auto v = w.apply(beta);
    if (!detail::negative_vec(v)) continue;
    int k = -1;
    bool simple = true;
    for (int i = 0; i < rs.rank() && simple; ++i) {
      if (v[static_cast<std::size_t>(i)] == -1 && k < 0)
        k = i + 1;
      else if (v[static_cast<std::size_t>(i)] != 0)
        simple = false;
    }
    if (simple && k > 0) out.push_back(k);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// A reduced word for w (1-based letters, leftmost factor first), choosing the
// smallest left descent at every step.
inline std::vector<int> reduced_word(const RootSystem& rs, WeylElement w) {
  std::vector<int> word;
  while (!w.is_identity()) {
    auto ds = left_descents(rs, w);
    if (ds.empty()) throw Error("non-identity element without descents");
    word.push_back(ds.front());
    w = rs.simple_reflection(ds.front()) * w;
  }
  return word;
}

inline WeylElement product_of_word(const RootSystem& rs, const std::vector<int>& word) {
  WeylElement w = WeylElement::identity(rs.rank());
  for (int k : word) w = w * rs.simple_reflection(k);
  return w;
}

namespace detail {

// Strict below-closure of the word-position poset: position q lies below
// position p whenever p < q (p earlier) and the letters are equal or do not
// commute, extended transitively.  Earlier letters are higher.
inline std::vector<Bits> word_heap_below(const RootSystem& rs, const std::vector<int>& word) {
  std::size_t l = word.size();
  std::vector<Bits> below(l, Bits(l));
  for (std::size_t b = l; b-- > 0;) {
    for (std::size_t a = b + 1; a < l; ++a) {
      if (word[b] == word[a] || !rs.commutes(word[b], word[a])) {
        below[b].set(a);
        below[b] |= below[a];
      }
    }
  }
  return below;
}

// Stembridge's criterion on the heap of one reduced word: the element is
// fully commutative iff the heap has no convex alternating chain of length
// m(a,b) for a bond of order 3 or 4.  Sound and complete for reduced words.
inline bool heap_fully_commutative(const RootSystem& rs, const std::vector<int>& word) {
  std::size_t l = word.size();
  auto below = word_heap_below(rs, word);
  std::vector<Bits> above(l, Bits(l));
  for (std::size_t x = 0; x < l; ++x)
    below[x].for_each([&](std::size_t y) { above[y].set(x); });

  auto open_interval = [&](std::size_t lo, std::size_t hi) {  // heap order: lo < hi
    Bits iv = above[lo];
    iv &= below[hi];
    return iv;
  };

  // Label classes as chains, ascending heap order = descending position.
  std::vector<std::vector<std::size_t>> cls(static_cast<std::size_t>(rs.rank()) + 1);
  for (std::size_t pos = l; pos-- > 0;) cls[static_cast<std::size_t>(word[pos])].push_back(pos);

  for (int a = 1; a <= rs.rank(); ++a) {
    const auto& ca = cls[static_cast<std::size_t>(a)];
    // Consecutive same-label pairs with a single intermediate of bond order 3.
    for (std::size_t i = 0; i + 1 < ca.size(); ++i) {
      Bits iv = open_interval(ca[i], ca[i + 1]);
      if (iv.count() == 1) {
        std::size_t z = static_cast<std::size_t>(iv.to_indices().front());
        if (rs.coxeter_m(a, word[z]) == 3) return false;
      }
    }
    // Alternating windows of four in the merged {a,b} chain for m(a,b) = 4.
    for (int b = a + 1; b <= rs.rank(); ++b) {
      if (rs.coxeter_m(a, b) != 4) continue;
      std::vector<std::size_t> merged;
      for (std::size_t pos = l; pos-- > 0;)
        if (word[pos] == a || word[pos] == b) merged.push_back(pos);
      for (std::size_t i = 0; i + 3 < merged.size(); ++i) {
        if (word[merged[i]] == word[merged[i + 1]] || word[merged[i + 1]] == word[merged[i + 2]] ||
            word[merged[i + 2]] == word[merged[i + 3]])
          continue;
        Bits iv = open_interval(merged[i], merged[i + 3]);
        if (iv.count() == 2) return false;
      }
    }
  }
  return true;
}

}  // namespace detail

// True iff every reduced word of w is reachable from every other using
// commutations only.
inline bool is_fully_commutative(const RootSystem& rs, const WeylElement& w) {
  return detail::heap_fully_commutative(rs, reduced_word(rs, w));
}

// Minimum-length coset representatives of W / W_J with the left weak order.
struct ParabolicQuotient {
  std::vector<int> J;              // 1-based generator indices of the subgroup
  std::vector<WeylElement> reps;   // sorted by (length, matrix); reps[0] = id
  std::vector<int> lengths;        // lengths[i] = l(reps[i])
  Poset weak_order;                // covers (u, s_k u) with both sides reps
};

inline ParabolicQuotient parabolic_quotient(const RootSystem& rs, std::vector<int> J,
                                            std::uint64_t bound = 1'000'000) {
  std::sort(J.begin(), J.end());
  for (std::size_t i = 0; i < J.size(); ++i) {
    if (J[i] < 1 || J[i] > rs.rank()) throw IndexError("subgroup generator out of range");
    if (i > 0 && J[i] == J[i - 1]) throw DomainError("duplicate subgroup generator");
  }
  auto in_quotient = [&](const WeylElement& w) {
    for (int j : J)
      if (is_right_descent(w, j)) return false;
    return true;
  };

  std::vector<std::vector<WeylElement>> levels{{WeylElement::identity(rs.rank())}};
  std::unordered_set<WeylElement, WeylHash> seen{levels[0][0]};
  while (!levels.back().empty()) {
    std::vector<WeylElement> next;
    int len = static_cast<int>(levels.size()) - 1;
    for (const auto& w : levels.back())
      for (int k = 1; k <= rs.rank(); ++k) {
        WeylElement c = rs.simple_reflection(k) * w;
        if (seen.count(c)) continue;
        if (length(rs, c) != len + 1 || !in_quotient(c)) continue;
        seen.insert(c);
        next.push_back(std::move(c));
        if (seen.size() > bound) throw CapacityError("parabolic quotient exceeds bound");
      }
    std::sort(next.begin(), next.end());
    if (next.empty()) break;
    levels.push_back(std::move(next));
  }

  ParabolicQuotient pq;
  pq.J = std::move(J);
  std::unordered_map<WeylElement, int, WeylHash> index;
  for (std::size_t len = 0; len < levels.size(); ++len)
    for (auto& w : levels[len]) {
      index.emplace(w, static_cast<int>(pq.reps.size()));
      pq.reps.push_back(std::move(w));
      pq.lengths.push_back(static_cast<int>(len));
    }
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < static_cast<int>(pq.reps.size()); ++i)
    for (int k = 1; k <= rs.rank(); ++k) {
      WeylElement c = rs.simple_reflection(k) * pq.reps[static_cast<std::size_t>(i)];
      auto it = index.find(c);
      if (it != index.end() && pq.lengths[static_cast<std::size_t>(it->second)] ==
                                   pq.lengths[static_cast<std::size_t>(i)] + 1)
        covers.emplace_back(i, it->second);
    }
  pq.weak_order = Poset::from_covers(static_cast<int>(pq.reps.size()), covers);
  return pq;
}

// The unique maximum-length representative w_0^J.
inline const WeylElement& longest_rep(const ParabolicQuotient& pq) {
  if (pq.reps.empty()) throw DomainError("empty quotient");
  int maxlen = pq.lengths.back();
  std::size_t count = 0, where = 0;
  for (std::size_t i = 0; i < pq.lengths.size(); ++i)
    if (pq.lengths[i] == maxlen) {
      ++count;
      where = i;
    }
  if (count != 1) throw NonUniqueError("maximum length attained more than once");
  return pq.reps[where];
}

// Minimum-length representative of x W_J: strip right descents in J.
inline WeylElement coset_canonicalize(const RootSystem& rs, const std::vector<int>& J,
                                      WeylElement x) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int j : J)
      if (is_right_descent(x, j)) {
        x = x * rs.simple_reflection(j);
        changed = true;
      }
  }
  return x;
}

inline WeylElement coset_canonicalize(const RootSystem& rs, const ParabolicQuotient& pq,
                                      const WeylElement& x) {
  return coset_canonicalize(rs, pq.J, x);
}

// c = s_{i_1} s_{i_2} ... s_{i_n} for an ordering of all generators.
inline WeylElement coxeter_element(const RootSystem& rs, const std::vector<int>& ordering) {
  if (static_cast<int>(ordering.size()) != rs.rank())
    throw DomainError("ordering must list every generator exactly once");
  std::vector<bool> seen(static_cast<std::size_t>(rs.rank()) + 1, false);
  for (int k : ordering) {
    if (k < 1 || k > rs.rank() || seen[static_cast<std::size_t>(k)])
      throw DomainError("ordering must be a permutation of 1..rank");
    seen[static_cast<std::size_t>(k)] = true;
  }
  WeylElement c = WeylElement::identity(rs.rank());
  for (int k : ordering) c = c * rs.simple_reflection(k);
  return c;
}

}  // namespace minuscule
