#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "minuscule/bits.hpp"
#include "minuscule/errors.hpp"

namespace minuscule {

// Default cap on |J(P)| for the enumeration-backed operations.  Covers the
// 4x4x4 box (232,848 ideals) with ample headroom.
inline constexpr std::uint64_t kDefaultIdealBound = 10'000'000;

struct RankFunction {
  std::vector<int> rank;
  int max_rank = 0;

  std::vector<int> level(int r) const {
    std::vector<int> out;
    for (int x = 0; x < static_cast<int>(rank.size()); ++x)
      if (rank[x] == r) out.push_back(x);
    return out;
  }
};

// Finite poset over elements 0..n-1, stored as an irredundant cover set plus
// closure bitsets for O(1) comparisons.  Immutable after construction.
class Poset {
 public:
  Poset() = default;

  // Builds from an arbitrary strict relation set: the input is transitively
  // closed, checked for cycles, and reduced to covers.
  static Poset from_covers(int n, const std::vector<std::pair<int, int>>& relations,
                           std::vector<std::string> labels = {}) {
    if (n < 0) throw DomainError("poset size must be nonnegative");
    Poset p;
    p.n_ = n;
    std::vector<std::vector<int>> up(n);
    for (auto [a, b] : relations) {
      if (a < 0 || a >= n || b < 0 || b >= n)
        throw IndexError("relation references element outside 0.." + std::to_string(n - 1));
      if (a == b) throw CycleError("reflexive relation " + std::to_string(a));
      up[a].push_back(b);
    }

    // Strict up-closures by DFS; grey nodes on the stack flag cycles.
    p.above_.assign(n, Bits(n));
    std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
    std::vector<int> stack;
    for (int root = 0; root < n; ++root) {
      if (state[root] == 2) continue;
      stack.push_back(root);
      while (!stack.empty()) {
        int x = stack.back();
        if (state[x] == 0) {
          state[x] = 1;
          for (int y : up[x]) {
            if (state[y] == 1) throw CycleError("relation closure contains a cycle");
            if (state[y] == 0) stack.push_back(y);
          }
        } else {
          stack.pop_back();
          if (state[x] == 2) continue;
          state[x] = 2;
          for (int y : up[x]) {
            p.above_[x].set(static_cast<std::size_t>(y));
            p.above_[x] |= p.above_[y];
          }
        }
      }
    }
    p.below_.assign(n, Bits(n));
    for (int x = 0; x < n; ++x)
      p.above_[x].for_each([&](std::size_t y) { p.below_[y].set(static_cast<std::size_t>(x)); });

    // Covers: pairs not implied through an intermediate element.
    p.lower_cov_.assign(n, Bits(n));
    p.upper_cov_.assign(n, Bits(n));
    for (int x = 0; x < n; ++x) {
      p.above_[x].for_each([&](std::size_t yy) {
        int y = static_cast<int>(yy);
        if (!p.above_[x].intersects(p.below_[y])) {
          p.covers_.emplace_back(x, y);
          p.upper_cov_[x].set(yy);
          p.lower_cov_[y].set(static_cast<std::size_t>(x));
        }
      });
    }
    std::sort(p.covers_.begin(), p.covers_.end());

    if (!labels.empty()) {
      if (static_cast<int>(labels.size()) != n)
        throw DomainError("label vector size must equal element count");
      p.labels_ = std::move(labels);
    }
    return p;
  }

  int size() const { return n_; }
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }

  bool less(int a, int b) const { return above_[a].test(static_cast<std::size_t>(b)); }
  bool leq(int a, int b) const { return a == b || less(a, b); }

  // Strictly above/below x.
  const Bits& up_set(int x) const { return above_[x]; }
  const Bits& down_set(int x) const { return below_[x]; }
  const Bits& upper_covers(int x) const { return upper_cov_[x]; }
  const Bits& lower_covers(int x) const { return lower_cov_[x]; }

  bool has_labels() const { return !labels_.empty(); }
  std::string label(int x) const { return labels_.empty() ? std::string{} : labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }
  Poset with_labels(std::vector<std::string> labels) const {
    Poset p = *this;
    if (static_cast<int>(labels.size()) != n_)
      throw DomainError("label vector size must equal element count");
    p.labels_ = std::move(labels);
    return p;
  }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> covers_;
  std::vector<Bits> above_, below_;          // strict closures
  std::vector<Bits> lower_cov_, upper_cov_;  // Hasse neighbours
  std::vector<std::string> labels_;
};

inline Poset chain(int m) {
  if (m < 1) throw DomainError("chain length must be positive");
  std::vector<std::pair<int, int>> cov;
  for (int i = 0; i + 1 < m; ++i) cov.emplace_back(i, i + 1);
  return Poset::from_covers(m, cov);
}

inline Poset antichain(int m) {
  if (m < 1) throw DomainError("antichain size must be positive");
  return Poset::from_covers(m, {});
}

// Element (p, q) is index p*|Q| + q; (p,q) <= (p',q') iff p <= p' and q <= q'.
inline Poset product(const Poset& p, const Poset& q) {
  int np = p.size(), nq = q.size();
  std::vector<std::pair<int, int>> cov;
  for (int a = 0; a < np; ++a)
    for (int b = 0; b < nq; ++b) {
      p.upper_covers(a).for_each([&](std::size_t a2) {
        cov.emplace_back(a * nq + b, static_cast<int>(a2) * nq + b);
      });
      q.upper_covers(b).for_each(
          [&](std::size_t b2) { cov.emplace_back(a * nq + b, a * nq + static_cast<int>(b2)); });
    }
  return Poset::from_covers(np * nq, cov);
}

// Smallest-available-index total order compatible with the poset.
inline std::vector<int> linear_extension(const Poset& p) {
  int n = p.size();
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n));
  Bits placed(static_cast<std::size_t>(n));
  std::vector<bool> done(static_cast<std::size_t>(n), false);
  for (int step = 0; step < n; ++step) {
    for (int x = 0; x < n; ++x) {
      if (!done[static_cast<std::size_t>(x)] && p.lower_covers(x).is_subset_of(placed)) {
        out.push_back(x);
        placed.set(static_cast<std::size_t>(x));
        done[static_cast<std::size_t>(x)] = true;
        break;
      }
    }
  }
  return out;
}

// Rank function with minimal elements at 0 and covers increasing rank by one,
// when such a function exists.
inline std::optional<RankFunction> rank_function(const Poset& p) {
  int n = p.size();
  RankFunction rf;
  rf.rank.assign(static_cast<std::size_t>(n), -1);
  for (int x : linear_extension(p)) {
    int r = 0;
    bool first = true, ok = true;
    p.lower_covers(x).for_each([&](std::size_t y) {
      int ry = rf.rank[y] + 1;
      if (first) {
        r = ry;
        first = false;
      } else if (ry != r) {
        ok = false;
      }
    });
    if (!ok) return std::nullopt;
    rf.rank[static_cast<std::size_t>(x)] = r;
    rf.max_rank = std::max(rf.max_rank, r);
  }
  return rf;
}

inline bool is_ideal(const Poset& p, const Bits& s) {
  for (int x = 0; x < p.size(); ++x)
    if (s.test(static_cast<std::size_t>(x)) && !p.lower_covers(x).is_subset_of(s)) return false;
  return true;
}

// Visits every order ideal exactly once (enumeration order, not canonical).
// The include branch is legal exactly when the lower covers are already in,
// so every leaf of the include/exclude tree is an ideal and none repeats.
template <class F>
void for_each_ideal(const Poset& p, std::uint64_t bound, F&& visit) {
  int n = p.size();
  std::vector<int> order = linear_extension(p);
  Bits cur(static_cast<std::size_t>(n));
  std::uint64_t seen = 0;
  struct Frame {
    int depth;
    int phase;  // 0 exclude branch, 1 include branch, 2 unwind
  };
  std::vector<Frame> st;
  st.push_back({0, 0});
  while (!st.empty()) {
    Frame& f = st.back();
    if (f.depth == n) {
      if (seen >= bound)
        throw CapacityError("ideal count exceeds enumeration bound " + std::to_string(bound));
      ++seen;
      visit(const_cast<const Bits&>(cur));
      st.pop_back();
      continue;
    }
    int x = order[static_cast<std::size_t>(f.depth)];
    if (f.phase == 0) {
      f.phase = 1;
      st.push_back({f.depth + 1, 0});
    } else if (f.phase == 1) {
      f.phase = 2;
      if (p.lower_covers(x).is_subset_of(cur)) {
        cur.set(static_cast<std::size_t>(x));
        st.push_back({f.depth + 1, 0});
      }
    } else {
      if (cur.test(static_cast<std::size_t>(x))) cur.reset(static_cast<std::size_t>(x));
      st.pop_back();
    }
  }
}

// All order ideals, in canonical (numeric-bitstring) order.
inline std::vector<Bits> ideals(const Poset& p, std::uint64_t bound = kDefaultIdealBound) {
  std::vector<Bits> out;
  for_each_ideal(p, bound, [&](const Bits& b) { out.push_back(b); });
  std::sort(out.begin(), out.end());
  return out;
}

inline std::uint64_t ideal_count(const Poset& p, std::uint64_t bound = kDefaultIdealBound) {
  std::uint64_t c = 0;
  for_each_ideal(p, bound, [&](const Bits&) { ++c; });
  return c;
}

// J(P) ordered by inclusion, materialized as a poset (covers are the
// single-element extensions).  Iterate for the J^k constructions.
inline Poset ideal_lattice(const Poset& p, std::uint64_t bound = kDefaultIdealBound) {
  std::vector<Bits> ids = ideals(p, bound);
  std::unordered_map<Bits, int, BitsHash> index;
  index.reserve(ids.size() * 2);
  for (int i = 0; i < static_cast<int>(ids.size()); ++i) index.emplace(ids[static_cast<std::size_t>(i)], i);
  std::vector<std::pair<int, int>> cov;
  for (int i = 0; i < static_cast<int>(ids.size()); ++i) {
    const Bits& ideal = ids[static_cast<std::size_t>(i)];
    for (int x = 0; x < p.size(); ++x) {
      if (!ideal.test(static_cast<std::size_t>(x)) && p.lower_covers(x).is_subset_of(ideal)) {
        Bits next = ideal;
        next.set(static_cast<std::size_t>(x));
        cov.emplace_back(i, index.at(next));
      }
    }
  }
  return Poset::from_covers(static_cast<int>(ids.size()), cov);
}

namespace detail {

// Iterated degree/level refinement; returns stable colors, or nullopt when
// the color histograms of p and q separate.
inline std::optional<std::pair<std::vector<int>, std::vector<int>>> refine_colors(
    const Poset& p, const Poset& q, const std::vector<int>& pc0, const std::vector<int>& qc0) {
  std::vector<int> pc = pc0, qc = qc0;
  int np = p.size(), nq = q.size();
  for (int round = 0; round < np + 2; ++round) {
    std::map<std::vector<int>, int> palette;
    auto signature = [&](const Poset& ps, const std::vector<int>& cs, int x) {
      std::vector<int> sig{cs[static_cast<std::size_t>(x)],
                           static_cast<int>(ps.down_set(x).count()),
                           static_cast<int>(ps.up_set(x).count()), -1};
      std::vector<int> lo, hi;
      ps.lower_covers(x).for_each([&](std::size_t y) { lo.push_back(cs[y]); });
      ps.upper_covers(x).for_each([&](std::size_t y) { hi.push_back(cs[y]); });
      std::sort(lo.begin(), lo.end());
      std::sort(hi.begin(), hi.end());
      sig.insert(sig.end(), lo.begin(), lo.end());
      sig.push_back(-2);
      sig.insert(sig.end(), hi.begin(), hi.end());
      return sig;
    };
    std::vector<int> npc(static_cast<std::size_t>(np)), nqc(static_cast<std::size_t>(nq));
    for (int x = 0; x < np; ++x) {
      auto sig = signature(p, pc, x);
      auto it = palette.emplace(std::move(sig), static_cast<int>(palette.size())).first;
      npc[static_cast<std::size_t>(x)] = it->second;
    }
    for (int x = 0; x < nq; ++x) {
      auto sig = signature(q, qc, x);
      auto it = palette.find(sig);
      if (it == palette.end()) return std::nullopt;
      nqc[static_cast<std::size_t>(x)] = it->second;
    }
    std::vector<int> ph = npc, qh = nqc;
    std::sort(ph.begin(), ph.end());
    std::sort(qh.begin(), qh.end());
    if (ph != qh) return std::nullopt;
    if (npc == pc && nqc == qc) break;
    pc = std::move(npc);
    qc = std::move(nqc);
  }
  return std::make_pair(pc, qc);
}

}  // namespace detail

// Cover-preserving bijection p -> q when one exists, respecting the optional
// vertex colors (used for label-preserving heap comparisons).
inline std::optional<std::vector<int>> is_isomorphic(const Poset& p, const Poset& q,
                                                     const std::vector<int>& pcolor,
                                                     const std::vector<int>& qcolor) {
  int n = p.size();
  if (n != q.size() || p.covers().size() != q.covers().size()) return std::nullopt;
  if (n == 0) return std::vector<int>{};
  auto refined = detail::refine_colors(p, q, pcolor, qcolor);
  if (!refined) return std::nullopt;
  auto& [pc, qc] = *refined;

  // Assign elements rarest color class first.
  std::vector<int> color_count(static_cast<std::size_t>(n) + 1, 0);
  for (int c : pc) color_count[static_cast<std::size_t>(c)]++;
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    auto ka = color_count[static_cast<std::size_t>(pc[static_cast<std::size_t>(a)])];
    auto kb = color_count[static_cast<std::size_t>(pc[static_cast<std::size_t>(b)])];
    return std::tie(ka, a) < std::tie(kb, b);
  });

  std::vector<int> map(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  auto consistent = [&](int x, int y) {
    if (pc[static_cast<std::size_t>(x)] != qc[static_cast<std::size_t>(y)]) return false;
    for (int z = 0; z < n; ++z) {
      int mz = map[static_cast<std::size_t>(z)];
      if (mz < 0) continue;
      if (p.upper_covers(z).test(static_cast<std::size_t>(x)) !=
          q.upper_covers(mz).test(static_cast<std::size_t>(y)))
        return false;
      if (p.upper_covers(x).test(static_cast<std::size_t>(z)) !=
          q.upper_covers(y).test(static_cast<std::size_t>(mz)))
        return false;
    }
    return true;
  };
  auto backtrack = [&](auto&& self, int k) -> bool {
    if (k == n) return true;
    int x = order[static_cast<std::size_t>(k)];
    for (int y = 0; y < n; ++y) {
      if (used[static_cast<std::size_t>(y)] || !consistent(x, y)) continue;
      map[static_cast<std::size_t>(x)] = y;
      used[static_cast<std::size_t>(y)] = true;
      if (self(self, k + 1)) return true;
      map[static_cast<std::size_t>(x)] = -1;
      used[static_cast<std::size_t>(y)] = false;
    }
    return false;
  };
  if (!backtrack(backtrack, 0)) return std::nullopt;
  return map;
}

inline std::optional<std::vector<int>> is_isomorphic(const Poset& p, const Poset& q) {
  return is_isomorphic(p, q, std::vector<int>(static_cast<std::size_t>(p.size()), 0),
                       std::vector<int>(static_cast<std::size_t>(q.size()), 0));
}

}  // namespace minuscule
