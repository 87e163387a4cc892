#pragma once

// Random generators and brute-force oracles shared by the tests. The oracles
// deliberately avoid the library's own algorithms.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "clusterscope/quiver.hpp"

namespace testing {

using clusterscope::Index;
using clusterscope::IceQuiver;

inline IceQuiver random_quiver(std::mt19937_64& rng, Index max_n, std::int64_t max_entry,
                               double frozen_rate = 0.25, double density = 0.6) {
  std::uniform_int_distribution<Index> size(1, max_n);
  std::uniform_int_distribution<std::int64_t> entry(1, max_entry);
  std::bernoulli_distribution coin(0.5), edge(density), frozen(frozen_rate);
  const Index n = size(rng);
  clusterscope::ArrowMatrix a = clusterscope::ArrowMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      if (edge(rng)) {
        a(i, j) = coin(rng) ? entry(rng) : -entry(rng);
        a(j, i) = -a(i, j);
      }
  std::vector<bool> f(static_cast<std::size_t>(n));
  for (auto&& x : f) x = frozen(rng);
  f[static_cast<std::size_t>(std::uniform_int_distribution<Index>(0, n - 1)(rng))] = false;
  return IceQuiver(a, f);
}

// Mutation by arrow bookkeeping: add a composite for every pair of arrows
// through k, reverse arrows at k, cancel 2-cycles.
inline std::vector<std::vector<std::int64_t>> oracle_mutate(const IceQuiver& q, Index k) {
  const auto n = static_cast<std::size_t>(q.size());
  const auto kk = static_cast<std::size_t>(k);
  std::vector<std::vector<std::int64_t>> arrows(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (q(Index(i), Index(j)) > 0) arrows[i][j] = q(Index(i), Index(j));
  auto next = arrows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != kk && j != kk && i != j) next[i][j] += arrows[i][kk] * arrows[kk][j];
  for (std::size_t i = 0; i < n; ++i) {
    next[i][kk] = arrows[kk][i];
    next[kk][i] = arrows[i][kk];
  }
  std::vector<std::vector<std::int64_t>> signed_counts(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) signed_counts[i][j] = next[i][j] - next[j][i];
  return signed_counts;
}

// Walk-based covering pairs: a->b lies on a bi-infinite path iff some walk
// of length n ends at a and some walk of length n starts at b, within the
// mutable part.
inline std::vector<std::pair<Index, Index>> oracle_covering_pairs(const IceQuiver& q) {
  const Index n = q.size();
  auto reach_len = [&](bool forward) {
    // ok[v]: a walk of the current length ends (forward) or starts at v.
    std::vector<bool> ok(static_cast<std::size_t>(n));
    for (Index v = 0; v < n; ++v) ok[static_cast<std::size_t>(v)] = q.is_mutable(v);
    for (Index step = 0; step < n; ++step) {
      std::vector<bool> nx(static_cast<std::size_t>(n), false);
      for (Index u = 0; u < n; ++u)
        for (Index v = 0; v < n; ++v) {
          if (!q.is_mutable(u) || !q.is_mutable(v)) continue;
          const bool arrow = forward ? q(u, v) > 0 : q(v, u) > 0;
          if (arrow && ok[static_cast<std::size_t>(u)]) nx[static_cast<std::size_t>(v)] = true;
        }
      ok = nx;
    }
    return ok;
  };
  const auto long_into = reach_len(true);
  const auto long_out_of = reach_len(false);
  std::vector<std::pair<Index, Index>> out;
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      if (q.is_mutable(a) && q.is_mutable(b) && q(a, b) > 0 &&
          !(long_into[static_cast<std::size_t>(a)] && long_out_of[static_cast<std::size_t>(b)]))
        out.emplace_back(a, b);
  return out;
}

// Depth-first cycle search on the mutable part.
inline bool oracle_acyclic(const IceQuiver& q) {
  const Index n = q.size();
  std::vector<int> state(static_cast<std::size_t>(n), 0);
  std::function<bool(Index)> dfs = [&](Index u) {
    state[static_cast<std::size_t>(u)] = 1;
    for (Index v = 0; v < n; ++v) {
      if (!q.is_mutable(v) || q(u, v) <= 0) continue;
      if (state[static_cast<std::size_t>(v)] == 1) return false;
      if (state[static_cast<std::size_t>(v)] == 0 && !dfs(v)) return false;
    }
    state[static_cast<std::size_t>(u)] = 2;
    return true;
  };
  for (Index v = 0; v < n; ++v)
    if (q.is_mutable(v) && state[static_cast<std::size_t>(v)] == 0 && !dfs(v)) return false;
  return true;
}

inline bool oracle_isomorphic(const IceQuiver& a, const IceQuiver& b) {
  if (a.size() != b.size()) return false;
  std::vector<Index> p(static_cast<std::size_t>(a.size()));
  std::iota(p.begin(), p.end(), 0);
  do {
    bool same = true;
    for (Index i = 0; i < a.size() && same; ++i) {
      if (a.is_frozen(i) != b.is_frozen(p[std::size_t(i)])) same = false;
      for (Index j = 0; j < a.size() && same; ++j)
        if (a(i, j) != b(p[std::size_t(i)], p[std::size_t(j)])) same = false;
    }
    if (same) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

inline IceQuiver relabel(const IceQuiver& q, const std::vector<Index>& p) {
  clusterscope::ArrowMatrix a(q.size(), q.size());
  std::vector<bool> f(static_cast<std::size_t>(q.size()));
  for (Index i = 0; i < q.size(); ++i) {
    f[std::size_t(p[std::size_t(i)])] = q.is_frozen(i);
    for (Index j = 0; j < q.size(); ++j) a(p[std::size_t(i)], p[std::size_t(j)]) = q(i, j);
  }
  return IceQuiver(a, f);
}

// Rank by largest nonvanishing minor, determinants by cofactor expansion in
// 128-bit integers. Small matrices only.
inline __int128 oracle_det(const std::vector<std::vector<std::int64_t>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  __int128 total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<std::int64_t>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<std::int64_t> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    const __int128 d = oracle_det(minor) * m[0][c];
    total += (c % 2 ? -d : d);
  }
  return total;
}

inline Index oracle_rank(const std::vector<std::vector<std::int64_t>>& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t r = std::min(rows, cols); r > 0; --r) {
    std::vector<bool> rs(rows, false), cs(cols, false);
    std::fill(rs.begin(), rs.begin() + std::ptrdiff_t(r), true);
    do {
      std::fill(cs.begin(), cs.end(), false);
      std::fill(cs.begin(), cs.begin() + std::ptrdiff_t(r), true);
      do {
        std::vector<std::vector<std::int64_t>> sub;
        for (std::size_t i = 0; i < rows; ++i) {
          if (!rs[i]) continue;
          std::vector<std::int64_t> row;
          for (std::size_t j = 0; j < cols; ++j)
            if (cs[j]) row.push_back(m[i][j]);
          sub.push_back(row);
        }
        if (oracle_det(sub) != 0) return Index(r);
      } while (std::prev_permutation(cs.begin(), cs.end()));
    } while (std::prev_permutation(rs.begin(), rs.end()));
  }
  return 0;
}

inline std::vector<std::vector<std::int64_t>> mutable_rows(const IceQuiver& q) {
  std::vector<std::vector<std::int64_t>> m;
  for (Index i : q.mutable_vertices()) {
    std::vector<std::int64_t> row;
    for (Index j = 0; j < q.size(); ++j) row.push_back(q(i, j));
    m.push_back(row);
  }
  return m;
}

}  // namespace testing
