#pragma once

// Brute-force reference implementations. Nothing here calls into the library
// beyond plain data types, so they check it independently.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

namespace oracle {

using Seq = std::vector<int>;

// All words of [n]^len in lexicographic order.
inline std::vector<Seq> all_words(int n, int len) {
  std::vector<Seq> out;
  Seq w(static_cast<std::size_t>(len), 0);
  while (true) {
    out.push_back(w);
    int i = len - 1;
    while (i >= 0 && w[static_cast<std::size_t>(i)] == n - 1) w[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++w[static_cast<std::size_t>(i)];
  }
  return out;
}

// Subsequence test by dynamic programming over prefixes.
inline bool subsequence(const Seq& x, const Seq& a) {
  const std::size_t m = x.size(), l = a.size();
  std::vector<std::vector<char>> dp(m + 1, std::vector<char>(l + 1, 0));
  for (std::size_t j = 0; j <= l; ++j) dp[0][j] = 1;
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= l; ++j)
      dp[i][j] = dp[i][j - 1] || (dp[i - 1][j - 1] && x[i - 1] == a[j - 1]);
  return dp[m][l];
}

inline std::set<Seq> insertion_ball(const Seq& x, int n) {
  std::set<Seq> out;
  for (const auto& a : all_words(n, static_cast<int>(x.size()) + 1))
    if (subsequence(x, a)) out.insert(a);
  return out;
}

// Distinct subsequences of length len, by choosing index subsets.
inline std::set<Seq> deletion_ball(const Seq& a, int len) {
  std::set<Seq> out;
  const int l = static_cast<int>(a.size());
  for (std::uint32_t mask = 0; mask < (1u << l); ++mask) {
    if (__builtin_popcount(mask) != len) continue;
    Seq s;
    for (int i = 0; i < l; ++i)
      if (mask >> i & 1u) s.push_back(a[static_cast<std::size_t>(i)]);
    out.insert(s);
  }
  return out;
}

inline bool covers(const std::vector<Seq>& code, int n, int k) {
  for (const auto& a : all_words(n, k)) {
    bool hit = false;
    for (const auto& x : code)
      if (subsequence(x, a)) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

inline std::vector<Seq> subsets(int n, int k) {
  std::vector<Seq> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    Seq s;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1u) s.push_back(i);
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool contains_set(const Seq& big, const Seq& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

inline bool turan_covers(const std::vector<Seq>& system, int n, int k) {
  for (const auto& big : subsets(n, k)) {
    bool hit = false;
    for (const auto& s : system) hit = hit || contains_set(big, s);
    if (!hit) return false;
  }
  return true;
}

// Smallest family among `candidates` satisfying `ok`, by increasing size.
// Only for tiny candidate lists.
inline int min_family(const std::vector<Seq>& candidates,
                      const std::function<bool(const std::vector<Seq>&)>& ok) {
  const int m = static_cast<int>(candidates.size());
  for (int size = 0; size <= m; ++size)
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
      if (__builtin_popcount(mask) != size) continue;
      std::vector<Seq> family;
      for (int i = 0; i < m; ++i)
        if (mask >> i & 1u) family.push_back(candidates[static_cast<std::size_t>(i)]);
      if (ok(family)) return size;
    }
  return -1;
}

inline int min_turan(int n, int k, int r) {
  return min_family(subsets(n, r), [&](const auto& f) { return turan_covers(f, n, k); });
}

inline int min_cover(int n, int k, int r) {
  return min_family(all_words(n, r), [&](const auto& f) { return covers(f, n, k); });
}

// Maximum clique by plain Bron-Kerbosch with pivoting.
inline int max_clique(const std::vector<std::vector<char>>& adj) {
  int best = 0;
  std::function<void(int, std::vector<int>, std::vector<int>)> expand = [&](int size, std::vector<int> p,
                                                                            std::vector<int> x) {
    if (p.empty() && x.empty()) {
      best = std::max(best, size);
      return;
    }
    if (size + static_cast<int>(p.size()) <= best) return;
    int pivot = p.empty() ? x.front() : p.front();
    std::size_t pivot_deg = 0;
    for (int u : p) {
      std::size_t d = 0;
      for (int v : p) d += adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
      if (d > pivot_deg) pivot_deg = d, pivot = u;
    }
    const std::vector<int> snapshot = p;
    for (int v : snapshot) {
      if (adj[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(v)]) continue;
      std::vector<int> np, nx;
      for (int u : p)
        if (adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)]) np.push_back(u);
      for (int u : x)
        if (adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)]) nx.push_back(u);
      expand(size + 1, np, nx);
      p.erase(std::find(p.begin(), p.end(), v));
      x.push_back(v);
    }
  };
  std::vector<int> all(adj.size());
  for (std::size_t i = 0; i < adj.size(); ++i) all[i] = static_cast<int>(i);
  expand(0, all, {});
  return best;
}

// Largest set of length-(r+1) words with pairwise disjoint deletion balls.
inline int max_packing(int n, int r) {
  const auto words = all_words(n, r + 1);
  std::vector<std::set<Seq>> balls;
  for (const auto& w : words) balls.push_back(deletion_ball(w, r));
  const std::size_t v = words.size();
  std::vector<std::vector<char>> adj(v, std::vector<char>(v, 0));
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = i + 1; j < v; ++j) {
      bool disjoint = true;
      for (const auto& s : balls[i])
        if (balls[j].count(s)) {
          disjoint = false;
          break;
        }
      adj[i][j] = adj[j][i] = disjoint;
    }
  return max_clique(adj);
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t out = 1;
  for (int i = 1; i <= k; ++i) out = out * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return out;
}

}  // namespace oracle
