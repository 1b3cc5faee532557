#pragma once

// Independent reference implementations for the tests. These use plain
// adjacency matrices and direct definitions, never the library's search code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "mpham/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<char>>;

inline Matrix matrix_of(const mpham::PartiteGraph& g) {
  const int n = g.order();
  Matrix m(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  for (auto [u, v] : g.edges()) m[u][v] = m[v][u] = 1;
  return m;
}

// ---- partition parameters, straight from the definitions ----

struct Params {
  int lambda = 0, mu = 0;
  std::vector<long> f_values;
  long f = 0, g = 0, h1 = 0, h2 = 0, h = 0, phi = 0;
};

inline long ceil_div(long a, long b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }
inline long floor_div(long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

inline Params params(const std::vector<int>& parts) {
  const int k = static_cast<int>(parts.size());
  long n = 0;
  for (int p : parts) n += p;
  auto prefix = [&](int count) {
    long s = 0;
    for (int i = 0; i < count; ++i) s += parts[static_cast<std::size_t>(i)];
    return s;
  };
  Params out;
  // every satisfying candidate, then take the least
  std::vector<int> lam_ok, mu_ok;
  for (int l = 1; l <= k; ++l)
    if (prefix(l) >= ceil_div(n + 1, 2)) lam_ok.push_back(l);
  for (int m = 1; m <= k; ++m) {
    // floor((n+1)/2 - n_m/2) + 1, computed in halves
    const long twice = n + 1 - parts[static_cast<std::size_t>(m - 1)];
    if (prefix(m) >= floor_div(twice, 2) + 1) mu_ok.push_back(m);
  }
  out.lambda = *std::min_element(lam_ok.begin(), lam_ok.end());
  out.mu = *std::min_element(mu_ok.begin(), mu_ok.end());
  for (int i = 1; i < out.mu; ++i) out.f_values.push_back(parts[static_cast<std::size_t>(i - 1)] + prefix(i));
  out.f = out.f_values.empty() ? 0 : *std::max_element(out.f_values.begin(), out.f_values.end());
  out.g = ceil_div(n + parts[static_cast<std::size_t>(out.mu - 1)], 2);
  out.h1 = ceil_div(n, 2) + parts[static_cast<std::size_t>(out.lambda - 1)];
  out.h2 = ceil_div(n, 2) + ceil_div(n + 1, 2) / out.lambda;
  out.h = std::min(out.h1, out.h2);
  out.phi = std::max({out.f, out.g, out.h});
  return out;
}

// Whether the mu predicate holds for every m past its first success.
inline bool mu_predicate_monotone(const std::vector<int>& parts) {
  long n = 0;
  for (int p : parts) n += p;
  bool seen = false;
  long s = 0;
  for (std::size_t m = 0; m < parts.size(); ++m) {
    s += parts[m];
    const bool ok = s >= floor_div(n + 1 - parts[m], 2) + 1;
    if (seen && !ok) return false;
    seen = seen || ok;
  }
  return true;
}

// number of partitions of n into exactly k parts, each at most cap
inline long count_partitions(int n, int k, int cap) {
  std::function<long(int, int, int)> go = [&](int rest, int parts_left, int largest) -> long {
    if (parts_left == 0) return rest == 0 ? 1 : 0;
    long total = 0;
    for (int x = std::min(largest, rest); x >= 1; --x) total += go(rest - x, parts_left - 1, x);
    return total;
  };
  return go(n, k, cap);
}

// ---- Hamiltonicity by plain path extension from vertex 0 ----

inline bool hamiltonian(const Matrix& m) {
  const int n = static_cast<int>(m.size());
  if (n < 3) return false;
  std::vector<int> path{0};
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  used[0] = 1;
  std::function<bool()> extend = [&]() -> bool {
    if (static_cast<int>(path.size()) == n) return m[path.back()][0] != 0;
    for (int v = 1; v < n; ++v) {
      if (used[v] || !m[path.back()][v]) continue;
      used[v] = 1;
      path.push_back(v);
      if (extend()) return true;
      path.pop_back();
      used[v] = 0;
    }
    return false;
  };
  return extend();
}

inline bool hamiltonian_path(const Matrix& m, int from, int to) {
  const int n = static_cast<int>(m.size());
  if (from == to) return n == 1;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  used[from] = 1;
  std::function<bool(int, int)> go = [&](int at, int count) -> bool {
    if (count == n) return at == to;
    for (int v = 0; v < n; ++v) {
      if (used[v] || !m[at][v]) continue;
      if (v == to && count + 1 != n) continue;
      used[v] = 1;
      if (go(v, count + 1)) return true;
      used[v] = 0;
    }
    return false;
  };
  return go(from, 1);
}

// ---- spanning cover by vertex-disjoint edges and odd cycles ----

inline bool edge_odd_cycle_cover(const Matrix& m) {
  const int n = static_cast<int>(m.size());
  std::map<std::uint32_t, bool> memo;
  std::function<bool(std::uint32_t)> solve = [&](std::uint32_t left) -> bool {
    if (left == 0) return true;
    if (auto it = memo.find(left); it != memo.end()) return it->second;
    int v = 0;
    while (!(left >> v & 1u)) ++v;
    bool ok = false;
    for (int u = 0; u < n && !ok; ++u)
      if ((left >> u & 1u) && m[v][u]) ok = solve(left & ~(1u << v) & ~(1u << u));
    // odd cycles through v: simple paths v .. w with an odd vertex count >= 3 and w ~ v
    std::function<void(int, std::uint32_t, int)> walk = [&](int at, std::uint32_t used, int len) {
      if (ok) return;
      if (len >= 3 && len % 2 == 1 && m[at][v] && solve(left & ~used)) {
        ok = true;
        return;
      }
      for (int w = v + 1; w < n; ++w)
        if ((left >> w & 1u) && !(used >> w & 1u) && m[at][w]) walk(w, used | (1u << w), len + 1);
    };
    if (!ok) walk(v, 1u << v, 1);
    memo[left] = ok;
    return ok;
  };
  return solve(n >= 32 ? 0 : ((1u << n) - 1));
}

// ---- expansion predicates by direct counting ----

// |{v : d(v, S) >= nu n}| with nu = num/den, integer arithmetic only
inline int rn_size(const Matrix& m, std::uint64_t s, long num, long den) {
  const int n = static_cast<int>(m.size());
  int count = 0;
  for (int v = 0; v < n; ++v) {
    long d = 0;
    for (int u = 0; u < n; ++u)
      if ((s >> u & 1u) && m[v][u]) ++d;
    if (d * den >= num * n) ++count;
  }
  return count;
}

// Exhaustive (nu, tau)-robust expansion over plain masks, nu = a/b, tau = c/d.
inline bool robust_expander(const Matrix& m, long a, long b, long c, long d) {
  const int n = static_cast<int>(m.size());
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    const long size = __builtin_popcountll(s);
    if (size * d < c * n || size * d > (d - c) * n) continue;
    // |RN| >= |S| + nu n  <=>  (|RN| - |S|) b >= a n
    if ((rn_size(m, s, a, b) - size) * b < a * n) return false;
  }
  return true;
}

inline int min_degree(const Matrix& m, std::uint64_t s) {
  const int n = static_cast<int>(m.size());
  int best = n;
  for (int v = 0; v < n; ++v) {
    if (!(s >> v & 1u)) continue;
    int d = 0;
    for (int u = 0; u < n; ++u) d += m[v][u];
    best = std::min(best, d);
  }
  return best;
}

}  // namespace oracle
