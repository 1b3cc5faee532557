#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mpham/errors.hpp"
#include "mpham/graph.hpp"
#include "mpham/vertex_set.hpp"

namespace mpham {

inline constexpr int kSubsetDpMaxVertices = 24;
inline constexpr std::uint64_t kDefaultBudget = 50'000'000;

enum class SearchOutcome { found, none, unknown };
enum class SearchMethod { subset_dp, backtracking, trivial };

inline const char* to_string(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::found: return "cycle";
    case SearchOutcome::none: return "none";
    case SearchOutcome::unknown: return "unknown";
  }
  return "?";
}
inline const char* to_string(SearchMethod m) {
  switch (m) {
    case SearchMethod::subset_dp: return "subset-dp";
    case SearchMethod::backtracking: return "backtracking";
    case SearchMethod::trivial: return "trivial";
  }
  return "?";
}

// Result of a cycle or path search. `sequence` is non-empty only when found.
struct HamiltonVerdict {
  SearchOutcome outcome = SearchOutcome::none;
  std::vector<int> sequence;
  SearchMethod method = SearchMethod::trivial;
  std::uint64_t expansions = 0;

  bool found() const { return outcome == SearchOutcome::found; }
};

namespace detail {

// Graph on local ids 0..m-1; `ids` maps back to host vertex ids.
struct LocalGraph {
  std::vector<int> ids;
  std::vector<std::uint64_t> adj;

  int size() const { return static_cast<int>(ids.size()); }
  int local_of(int host) const {
    auto it = std::find(ids.begin(), ids.end(), host);
    return it == ids.end() ? -1 : static_cast<int>(it - ids.begin());
  }
};

// Induced on `keep`; when `left`/`right` are given, only edges between them survive.
inline LocalGraph make_local(const PartiteGraph& g, VertexSet keep,
                             std::optional<std::pair<VertexSet, VertexSet>> sides = std::nullopt) {
  LocalGraph lg;
  lg.ids = keep.to_vector();
  std::vector<int> local(static_cast<std::size_t>(kMaxVertices), -1);
  for (std::size_t i = 0; i < lg.ids.size(); ++i) local[static_cast<std::size_t>(lg.ids[i])] = static_cast<int>(i);
  for (int host : lg.ids) {
    VertexSet nb = g.neighbors(host) & keep;
    if (sides) {
      if (sides->first.contains(host)) nb &= sides->second;
      else if (sides->second.contains(host)) nb &= sides->first;
      else nb = VertexSet{};
    }
    std::uint64_t bits = 0;
    for (int w : nb) bits |= std::uint64_t{1} << local[static_cast<std::size_t>(w)];
    lg.adj.push_back(bits);
  }
  return lg;
}

// Subset DP over paths that start at local vertex `anchor` and cover every vertex.
// reach[M] holds the endpoints v such that a path from the anchor visits exactly
// anchor + M and stops at v; M ranges over subsets of the other vertices.
class PathDp {
 public:
  PathDp(const LocalGraph& lg, int anchor) : lg_(lg), anchor_(anchor), m_(lg.size()) {
    for (int v = 0; v < m_; ++v)
      if (v != anchor_) others_.push_back(v);
    const int r = m_ - 1;
    reach_.assign(std::size_t{1} << r, 0);
    reach_[0] = std::uint32_t{1} << anchor_;
    for (std::uint32_t mask = 1; mask < reach_.size(); ++mask) {
      std::uint32_t out = 0;
      for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
        const int bit = std::countr_zero(rest);
        const int v = others_[static_cast<std::size_t>(bit)];
        const std::uint32_t before = reach_[mask & ~(std::uint32_t{1} << bit)];
        if ((lg_.adj[static_cast<std::size_t>(v)] & before) != 0) out |= std::uint32_t{1} << v;
      }
      reach_[mask] = out;
    }
  }

  std::uint32_t full_endpoints() const { return reach_.back(); }

  // Local path anchor -> end through every vertex; `end` must be in full_endpoints().
  std::vector<int> path_to(int end) const {
    std::vector<int> reversed;
    std::uint32_t mask = static_cast<std::uint32_t>(reach_.size() - 1);
    int cur = end;
    while (cur != anchor_) {
      reversed.push_back(cur);
      const int bit = bit_of(cur);
      mask &= ~(std::uint32_t{1} << bit);
      const std::uint32_t options = reach_[mask] & static_cast<std::uint32_t>(lg_.adj[static_cast<std::size_t>(cur)]);
      cur = std::countr_zero(options);
    }
    reversed.push_back(anchor_);
    return {reversed.rbegin(), reversed.rend()};
  }

 private:
  int bit_of(int v) const { return v < anchor_ ? v : v - 1; }

  const LocalGraph& lg_;
  int anchor_;
  int m_;
  std::vector<int> others_;
  std::vector<std::uint32_t> reach_;
};

// Depth-first search for a Hamiltonian path from `start`; when `target` >= 0 the
// path must end there, when `close_cycle` it must end next to `start`.
class Backtracker {
 public:
  Backtracker(const LocalGraph& lg, int start, int target, bool close_cycle, std::uint64_t budget)
      : lg_(lg), start_(start), target_(target), close_(close_cycle), budget_(budget) {
    full_ = lg.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << lg.size()) - 1;
  }

  SearchOutcome run() {
    path_.assign(1, start_);
    const bool ok = extend(full_ & ~(std::uint64_t{1} << start_), start_);
    if (ok) return SearchOutcome::found;
    return exhausted_ ? SearchOutcome::unknown : SearchOutcome::none;
  }
  const std::vector<int>& path() const { return path_; }
  std::uint64_t expansions() const { return expansions_; }

 private:
  bool feasible(std::uint64_t unvisited, int cur) const {
    if (unvisited == 0) return true;
    // every unvisited vertex must still have enough usable neighbors
    const std::uint64_t avail = unvisited | (std::uint64_t{1} << cur) |
                                (close_ ? std::uint64_t{1} << start_ : 0);
    for (std::uint64_t rest = unvisited; rest != 0; rest &= rest - 1) {
      const int w = std::countr_zero(rest);
      const int need = (w == target_) ? 1 : 2;
      if (std::popcount(lg_.adj[static_cast<std::size_t>(w)] & avail) < need) return false;
    }
    // unvisited vertices must be reachable from cur inside unvisited
    std::uint64_t seen = std::uint64_t{1} << cur;
    std::uint64_t frontier = seen;
    const std::uint64_t region = unvisited | seen;
    while (frontier != 0) {
      std::uint64_t next = 0;
      for (std::uint64_t rest = frontier; rest != 0; rest &= rest - 1)
        next |= lg_.adj[static_cast<std::size_t>(std::countr_zero(rest))];
      next &= region & ~seen;
      seen |= next;
      frontier = next;
    }
    return (seen & unvisited) == unvisited;
  }

  bool extend(std::uint64_t unvisited, int cur) {
    if (unvisited == 0) {
      if (target_ >= 0) return cur == target_;
      if (close_) return (lg_.adj[static_cast<std::size_t>(cur)] >> start_ & 1U) != 0;
      return true;
    }
    if (++expansions_ > budget_) {
      exhausted_ = true;
      return false;
    }
    if (!feasible(unvisited, cur)) return false;
    std::vector<int> candidates;
    for (std::uint64_t rest = lg_.adj[static_cast<std::size_t>(cur)] & unvisited; rest != 0; rest &= rest - 1) {
      const int w = std::countr_zero(rest);
      if (w == target_ && std::popcount(unvisited) > 1) continue;
      candidates.push_back(w);
    }
    std::stable_sort(candidates.begin(), candidates.end(), [&](int a, int b) {
      return std::popcount(lg_.adj[static_cast<std::size_t>(a)] & unvisited) <
             std::popcount(lg_.adj[static_cast<std::size_t>(b)] & unvisited);
    });
    for (int w : candidates) {
      path_.push_back(w);
      if (extend(unvisited & ~(std::uint64_t{1} << w), w)) return true;
      path_.pop_back();
      if (exhausted_) return false;
    }
    return false;
  }

  const LocalGraph& lg_;
  int start_;
  int target_;
  bool close_;
  std::uint64_t budget_;
  std::uint64_t full_ = 0;
  std::uint64_t expansions_ = 0;
  bool exhausted_ = false;
  std::vector<int> path_;
};

inline std::vector<int> to_host(const LocalGraph& lg, const std::vector<int>& local) {
  std::vector<int> out;
  out.reserve(local.size());
  for (int v : local) out.push_back(lg.ids[static_cast<std::size_t>(v)]);
  return out;
}

// Rotates to start at the smallest id and picks the direction with the smaller successor.
inline std::vector<int> normalize_cycle(std::vector<int> cycle) {
  if (cycle.size() < 3) return cycle;
  std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
  if (cycle.back() < cycle[1]) std::reverse(cycle.begin() + 1, cycle.end());
  return cycle;
}

inline HamiltonVerdict local_cycle(const LocalGraph& lg, std::uint64_t budget) {
  HamiltonVerdict verdict;
  if (lg.size() < 3) return verdict;
  if (lg.size() <= kSubsetDpMaxVertices) {
    verdict.method = SearchMethod::subset_dp;
    PathDp dp(lg, 0);
    const std::uint32_t closing = dp.full_endpoints() & static_cast<std::uint32_t>(lg.adj[0]);
    if (closing != 0) {
      verdict.outcome = SearchOutcome::found;
      verdict.sequence = normalize_cycle(to_host(lg, dp.path_to(std::countr_zero(closing))));
    }
    return verdict;
  }
  verdict.method = SearchMethod::backtracking;
  Backtracker bt(lg, 0, -1, true, budget);
  verdict.outcome = bt.run();
  verdict.expansions = bt.expansions();
  if (verdict.found()) verdict.sequence = normalize_cycle(to_host(lg, bt.path()));
  return verdict;
}

inline HamiltonVerdict local_path(const LocalGraph& lg, int from, int to, std::uint64_t budget) {
  HamiltonVerdict verdict;
  if (lg.size() == 1) {
    verdict.outcome = SearchOutcome::found;
    verdict.sequence = lg.ids;
    return verdict;
  }
  if (lg.size() <= kSubsetDpMaxVertices) {
    verdict.method = SearchMethod::subset_dp;
    PathDp dp(lg, from);
    if ((dp.full_endpoints() >> to & 1U) != 0) {
      verdict.outcome = SearchOutcome::found;
      verdict.sequence = to_host(lg, dp.path_to(to));
    }
    return verdict;
  }
  verdict.method = SearchMethod::backtracking;
  Backtracker bt(lg, from, to, false, budget);
  verdict.outcome = bt.run();
  verdict.expansions = bt.expansions();
  if (verdict.found()) verdict.sequence = to_host(lg, bt.path());
  return verdict;
}

}  // namespace detail

// Exact for n <= 24 (subset DP anchored at vertex 0); budgeted backtracking above,
// which reports unknown when the node budget runs out.
inline HamiltonVerdict find_hamiltonian_cycle(const PartiteGraph& g, std::uint64_t budget = kDefaultBudget) {
  return detail::local_cycle(detail::make_local(g, g.vertices()), budget);
}

// Hamiltonian cycle of the bipartite subgraph G[left, right] (edges inside a side ignored).
inline HamiltonVerdict find_hamiltonian_cycle_between(const PartiteGraph& g, VertexSet left, VertexSet right,
                                                      std::uint64_t budget = kDefaultBudget) {
  if (left.intersects(right)) throw InvalidArguments("bipartite sides overlap");
  return detail::local_cycle(detail::make_local(g, left | right, std::make_pair(left, right)), budget);
}

inline bool verify_cycle(const PartiteGraph& g, const std::vector<int>& seq) {
  const int n = g.order();
  if (n < 3 || static_cast<int>(seq.size()) != n) return false;
  VertexSet seen;
  for (int v : seq) {
    if (v < 0 || v >= n || seen.contains(v)) return false;
    seen.insert(v);
  }
  for (std::size_t i = 0; i < seq.size(); ++i)
    if (!g.adjacent(seq[i], seq[(i + 1) % seq.size()])) return false;
  return true;
}

// Sufficient condition for a Hamiltonian path between every cross pair of a
// balanced bipartite graph. Degrees count only edges between the two sides.
// Sorting each side ascending, j and k are the least 1-based indices with
// d(u_j) <= j + 1 and d(v_k) <= k + 1; the test passes if either is missing
// or d(u_j) + d(v_k) >= m + 2. A false result is inconclusive.
inline bool berge_biconnected_check(const PartiteGraph& g, VertexSet left, VertexSet right) {
  g.check_set(left);
  g.check_set(right);
  if (left.intersects(right)) throw InvalidArguments("bipartite sides overlap");
  if (left.size() != right.size())
    throw InvalidArguments("Berge condition needs equal sides (got " + std::to_string(left.size()) + " and " +
                           std::to_string(right.size()) + ")");
  const int m = left.size();
  if (m < 2) throw InvalidArguments("Berge condition needs sides of size at least 2");
  auto first_low = [&](VertexSet side, VertexSet other) -> std::optional<int> {
    std::vector<int> degrees;
    for (int v : side) degrees.push_back((g.neighbors(v) & other).size());
    std::sort(degrees.begin(), degrees.end());
    for (int j = 1; j <= m; ++j)
      if (degrees[static_cast<std::size_t>(j - 1)] <= j + 1) return degrees[static_cast<std::size_t>(j - 1)];
    return std::nullopt;
  };
  const auto du = first_low(left, right);
  const auto dv = first_low(right, left);
  if (!du || !dv) return true;
  return *du + *dv >= m + 2;
}

inline bool berge_biconnected_check(const PartiteGraph& g) {
  if (g.part_count() != 2) throw InvalidArguments("Berge condition needs a bipartite graph with two parts");
  return berge_biconnected_check(g, g.part(0), g.part(1));
}

// Hamiltonian path of G[left, right] from u to v; u and v must lie on opposite sides.
inline HamiltonVerdict bipartite_hamiltonian_path(const PartiteGraph& g, VertexSet left, VertexSet right, int u,
                                                  int v, std::uint64_t budget = kDefaultBudget) {
  g.check_set(left);
  g.check_set(right);
  if (left.intersects(right)) throw InvalidArguments("bipartite sides overlap");
  const bool opposite = (left.contains(u) && right.contains(v)) || (right.contains(u) && left.contains(v));
  if (!opposite)
    throw InvalidArguments("path endpoints " + std::to_string(u) + " and " + std::to_string(v) +
                           " are not on opposite sides");
  const auto lg = detail::make_local(g, left | right, std::make_pair(left, right));
  return detail::local_path(lg, lg.local_of(u), lg.local_of(v), budget);
}

inline HamiltonVerdict bipartite_hamiltonian_path(const PartiteGraph& g, int u, int v,
                                                  std::uint64_t budget = kDefaultBudget) {
  if (g.part_count() != 2) throw InvalidArguments("expected a bipartite graph with two parts");
  return bipartite_hamiltonian_path(g, g.part(0), g.part(1), u, v, budget);
}

}  // namespace mpham
