#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mpham/errors.hpp"
#include "mpham/graph.hpp"

namespace mpham {

inline constexpr int kDefaultAuditCap = 24;

// Spanning subgraph whose components are single edges or odd cycles.
struct FractionalMatching {
  std::vector<Edge> edges;
  std::vector<std::vector<int>> odd_cycles;
};

// A set t that fails to weakly expand, plus the isolated vertices of G[t],
// which form an independent set that also fails.
struct ExpansionViolation {
  VertexSet t;
  VertexSet independent_core;
};

inline bool validate_fractional_matching(const PartiteGraph& g, const FractionalMatching& m) {
  VertexSet covered;
  auto take = [&](int v) {
    if (v < 0 || v >= g.order() || covered.contains(v)) return false;
    covered.insert(v);
    return true;
  };
  for (auto [u, v] : m.edges)
    if (!take(u) || !take(v) || !g.adjacent(u, v)) return false;
  for (const auto& cycle : m.odd_cycles) {
    if (cycle.size() < 3 || cycle.size() % 2 == 0) return false;
    for (int v : cycle)
      if (!take(v)) return false;
    for (std::size_t i = 0; i < cycle.size(); ++i)
      if (!g.adjacent(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
  }
  return covered == g.vertices();
}

// Isolated vertices of G[t].
inline VertexSet isolated_in(const PartiteGraph& g, VertexSet t) {
  VertexSet out;
  for (int v : t)
    if (!g.neighbors(v).intersects(t)) out.insert(v);
  return out;
}

// Kuhn's augmenting-path matcher. After solve(), deficient_left() is the set of
// left vertices reachable by alternating paths from the unmatched ones (Konig);
// its neighborhood is smaller by exactly the number of unmatched left vertices.
class BipartiteMatcher {
 public:
  BipartiteMatcher(int left, int right) : adj_(static_cast<std::size_t>(left)), right_size_(right) {}

  void add_edge(int l, int r) {
    if (l < 0 || l >= static_cast<int>(adj_.size()) || r < 0 || r >= right_size_)
      throw InvalidArguments("bipartite edge (" + std::to_string(l) + "," + std::to_string(r) + ") out of range");
    adj_[static_cast<std::size_t>(l)].push_back(r);
  }

  int solve() {
    match_left_.assign(adj_.size(), -1);
    match_right_.assign(static_cast<std::size_t>(right_size_), -1);
    int size = 0;
    for (int l = 0; l < static_cast<int>(adj_.size()); ++l) {
      seen_left_.assign(adj_.size(), false);
      seen_right_.assign(static_cast<std::size_t>(right_size_), false);
      if (augment(l)) ++size;
    }
    return size;
  }

  int mate_of_left(int l) const { return match_left_.at(static_cast<std::size_t>(l)); }

  std::vector<Edge> matching() const {
    std::vector<Edge> out;
    for (std::size_t l = 0; l < match_left_.size(); ++l)
      if (match_left_[l] >= 0) out.emplace_back(static_cast<int>(l), match_left_[l]);
    return out;
  }

  std::vector<int> deficient_left() const {
    std::vector<bool> reached(adj_.size(), false);
    std::vector<int> queue;
    for (std::size_t l = 0; l < adj_.size(); ++l)
      if (match_left_[l] < 0) {
        reached[l] = true;
        queue.push_back(static_cast<int>(l));
      }
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (int r : adj_[static_cast<std::size_t>(queue[head])]) {
        const int owner = match_right_[static_cast<std::size_t>(r)];
        if (owner >= 0 && !reached[static_cast<std::size_t>(owner)]) {
          reached[static_cast<std::size_t>(owner)] = true;
          queue.push_back(owner);
        }
      }
    std::vector<int> out;
    for (std::size_t l = 0; l < reached.size(); ++l)
      if (reached[l]) out.push_back(static_cast<int>(l));
    return out;
  }

 private:
  bool augment(int l) {
    seen_left_[static_cast<std::size_t>(l)] = true;
    for (int r : adj_[static_cast<std::size_t>(l)]) {
      if (seen_right_[static_cast<std::size_t>(r)]) continue;
      seen_right_[static_cast<std::size_t>(r)] = true;
      const int owner = match_right_[static_cast<std::size_t>(r)];
      if (owner < 0 || augment(owner)) {
        match_left_[static_cast<std::size_t>(l)] = r;
        match_right_[static_cast<std::size_t>(r)] = l;
        return true;
      }
    }
    return false;
  }

  std::vector<std::vector<int>> adj_;
  int right_size_;
  std::vector<int> match_left_, match_right_;
  std::vector<bool> seen_left_, seen_right_;
};

inline std::vector<Edge> maximum_bipartite_matching(int left, int right, const std::vector<Edge>& edges) {
  BipartiteMatcher m(left, right);
  for (auto [l, r] : edges) m.add_edge(l, r);
  m.solve();
  return m.matching();
}

// Exhaustive over independent sets; empty result means every independent set
// (hence every set) weakly expands. The first violator in branch order is grown
// greedily by lowest id while its deficiency |S| - |N(S)| strictly increases.
inline std::optional<ExpansionViolation> weak_expansion_audit(const PartiteGraph& g, int limit = kDefaultAuditCap) {
  if (g.order() > limit)
    throw ResourceLimit("weak expansion audit is exhaustive; n = " + std::to_string(g.order()) + " exceeds cap " +
                        std::to_string(limit));
  std::optional<VertexSet> found;
  // Branch on vertices in id order; `chosen` is independent, `allowed` are
  // higher ids not adjacent to it. The neighborhood only grows along a branch,
  // so a branch is cut once even taking all allowed vertices cannot violate.
  auto recurse = [&](auto&& self, VertexSet chosen, VertexSet nbhd, VertexSet allowed) -> void {
    if (found) return;
    if (nbhd.size() < chosen.size()) {
      found = chosen;
      return;
    }
    if (chosen.size() + allowed.size() <= nbhd.size()) return;
    for (int v : allowed) {
      VertexSet rest = allowed;
      for (int w : allowed)
        if (w <= v) rest.erase(w);
      self(self, chosen | VertexSet::single(v), nbhd | g.neighbors(v), rest - g.neighbors(v));
      if (found) return;
    }
  };
  recurse(recurse, VertexSet{}, VertexSet{}, g.vertices());
  if (!found) return std::nullopt;

  VertexSet s = *found;
  for (bool grew = true; grew;) {
    grew = false;
    const int deficiency = s.size() - neighborhood(g, s).size();
    for (int v : g.vertices() - s - neighborhood(g, s)) {
      const VertexSet bigger = s | VertexSet::single(v);
      if (bigger.size() - neighborhood(g, bigger).size() > deficiency) {
        s = bigger;
        grew = true;
        break;
      }
    }
  }
  return ExpansionViolation{s, s};
}

// Perfect matching in the doubled bipartite graph (x on the left, y' on the
// right, xy' present iff xy is an edge), read back as a permutation: 2-cycles
// become edges, even cycles are split into alternate edges from their lowest id,
// odd cycles are kept. Without a perfect matching, returns the Hall-deficient set.
inline std::variant<FractionalMatching, ExpansionViolation> perfect_fractional_matching(const PartiteGraph& g) {
  const int n = g.order();
  BipartiteMatcher matcher(n, n);
  for (int v = 0; v < n; ++v)
    for (int w : g.neighbors(v)) matcher.add_edge(v, w);
  if (matcher.solve() < n) {
    const VertexSet t = VertexSet::from(matcher.deficient_left());
    return ExpansionViolation{t, isolated_in(g, t)};
  }

  FractionalMatching out;
  std::vector<bool> done(static_cast<std::size_t>(n), false);
  for (int start = 0; start < n; ++start) {
    if (done[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cycle;
    for (int v = start; !done[static_cast<std::size_t>(v)]; v = matcher.mate_of_left(v)) {
      done[static_cast<std::size_t>(v)] = true;
      cycle.push_back(v);
    }
    // `start` is the lowest id on its cycle because earlier ids are done.
    if (cycle.size() % 2 == 1) {
      out.odd_cycles.push_back(std::move(cycle));
    } else {
      for (std::size_t i = 0; i < cycle.size(); i += 2)
        out.edges.emplace_back(std::min(cycle[i], cycle[i + 1]), std::max(cycle[i], cycle[i + 1]));
    }
  }
  return out;
}

}  // namespace mpham
