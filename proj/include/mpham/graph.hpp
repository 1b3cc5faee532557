#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "mpham/errors.hpp"
#include "mpham/partition.hpp"
#include "mpham/rational.hpp"
#include "mpham/vertex_set.hpp"

namespace mpham {

using Edge = std::pair<int, int>;

// A k-partite graph on vertices 0..n-1 with bitset adjacency. Parts are kept
// sorted by non-increasing size (stable); part_label(i) recovers the index the
// part had in the caller's input. Immutable once built.
class PartiteGraph {
 public:
  PartiteGraph() = default;

  PartiteGraph(const std::vector<std::vector<int>>& parts, const std::vector<Edge>& edges) {
    int n = 0;
    for (const auto& part : parts) n += static_cast<int>(part.size());
    if (n > kMaxVertices)
      throw InvalidArguments("graph has " + std::to_string(n) + " vertices; at most " +
                             std::to_string(kMaxVertices) + " are supported");
    n_ = n;
    part_of_.assign(static_cast<std::size_t>(n), -1);
    adjacency_.assign(static_cast<std::size_t>(n), VertexSet{});

    std::vector<VertexSet> input_parts;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i].empty()) throw InvalidArguments("part " + std::to_string(i) + " is empty");
      VertexSet members;
      for (int v : parts[i]) {
        if (v < 0 || v >= n)
          throw InvalidArguments("part " + std::to_string(i) + " lists vertex " + std::to_string(v) +
                                 " outside [0, " + std::to_string(n) + ")");
        if (members.contains(v) || part_of_[static_cast<std::size_t>(v)] != -1)
          throw InvalidArguments("vertex " + std::to_string(v) + " appears in more than one part");
        members.insert(v);
        part_of_[static_cast<std::size_t>(v)] = static_cast<int>(i);
      }
      input_parts.push_back(members);
    }

    std::vector<int> order(parts.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return input_parts[static_cast<std::size_t>(a)].size() > input_parts[static_cast<std::size_t>(b)].size();
    });
    std::vector<int> rank(parts.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      parts_.push_back(input_parts[static_cast<std::size_t>(order[i])]);
      labels_.push_back(order[i]);
      rank[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    }
    for (int& p : part_of_) p = rank[static_cast<std::size_t>(p)];

    for (std::size_t e = 0; e < edges.size(); ++e) {
      auto [u, v] = edges[e];
      const std::string where = "edge " + std::to_string(e) + " (" + std::to_string(u) + "," +
                                std::to_string(v) + ")";
      if (u < 0 || u >= n || v < 0 || v >= n) throw InvalidArguments(where + ": vertex out of range");
      if (u == v) throw InvalidArguments(where + ": self-loop");
      if (part_of(u) == part_of(v)) throw InvalidArguments(where + ": endpoints share a part");
      if (adjacency_[static_cast<std::size_t>(u)].contains(v))
        throw InvalidArguments(where + ": parallel edge");
      adjacency_[static_cast<std::size_t>(u)].insert(v);
      adjacency_[static_cast<std::size_t>(v)].insert(u);
    }
  }

  // Parts of the given sizes on consecutive ids, with every cross-part edge.
  static PartiteGraph complete_multipartite(const std::vector<int>& sizes) {
    std::vector<std::vector<int>> parts;
    int next = 0;
    for (int s : sizes) {
      std::vector<int> part(static_cast<std::size_t>(s));
      std::iota(part.begin(), part.end(), next);
      next += s;
      parts.push_back(std::move(part));
    }
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < parts.size(); ++a)
      for (std::size_t b = a + 1; b < parts.size(); ++b)
        for (int u : parts[a])
          for (int v : parts[b]) edges.emplace_back(u, v);
    return PartiteGraph(parts, edges);
  }

  // Same vertex partition, different edge set.
  PartiteGraph with_edges(const std::vector<Edge>& edges) const {
    return PartiteGraph(input_parts(), edges);
  }

  int order() const { return n_; }
  int part_count() const { return static_cast<int>(parts_.size()); }
  const std::vector<VertexSet>& parts() const { return parts_; }
  VertexSet part(int i) const { return parts_.at(static_cast<std::size_t>(i)); }
  int part_of(int v) const { return part_of_.at(static_cast<std::size_t>(v)); }
  int part_label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }
  VertexSet vertices() const { return VertexSet::range(n_); }
  VertexSet neighbors(int v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
  int degree(int v) const { return neighbors(v).size(); }
  bool adjacent(int u, int v) const { return neighbors(u).contains(v); }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (VertexSet a : adjacency_) twice += static_cast<std::size_t>(a.size());
    return twice / 2;
  }

  // Canonical edge list: u < v, sorted.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
      for (int v : neighbors(u))
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  // Parts in the caller's original order, members ascending.
  std::vector<std::vector<int>> input_parts() const {
    std::vector<std::vector<int>> out(parts_.size());
    for (std::size_t i = 0; i < parts_.size(); ++i)
      out[static_cast<std::size_t>(labels_[i])] = parts_[i].to_vector();
    return out;
  }

  Partition partition() const {
    std::vector<int> sizes;
    for (VertexSet p : parts_) sizes.push_back(p.size());
    return Partition(std::move(sizes));
  }

  void check_set(VertexSet s) const {
    if (!s.subset_of(vertices()))
      throw InvalidArguments("vertex set " + to_string(s) + " is not inside 0.." + std::to_string(n_ - 1));
  }

  friend bool operator==(const PartiteGraph&, const PartiteGraph&) = default;

 private:
  int n_ = 0;
  std::vector<VertexSet> parts_;
  std::vector<int> labels_;
  std::vector<int> part_of_;
  std::vector<VertexSet> adjacency_;
};

inline VertexSet neighborhood(const PartiteGraph& g, VertexSet s) {
  g.check_set(s);
  VertexSet out;
  for (int v : s) out |= g.neighbors(v);
  return out;
}

inline int degree_into(const PartiteGraph& g, int v, VertexSet s) {
  if (v < 0 || v >= g.order()) throw InvalidArguments("vertex " + std::to_string(v) + " out of range");
  g.check_set(s);
  return (g.neighbors(v) & s).size();
}

inline int delta_between(const PartiteGraph& g, VertexSet r, VertexSet s) {
  g.check_set(r);
  g.check_set(s);
  if (r.empty()) throw InvalidArguments("minimum degree over an empty set");
  int best = kMaxVertices;
  for (int v : r) best = std::min(best, (g.neighbors(v) & s).size());
  return best;
}

inline int delta_set(const PartiteGraph& g, VertexSet s) { return delta_between(g, s, g.vertices()); }

// Largest degree of the induced subgraph G[s]; 0 for empty s.
inline int max_induced_degree(const PartiteGraph& g, VertexSet s) {
  int best = 0;
  for (int v : s) best = std::max(best, (g.neighbors(v) & s).size());
  return best;
}

inline bool is_independent(const PartiteGraph& g, VertexSet s) {
  for (int v : s)
    if (g.neighbors(v).intersects(s)) return false;
  return true;
}

inline std::size_t edge_count_across(const PartiteGraph& g, VertexSet a, VertexSet b) {
  g.check_set(a);
  g.check_set(b);
  if (a.intersects(b)) throw InvalidArguments("edge_count_across needs disjoint sets");
  std::size_t count = 0;
  for (int v : a) count += static_cast<std::size_t>((g.neighbors(v) & b).size());
  return count;
}

struct DegreeReport {
  // delta(V_i) - ceil(threshold + slack - n_i) per part, in sorted part order.
  std::vector<std::int64_t> slack_per_part;
  bool pass = false;
  int worst_part = 0;
};

// Checks delta(V_i) >= threshold + slack - |V_i| for every part. Integer degrees
// make this equivalent to comparing against the ceiling of the right side.
inline DegreeReport check_degree_threshold(const PartiteGraph& g, const Rational& threshold,
                                           const Rational& slack) {
  DegreeReport report;
  report.pass = true;
  for (int i = 0; i < g.part_count(); ++i) {
    const VertexSet part = g.part(i);
    const std::int64_t need = ceil_of(threshold + slack - part.size());
    const std::int64_t have = delta_set(g, part);
    report.slack_per_part.push_back(have - need);
    if (have < need) report.pass = false;
    if (report.slack_per_part.back() < report.slack_per_part[static_cast<std::size_t>(report.worst_part)])
      report.worst_part = i;
  }
  return report;
}

inline DegreeReport check_degree_condition(const PartiteGraph& g, const PartitionProfile& prof,
                                           const Rational& slack) {
  if (!(prof.partition == g.partition()))
    throw InvalidArguments("profile of " + prof.partition.to_string() +
                           " does not match graph part sizes " + g.partition().to_string());
  return check_degree_threshold(g, prof.phi, slack);
}

}  // namespace mpham
