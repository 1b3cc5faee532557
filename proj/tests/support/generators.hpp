#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "mpham/graph.hpp"
#include "mpham/partition.hpp"

namespace gen {

using Rng = std::mt19937_64;

// Random k-partite graph on consecutive ids, each cross pair kept with probability p.
inline mpham::PartiteGraph random_partite(const std::vector<int>& sizes, double p, Rng& rng) {
  const auto base = mpham::PartiteGraph::complete_multipartite(sizes);
  std::bernoulli_distribution keep(p);
  std::vector<mpham::Edge> edges;
  for (auto e : base.edges())
    if (keep(rng)) edges.push_back(e);
  return base.with_edges(edges);
}

// Complete multipartite graph with random edge deletions that keep
// deg(v) >= need[part(v)] for every vertex.
inline mpham::PartiteGraph thinned(const std::vector<int>& sizes, const std::vector<int>& need, int attempts,
                                   Rng& rng) {
  const auto base = mpham::PartiteGraph::complete_multipartite(sizes);
  const int n = base.order();
  std::vector<mpham::Edge> edges = base.edges();
  std::vector<int> deg(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = base.degree(v);
  std::shuffle(edges.begin(), edges.end(), rng);
  std::vector<mpham::Edge> kept;
  int tried = 0;
  for (auto [u, v] : edges) {
    const bool can = tried < attempts && deg[u] - 1 >= need[base.part_of(u)] && deg[v] - 1 >= need[base.part_of(v)];
    ++tried;
    if (can) {
      --deg[u];
      --deg[v];
    } else {
      kept.emplace_back(u, v);
    }
  }
  return base.with_edges(kept);
}

inline mpham::Partition random_partition(int n, int k, Rng& rng, bool cap_half = true) {
  const auto all = mpham::enumerate_partitions(n, k, cap_half);
  if (all.empty()) throw mpham::InvalidArguments("no partition of " + std::to_string(n) + " into " + std::to_string(k));
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  return all[pick(rng)];
}

}  // namespace gen
