#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mpham/errors.hpp"
#include "mpham/expansion.hpp"
#include "mpham/graph.hpp"
#include "mpham/hamiltonicity.hpp"
#include "mpham/partition.hpp"

namespace mpham {

// Everything the stitching construction picked, for reporting. `path` is the
// connecting path a_1 x_1 y_1 z_1 a_1' w_2 a_2 ... (z_t dropped for odd n).
struct StitchState {
  VertexSet witness;
  VertexSet a_side;
  VertexSet b_side;
  VertexSet b_plus;
  VertexSet b_star;
  Rational b_plus_threshold{0};
  int t = 0;
  std::vector<int> y, x, z, a, a_prime, w;
  std::vector<int> path;
  VertexSet a_rest;  // A' = A minus interior of the path
  VertexSet b_rest;  // B' = B minus interior of the path
  bool balanced = false;
  std::optional<bool> berge;
  std::string failed_step;  // empty on success
};

struct ExtremalResult {
  HamiltonVerdict verdict;
  StitchState trace;

  bool construction_failed() const { return !trace.failed_step.empty(); }
};

namespace detail {

// Lowest id in `candidates` satisfying `ok`, or -1.
template <typename Ok>
int lowest_where(VertexSet candidates, Ok&& ok) {
  for (int v : candidates)
    if (ok(v)) return v;
  return -1;
}

}  // namespace detail

// Builds a Hamiltonian cycle around a near-independent set S covering almost
// half the graph: A is the union of parts meeting S, B the rest, and
// t = ceil(|B| - n/2). A short path absorbs the surplus of B through t vertices
// y_i of B* (B minus its large parts), leaving G[A, B] minus the path interior
// balanced; a Hamiltonian path of that bipartite graph between the path's ends
// closes the cycle. Picks are greedy by lowest id; a dead end is reported in
// the trace, not thrown.
inline ExtremalResult extremal_construct_cycle(const PartiteGraph& g, VertexSet witness, const ExpanderParams& params,
                                               std::uint64_t budget = kDefaultBudget) {
  const int n = g.order();
  if (!is_nu_extremal_witness(g, witness, params.nu))
    throw InvalidArguments("set " + to_string(witness) + " is not a nu-extremal witness");
  const PartitionProfile exact = profile(g.partition(), ProfileMode::exact);
  const DegreeReport degree = check_degree_condition(g, exact, params.gamma * n);
  if (!degree.pass)
    throw InvalidArguments("degree condition with slack gamma*n fails at part " + std::to_string(degree.worst_part));

  ExtremalResult result;
  StitchState& st = result.trace;
  st.witness = witness;
  st.a_side = parts_meeting(g, witness);
  st.b_side = g.vertices() - st.a_side;
  st.t = static_cast<int>(ceil_of(Rational(st.b_side.size()) - Rational(n, 2)));

  const PartitionProfile asym = profile(g.partition(), ProfileMode::asymptotic);
  st.b_plus_threshold = asym.h - Rational(n, 2) + params.nu * n / asym.lambda;
  for (VertexSet part : g.parts())
    if (part.subset_of(st.b_side) && Rational(part.size()) > st.b_plus_threshold) st.b_plus |= part;
  st.b_star = st.b_side - st.b_plus;

  auto fail = [&](std::string step) {
    st.failed_step = std::move(step);
    result.verdict.outcome = SearchOutcome::none;
    return result;
  };

  if (st.t <= 0) {
    st.t = 0;
    st.a_rest = st.a_side;
    st.b_rest = st.b_side;
    st.balanced = st.a_side.size() == st.b_side.size();
    if (!st.balanced) return fail("balance");
    if (st.a_side.size() >= 2) st.berge = berge_biconnected_check(g, st.a_side, st.b_side);
    result.verdict = find_hamiltonian_cycle_between(g, st.a_side, st.b_side, budget);
    if (!result.verdict.found()) {
      if (result.verdict.outcome == SearchOutcome::none) st.failed_step = "hamiltonian-cycle";
      return result;
    }
    return result;
  }

  const int t = st.t;
  const bool odd = n % 2 == 1;
  VertexSet used;
  const VertexSet s = witness;

  for (int i = 1; i <= t; ++i) {
    const int y = detail::lowest_where(st.b_star - used, [&](int v) {
      return (g.neighbors(v) & (st.b_side - used - VertexSet::single(v))).size() >= 2;
    });
    if (y < 0) return fail("y_" + std::to_string(i));
    st.y.push_back(y);
    used.insert(y);
  }
  for (int i = 1; i <= t; ++i) {
    const int y = st.y[static_cast<std::size_t>(i - 1)];
    const int x = detail::lowest_where(g.neighbors(y) & (st.b_side - used),
                                       [&](int v) { return g.neighbors(v).intersects(s - used); });
    if (x < 0) return fail("x_" + std::to_string(i));
    st.x.push_back(x);
    used.insert(x);
    if (i == t && odd) continue;  // z_t would be dropped from the path
    const int z = detail::lowest_where(g.neighbors(y) & (st.b_side - used), [&](int v) {
      return i == t || g.neighbors(v).intersects(s - used);
    });
    if (z < 0) return fail("z_" + std::to_string(i));
    st.z.push_back(z);
    used.insert(z);
  }
  for (int i = 1; i <= t; ++i) {
    const int a = detail::lowest_where(g.neighbors(st.x[static_cast<std::size_t>(i - 1)]) & (s - used),
                                       [](int) { return true; });
    if (a < 0) return fail("a_" + std::to_string(i));
    st.a.push_back(a);
    used.insert(a);
    if (i == t) break;
    const int ap = detail::lowest_where(g.neighbors(st.z[static_cast<std::size_t>(i - 1)]) & (s - used),
                                        [](int) { return true; });
    if (ap < 0) return fail("a'_" + std::to_string(i));
    st.a_prime.push_back(ap);
    used.insert(ap);
  }
  for (int i = 1; i < t; ++i) {
    const VertexSet common = g.neighbors(st.a_prime[static_cast<std::size_t>(i - 1)]) &
                             g.neighbors(st.a[static_cast<std::size_t>(i)]) & (st.b_side - used);
    const int w = common.lowest();
    if (w < 0) return fail("w_" + std::to_string(i + 1));
    st.w.push_back(w);
    used.insert(w);
  }

  for (int i = 1; i <= t; ++i) {
    const auto at = static_cast<std::size_t>(i - 1);
    st.path.insert(st.path.end(), {st.a[at], st.x[at], st.y[at]});
    if (i < t || !odd) st.path.push_back(st.z[at]);
    if (i < t) st.path.insert(st.path.end(), {st.a_prime[at], st.w[at]});
  }

  const int first = st.path.front();
  const int last = st.path.back();
  VertexSet interior = VertexSet::from(st.path);
  interior.erase(first);
  interior.erase(last);
  st.a_rest = st.a_side - interior;
  st.b_rest = st.b_side - interior;
  const VertexSet on_path = VertexSet::from(st.path);
  st.balanced = (st.a_side - on_path).size() == (st.b_side - on_path).size();
  if (!st.balanced || st.a_rest.size() != st.b_rest.size()) return fail("balance");
  if (st.a_rest.size() >= 2) st.berge = berge_biconnected_check(g, st.a_rest, st.b_rest);

  const HamiltonVerdict link = bipartite_hamiltonian_path(g, st.a_rest, st.b_rest, first, last, budget);
  result.verdict.method = link.method;
  result.verdict.expansions = link.expansions;
  if (!link.found()) {
    result.verdict.outcome = link.outcome;
    if (link.outcome == SearchOutcome::none) st.failed_step = "hamiltonian-path";
    return result;
  }
  std::vector<int> cycle = link.sequence;
  for (auto it = st.path.rbegin() + 1; it + 1 != st.path.rend(); ++it) cycle.push_back(*it);
  if (!verify_cycle(g, cycle)) throw std::logic_error("stitched cycle failed verification");
  result.verdict.outcome = SearchOutcome::found;
  result.verdict.sequence = detail::normalize_cycle(std::move(cycle));
  return result;
}

}  // namespace mpham
