#include <catch2/catch_amalgamated.hpp>

#include "mpham/constructions.hpp"
#include "mpham/matching.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace mpham;

namespace {

PartiteGraph triangle() { return PartiteGraph({{0}, {1}, {2}}, {{0, 1}, {1, 2}, {0, 2}}); }
PartiteGraph star() { return PartiteGraph({{0}, {1, 2, 3}}, {{0, 1}, {0, 2}, {0, 3}}); }

void check_violation(const PartiteGraph& g, const ExpansionViolation& v) {
  CHECK(neighborhood(g, v.t).size() < v.t.size());
  CHECK(is_independent(g, v.independent_core));
  CHECK_FALSE(v.independent_core.empty());
  CHECK(neighborhood(g, v.independent_core).size() < v.independent_core.size());
  CHECK(v.independent_core.subset_of(v.t));
}

}  // namespace

TEST_CASE("weak expansion examples") {
  CHECK_FALSE(weak_expansion_audit(triangle()).has_value());
  const auto star_v = weak_expansion_audit(star());
  REQUIRE(star_v);
  CHECK(star_v->independent_core == VertexSet{1, 2, 3});

  const auto f2 = build_tightness(Partition::parse("5,5"));
  const auto v = weak_expansion_audit(f2.graph);
  REQUIRE(v);
  CHECK(v->independent_core == f2.certificate.s);
  CHECK(neighborhood(f2.graph, v->independent_core).size() == 2);

  CHECK_THROWS_AS(weak_expansion_audit(PartiteGraph::complete_multipartite({13, 12})), ResourceLimit);
  CHECK(weak_expansion_audit(PartiteGraph::complete_multipartite({13, 12}), 25).has_value());
  CHECK_FALSE(weak_expansion_audit(PartiteGraph::complete_multipartite({12, 12})).has_value());
}

TEST_CASE("maximum bipartite matching examples") {
  std::vector<Edge> k33;
  for (int l = 0; l < 3; ++l)
    for (int r = 0; r < 3; ++r) k33.emplace_back(l, r);
  CHECK(maximum_bipartite_matching(3, 3, k33).size() == 3);
  CHECK(maximum_bipartite_matching(1, 3, {{0, 0}, {0, 1}, {0, 2}}).size() == 1);
  // 6-cycle l0 r0 l1 r1 l2 r2 l0
  const std::vector<Edge> c6{{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}, {0, 2}};
  const auto m = maximum_bipartite_matching(3, 3, c6);
  CHECK(m.size() == 3);
  CHECK_THROWS_AS(maximum_bipartite_matching(2, 2, {{0, 5}}), InvalidArguments);
}

TEST_CASE("fractional matching examples") {
  const auto tri = perfect_fractional_matching(triangle());
  REQUIRE(std::holds_alternative<FractionalMatching>(tri));
  const auto& fm = std::get<FractionalMatching>(tri);
  CHECK(fm.edges.empty());
  REQUIRE(fm.odd_cycles.size() == 1);
  CHECK(fm.odd_cycles[0].size() == 3);

  const PartiteGraph edge({{0}, {1}}, {{0, 1}});
  const auto e = perfect_fractional_matching(edge);
  REQUIRE(std::holds_alternative<FractionalMatching>(e));
  CHECK(std::get<FractionalMatching>(e).edges == std::vector<Edge>{{0, 1}});
  CHECK(std::get<FractionalMatching>(e).odd_cycles.empty());

  const auto s = perfect_fractional_matching(star());
  REQUIRE(std::holds_alternative<ExpansionViolation>(s));
  const auto& v = std::get<ExpansionViolation>(s);
  CHECK(v.independent_core == VertexSet{1, 2, 3});
  check_violation(star(), v);
}

TEST_CASE("even cycles are split into alternate edges") {
  // 6-cycle as a bipartite graph; the doubled matching may come back as one
  // 6-cycle or three 2-cycles, either way only edges are reported
  const PartiteGraph c6({{0, 2, 4}, {1, 3, 5}}, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
  const auto r = perfect_fractional_matching(c6);
  REQUIRE(std::holds_alternative<FractionalMatching>(r));
  const auto& fm = std::get<FractionalMatching>(r);
  CHECK(fm.odd_cycles.empty());
  CHECK(fm.edges.size() == 3);
  CHECK(validate_fractional_matching(c6, fm));
}

TEST_CASE("validator rejects bad covers") {
  const auto g = triangle();
  CHECK_FALSE(validate_fractional_matching(g, {{{0, 1}}, {}}));            // vertex 2 uncovered
  CHECK_FALSE(validate_fractional_matching(g, {{{0, 1}, {1, 2}}, {}}));    // overlap
  CHECK_FALSE(validate_fractional_matching(g, {{}, {{0, 1}}}));            // cycle too short
  CHECK(validate_fractional_matching(g, {{}, {{0, 2, 1}}}));
  const PartiteGraph p3({{0, 2}, {1}}, {{0, 1}, {1, 2}});
  CHECK_FALSE(validate_fractional_matching(p3, {{}, {{0, 1, 2}}}));       // 0-2 not an edge
}

TEST_CASE("random graphs: sound both ways and agree with brute force") {
  gen::Rng rng(5);
  int successes = 0, failures = 0;
  for (int round = 0; round < 300; ++round) {
    std::uniform_int_distribution<int> size(1, 4), parts(2, 4);
    std::vector<int> sizes;
    const int k = parts(rng);
    for (int i = 0; i < k; ++i) sizes.push_back(size(rng));
    std::sort(sizes.rbegin(), sizes.rend());
    if (std::accumulate(sizes.begin(), sizes.end(), 0) > 12) continue;
    std::uniform_real_distribution<double> density(0.15, 0.8);
    const auto g = gen::random_partite(sizes, density(rng), rng);
    const auto result = perfect_fractional_matching(g);
    const bool brute = oracle::edge_odd_cycle_cover(oracle::matrix_of(g));
    const auto weak = weak_expansion_audit(g);
    if (const auto* fm = std::get_if<FractionalMatching>(&result)) {
      ++successes;
      CHECK(validate_fractional_matching(g, *fm));
      CHECK(brute);
      CHECK_FALSE(weak.has_value());
    } else {
      ++failures;
      check_violation(g, std::get<ExpansionViolation>(result));
      CHECK_FALSE(brute);
      REQUIRE(weak.has_value());
      check_violation(g, *weak);
    }
  }
  CHECK(successes > 20);
  CHECK(failures > 20);
}

TEST_CASE("degree condition implies weak expansion and a fractional matching") {
  gen::Rng rng(17);
  int checked = 0;
  for (int round = 0; round < 120; ++round) {
    std::uniform_int_distribution<int> n_pick(4, 16);
    const int n = n_pick(rng);
    std::uniform_int_distribution<int> k_pick(2, std::min(n, 6));
    const int k = k_pick(rng);
    const auto parts = enumerate_partitions(n, k, true);
    if (parts.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
    const Partition p = parts[pick(rng)];
    const auto prof = profile(p);
    std::vector<int> need;
    for (int s : p.parts()) need.push_back(static_cast<int>(ceil_of(prof.phi - s)));
    const auto g = gen::thinned(p.parts(), need, 1000, rng);
    REQUIRE(check_degree_condition(g, prof, Rational(0)).pass);
    ++checked;
    CHECK_FALSE(weak_expansion_audit(g).has_value());
    const auto r = perfect_fractional_matching(g);
    REQUIRE(std::holds_alternative<FractionalMatching>(r));
    CHECK(validate_fractional_matching(g, std::get<FractionalMatching>(r)));
  }
  CHECK(checked >= 100);
}
