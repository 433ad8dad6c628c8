#include <doctest.h>

#include <random>

#include "capk/halfcap.hpp"
#include "capk/harness.hpp"
#include "capk/oracle.hpp"
#include "helpers.hpp"

using namespace capk;
using capk::testing::line;
using capk::testing::unit_square;

TEST_CASE("threshold graph") {
  const Instance distinct = line({0, 1, 2}, {0, 1, 0}, 1, 0.5);
  CHECK(threshold_graph(distinct, 0.0).edge_count() == 0);
  const Instance same = line({0, 0}, {0, 0}, 1, 0.5);
  CHECK(threshold_graph(same, 0.0).edge_count() == 0);
  const Instance rb = line({0, 1}, {0, 1}, 1, 0.5);
  CHECK(threshold_graph(rb, 1.0).edge_count() == 1);
  CHECK(threshold_graph(rb, 0.999).edge_count() == 0);
}

TEST_CASE("components") {
  SimpleGraph g(5);
  g.add_edge(3, 1);
  g.add_edge(4, 0);
  const auto comps = connected_components(g);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == std::vector<PointId>{0, 4});
  CHECK(comps[1] == std::vector<PointId>{1, 3});
  CHECK(comps[2] == std::vector<PointId>{2});
}

TEST_CASE("caplet decomposition") {
  SimpleGraph edge(2);
  edge.add_edge(0, 1);
  const auto one = caplet_decompose({0, 1}, {0, 1}, edge);
  REQUIRE(one.has_value());
  CHECK(*one == CapletDecomposition{Caplet{{0, 1}}});

  SimpleGraph rrb(3);
  rrb.add_edge(0, 2);
  rrb.add_edge(1, 2);
  CHECK_FALSE(caplet_decompose({0, 1, 2}, {0, 0, 1}, rrb).has_value());

  SimpleGraph rgb(3);
  rgb.add_edge(0, 1);
  rgb.add_edge(1, 2);
  rgb.add_edge(0, 2);
  const auto tri = caplet_decompose({0, 1, 2}, {0, 1, 2}, rgb);
  REQUIRE(tri.has_value());
  CHECK(*tri == CapletDecomposition{Caplet{{0, 1, 2}}});

  // odd component: triangle must leave a perfect matching behind
  SimpleGraph five(5);
  for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}}) {
    five.add_edge(a, b);
  }
  const auto dec = caplet_decompose({0, 1, 2, 3, 4}, {0, 1, 2, 0, 1}, five);
  REQUIRE(dec.has_value());
  CHECK(dec->size() == 2);
  CHECK(dec->front().members == std::vector<PointId>{0, 1, 2});

  CHECK_FALSE(caplet_decompose({0}, {0}, SimpleGraph(1)).has_value());
}

TEST_CASE("caplet algorithm examples") {
  const auto sq = non_dominant_k_center(unit_square());
  REQUIRE(sq.has_value());
  CHECK(check_capped(unit_square(), sq->solution));
  CHECK(solution_cost(unit_square(), sq->solution) <= 12.0 * 1.0);
  for (const auto& hist : color_histograms(unit_square(), sq->solution)) {
    CHECK(hist[0] == hist[1]);
  }

  const Instance pairs = line({0, 0, 5, 5}, {0, 1, 0, 1}, 2, 0.5);
  const auto p = non_dominant_k_center(pairs);
  REQUIRE(p.has_value());
  CHECK(p->lambda == 0.0);
  CHECK(solution_cost(pairs, p->solution) == 0.0);

  const Instance skewed = line({0, 1, 2, 3}, {0, 0, 0, 1}, 2, 0.5);
  CHECK_FALSE(non_dominant_k_center(skewed).has_value());

  CHECK_THROWS_AS(non_dominant_k_center(unit_square(2, 0.4)), InputError);
}

TEST_CASE("caplet algorithm guarantees against the oracle") {
  std::mt19937_64 rng(123);
  int solved = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const Instance inst =
        capk::testing::random_feasible_instance(rng, 4 + trial % 7, 2, (trial % 7) % 2 ? 3 : 2 + trial % 2, 1 + trial % 3, 0.5);
    const auto opt = brute_force_capped_opt(inst);
    const auto res = non_dominant_k_center(inst);
    if (!opt) continue;
    REQUIRE(res.has_value());
    ++solved;
    CHECK(check_capped(inst, res->solution));
    CHECK(max_additive_violation(inst, res->solution, 0.5) == 0);
    CHECK(solution_cost(inst, res->solution) <= 12.0 * opt->cost + 1e-9);
    CHECK(res->lambda <= opt->cost);
    for (const Caplet& K : res->caplets) {
      const PointId c = res->solution.assign[K.members.front()];
      for (PointId j : K.members) {
        CHECK(res->solution.assign[j] == c);
        for (PointId o : K.members) CHECK(inst.dist(j, o) <= 10.0 * res->lambda * (1 + 1e-12));
        CHECK(inst.dist(j, c) <= 12.0 * res->lambda * (1 + 1e-12));
      }
    }
  }
  CHECK(solved > 50);
}
