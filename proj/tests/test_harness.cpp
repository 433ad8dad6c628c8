#include <doctest.h>

#include <json.hpp>

#include <random>
#include <set>
#include <sstream>

#include "capk/dataset.hpp"
#include "capk/greedy.hpp"
#include "capk/harness.hpp"
#include "capk/oracle.hpp"
#include "helpers.hpp"

using namespace capk;
using capk::testing::line;
using capk::testing::unit_square;

TEST_CASE("additive violation") {
  const Instance balanced = line({0, 0, 9, 9}, {0, 1, 0, 1}, 2, 0.5);
  CHECK(max_additive_violation(balanced, nearest_solution(balanced, {0, 2}), 0.5) == 0);
  const Instance rrb = line({0, 0, 0}, {0, 0, 1}, 1, 0.5);
  CHECK(max_additive_violation(rrb, ClusteringSolution{{0}, {0, 0, 0}}, 0.5) == 1);
  // floor(10 * 0.1) must be 1, not 0
  std::vector<ColorId> cs(10);
  for (int i = 0; i < 10; ++i) cs[i] = i;
  const Instance tenth = line(std::vector<double>(10, 0.0), cs, 1, 0.1);
  CHECK(max_additive_violation(tenth, ClusteringSolution{{0}, std::vector<PointId>(10, 0)}, 0.1) ==
        0);
}

TEST_CASE("geometric grid") {
  const RadiusGrid g = geometric_grid(1.0, 2.0, 0.5, 0.0);
  CHECK(g.values == std::vector<double>{1.0, 1.5, 2.0});
  const RadiusGrid z = geometric_grid(0.0, 4.0, 1.0, 0.5);
  CHECK(z.values == std::vector<double>{0.0, 0.5, 1.0, 2.0, 4.0});
  CHECK(geometric_grid(0.0, 0.0, 0.1, 0.0).values == std::vector<double>{0.0});
  const RadiusGrid exact = geometric_grid(1.0, 1.21, 0.1, 0.0);
  CHECK(exact.values.back() == 1.21);
  CHECK_THROWS_AS(geometric_grid(1.0, 2.0, 0.0, 0.0), InputError);
}

TEST_CASE("faster algorithm") {
  RunConfig cfg;
  cfg.k = 2;
  cfg.alpha = 0.5;
  cfg.epsilon = 0.1;
  cfg.m = 2;
  const FasterResult r = faster_algorithm(unit_square(), cfg);
  REQUIRE(r.solution.has_value());
  CHECK(max_additive_violation(unit_square(), *r.solution, 0.5) <= 1);
  CHECK(solution_cost(unit_square(), *r.solution) <= 3.0 * r.lambda + 1e-9);
  CHECK(r.grid.values.front() == r.lambda_greedy / 2.0);
  CHECK(r.grid.values.back() == 2.0 * r.lambda_far);

  cfg.m = 1;
  const FasterResult one = faster_algorithm(unit_square(), cfg);
  const auto greedy = greedy_k_center(unit_square());
  std::vector<PointId> centers = one.coreset;
  std::sort(centers.begin(), centers.end());
  CHECK(centers == greedy.solution.centers);

  const Instance skewed = line({0, 1, 2, 3}, {0, 0, 0, 1}, 2, 0.5);
  CHECK_FALSE(faster_algorithm(skewed, cfg).solution.has_value());
}

TEST_CASE("faster algorithm lower end is a lower bound") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const Instance inst = capk::testing::random_feasible_instance(rng, 9, 2, 3, 2, 0.5);
    const auto opt = brute_force_capped_opt(inst);
    if (!opt) continue;
    CHECK(greedy_k_center(inst).cost / 2.0 <= opt->cost + 1e-12);
  }
}

TEST_CASE("grid value is within 1 + eps of the restricted minimum") {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 20; ++trial) {
    const Instance inst = capk::testing::random_feasible_instance(rng, 12, 2, 3, 3, 0.5);
    RunConfig cfg;
    cfg.k = 3;
    cfg.alpha = 0.5;
    cfg.epsilon = 0.1;
    const FasterResult r = faster_algorithm(inst, cfg);
    REQUIRE(r.solution.has_value());
    CHECK(solution_cost(inst, *r.solution) <= 3.0 * r.lambda + 1e-9);
    // smallest radius on the exact candidate set where the restricted system is feasible
    const auto exact = min_feasible_radius(inst, candidate_radii(inst), r.coreset);
    REQUIRE(exact.has_value());
    CHECK(r.lambda >= exact->lambda * (1 - 1e-12));
  }
}

TEST_CASE("run reports") {
  std::mt19937_64 rng(12);
  const Instance inst = capk::testing::random_feasible_instance(rng, 40, 2, 4, 3, 0.5);
  std::set<std::string> keys;
  for (Algorithm a : {Algorithm::Greedy, Algorithm::Random, Algorithm::Lp, Algorithm::Half}) {
    RunConfig cfg;
    cfg.k = 3;
    cfg.alpha = 0.5;
    cfg.algorithm = a;
    cfg.seed = 4;
    const CappedInstanceReport r1 = run(inst, cfg, false);
    const CappedInstanceReport r2 = run(inst, cfg, false);
    std::ostringstream j1, j2;
    write_json(r1, inst, j1);
    write_json(r2, inst, j2);
    CHECK(j1.str() == j2.str());
    CHECK(r1.status == "ok");
    CHECK(r1.delta >= 0);
    if (a == Algorithm::Lp) CHECK(r1.delta <= 1);
    if (a == Algorithm::Half) CHECK(r1.delta == 0);
    const auto parsed = nlohmann::json::parse(j1.str());
    std::set<std::string> these;
    for (auto it = parsed.begin(); it != parsed.end(); ++it) these.insert(it.key());
    if (keys.empty()) keys = these;
    CHECK(these == keys);
  }
  CHECK(keys.count("wall_ms") == 1);
  CHECK(keys.count("assignment") == 1);

  const Instance skewed = line({0, 1, 2, 3}, {0, 0, 0, 1}, 2, 0.5);
  RunConfig cfg;
  cfg.k = 2;
  const CappedInstanceReport bad = run(skewed, cfg, false);
  CHECK(bad.status == "infeasible");
  std::ostringstream j;
  write_json(bad, skewed, j);
  const auto parsed = nlohmann::json::parse(j.str());
  std::set<std::string> these;
  for (auto it = parsed.begin(); it != parsed.end(); ++it) these.insert(it.key());
  CHECK(these == keys);

  std::ostringstream csv;
  write_csv(std::vector<CappedInstanceReport>{bad}, csv);
  CHECK(csv.str().rfind("algorithm,k,alpha", 0) == 0);
  std::ostringstream svg;
  write_svg(std::vector<CappedInstanceReport>{bad}, svg);
  CHECK(svg.str().find("<svg") == 0);
}

TEST_CASE("random baseline average") {
  std::mt19937_64 rng(13);
  const Instance inst = capk::testing::random_instance(rng, 30, 2, 3, 4, 0.5);
  const RandomBaselineSummary s = random_baseline_average(inst, 100);
  REQUIRE(s.costs.size() == 10);
  double sum = 0.0;
  for (std::size_t i = 0; i < 10; ++i) {
    CHECK(s.costs[i] == solution_cost(inst, random_baseline(inst, 100 + i)));
    sum += s.costs[i];
  }
  CHECK(s.mean_cost == doctest::Approx(sum / 10.0));
}

TEST_CASE("config validation") {
  RunConfig cfg;
  cfg.epsilon = 0.0;
  CHECK_THROWS_AS(validate_config(cfg), InputError);
  cfg = RunConfig{};
  cfg.m = 0;
  CHECK_THROWS_AS(validate_config(cfg), InputError);
  CHECK(parse_algorithm("half") == Algorithm::Half);
  CHECK_THROWS_AS(parse_algorithm("kmeans"), InputError);
}
