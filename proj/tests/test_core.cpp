#include <doctest.h>

#include <random>

#include "capk/core.hpp"
#include "helpers.hpp"

using namespace capk;
using capk::testing::line;

TEST_CASE("distance") {
  Point p{0, {0.0, 0.0}, 0};
  Point q{1, {3.0, 4.0}, 0};
  CHECK(distance(p, p) == 0.0);
  CHECK(distance(p, q) == doctest::Approx(5.0));
  CHECK_THROWS_AS(distance(p, Point{2, {1.0}, 0}), InputError);

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int trial = 0; trial < 500; ++trial) {
    Point a{0, {u(rng), u(rng), u(rng)}, 0};
    Point b{1, {u(rng), u(rng), u(rng)}, 0};
    Point c{2, {u(rng), u(rng), u(rng)}, 0};
    CHECK(distance(a, b) == distance(b, a));
    const double ab = distance(a, b), bc = distance(b, c), ac = distance(a, c);
    CHECK(ac <= (ab + bc) * (1.0 + 1e-9));
  }
}

TEST_CASE("instance validation") {
  CHECK_THROWS_AS(Instance({}, 1, 0.5), InputError);
  CHECK_THROWS_AS(line({0.0}, {0}, 0), InputError);
  CHECK_THROWS_AS(line({0.0}, {0}, 1, 0.0), InputError);
  CHECK_THROWS_AS(line({0.0}, {0}, 1, 1.5), InputError);
  CHECK_THROWS_AS(line({0.0, 1.0}, {0, 2}, 1), InputError);  // color 1 missing
  std::vector<Point> ragged{{0, {0.0}, 0}, {1, {0.0, 1.0}, 0}};
  CHECK_THROWS_AS(Instance(ragged, 1, 1.0), InputError);

  const Instance inst = line({0, 1, 10, 11}, {0, 1, 0, 1}, 2, 0.5);
  CHECK(inst.size() == 4);
  CHECK(inst.num_colors() == 2);
  CHECK(inst.color_label(1) == "1");
  CHECK(inst.with_k(3).k() == 3);
  CHECK(inst.with_alpha(0.25).alpha() == 0.25);
}

TEST_CASE("solution_cost") {
  const Instance same = line({2, 2, 2}, {0, 0, 0}, 1);
  CHECK(solution_cost(same, ClusteringSolution{{1}, {1, 1, 1}}) == 0.0);

  const Instance inst = line({0, 1, 10, 11}, {}, 2);
  const ClusteringSolution sol = nearest_solution(inst, {0, 3});
  CHECK(sol.assign == std::vector<PointId>{0, 0, 3, 3});
  CHECK(solution_cost(inst, sol) == 1.0);

  const Instance single = line({4}, {}, 1);
  CHECK(solution_cost(single, ClusteringSolution{{0}, {0}}) == 0.0);

  CHECK_THROWS_AS(solution_cost(inst, ClusteringSolution{{0}, {0, 0, 3, 3}}), InputError);
  CHECK_THROWS_AS(solution_cost(inst, ClusteringSolution{{0}, {0, 0}}), InputError);
  CHECK_THROWS_AS(validate_solution(inst.with_k(1), ClusteringSolution{{0, 3}, {0, 0, 3, 3}}),
                  InputError);
}

TEST_CASE("solution cost under center removal") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Instance inst = capk::testing::random_instance(rng, 12, 2, 2, 4, 1.0);
    std::vector<PointId> centers{0, 3, 5, 9};
    const double before = solution_cost(inst, nearest_solution(inst, centers));
    centers.erase(centers.begin() + trial % 4);
    CHECK(solution_cost(inst, nearest_solution(inst, centers)) >= before);
  }
}

TEST_CASE("check_capped") {
  // red = 0, blue = 1, green = 2
  const Instance rb = line({0, 0}, {0, 1}, 1, 0.5);
  CHECK(check_capped(rb, ClusteringSolution{{0}, {0, 0}}));
  const Instance rrb = line({0, 0, 0}, {0, 0, 1}, 1, 0.5);
  CHECK_FALSE(check_capped(rrb, ClusteringSolution{{0}, {0, 0, 0}}));
  const Instance rrbg = line({0, 0, 0, 0}, {0, 0, 1, 2}, 1, 0.5);
  CHECK(check_capped(rrbg, ClusteringSolution{{0}, {0, 0, 0, 0}}));

  // alpha = 0.1 with exactly one point of each of 10 colors
  std::vector<double> xs(10, 0.0);
  std::vector<ColorId> cs(10);
  for (int i = 0; i < 10; ++i) cs[i] = i;
  const Instance tenth = line(xs, cs, 1, 0.1);
  CHECK(check_capped(tenth, ClusteringSolution{{0}, std::vector<PointId>(10, 0)}));
}

TEST_CASE("check_capped is monotone in alpha") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Instance inst = capk::testing::random_instance(rng, 9, 2, 3, 3, 0.3);
    const ClusteringSolution sol = nearest_solution(inst, {0, 4, 8});
    bool seen = false;
    for (double a : {0.3, 0.34, 0.4, 0.5, 0.6, 0.75, 1.0}) {
      const bool capped = check_capped(inst.with_alpha(a), sol);
      if (seen) CHECK(capped);
      seen = seen || capped;
    }
    CHECK(check_capped(inst.with_alpha(1.0), sol));
  }
}

TEST_CASE("candidate_radii") {
  const auto grid = candidate_radii(line({0, 1, 3}, {}, 1));
  CHECK(grid.values == std::vector<double>{0.0, 1.0, 2.0, 3.0});
  CHECK(candidate_radii(line({5}, {}, 1)).values == std::vector<double>{0.0});

  std::mt19937_64 rng(5);
  const Instance inst = capk::testing::random_instance(rng, 20, 3, 2, 2, 1.0);
  const auto g = candidate_radii(inst);
  CHECK(g.values.size() <= 20 * 19 / 2 + 1);
  for (std::size_t i = 1; i < g.values.size(); ++i) CHECK(g.values[i] > g.values[i - 1]);
}

TEST_CASE("explicit metric") {
  DistanceMatrix m(3);
  m.set(0, 1, 1.0);
  m.set(1, 2, 1.0);
  m.set(0, 2, 2.0);
  std::vector<Point> pts{{0, {}, 0}, {1, {}, 1}, {2, {}, 0}};
  const Instance inst(pts, m, 1, 1.0);
  CHECK(inst.has_explicit_metric());
  CHECK(inst.dist(2, 0) == 2.0);
  CHECK(candidate_radii(inst).values == std::vector<double>{0.0, 1.0, 2.0});
}

TEST_CASE("color histograms and clusters") {
  const Instance inst = line({0, 1, 10, 11}, {0, 1, 1, 1}, 2, 0.5);
  const ClusteringSolution sol{{0, 3}, {0, 0, 3, 3}};
  const auto clusters = clusters_of(sol);
  REQUIRE(clusters.size() == 2);
  CHECK(clusters[0] == std::vector<PointId>{0, 1});
  const auto hist = color_histograms(inst, sol);
  CHECK(hist[0] == std::vector<std::size_t>{1, 1});
  CHECK(hist[1] == std::vector<std::size_t>{0, 2});
}
