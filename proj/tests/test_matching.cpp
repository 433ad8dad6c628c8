#include <doctest.h>

#include <random>
#include <set>

#include "capk/core.hpp"
#include "capk/matching.hpp"

using namespace capk;

namespace {

std::size_t brute_matching(const SimpleGraph& g) {
  const auto edges = g.edges();
  std::size_t best = 0;
  auto rec = [&](auto&& self, std::size_t idx, std::uint32_t used, std::size_t size) -> void {
    best = std::max(best, size);
    for (std::size_t e = idx; e < edges.size(); ++e) {
      const auto [u, v] = edges[e];
      const std::uint32_t mask = (1u << u) | (1u << v);
      if (used & mask) continue;
      self(self, e + 1, used | mask, size + 1);
    }
  };
  rec(rec, 0, 0, 0);
  return best;
}

void check_valid(const SimpleGraph& g, const Matching& m) {
  std::set<std::size_t> seen;
  for (const auto& [u, v] : m) {
    CHECK(u < v);
    CHECK(g.has_edge(u, v));
    CHECK(seen.insert(u).second);
    CHECK(seen.insert(v).second);
  }
}

}  // namespace

TEST_CASE("graph basics") {
  SimpleGraph g(3);
  CHECK(g.add_edge(0, 1));
  CHECK_FALSE(g.add_edge(1, 0));
  CHECK_THROWS_AS(g.add_edge(2, 2), InputError);
  CHECK(g.edge_count() == 1);
  CHECK(g.has_edge(1, 0));
}

TEST_CASE("small matchings") {
  SimpleGraph tri(3);
  tri.add_edge(0, 1);
  tri.add_edge(1, 2);
  tri.add_edge(0, 2);
  CHECK(max_matching(tri).size() == 1);
  CHECK_FALSE(has_perfect_matching(tri));

  SimpleGraph path(4);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  path.add_edge(2, 3);
  CHECK(max_matching(path).size() == 2);

  SimpleGraph two(4);
  two.add_edge(0, 1);
  two.add_edge(2, 3);
  CHECK(has_perfect_matching(two));

  SimpleGraph star(4);
  star.add_edge(0, 1);
  star.add_edge(0, 2);
  star.add_edge(0, 3);
  CHECK(max_matching(star).size() == 1);
  CHECK_FALSE(has_perfect_matching(star));

  CHECK_FALSE(has_perfect_matching(SimpleGraph(5)));
  CHECK(has_perfect_matching(SimpleGraph(0)));
}

TEST_CASE("petersen graph") {
  SimpleGraph g(10);
  for (std::size_t i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  CHECK(g.edge_count() == 15);
  const Matching m = max_matching(g);
  check_valid(g, m);
  CHECK(m.size() == 5);
  CHECK(brute_matching(g) == 5);
}

TEST_CASE("blossom needs contraction") {
  // 5-cycle with a pendant on each of two nodes; a naive augmenting search misses it
  SimpleGraph g(7);
  for (std::size_t i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);
  g.add_edge(0, 5);
  g.add_edge(2, 6);
  CHECK(max_matching(g).size() == brute_matching(g));
}

TEST_CASE("matching agrees with brute force on random graphs") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> size(1, 8);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = static_cast<std::size_t>(size(rng));
    const double p = u(rng);
    SimpleGraph g(n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        if (u(rng) < p) g.add_edge(a, b);
      }
    }
    const Matching m = max_matching(g);
    check_valid(g, m);
    CHECK(m.size() == brute_matching(g));
  }
}
