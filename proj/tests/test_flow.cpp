#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "capk/flow.hpp"
#include "capk/rounding.hpp"
#include "helpers.hpp"

using namespace capk;

namespace {

// Plain Ford-Fulkerson by DFS on a dense capacity table, for cross-checks.
std::int64_t dense_max_flow(std::vector<std::vector<std::int64_t>> cap, std::size_t s,
                            std::size_t t) {
  const std::size_t n = cap.size();
  std::int64_t total = 0;
  for (;;) {
    std::vector<int> prev(n, -1);
    std::vector<std::size_t> stack{s};
    prev[s] = static_cast<int>(s);
    while (!stack.empty() && prev[t] < 0) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < n; ++v) {
        if (prev[v] < 0 && cap[u][v] > 0) {
          prev[v] = static_cast<int>(u);
          stack.push_back(v);
        }
      }
    }
    if (prev[t] < 0) return total;
    std::int64_t push = INT64_MAX;
    for (std::size_t v = t; v != s; v = prev[v]) push = std::min(push, cap[prev[v]][v]);
    for (std::size_t v = t; v != s; v = prev[v]) {
      cap[prev[v]][v] -= push;
      cap[v][prev[v]] += push;
    }
    total += push;
  }
}

}  // namespace

TEST_CASE("max flow without lower bounds matches a reference") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> cap(0, 4);
  for (int trial = 0; trial < 100; ++trial) {
    FlowNetwork net;
    const std::size_t extra = 5;
    for (std::size_t i = 0; i < extra; ++i) net.add_node({NodeKind::Client, i, 0});
    const std::size_t n = extra + 2;
    std::vector<std::vector<std::int64_t>> dense(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) {
        if (u == v || v == net.source() || u == net.sink()) continue;
        const int c = cap(rng);
        if (c == 0) continue;
        net.add_arc(u, v, 0, c);
        dense[u][v] += c;
      }
    }
    const std::int64_t best = dense_max_flow(dense, net.source(), net.sink());
    CHECK(max_flow_lower_bounds(net, best).has_value());
    CHECK_FALSE(max_flow_lower_bounds(net, best + 1).has_value());
  }
}

TEST_CASE("single path with unit lower bounds") {
  FlowNetwork net;
  const auto j = net.add_node({NodeKind::Client, 0, 0});
  const auto ic = net.add_node({NodeKind::FacilityColor, 0, 0});
  const auto i = net.add_node({NodeKind::Facility, 0, 0});
  net.add_arc(net.source(), j, 1, 1);
  net.add_arc(j, ic, 1, 1);
  net.add_arc(ic, i, 1, 1);
  net.add_arc(i, net.sink(), 1, 1);
  const auto flow = max_flow_lower_bounds(net, 1);
  REQUIRE(flow.has_value());
  for (auto f : flow->flow) CHECK(f == 1);
  CHECK_FALSE(max_flow_lower_bounds(net, 2).has_value());
  CHECK_FALSE(max_flow_lower_bounds(net, 0).has_value());

  FlowNetwork bad;
  bad.add_arc(0, 1, 2, 1);
  CHECK_THROWS_AS(max_flow_lower_bounds(bad, 0), InputError);
}

TEST_CASE("assignment network bounds") {
  // facility 0 serves red 0, 2 at 0.75 each and blue 1 at 0.5
  const Instance inst = capk::testing::line({0, 0, 0, 0}, {0, 1, 0, 1}, 2, 0.5);
  FractionalSolution frac;
  frac.y[0] = 1.0;
  frac.y[3] = 1.0;
  frac.x[{0, 0}] = 0.75;
  frac.x[{0, 2}] = 0.75;
  frac.x[{0, 1}] = 0.5;
  frac.x[{3, 0}] = 0.25;
  frac.x[{3, 2}] = 0.25;
  frac.x[{3, 1}] = 0.5;
  frac.x[{3, 3}] = 1.0;
  const FlowNetwork net = build_assignment_network(inst, frac, {0, 3});
  bool saw_red = false, saw_blue = false;
  for (const FlowArc& a : net.arcs()) {
    const FlowNode& from = net.nodes()[a.from];
    if (from.kind == NodeKind::FacilityColor && from.point == 0) {
      if (from.color == 0) {
        saw_red = true;
        CHECK(a.lower == 1);
        CHECK(a.capacity == 2);
      } else {
        saw_blue = true;
        CHECK(a.lower == 0);
        CHECK(a.capacity == 1);
      }
    }
    if (from.kind == NodeKind::Facility && from.point == 3) {
      CHECK(a.lower == 2);
      CHECK(a.capacity == 2);
    }
  }
  CHECK(saw_red);
  CHECK(saw_blue);

  const auto flow = max_flow_lower_bounds(net, 4);
  REQUIRE(flow.has_value());
  const auto assign = extract_assignment(inst, net, *flow);
  for (PointId j = 0; j < 4; ++j) CHECK(frac.x_at(assign[j], j) > 0.0);

  std::ostringstream dot;
  write_dot(net, dot, &*flow);
  CHECK(dot.str().find("digraph") == 0);

  FractionalSolution stray = frac;
  stray.x[{1, 1}] = 0.1;
  CHECK_THROWS_AS(build_assignment_network(inst, stray, {0, 3}), InputError);
}

TEST_CASE("integral assignment gives tight bounds") {
  const Instance inst = capk::testing::line({0, 0}, {0, 1}, 1, 0.5);
  FractionalSolution frac;
  frac.y[0] = 1.0;
  frac.x[{0, 0}] = 1.0;
  frac.x[{0, 1}] = 1.0;
  const FlowNetwork net = build_assignment_network(inst, frac, {0});
  for (const FlowArc& a : net.arcs()) {
    if (net.nodes()[a.from].kind != NodeKind::Client && a.from != net.source()) {
      CHECK(a.lower == a.capacity);
    }
    if (net.nodes()[a.from].kind == NodeKind::Facility) CHECK(a.lower == 2);
  }
}
