#include "capk/halfcap.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "capk/greedy.hpp"
#include "capk/lp.hpp"

namespace capk {

SimpleGraph threshold_graph(const Instance& inst, double tau) {
  if (!(tau >= 0.0)) throw InputError("threshold_graph: tau must be >= 0");
  SimpleGraph g(inst.size());
  for (PointId a = 0; a < inst.size(); ++a) {
    for (PointId b = a + 1; b < inst.size(); ++b) {
      if (inst.color(a) != inst.color(b) && within_radius(inst.dist(a, b), tau)) g.add_edge(a, b);
    }
  }
  return g;
}

std::vector<std::vector<PointId>> connected_components(const SimpleGraph& g) {
  std::vector<std::vector<PointId>> out;
  std::vector<bool> seen(g.size(), false);
  for (std::size_t s = 0; s < g.size(); ++s) {
    if (seen[s]) continue;
    std::vector<PointId> comp{s};
    seen[s] = true;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (std::size_t v : g.neighbors(comp[head])) {
        if (!seen[v]) {
          seen[v] = true;
          comp.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

namespace {

// Perfect matching of g restricted to `nodes`, or empty optional.
std::optional<CapletDecomposition> match_all(const std::vector<PointId>& nodes,
                                             const SimpleGraph& g) {
  if (nodes.size() % 2 != 0) return std::nullopt;
  std::vector<std::size_t> local(g.size(), std::numeric_limits<std::size_t>::max());
  for (std::size_t t = 0; t < nodes.size(); ++t) local[nodes[t]] = t;
  SimpleGraph sub(nodes.size());
  for (std::size_t t = 0; t < nodes.size(); ++t) {
    for (std::size_t v : g.neighbors(nodes[t])) {
      const std::size_t u = local[v];
      if (u != std::numeric_limits<std::size_t>::max() && t < u) sub.add_edge(t, u);
    }
  }
  const Matching m = max_matching(sub);
  if (2 * m.size() != nodes.size()) return std::nullopt;
  CapletDecomposition out;
  for (const auto& [a, b] : m) {
    out.push_back(Caplet{{std::min(nodes[a], nodes[b]), std::max(nodes[a], nodes[b])}});
  }
  return out;
}

}  // namespace

std::optional<CapletDecomposition> caplet_decompose(const std::vector<PointId>& nodes,
                                                    const std::vector<ColorId>& colors,
                                                    const SimpleGraph& g) {
  std::vector<PointId> sorted = nodes;
  std::sort(sorted.begin(), sorted.end());
  for (PointId v : sorted) {
    if (v >= g.size() || v >= colors.size()) throw InputError("caplet_decompose: node out of range");
  }
  if (sorted.size() < 2) return std::nullopt;
  if (sorted.size() % 2 == 0) return match_all(sorted, g);

  for (std::size_t a = 0; a < sorted.size(); ++a) {
    for (std::size_t b = a + 1; b < sorted.size(); ++b) {
      if (!g.has_edge(sorted[a], sorted[b])) continue;
      for (std::size_t c = b + 1; c < sorted.size(); ++c) {
        const PointId u = sorted[a], v = sorted[b], w = sorted[c];
        if (!g.has_edge(u, w) || !g.has_edge(v, w)) continue;
        if (colors[u] == colors[v] || colors[u] == colors[w] || colors[v] == colors[w]) continue;
        std::vector<PointId> rest;
        for (PointId x : sorted) {
          if (x != u && x != v && x != w) rest.push_back(x);
        }
        if (auto dec = match_all(rest, g)) {
          dec->insert(dec->begin(), Caplet{{u, v, w}});
          return dec;
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<HalfCapResult> non_dominant_k_center(const Instance& inst) {
  if (std::abs(inst.alpha() - 0.5) > 1e-12) {
    throw InputError("non_dominant_k_center: requires alpha = 1/2");
  }
  const std::size_t n = inst.size();
  std::vector<ColorId> colors(n);
  for (PointId j = 0; j < n; ++j) colors[j] = inst.color(j);

  // Every point needs a differently colored point within 2 lambda, or its
  // component is a singleton.
  double floor_lambda = 0.0;
  for (PointId j = 0; j < n; ++j) {
    double nearest = std::numeric_limits<double>::infinity();
    for (PointId o = 0; o < n; ++o) {
      if (colors[o] != colors[j]) nearest = std::min(nearest, inst.dist(j, o));
    }
    floor_lambda = std::max(floor_lambda, nearest / 2.0);
  }
  if (!std::isfinite(floor_lambda)) return std::nullopt;

  for (double lambda : candidate_radii(inst).values) {
    if (lambda * 2.0 * (1.0 + kRadiusSlack) < floor_lambda * 2.0) continue;
    const SimpleGraph reach = threshold_graph(inst, 2.0 * lambda);
    const SimpleGraph wide = threshold_graph(inst, 10.0 * lambda);

    std::vector<Caplet> caplets;
    bool rejected = false;
    for (const auto& comp : connected_components(reach)) {
      auto dec = caplet_decompose(comp, colors, wide);
      if (!dec) {
        rejected = true;
        break;
      }
      caplets.insert(caplets.end(), dec->begin(), dec->end());
    }
    if (rejected) continue;

    std::vector<PointId> reps;
    reps.reserve(caplets.size());
    for (const Caplet& K : caplets) reps.push_back(K.members.front());
    const SubsetGreedyResult g =
        greedy_k_center_on(inst, reps, static_cast<std::size_t>(inst.k()));
    if (g.cost > 2.0 * lambda * (1.0 + kRadiusSlack)) continue;

    HalfCapResult res;
    res.lambda = lambda;
    res.greedy_cost = g.cost;
    res.solution.assign.assign(n, 0);
    for (std::size_t t = 0; t < caplets.size(); ++t) {
      for (PointId j : caplets[t].members) res.solution.assign[j] = g.assign[t];
    }
    res.solution.centers = g.centers;
    std::sort(res.solution.centers.begin(), res.solution.centers.end());
    res.caplets = std::move(caplets);
    return res;
  }
  return std::nullopt;
}

}  // namespace capk
