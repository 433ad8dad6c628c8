#include "capk/hardness.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "capk/matching.hpp"

namespace capk {

std::optional<std::pair<int, int>> star_counts(int left, int right) {
  // 3 t_r = 2 |V1| - |V2|, 3 t_b = 2 |V2| - |V1|
  const int a = 2 * left - right;
  const int b = 2 * right - left;
  if (a < 0 || b < 0 || a % 3 != 0 || b % 3 != 0) return std::nullopt;
  return std::make_pair(a / 3, b / 3);
}

namespace {

void check_seed(const BipartiteSeed& seed) {
  if (seed.left < 0 || seed.right < 0) throw InputError("bipartite seed: negative side size");
  if (seed.extra_colors < 0) throw InputError("bipartite seed: t must be >= 0");
  for (const auto& [u, v] : seed.edges) {
    if (u < 0 || u >= seed.left || v < 0 || v >= seed.right) {
      throw InputError("bipartite seed: edge endpoint out of range");
    }
  }
}

}  // namespace

Instance hardness_instance(const BipartiteSeed& seed, const HardnessOptions& options) {
  check_seed(seed);
  const int t = seed.extra_colors;
  const double alpha = 1.0 / (2.0 + t);
  std::vector<std::string> labels{"red", "blue"};
  for (int e = 0; e < t; ++e) labels.push_back("c" + std::to_string(e + 1));

  const auto counts = star_counts(seed.left, seed.right);
  if (!counts) {
    std::vector<Point> one{Point{0, {}, 0}};
    return Instance(std::move(one), DistanceMatrix(1), 1, alpha, {"red"});
  }
  const auto [t_r, t_b] = *counts;

  std::vector<ColorId> color;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  auto add = [&](ColorId c, int count) {
    std::vector<std::size_t> ids;
    for (int i = 0; i < count; ++i) {
      ids.push_back(color.size());
      color.push_back(c);
    }
    return ids;
  };
  auto complete = [&](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    for (std::size_t u : a) {
      for (std::size_t v : b) edges.emplace_back(u, v);
    }
  };
  // Each node of `owners` gets its own consecutive pair from `pool`.
  auto pairs = [&](const std::vector<std::size_t>& owners, const std::vector<std::size_t>& pool,
                   std::size_t offset) {
    for (std::size_t q = 0; q < owners.size(); ++q) {
      edges.emplace_back(owners[q], pool[offset + 2 * q]);
      edges.emplace_back(owners[q], pool[offset + 2 * q + 1]);
    }
  };

  const auto R1 = add(0, seed.left);
  const auto B1 = add(1, seed.right);
  for (const auto& [u, v] : seed.edges) edges.emplace_back(R1[u], B1[v]);
  const auto R2 = add(0, seed.left);
  const auto B2 = add(1, seed.right);
  for (int i = 0; i < seed.left; ++i) edges.emplace_back(R1[i], R2[i]);
  for (int i = 0; i < seed.right; ++i) edges.emplace_back(B1[i], B2[i]);

  const int u_b = seed.right - t_r;
  const int u_r = seed.left - t_b;
  const auto B3 = add(1, u_b);
  const auto R3 = add(0, u_r);
  complete(R2, R3);
  complete(B2, B3);
  const auto R4 = add(0, 2 * u_b);
  const auto B4 = add(1, 2 * u_r);
  pairs(B3, R4, 0);
  pairs(R3, B4, 0);

  std::vector<std::size_t> L3 = B3;
  L3.insert(L3.end(), R3.begin(), R3.end());
  const int next_to_right = options.literal_extra_sizes ? 2 * t_b : 2 * t_r;
  const int next_to_left = options.literal_extra_sizes ? 2 * t_r : 2 * t_b;
  for (int e = 0; e < t; ++e) {
    const ColorId c = 2 + e;
    const auto C2b = add(c, next_to_right);
    const auto C2r = add(c, next_to_left);
    complete(B1, C2b);
    complete(R1, C2r);
    const auto C4 = add(c, 2 * static_cast<int>(L3.size()));
    pairs(L3, C4, 0);
  }

  const std::size_t n = color.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  DistanceMatrix metric(n, static_cast<double>(n));
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<int> dist(n, -1);
    std::deque<std::size_t> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v : adj[u]) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
      }
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (dist[j] >= 0) metric.set(s, j, dist[j]);
    }
  }

  // one cluster per star and per L3 node in the cost-1 witness
  const int k = t_r + t_b + u_r + u_b;
  std::vector<Point> points(n);
  for (std::size_t j = 0; j < n; ++j) points[j] = Point{j, {}, color[j]};
  return Instance(std::move(points), std::move(metric), std::max(k, 1), alpha, labels);
}

namespace {

bool spans_star(const std::vector<int>& block, const SimpleGraph& g) {
  for (int center : block) {
    bool ok = true;
    for (int leaf : block) {
      if (leaf != center && !g.has_edge(center, leaf)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

bool cover(std::vector<bool>& used, int size, const SimpleGraph& g) {
  int first = -1;
  for (std::size_t v = 0; v < used.size(); ++v) {
    if (!used[v]) {
      first = static_cast<int>(v);
      break;
    }
  }
  if (first < 0) return true;
  std::vector<int> block{first};
  used[first] = true;
  auto rec = [&](auto&& self, int start) -> bool {
    if (static_cast<int>(block.size()) == size) {
      return spans_star(block, g) && cover(used, size, g);
    }
    for (int v = start; v < static_cast<int>(used.size()); ++v) {
      if (used[v]) continue;
      used[v] = true;
      block.push_back(v);
      const bool ok = self(self, v + 1);
      block.pop_back();
      used[v] = false;
      if (ok) return true;
    }
    return false;
  };
  const bool ok = rec(rec, first + 1);
  used[first] = false;
  return ok;
}

}  // namespace

bool t_star_decomposition_exists(const BipartiteSeed& seed, int star_size) {
  check_seed(seed);
  const int n = seed.left + seed.right;
  if (n > 12) throw InputError("t_star_decomposition_exists: needs |V| <= 12");
  if (star_size < 1) throw InputError("t_star_decomposition_exists: star size must be >= 1");
  if (n % star_size != 0) return false;
  SimpleGraph g(static_cast<std::size_t>(n));
  for (const auto& [u, v] : seed.edges) g.add_edge(u, seed.left + v);
  std::vector<bool> used(n, false);
  return cover(used, star_size, g);
}

}  // namespace capk
