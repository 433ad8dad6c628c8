#include "capk/greedy.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>

namespace capk {

SubsetGreedyResult greedy_k_center_on(const Instance& inst, std::span<const PointId> clients,
                                      std::size_t k, const GreedyConfig& cfg) {
  if (k < 1) throw InputError("greedy_k_center: k must be >= 1");
  if (clients.empty()) throw InputError("greedy_k_center: empty client set");
  const std::size_t n = clients.size();
  const std::size_t count = std::min(k, n);

  std::size_t first = 0;
  if (cfg.first_center == FirstCenterRule::SeededRandom) {
    std::mt19937_64 rng(cfg.seed);
    first = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  }

  SubsetGreedyResult out;
  std::vector<double> gap(n, std::numeric_limits<double>::infinity());
  std::vector<std::size_t> owner(n, first);
  std::vector<bool> chosen(n, false);
  std::size_t next = first;
  for (std::size_t round = 0; round < count; ++round) {
    chosen[next] = true;
    out.centers.push_back(clients[next]);
    for (std::size_t t = 0; t < n; ++t) {
      const double d = inst.dist(clients[t], clients[next]);
      if (d < gap[t]) {
        gap[t] = d;
        owner[t] = next;
      }
    }
    // Farthest unchosen client; strict comparison keeps the lowest index.
    double far = -1.0;
    for (std::size_t t = 0; t < n; ++t) {
      if (!chosen[t] && gap[t] > far) {
        far = gap[t];
        next = t;
      }
    }
  }
  out.assign.resize(n);
  for (std::size_t t = 0; t < n; ++t) {
    out.assign[t] = clients[owner[t]];
    out.cost = std::max(out.cost, gap[t]);
  }
  return out;
}

GreedyResult greedy_k_center(const Instance& inst, const GreedyConfig& cfg) {
  std::vector<PointId> all(inst.size());
  std::iota(all.begin(), all.end(), PointId{0});
  SubsetGreedyResult g = greedy_k_center_on(inst, all, static_cast<std::size_t>(inst.k()), cfg);
  GreedyResult out;
  out.solution = nearest_solution(inst, g.centers);
  out.cost = solution_cost(inst, out.solution);
  return out;
}

ClusteringSolution lloyd_kcenter_round(const Instance& inst, const ClusteringSolution& sol) {
  validate_solution(inst, sol);
  const auto clusters = clusters_of(sol);
  std::vector<PointId> centers;
  for (std::size_t s = 0; s < clusters.size(); ++s) {
    const auto& members = clusters[s];
    if (members.empty()) continue;
    auto radius = [&](PointId c) {
      double r = 0.0;
      for (PointId j : members) r = std::max(r, inst.dist(c, j));
      return r;
    };
    PointId best = sol.centers[s];
    double best_r = radius(best);
    for (PointId cand : members) {  // members are in ascending index order
      const double r = radius(cand);
      if (r < best_r) {
        best_r = r;
        best = cand;
      }
    }
    centers.push_back(best);
  }
  return nearest_solution(inst, std::move(centers));
}

ClusteringSolution random_baseline(const Instance& inst, std::uint64_t seed) {
  const std::size_t n = inst.size();
  const auto k = static_cast<std::size_t>(inst.k());
  if (k > n) throw InputError("random_baseline: k exceeds the number of points");
  std::mt19937_64 rng(seed);
  std::vector<PointId> pool(n);
  std::iota(pool.begin(), pool.end(), PointId{0});
  // Partial Fisher-Yates.
  for (std::size_t t = 0; t < k; ++t) {
    const std::size_t pick = std::uniform_int_distribution<std::size_t>(t, n - 1)(rng);
    std::swap(pool[t], pool[pick]);
  }
  pool.resize(k);
  return nearest_solution(inst, std::move(pool));
}

}  // namespace capk
