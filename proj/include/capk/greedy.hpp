#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "capk/core.hpp"

namespace capk {

enum class FirstCenterRule { LowestIndex, SeededRandom };

struct GreedyConfig {
  FirstCenterRule first_center = FirstCenterRule::LowestIndex;
  std::uint64_t seed = 0;
};

struct GreedyResult {
  ClusteringSolution solution;
  double cost = 0.0;
};

// Farthest-first traversal restricted to a client subset. Centers are drawn
// from `clients`; assign[t] is the center of clients[t].
struct SubsetGreedyResult {
  std::vector<PointId> centers;  // in selection order
  std::vector<PointId> assign;
  double cost = 0.0;
};

// Gonzalez / Hochbaum-Shmoys farthest-first traversal with min(k, |D|)
// centers and nearest assignment. Ties in the farthest client go to the
// lowest index.
GreedyResult greedy_k_center(const Instance& inst, const GreedyConfig& cfg = {});

// Same, with an explicit center budget and client set.
SubsetGreedyResult greedy_k_center_on(const Instance& inst, std::span<const PointId> clients,
                                      std::size_t k, const GreedyConfig& cfg = {});

// One Lloyd round under the k-center cost: each cluster's center moves to
// its discrete 1-center (the current center is kept on ties; otherwise the
// lowest index wins), then all points are reassigned to the nearest center.
ClusteringSolution lloyd_kcenter_round(const Instance& inst, const ClusteringSolution& sol);

// k distinct uniformly random centers, nearest assignment.
ClusteringSolution random_baseline(const Instance& inst, std::uint64_t seed);

}  // namespace capk
