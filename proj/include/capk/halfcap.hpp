#pragma once

#include <optional>
#include <vector>

#include "capk/core.hpp"
#include "capk/matching.hpp"

namespace capk {

// Two or three points of pairwise distinct colors.
struct Caplet {
  std::vector<PointId> members;  // ascending
  bool operator==(const Caplet&) const = default;
};

using CapletDecomposition = std::vector<Caplet>;

// Edge {j, j'} iff the colors differ and d(j, j') <= tau. Node ids are point ids.
SimpleGraph threshold_graph(const Instance& inst, double tau);

// Connected components, each sorted, ordered by smallest member.
std::vector<std::vector<PointId>> connected_components(const SimpleGraph& g);

// Partition of `nodes` into edges of `g` plus, when |nodes| is odd, one
// triangle of `g` with three distinct colors. Triangles are tried in
// lexicographic order; the first one leaving a perfect matching wins.
std::optional<CapletDecomposition> caplet_decompose(const std::vector<PointId>& nodes,
                                                    const std::vector<ColorId>& colors,
                                                    const SimpleGraph& g);

struct HalfCapResult {
  ClusteringSolution solution;
  double lambda = 0.0;      // accepted radius guess
  double greedy_cost = 0.0;  // cost of greedy on the representatives
  std::vector<Caplet> caplets;
};

// Caplet algorithm for alpha = 1/2 over the candidate radii in ascending
// order. Empty when every radius is rejected. Throws InputError unless
// alpha is 1/2.
std::optional<HalfCapResult> non_dominant_k_center(const Instance& inst);

}  // namespace capk
