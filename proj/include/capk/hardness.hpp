#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "capk/core.hpp"

namespace capk {

// Bipartite graph G = (V1 ∪ V2, E). Left nodes are 0..left-1, right nodes
// 0..right-1; an edge is (left node, right node).
struct BipartiteSeed {
  int left = 0;
  int right = 0;
  std::vector<std::pair<int, int>> edges;
  int extra_colors = 0;  // t: alpha = 1 / (2 + t)
};

// Unique solution of 2 t_r + t_b = |V1|, t_r + 2 t_b = |V2| when it is a
// pair of nonnegative integers.
std::optional<std::pair<int, int>> star_counts(int left, int right);

struct HardnessOptions {
  // Use the extra-color part sizes exactly as printed (2 t_b next to the
  // right side, 2 t_r next to the left side). The default swaps them so
  // that every star cluster can be filled up to the cap.
  bool literal_extra_sizes = false;
};

// Layered graph G' with unit shortest-path metric; red = color 0,
// blue = color 1, extra colors 2, 3, ... Unreachable pairs get distance
// |V'|. When (t_r, t_b) is not integral the instance is one red point.
// k = t_r + t_b + u_r + u_b (clusters of the cost-1 witness) and alpha = 1 / (2 + t).
Instance hardness_instance(const BipartiteSeed& seed, const HardnessOptions& options = {});

// Partition of V1 ∪ V2 into blocks of `star_size` nodes each containing a
// spanning star of G. Requires |V| <= 12.
bool t_star_decomposition_exists(const BipartiteSeed& seed, int star_size);

}  // namespace capk
