#pragma once

#include <optional>

#include "capk/core.hpp"

namespace capk {

struct CappedOptimum {
  double cost = 0.0;
  ClusteringSolution solution;
};

// Exact capped optimum over all center sets of size <= k and all
// assignments. Requires |D| <= 10 and k <= 3 (InputError otherwise).
// Empty when no capped clustering exists.
std::optional<CappedOptimum> brute_force_capped_opt(const Instance& inst);

// Exact unconstrained k-center optimum by subset enumeration. Requires
// |D| <= 12 and k <= 3.
double brute_force_kcenter_opt(const Instance& inst);

// Whether the points can be partitioned into at most k capped clusters, each
// inside a ball of the given radius around some point. Requires |D| <= 64.
bool capped_partition_exists(const Instance& inst, double radius);

// Smallest candidate radius at which capped_partition_exists holds, i.e. the
// capped optimum for instances too large for brute_force_capped_opt. Empty
// when no capped clustering exists.
std::optional<double> partition_capped_opt(const Instance& inst);

}  // namespace capk
