#pragma once

#include <map>
#include <optional>
#include <vector>

#include "capk/core.hpp"
#include "capk/lp.hpp"

namespace capk {

// Opened facilities F' and the map theta from the remaining facilities onto
// F'. Opened facilities are pairwise more than 2 lambda apart and every
// other facility sits within 2 lambda of its image.
struct FacilityMap {
  std::vector<PointId> opened;      // in scan order
  std::map<PointId, PointId> theta;  // every scanned facility -> member of opened
};

enum class ScanOrder { AscendingIndex, DescendingOpening };

// Facility order used to grow the separated set. DescendingOpening sorts by
// y_i (ties by index).
std::vector<PointId> facility_scan_order(const Instance& inst,
                                         const std::optional<std::vector<PointId>>& restricted,
                                         const FractionalSolution* frac, ScanOrder order);

// Greedy maximal subset under the strict "> 2 lambda" separation, scanned in
// `scan_order`. theta sends each facility to its nearest opened facility
// (ties: earliest in scan order).
FacilityMap select_separated_facilities(const Instance& inst, double lambda,
                                        const std::vector<PointId>& scan_order);

// Moves the fractional mass of every facility onto its image under theta and
// opens exactly the facilities in F'.
FractionalSolution reroute_fractional(const FractionalSolution& frac, const FacilityMap& fmap);

struct FairOptions {
  ScanOrder scan_order = ScanOrder::AscendingIndex;
  // Re-check that the rerouted point lies in P(3 lambda, alpha).
  bool validate_reroute = false;
  lp::SimplexOptions simplex;
};

enum class FairStatus { Solved, LpInfeasible, TooManyCenters };

struct FairOutcome {
  FairStatus status = FairStatus::LpInfeasible;
  std::optional<ClusteringSolution> solution;
  std::size_t opened = 0;  // |F'|
};

// LP, separated facility selection, rerouting and flow assignment at a fixed
// radius. Raises InternalError if the flow step fails after a feasible LP.
FairOutcome fair_k_center_detailed(const Instance& inst, double lambda,
                                   const std::optional<std::vector<PointId>>& restricted = std::nullopt,
                                   const FairOptions& options = {});

// Empty when P(lambda, alpha) is empty or more than k facilities are opened.
std::optional<ClusteringSolution> fair_k_center(
    const Instance& inst, double lambda,
    const std::optional<std::vector<PointId>>& restricted = std::nullopt,
    const FairOptions& options = {});

}  // namespace capk
