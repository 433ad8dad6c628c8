#include "capk/rounding.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "capk/flow.hpp"

namespace capk {

std::vector<PointId> facility_scan_order(const Instance& inst,
                                         const std::optional<std::vector<PointId>>& restricted,
                                         const FractionalSolution* frac, ScanOrder order) {
  std::vector<PointId> out;
  if (restricted) {
    out = *restricted;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  } else {
    out.resize(inst.size());
    std::iota(out.begin(), out.end(), PointId{0});
  }
  if (order == ScanOrder::DescendingOpening) {
    if (!frac) throw InputError("facility_scan_order: descending order needs a fractional point");
    std::stable_sort(out.begin(), out.end(),
                     [&](PointId a, PointId b) { return frac->y_at(a) > frac->y_at(b); });
  }
  return out;
}

FacilityMap select_separated_facilities(const Instance& inst, double lambda,
                                        const std::vector<PointId>& scan_order) {
  if (!(lambda >= 0.0)) throw InputError("select_separated_facilities: lambda must be >= 0");
  FacilityMap fmap;
  const double sep = 2.0 * lambda;
  for (PointId i : scan_order) {
    bool separated = true;
    for (PointId o : fmap.opened) {
      if (within_radius(inst.dist(i, o), sep)) {
        separated = false;
        break;
      }
    }
    if (separated) fmap.opened.push_back(i);
  }
  for (PointId i : scan_order) {
    PointId best = fmap.opened.front();
    double best_d = std::numeric_limits<double>::infinity();
    for (PointId o : fmap.opened) {
      const double d = inst.dist(i, o);
      if (d < best_d) {
        best_d = d;
        best = o;
      }
    }
    fmap.theta[i] = best;
  }
  return fmap;
}

FractionalSolution reroute_fractional(const FractionalSolution& frac, const FacilityMap& fmap) {
  FractionalSolution out;
  for (PointId i : fmap.opened) out.y[i] = 1.0;
  for (const auto& [key, v] : frac.x) {
    auto it = fmap.theta.find(key.first);
    if (it == fmap.theta.end()) {
      throw InternalError("reroute_fractional: facility " + std::to_string(key.first) +
                          " carries mass but has no image");
    }
    out.x[{it->second, key.second}] += v;
  }
  return out;
}

FairOutcome fair_k_center_detailed(const Instance& inst, double lambda,
                                   const std::optional<std::vector<PointId>>& restricted,
                                   const FairOptions& options) {
  FairOutcome outcome;
  if (trivially_infeasible(inst, lambda, restricted)) return outcome;
  const LinearSystem sys = build_polytope(inst, lambda, restricted);
  const std::optional<FractionalSolution> frac = check_feasible(sys, options.simplex);
  if (!frac) return outcome;

  const auto order = facility_scan_order(inst, restricted, &*frac, options.scan_order);
  const FacilityMap fmap = select_separated_facilities(inst, lambda, order);
  outcome.opened = fmap.opened.size();
  if (fmap.opened.size() > static_cast<std::size_t>(inst.k())) {
    outcome.status = FairStatus::TooManyCenters;
    return outcome;
  }

  const FractionalSolution rerouted = reroute_fractional(*frac, fmap);
  if (options.validate_reroute) {
    const double viol = polytope_violation(inst, 3.0 * lambda, 0.0, rerouted, fmap.opened);
    if (viol > 1e-6) {
      throw InternalError("fair_k_center: rerouted point leaves P(3 lambda, alpha) by " +
                          std::to_string(viol));
    }
  }

  const FlowNetwork net = build_assignment_network(inst, rerouted, fmap.opened);
  const auto flow = max_flow_lower_bounds(net, static_cast<std::int64_t>(inst.size()));
  if (!flow) throw InternalError("fair_k_center: no integral assignment after a feasible LP");

  ClusteringSolution sol;
  sol.assign = extract_assignment(inst, net, *flow);
  sol.centers = sol.assign;
  std::sort(sol.centers.begin(), sol.centers.end());
  sol.centers.erase(std::unique(sol.centers.begin(), sol.centers.end()), sol.centers.end());
  validate_solution(inst, sol);

  outcome.status = FairStatus::Solved;
  outcome.solution = std::move(sol);
  return outcome;
}

std::optional<ClusteringSolution> fair_k_center(const Instance& inst, double lambda,
                                                const std::optional<std::vector<PointId>>& restricted,
                                                const FairOptions& options) {
  return fair_k_center_detailed(inst, lambda, restricted, options).solution;
}

}  // namespace capk
