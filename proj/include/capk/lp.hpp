#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "capk/core.hpp"
#include "capk/simplex.hpp"

namespace capk {

enum class Relation { LessEqual, GreaterEqual, Equal };

enum class VarKind {
  Assign,  // x_ij: fraction of client j served by facility i
  Open,    // y_i: opening of facility i
  Load,    // sum_j x_ij, kept as its own column so the cap rows stay sparse
};

struct LpVariable {
  VarKind kind = VarKind::Assign;
  PointId facility = 0;
  PointId client = 0;  // Assign only
  double lo = 0.0;
  double hi = 1.0;

  std::string name() const;
};

enum class RowFamily {
  ClientCover,     // sum_i x_ij = 1
  OpenLink,        // x_ij <= y_i
  ColorCap,        // sum_{j in D_c} x_ij <= alpha * load_i
  MinimumLoad,     // load_i >= ceil(1/alpha) * y_i
  OpenBudget,      // sum_i y_i <= k
  LoadDefinition,  // load_i = sum_j x_ij
};

struct LpConstraint {
  RowFamily family = RowFamily::ClientCover;
  std::vector<std::pair<std::size_t, double>> terms;
  Relation relation = Relation::LessEqual;
  double rhs = 0.0;
  PointId facility = 0;
  PointId client = 0;
  ColorId color = 0;
};

// The strengthened relaxation at radius lambda. Assignment columns exist only
// for pairs with d(i, j) <= lambda (1 + 1e-12); the pruning constraint is
// structural. Color-cap rows are emitted only for colors that have at least
// one eligible client at the facility (the others read -alpha load <= 0).
struct LinearSystem {
  double lambda = 0.0;
  double alpha = 1.0;
  int k = 1;
  int min_load = 1;  // ceil(1/alpha)
  std::size_t num_clients = 0;
  std::vector<PointId> facilities;
  std::vector<LpVariable> variables;
  std::vector<LpConstraint> constraints;
  std::map<std::pair<PointId, PointId>, std::size_t> assign_index;  // (facility, client)
  std::map<PointId, std::size_t> open_index;

  lp::BoundedProblem to_bounded() const;
};

// ceil(1/alpha), robust to alpha values such as 0.1 or 1/3 in floating point.
int min_cluster_size(double alpha);

// A point (x, y) of the relaxation.
struct FractionalSolution {
  std::map<std::pair<PointId, PointId>, double> x;  // (facility, client) -> value, nonzeros
  std::map<PointId, double> y;                      // facility -> value

  double x_at(PointId facility, PointId client) const;
  double y_at(PointId facility) const;
};

// Pairs with d(i, j) <= lambda under this slack are eligible.
inline constexpr double kRadiusSlack = 1e-12;
inline bool within_radius(double d, double lambda) { return d <= lambda * (1.0 + kRadiusSlack); }

LinearSystem build_polytope(const Instance& inst, double lambda,
                            const std::optional<std::vector<PointId>>& restricted = std::nullopt);

inline constexpr double kLpTolerance = 1e-7;

// Phase-1 feasibility check. Empty optional when the system has no point.
// The returned point is re-verified against every row within kLpTolerance;
// a failed re-verification raises SolverError.
std::optional<FractionalSolution> check_feasible(const LinearSystem& sys,
                                                 const lp::SimplexOptions& options = {});

// Largest violation of the constraints of P(lambda, alpha, delta) by `frac`,
// evaluated directly from the instance (independent of LinearSystem).
// Facilities outside `facilities` must carry no mass.
double polytope_violation(const Instance& inst, double lambda, double delta,
                          const FractionalSolution& frac, const std::vector<PointId>& facilities);

// Exact certificates of emptiness that need no LP: a client with no eligible
// facility, or a color exceeding alpha |D| overall.
bool trivially_infeasible(const Instance& inst, double lambda,
                          const std::optional<std::vector<PointId>>& restricted = std::nullopt);

enum class RadiusSearch { GridScan, BinarySearch };

struct FeasibleRadius {
  double lambda = 0.0;
  FractionalSolution point;
};

std::optional<FeasibleRadius> min_feasible_radius(
    const Instance& inst, const RadiusGrid& grid,
    const std::optional<std::vector<PointId>>& restricted = std::nullopt,
    RadiusSearch strategy = RadiusSearch::GridScan, const lp::SimplexOptions& options = {});

// CPLEX LP text format with a zero objective.
void write_lp_text(const LinearSystem& sys, std::ostream& out);

}  // namespace capk
