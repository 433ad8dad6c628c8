#include "capk/lp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

namespace capk {

std::string LpVariable::name() const {
  switch (kind) {
    case VarKind::Assign:
      return "x_" + std::to_string(facility) + "_" + std::to_string(client);
    case VarKind::Open:
      return "y_" + std::to_string(facility);
    case VarKind::Load:
      return "load_" + std::to_string(facility);
  }
  return "?";
}

int min_cluster_size(double alpha) {
  const double inv = 1.0 / alpha;
  const double r = std::round(inv);
  if (std::abs(inv - r) <= 1e-9 * std::max(1.0, r)) return static_cast<int>(r);
  return static_cast<int>(std::ceil(inv));
}

double FractionalSolution::x_at(PointId facility, PointId client) const {
  auto it = x.find({facility, client});
  return it == x.end() ? 0.0 : it->second;
}

double FractionalSolution::y_at(PointId facility) const {
  auto it = y.find(facility);
  return it == y.end() ? 0.0 : it->second;
}

namespace {

std::vector<PointId> facility_set(const Instance& inst,
                                  const std::optional<std::vector<PointId>>& restricted) {
  std::vector<PointId> out;
  if (restricted) {
    out = *restricted;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    for (PointId i : out) {
      if (i >= inst.size()) throw InputError("restricted facility id out of range");
    }
  } else {
    out.resize(inst.size());
    std::iota(out.begin(), out.end(), PointId{0});
  }
  return out;
}

}  // namespace

LinearSystem build_polytope(const Instance& inst, double lambda,
                            const std::optional<std::vector<PointId>>& restricted) {
  if (!(lambda >= 0.0)) throw InputError("build_polytope: lambda must be >= 0");
  LinearSystem sys;
  sys.lambda = lambda;
  sys.alpha = inst.alpha();
  sys.k = inst.k();
  sys.min_load = min_cluster_size(inst.alpha());
  sys.num_clients = inst.size();
  sys.facilities = facility_set(inst, restricted);

  const std::size_t n = inst.size();
  std::vector<std::vector<std::size_t>> cover_terms(n);

  auto add_var = [&](VarKind kind, PointId i, PointId j, double hi) {
    sys.variables.push_back(LpVariable{kind, i, j, 0.0, hi});
    return sys.variables.size() - 1;
  };

  for (PointId i : sys.facilities) {
    const std::size_t y = add_var(VarKind::Open, i, 0, 1.0);
    sys.open_index[i] = y;
    const std::size_t load = add_var(VarKind::Load, i, 0, static_cast<double>(n));

    std::vector<std::size_t> xs;
    std::vector<std::vector<std::size_t>> by_color(inst.num_colors());
    for (PointId j = 0; j < n; ++j) {
      if (!within_radius(inst.dist(i, j), lambda)) continue;
      const std::size_t x = add_var(VarKind::Assign, i, j, 1.0);
      sys.assign_index[{i, j}] = x;
      xs.push_back(x);
      by_color[inst.color(j)].push_back(x);
      cover_terms[j].push_back(x);
    }

    for (std::size_t x : xs) {
      const PointId j = sys.variables[x].client;
      sys.constraints.push_back(
          {RowFamily::OpenLink, {{x, 1.0}, {y, -1.0}}, Relation::LessEqual, 0.0, i, j, 0});
    }

    LpConstraint def{RowFamily::LoadDefinition, {}, Relation::Equal, 0.0, i, 0, 0};
    for (std::size_t x : xs) def.terms.emplace_back(x, 1.0);
    def.terms.emplace_back(load, -1.0);
    sys.constraints.push_back(std::move(def));

    for (ColorId c = 0; c < inst.num_colors(); ++c) {
      if (by_color[c].empty()) continue;
      LpConstraint cap{RowFamily::ColorCap, {}, Relation::LessEqual, 0.0, i, 0, c};
      for (std::size_t x : by_color[c]) cap.terms.emplace_back(x, 1.0);
      cap.terms.emplace_back(load, -inst.alpha());
      sys.constraints.push_back(std::move(cap));
    }

    sys.constraints.push_back({RowFamily::MinimumLoad,
                               {{load, 1.0}, {y, -static_cast<double>(sys.min_load)}},
                               Relation::GreaterEqual, 0.0, i, 0, 0});
  }

  for (PointId j = 0; j < n; ++j) {
    LpConstraint cover{RowFamily::ClientCover, {}, Relation::Equal, 1.0, 0, j, 0};
    for (std::size_t x : cover_terms[j]) cover.terms.emplace_back(x, 1.0);
    sys.constraints.push_back(std::move(cover));
  }

  LpConstraint budget{RowFamily::OpenBudget, {}, Relation::LessEqual,
                      static_cast<double>(inst.k()), 0, 0, 0};
  for (PointId i : sys.facilities) budget.terms.emplace_back(sys.open_index[i], 1.0);
  sys.constraints.push_back(std::move(budget));
  return sys;
}

lp::BoundedProblem LinearSystem::to_bounded() const {
  lp::BoundedProblem p;
  for (const LpVariable& v : variables) {
    p.var_lo.push_back(v.lo);
    p.var_hi.push_back(v.hi);
  }
  for (const LpConstraint& c : constraints) {
    lp::BoundedProblem::Row row;
    row.terms = c.terms;
    switch (c.relation) {
      case Relation::LessEqual:
        row.hi = c.rhs;
        break;
      case Relation::GreaterEqual:
        row.lo = c.rhs;
        break;
      case Relation::Equal:
        row.lo = row.hi = c.rhs;
        break;
    }
    p.rows.push_back(std::move(row));
  }
  return p;
}

std::optional<FractionalSolution> check_feasible(const LinearSystem& sys,
                                                 const lp::SimplexOptions& options) {
  // A client with no eligible facility makes its cover row 0 = 1.
  for (const LpConstraint& c : sys.constraints) {
    if (c.family == RowFamily::ClientCover && c.terms.empty()) return std::nullopt;
  }
  const lp::BoundedProblem problem = sys.to_bounded();
  const lp::PhaseOneResult res = lp::solve_phase_one(problem, options);
  if (!res.feasible) return std::nullopt;
  const double viol = lp::max_violation(problem, res.values);
  if (viol > kLpTolerance) {
    throw SolverError("check_feasible: returned point violates a row by " + std::to_string(viol));
  }
  FractionalSolution out;
  for (std::size_t v = 0; v < sys.variables.size(); ++v) {
    const LpVariable& var = sys.variables[v];
    if (var.kind == VarKind::Open) {
      out.y[var.facility] = res.values[v];
    } else if (var.kind == VarKind::Assign && res.values[v] != 0.0) {
      out.x[{var.facility, var.client}] = res.values[v];
    }
  }
  return out;
}

double polytope_violation(const Instance& inst, double lambda, double delta,
                          const FractionalSolution& frac, const std::vector<PointId>& facilities) {
  const std::size_t n = inst.size();
  const int q = min_cluster_size(inst.alpha());
  std::map<PointId, bool> allowed;
  for (PointId i : facilities) allowed[i] = true;

  double worst = 0.0;
  std::vector<double> cover(n, 0.0);
  std::map<PointId, double> load;
  std::map<PointId, std::vector<double>> color_load;
  for (const auto& [key, v] : frac.x) {
    const auto [i, j] = key;
    if (!allowed.count(i)) worst = std::max(worst, std::abs(v));
    worst = std::max({worst, -v, v - 1.0});
    worst = std::max(worst, v - frac.y_at(i));  // x_ij <= y_i
    if (!within_radius(inst.dist(i, j), lambda)) worst = std::max(worst, std::abs(v));
    cover[j] += v;
    load[i] += v;
    auto& cl = color_load[i];
    if (cl.empty()) cl.assign(inst.num_colors(), 0.0);
    cl[inst.color(j)] += v;
  }
  for (PointId j = 0; j < n; ++j) worst = std::max(worst, std::abs(cover[j] - 1.0));

  double open_total = 0.0;
  for (const auto& [i, v] : frac.y) {
    if (!allowed.count(i)) worst = std::max(worst, std::abs(v));
    worst = std::max({worst, -v, v - 1.0});
    open_total += v;
    worst = std::max(worst, q * v - load[i]);
  }
  worst = std::max(worst, open_total - inst.k());
  for (const auto& [i, cl] : color_load) {
    for (double v : cl) worst = std::max(worst, v - inst.alpha() * load[i] - delta);
  }
  return worst;
}

bool trivially_infeasible(const Instance& inst, double lambda,
                          const std::optional<std::vector<PointId>>& restricted) {
  const auto counts = inst.color_counts();
  for (std::size_t c : counts) {
    if (static_cast<double>(c) > inst.alpha() * static_cast<double>(inst.size()) + kCapTolerance) {
      return true;
    }
  }
  const std::vector<PointId> facilities = facility_set(inst, restricted);
  for (PointId j = 0; j < inst.size(); ++j) {
    bool covered = false;
    for (PointId i : facilities) {
      if (within_radius(inst.dist(i, j), lambda)) {
        covered = true;
        break;
      }
    }
    if (!covered) return true;
  }
  return false;
}

namespace {

std::optional<FractionalSolution> feasible_at(const Instance& inst, double lambda,
                                              const std::optional<std::vector<PointId>>& restricted,
                                              const lp::SimplexOptions& options) {
  if (trivially_infeasible(inst, lambda, restricted)) return std::nullopt;
  return check_feasible(build_polytope(inst, lambda, restricted), options);
}

}  // namespace

std::optional<FeasibleRadius> min_feasible_radius(
    const Instance& inst, const RadiusGrid& grid,
    const std::optional<std::vector<PointId>>& restricted, RadiusSearch strategy,
    const lp::SimplexOptions& options) {
  const auto& values = grid.values;
  if (!std::is_sorted(values.begin(), values.end())) {
    throw InputError("min_feasible_radius: grid must be ascending");
  }
  if (strategy == RadiusSearch::GridScan) {
    for (double lambda : values) {
      if (auto point = feasible_at(inst, lambda, restricted, options)) {
        return FeasibleRadius{lambda, std::move(*point)};
      }
    }
    return std::nullopt;
  }

  // Binary search relies on monotonicity in lambda; it probes O(log |grid|) values.
  std::optional<FeasibleRadius> best;
  std::size_t lo = 0;
  std::size_t hi = values.size();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (auto point = feasible_at(inst, values[mid], restricted, options)) {
      best = FeasibleRadius{values[mid], std::move(*point)};
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return best;
}

void write_lp_text(const LinearSystem& sys, std::ostream& out) {
  out << "\\ capped k-center relaxation, lambda = " << sys.lambda << ", alpha = " << sys.alpha
      << ", k = " << sys.k << "\n";
  out << "Minimize\n obj: 0\nSubject To\n";
  std::size_t row = 0;
  for (const LpConstraint& c : sys.constraints) {
    out << " r" << row++ << ":";
    if (c.terms.empty()) out << " 0 " << sys.variables.front().name();
    for (const auto& [v, a] : c.terms) {
      out << (a < 0 ? " - " : " + ");
      if (std::abs(a) != 1.0) out << std::abs(a) << " ";
      out << sys.variables[v].name();
    }
    switch (c.relation) {
      case Relation::LessEqual:
        out << " <= ";
        break;
      case Relation::GreaterEqual:
        out << " >= ";
        break;
      case Relation::Equal:
        out << " = ";
        break;
    }
    out << c.rhs << "\n";
  }
  out << "Bounds\n";
  for (const LpVariable& v : sys.variables) {
    out << " " << v.lo << " <= " << v.name() << " <= " << v.hi << "\n";
  }
  out << "End\n";
}

}  // namespace capk
