#include "capk/simplex.hpp"

#include <Eigen/SparseCore>
#include <Eigen/SparseLU>

#include <algorithm>
#include <cmath>
#include <string>

#include "capk/core.hpp"

namespace capk::lp {
namespace {

enum class Status : unsigned char { Basic, AtLower, AtUpper, FreeZero };

using SpMat = Eigen::SparseMatrix<double, Eigen::ColMajor, int>;

// LU of a reference basis plus a product-form eta file for the pivots since.
class BasisFactor {
 public:
  void factor(const SpMat& basis) {
    lu_.compute(basis);
    if (lu_.info() != Eigen::Success) throw SolverError("simplex: basis factorization failed");
    etas_.clear();
  }

  std::size_t eta_count() const { return etas_.size(); }

  void ftran(Eigen::VectorXd& v) const {
    v = lu_.solve(v).eval();
    for (const Eta& e : etas_) {
      const double vr = v[e.row] / e.pivot;
      if (vr != 0.0) {
        for (const auto& [i, a] : e.col) v[i] -= a * vr;
      }
      v[e.row] = vr;
    }
  }

  void btran(Eigen::VectorXd& v) const {
    for (auto it = etas_.rbegin(); it != etas_.rend(); ++it) {
      double s = v[it->row];
      for (const auto& [i, a] : it->col) s -= a * v[i];
      v[it->row] = s / it->pivot;
    }
    v = lu_.transpose().solve(v).eval();
  }

  // Records the basis change at position `row` with entering column `alpha`
  // (already FTRAN'd).
  void push(std::size_t row, const Eigen::VectorXd& alpha) {
    Eta e;
    e.row = row;
    e.pivot = alpha[static_cast<Eigen::Index>(row)];
    for (Eigen::Index i = 0; i < alpha.size(); ++i) {
      if (static_cast<std::size_t>(i) != row && alpha[i] != 0.0) {
        e.col.emplace_back(static_cast<std::size_t>(i), alpha[i]);
      }
    }
    etas_.push_back(std::move(e));
  }

 private:
  struct Eta {
    std::size_t row = 0;
    double pivot = 1.0;
    std::vector<std::pair<std::size_t, double>> col;
  };
  mutable Eigen::SparseLU<SpMat, Eigen::COLAMDOrdering<int>> lu_;
  std::vector<Eta> etas_;
};

class PhaseOne {
 public:
  PhaseOne(const BoundedProblem& p, const SimplexOptions& opt) : opt_(opt) {
    n_ = p.num_vars();
    m_ = p.rows.size();
    if (p.var_hi.size() != n_) throw InputError("simplex: bound vectors differ in length");

    // Column-major copy of the structural matrix.
    col_start_.assign(n_ + 1, 0);
    for (const auto& row : p.rows) {
      for (const auto& [j, a] : row.terms) {
        if (j >= n_) throw InputError("simplex: term references unknown variable");
        if (!std::isfinite(a)) throw InputError("simplex: non-finite coefficient");
        ++col_start_[j + 1];
      }
    }
    for (std::size_t j = 0; j < n_; ++j) col_start_[j + 1] += col_start_[j];
    col_row_.resize(col_start_[n_]);
    col_val_.resize(col_start_[n_]);
    std::vector<std::size_t> fill(col_start_.begin(), col_start_.end() - 1);
    for (std::size_t r = 0; r < m_; ++r) {
      for (const auto& [j, a] : p.rows[r].terms) {
        col_row_[fill[j]] = r;
        col_val_[fill[j]] = a;
        ++fill[j];
      }
    }

    lo_.resize(n_ + m_);
    hi_.resize(n_ + m_);
    for (std::size_t j = 0; j < n_; ++j) {
      lo_[j] = p.var_lo[j];
      hi_[j] = p.var_hi[j];
    }
    for (std::size_t r = 0; r < m_; ++r) {
      lo_[n_ + r] = p.rows[r].lo;
      hi_[n_ + r] = p.rows[r].hi;
    }
    for (std::size_t j = 0; j < n_ + m_; ++j) {
      if (lo_[j] > hi_[j]) throw InputError("simplex: empty bound interval");
    }

    // Slack basis; structurals rest at a finite bound.
    val_.assign(n_ + m_, 0.0);
    status_.assign(n_ + m_, Status::Basic);
    for (std::size_t j = 0; j < n_; ++j) {
      if (std::isfinite(lo_[j])) {
        status_[j] = Status::AtLower;
        val_[j] = lo_[j];
      } else if (std::isfinite(hi_[j])) {
        status_[j] = Status::AtUpper;
        val_[j] = hi_[j];
      } else {
        status_[j] = Status::FreeZero;
      }
    }
    head_.resize(m_);
    for (std::size_t r = 0; r < m_; ++r) head_[r] = n_ + r;
  }

  PhaseOneResult run() {
    PhaseOneResult result;
    if (m_ == 0) {
      result.feasible = true;
      result.values.assign(val_.begin(), val_.begin() + static_cast<std::ptrdiff_t>(n_));
      return result;
    }
    refactor();

    const std::size_t limit =
        opt_.max_iterations ? opt_.max_iterations : 20 * (m_ + n_) + 10000;
    Eigen::VectorXd cost(static_cast<Eigen::Index>(m_));
    Eigen::VectorXd alpha(static_cast<Eigen::Index>(m_));
    std::size_t degenerate_run = 0;
    bool fresh = true;

    for (std::size_t iter = 0;; ++iter) {
      if (iter >= limit) throw SolverError("simplex: iteration limit reached");
      result.iterations = iter;

      bool any_infeasible = false;
      for (std::size_t r = 0; r < m_; ++r) {
        const std::size_t b = head_[r];
        double c = 0.0;
        if (val_[b] < lo_[b] - opt_.feasibility_tol) {
          c = -1.0;
        } else if (val_[b] > hi_[b] + opt_.feasibility_tol) {
          c = 1.0;
        }
        cost[static_cast<Eigen::Index>(r)] = c;
        any_infeasible = any_infeasible || c != 0.0;
      }
      if (!any_infeasible) {
        if (!fresh) {
          refactor();
          fresh = true;
          continue;
        }
        result.feasible = true;
        result.values.resize(n_);
        for (std::size_t j = 0; j < n_; ++j) result.values[j] = std::clamp(val_[j], lo_[j], hi_[j]);
        return result;
      }

      factor_.btran(cost);  // cost now holds the simplex multipliers

      const bool bland = opt_.rule == PivotRule::Bland || degenerate_run >= opt_.degenerate_run_limit;
      const auto [entering, reduced] = price(cost, bland);
      if (entering == kNone) {
        if (!fresh) {
          refactor();
          fresh = true;
          continue;
        }
        result.feasible = false;
        return result;
      }
      const double dir = reduced < 0.0 ? 1.0 : -1.0;

      load_column(entering, alpha);
      factor_.ftran(alpha);

      // Two-pass ratio test. Infeasible basics may move up to (not past)
      // their violated bound; feasible ones stay feasible within the
      // tolerance. The second pass picks, among the rows blocking before the
      // relaxed minimum, the largest pivot (or the lowest index under Bland).
      const double flip = hi_[entering] - lo_[entering];
      std::vector<RatioRow> rows;
      double relaxed = flip;
      for (std::size_t r = 0; r < m_; ++r) {
        const double a = alpha[static_cast<Eigen::Index>(r)];
        if (std::abs(a) < opt_.pivot_tol) continue;
        const double rate = -dir * a;
        const std::size_t b = head_[r];
        const double v = val_[b];
        const double tol = opt_.feasibility_tol;
        RatioRow row{r, a, kInf, kInf, 0.0};
        if (v < lo_[b] - tol) {
          if (rate > 0.0) row.step = row.loose = (lo_[b] - v) / rate, row.target = lo_[b];
        } else if (v > hi_[b] + tol) {
          if (rate < 0.0) row.step = row.loose = (hi_[b] - v) / rate, row.target = hi_[b];
        } else if (rate > 0.0 && std::isfinite(hi_[b])) {
          row.step = std::max(0.0, (hi_[b] - v) / rate);
          row.loose = std::max(0.0, (hi_[b] + tol - v) / rate);
          row.target = hi_[b];
        } else if (rate < 0.0 && std::isfinite(lo_[b])) {
          row.step = std::max(0.0, (lo_[b] - v) / rate);
          row.loose = std::max(0.0, (lo_[b] - tol - v) / rate);
          row.target = lo_[b];
        }
        if (!std::isfinite(row.step)) continue;
        relaxed = std::min(relaxed, row.loose);
        rows.push_back(row);
      }
      if (!std::isfinite(relaxed)) throw SolverError("simplex: unbounded phase-1 ray");

      double best = flip;
      std::size_t leave = kNone;
      double leave_target = 0.0;
      if (flip > relaxed) {
        const RatioRow* pick = nullptr;
        for (const RatioRow& row : rows) {
          if (row.step > relaxed) continue;
          if (!pick) {
            pick = &row;
          } else if (bland ? head_[row.r] < head_[pick->r]
                           : std::abs(row.a) > std::abs(pick->a)) {
            pick = &row;
          }
        }
        if (!pick) throw InternalError("simplex: ratio test found no blocking row");
        best = pick->step;
        leave = pick->r;
        leave_target = pick->target;
      }
      const double step = best;
      val_[entering] += dir * step;
      for (std::size_t r = 0; r < m_; ++r) {
        const double a = alpha[static_cast<Eigen::Index>(r)];
        if (a != 0.0) val_[head_[r]] -= dir * a * step;
      }

      if (leave == kNone) {
        status_[entering] = dir > 0.0 ? Status::AtUpper : Status::AtLower;
        val_[entering] = dir > 0.0 ? hi_[entering] : lo_[entering];
      } else {
        const std::size_t b = head_[leave];
        val_[b] = leave_target;
        status_[b] = leave_target == lo_[b] ? Status::AtLower : Status::AtUpper;
        status_[entering] = Status::Basic;
        head_[leave] = entering;
        factor_.push(leave, alpha);
        fresh = false;
        if (factor_.eta_count() >= opt_.refactor_interval) {
          refactor();
          fresh = true;
        }
      }

      degenerate_run = step <= 1e-12 ? degenerate_run + 1 : 0;
    }
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  struct RatioRow {
    std::size_t r;
    double a;
    double step;   // to the bound itself
    double loose;  // to the bound widened by the feasibility tolerance
    double target;
  };

  void load_column(std::size_t j, Eigen::VectorXd& out) const {
    out.setZero();
    if (j < n_) {
      for (std::size_t t = col_start_[j]; t < col_start_[j + 1]; ++t) {
        out[static_cast<Eigen::Index>(col_row_[t])] = col_val_[t];
      }
    } else {
      out[static_cast<Eigen::Index>(j - n_)] = -1.0;
    }
  }

  double reduced_cost(std::size_t j, const Eigen::VectorXd& pi) const {
    if (j >= n_) return pi[static_cast<Eigen::Index>(j - n_)];
    double s = 0.0;
    for (std::size_t t = col_start_[j]; t < col_start_[j + 1]; ++t) {
      s += pi[static_cast<Eigen::Index>(col_row_[t])] * col_val_[t];
    }
    return -s;
  }

  std::pair<std::size_t, double> price(const Eigen::VectorXd& pi, bool bland) const {
    constexpr double kDualTol = 1e-9;
    std::size_t best = kNone;
    double best_d = 0.0;
    for (std::size_t j = 0; j < n_ + m_; ++j) {
      const Status s = status_[j];
      if (s == Status::Basic) continue;
      const double d = reduced_cost(j, pi);
      bool eligible = false;
      if (s == Status::AtLower) {
        eligible = d < -kDualTol && hi_[j] > lo_[j];
      } else if (s == Status::AtUpper) {
        eligible = d > kDualTol && hi_[j] > lo_[j];
      } else {
        eligible = std::abs(d) > kDualTol;
      }
      if (!eligible) continue;
      if (bland) return {j, d};
      if (std::abs(d) > std::abs(best_d)) {
        best = j;
        best_d = d;
      }
    }
    return {best, best_d};
  }

  void refactor() {
    std::vector<Eigen::Triplet<double, int>> trips;
    for (std::size_t r = 0; r < m_; ++r) {
      const std::size_t j = head_[r];
      if (j < n_) {
        for (std::size_t t = col_start_[j]; t < col_start_[j + 1]; ++t) {
          trips.emplace_back(static_cast<int>(col_row_[t]), static_cast<int>(r), col_val_[t]);
        }
      } else {
        trips.emplace_back(static_cast<int>(j - n_), static_cast<int>(r), -1.0);
      }
    }
    SpMat basis(static_cast<int>(m_), static_cast<int>(m_));
    basis.setFromTriplets(trips.begin(), trips.end());
    basis.makeCompressed();
    factor_.factor(basis);

    // x_B = B^{-1} (-N x_N)
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(m_));
    for (std::size_t j = 0; j < n_ + m_; ++j) {
      if (status_[j] == Status::Basic || val_[j] == 0.0) continue;
      if (j < n_) {
        for (std::size_t t = col_start_[j]; t < col_start_[j + 1]; ++t) {
          rhs[static_cast<Eigen::Index>(col_row_[t])] -= col_val_[t] * val_[j];
        }
      } else {
        rhs[static_cast<Eigen::Index>(j - n_)] += val_[j];
      }
    }
    factor_.ftran(rhs);
    for (std::size_t r = 0; r < m_; ++r) val_[head_[r]] = rhs[static_cast<Eigen::Index>(r)];
  }

  SimplexOptions opt_;
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::size_t> col_start_;
  std::vector<std::size_t> col_row_;
  std::vector<double> col_val_;
  std::vector<double> lo_, hi_, val_;
  std::vector<Status> status_;
  std::vector<std::size_t> head_;
  BasisFactor factor_;
};

}  // namespace

PhaseOneResult solve_phase_one(const BoundedProblem& problem, const SimplexOptions& options) {
  return PhaseOne(problem, options).run();
}

double max_violation(const BoundedProblem& problem, const std::vector<double>& x) {
  if (x.size() != problem.num_vars()) throw InputError("max_violation: size mismatch");
  double worst = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    worst = std::max({worst, problem.var_lo[j] - x[j], x[j] - problem.var_hi[j]});
  }
  for (const auto& row : problem.rows) {
    double s = 0.0;
    for (const auto& [j, a] : row.terms) s += a * x[j];
    worst = std::max({worst, row.lo - s, s - row.hi});
  }
  return worst;
}

}  // namespace capk::lp
