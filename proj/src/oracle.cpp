#include "capk/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <unordered_map>
#include <unordered_set>

#include "capk/lp.hpp"

namespace capk {

namespace {

bool capped_counts(const std::vector<int>& counts, int size, double alpha) {
  for (int c : counts) {
    if (c > alpha * size + kCapTolerance) return false;
  }
  return true;
}

class CappedSearch {
 public:
  CappedSearch(const Instance& inst, std::vector<PointId> centers)
      : inst_(inst), centers_(std::move(centers)) {
    const std::size_t n = inst.size();
    counts_.assign(centers_.size(), std::vector<int>(inst.num_colors(), 0));
    sizes_.assign(centers_.size(), 0);
    assign_.assign(n, 0);
  }

  // Best cost strictly below `bound` found by this center set; updates bound.
  bool search(double& bound, std::vector<PointId>& best_assign) {
    bound_ = &bound;
    best_ = &best_assign;
    found_ = false;
    dfs(0, 0.0);
    return found_;
  }

 private:
  bool hopeless(std::size_t next) const {
    const double alpha = inst_.alpha();
    for (std::size_t s = 0; s < centers_.size(); ++s) {
      for (ColorId c = 0; c < inst_.num_colors(); ++c) {
        const int cnt = counts_[s][c];
        if (cnt == 0 || cnt <= alpha * sizes_[s] + kCapTolerance) continue;
        int room = 0;
        for (PointId j = next; j < inst_.size(); ++j) {
          if (inst_.color(j) != c && inst_.dist(centers_[s], j) < *bound_) ++room;
        }
        if (cnt > alpha * (sizes_[s] + room) + kCapTolerance) return true;
      }
    }
    return false;
  }

  void dfs(PointId j, double cost) {
    if (j == inst_.size()) {
      for (std::size_t s = 0; s < centers_.size(); ++s) {
        if (!capped_counts(counts_[s], sizes_[s], inst_.alpha())) return;
      }
      *bound_ = cost;
      *best_ = assign_;
      found_ = true;
      return;
    }
    for (std::size_t s = 0; s < centers_.size(); ++s) {
      const double d = inst_.dist(centers_[s], j);
      if (!(d < *bound_)) continue;
      ++counts_[s][inst_.color(j)];
      ++sizes_[s];
      assign_[j] = centers_[s];
      if (!hopeless(j + 1)) dfs(j + 1, std::max(cost, d));
      --counts_[s][inst_.color(j)];
      --sizes_[s];
    }
  }

  const Instance& inst_;
  std::vector<PointId> centers_;
  std::vector<std::vector<int>> counts_;
  std::vector<int> sizes_;
  std::vector<PointId> assign_;
  double* bound_ = nullptr;
  std::vector<PointId>* best_ = nullptr;
  bool found_ = false;
};

// Calls f on every subset of {0..n-1} of size 1..k in lexicographic order.
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  std::vector<PointId> cur;
  auto rec = [&](auto&& self, PointId start) -> void {
    if (!cur.empty()) f(cur);
    if (cur.size() == k) return;
    for (PointId i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace

std::optional<CappedOptimum> brute_force_capped_opt(const Instance& inst) {
  if (inst.size() > 10 || inst.k() > 3) {
    throw InputError("brute_force_capped_opt: needs |D| <= 10 and k <= 3");
  }
  double bound = std::numeric_limits<double>::infinity();
  std::vector<PointId> best;
  for_each_subset(inst.size(), static_cast<std::size_t>(inst.k()),
                  [&](const std::vector<PointId>& centers) {
                    CappedSearch search(inst, centers);
                    search.search(bound, best);
                  });
  if (best.empty()) return std::nullopt;
  CappedOptimum out;
  out.cost = bound;
  out.solution.assign = best;
  out.solution.centers = best;
  std::sort(out.solution.centers.begin(), out.solution.centers.end());
  out.solution.centers.erase(std::unique(out.solution.centers.begin(), out.solution.centers.end()),
                             out.solution.centers.end());
  return out;
}

double brute_force_kcenter_opt(const Instance& inst) {
  if (inst.size() > 12 || inst.k() > 3) {
    throw InputError("brute_force_kcenter_opt: needs |D| <= 12 and k <= 3");
  }
  double best = std::numeric_limits<double>::infinity();
  for_each_subset(inst.size(), static_cast<std::size_t>(inst.k()),
                  [&](const std::vector<PointId>& centers) {
                    double cost = 0.0;
                    for (PointId j = 0; j < inst.size() && cost < best; ++j) {
                      double near = std::numeric_limits<double>::infinity();
                      for (PointId c : centers) near = std::min(near, inst.dist(c, j));
                      cost = std::max(cost, near);
                    }
                    best = std::min(best, cost);
                  });
  return best;
}

namespace {

// Partition search over the set of unassigned points with a cluster budget.
// Each step places the lowest unassigned point into some capped subset of
// one ball.
class PartitionSearch {
 public:
  PartitionSearch(const Instance& inst, double radius) : inst_(inst) {
    const std::size_t n = inst.size();
    ball_.assign(n, 0);
    for (PointId s = 0; s < n; ++s) {
      for (PointId j = 0; j < n; ++j) {
        if (within_radius(inst.dist(s, j), radius)) ball_[s] |= std::uint64_t{1} << j;
      }
    }
  }

  bool solve() {
    const std::size_t n = inst_.size();
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    return dfs(all, static_cast<int>(std::min<std::size_t>(n, static_cast<std::size_t>(inst_.k()))));
  }

 private:
  bool capped(std::uint64_t set) const {
    std::vector<int> counts(inst_.num_colors(), 0);
    int size = 0;
    for (std::uint64_t m = set; m; m &= m - 1) {
      ++counts[inst_.color(static_cast<PointId>(std::countr_zero(m)))];
      ++size;
    }
    return capped_counts(counts, size, inst_.alpha());
  }

  bool dfs(std::uint64_t open, int budget) {
    if (open == 0) return true;
    if (budget == 0) return false;
    if (auto it = failed_.find(open); it != failed_.end() && it->second >= budget) return false;
    const PointId p = static_cast<PointId>(std::countr_zero(open));
    const std::uint64_t pbit = std::uint64_t{1} << p;
    std::unordered_set<std::uint64_t> tried;
    for (PointId s = 0; s < inst_.size(); ++s) {
      if (!(ball_[s] & pbit)) continue;
      const std::uint64_t pool = ball_[s] & open & ~pbit;
      // Walk the subsets of pool (with p added) that are capped.
      std::uint64_t sub = pool;
      for (;;) {
        const std::uint64_t part = sub | pbit;
        if (tried.insert(part).second && capped(part) && dfs(open & ~part, budget - 1)) return true;
        if (sub == 0) break;
        sub = (sub - 1) & pool;
      }
    }
    int& worst = failed_[open];
    worst = std::max(worst, budget);
    return false;
  }

  const Instance& inst_;
  std::vector<std::uint64_t> ball_;
  std::unordered_map<std::uint64_t, int> failed_;  // largest budget that failed
};

}  // namespace

bool capped_partition_exists(const Instance& inst, double radius) {
  if (inst.size() > 64) throw InputError("capped_partition_exists: needs |D| <= 64");
  // Aggregate cap is necessary for any capped partition.
  for (std::size_t c : inst.color_counts()) {
    if (static_cast<double>(c) > inst.alpha() * static_cast<double>(inst.size()) + kCapTolerance) {
      return false;
    }
  }
  return PartitionSearch(inst, radius).solve();
}

std::optional<double> partition_capped_opt(const Instance& inst) {
  for (double r : candidate_radii(inst).values) {
    if (capped_partition_exists(inst, r)) return r;
  }
  return std::nullopt;
}

}  // namespace capk
