#include "capk/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace capk {

double distance(const Point& p, const Point& q) {
  if (p.coords.size() != q.coords.size()) {
    throw InputError("distance: dimension mismatch (" + std::to_string(p.coords.size()) +
                     " vs " + std::to_string(q.coords.size()) + ")");
  }
  double s = 0.0;
  for (std::size_t a = 0; a < p.coords.size(); ++a) {
    const double diff = p.coords[a] - q.coords[a];
    s += diff * diff;
  }
  return std::sqrt(s);
}

DistanceMatrix::DistanceMatrix(std::size_t n, double fill) : n_(n), d_(n * n, fill) {
  for (std::size_t i = 0; i < n; ++i) d_[i * n + i] = 0.0;
}

void DistanceMatrix::set(std::size_t i, std::size_t j, double value) {
  d_[i * n_ + j] = value;
  d_[j * n_ + i] = value;
}

Instance::Instance(std::vector<Point> points, int k, double alpha,
                   std::vector<std::string> color_labels)
    : points_(std::move(points)), k_(k), alpha_(alpha), color_labels_(std::move(color_labels)) {
  validate();
}

Instance::Instance(std::vector<Point> points, DistanceMatrix metric, int k, double alpha,
                   std::vector<std::string> color_labels)
    : points_(std::move(points)),
      k_(k),
      alpha_(alpha),
      color_labels_(std::move(color_labels)),
      metric_(std::make_shared<const DistanceMatrix>(std::move(metric))) {
  if (metric_->size() != points_.size()) {
    throw InputError("Instance: metric size does not match the number of points");
  }
  validate();
}

void Instance::validate() {
  if (points_.empty()) throw InputError("Instance: at least one point is required");
  if (k_ < 1) throw InputError("Instance: k must be >= 1");
  if (!(alpha_ > 0.0 && alpha_ <= 1.0)) throw InputError("Instance: alpha must lie in (0, 1]");

  const std::size_t dim = points_.front().coords.size();
  ColorId max_color = -1;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    Point& p = points_[i];
    p.id = i;
    if (p.coords.size() != dim) {
      throw InputError("Instance: point " + std::to_string(i) + " has dimension " +
                       std::to_string(p.coords.size()) + ", expected " + std::to_string(dim));
    }
    for (double v : p.coords) {
      if (!std::isfinite(v)) throw InputError("Instance: non-finite coordinate");
    }
    if (p.color < 0) throw InputError("Instance: negative color id");
    max_color = std::max(max_color, p.color);
  }
  num_colors_ = max_color + 1;
  std::vector<bool> seen(num_colors_, false);
  for (const Point& p : points_) seen[p.color] = true;
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw InputError("Instance: color ids must be dense in [0, num_colors)");
  }
  if (color_labels_.empty()) {
    for (int c = 0; c < num_colors_; ++c) color_labels_.push_back(std::to_string(c));
  } else if (static_cast<int>(color_labels_.size()) != num_colors_) {
    throw InputError("Instance: color label table does not match the number of colors");
  }
}

std::size_t Instance::dimension() const { return points_.front().coords.size(); }

double Instance::dist(PointId i, PointId j) const {
  if (metric_) return (*metric_)(i, j);
  const auto& a = points_[i].coords;
  const auto& b = points_[j].coords;
  double s = 0.0;
  for (std::size_t t = 0; t < a.size(); ++t) {
    const double diff = a[t] - b[t];
    s += diff * diff;
  }
  return std::sqrt(s);
}

std::vector<std::size_t> Instance::color_counts() const {
  std::vector<std::size_t> counts(num_colors_, 0);
  for (const Point& p : points_) ++counts[p.color];
  return counts;
}

Instance Instance::with_k(int k) const {
  Instance copy = *this;
  copy.k_ = k;
  copy.validate();
  return copy;
}

Instance Instance::with_alpha(double alpha) const {
  Instance copy = *this;
  copy.alpha_ = alpha;
  copy.validate();
  return copy;
}

void validate_solution(const Instance& inst, const ClusteringSolution& sol) {
  if (sol.assign.size() != inst.size()) {
    throw InputError("solution: assignment covers " + std::to_string(sol.assign.size()) +
                     " of " + std::to_string(inst.size()) + " points");
  }
  if (sol.centers.size() > static_cast<std::size_t>(inst.k())) {
    throw InputError("solution: more than k centers");
  }
  std::vector<bool> is_center(inst.size(), false);
  for (PointId c : sol.centers) {
    if (c >= inst.size()) throw InputError("solution: center out of range");
    if (is_center[c]) throw InputError("solution: duplicate center");
    is_center[c] = true;
  }
  for (PointId j = 0; j < sol.assign.size(); ++j) {
    const PointId c = sol.assign[j];
    if (c >= inst.size() || !is_center[c]) {
      throw InputError("solution: point " + std::to_string(j) + " assigned to a non-center");
    }
  }
}

double solution_cost(const Instance& inst, const ClusteringSolution& sol) {
  validate_solution(inst, sol);
  double cost = 0.0;
  for (PointId j = 0; j < inst.size(); ++j) cost = std::max(cost, inst.dist(j, sol.assign[j]));
  return cost;
}

std::vector<std::vector<PointId>> clusters_of(const ClusteringSolution& sol) {
  std::vector<std::vector<PointId>> out(sol.centers.size());
  std::size_t max_id = 0;
  for (PointId c : sol.centers) max_id = std::max(max_id, c);
  for (PointId c : sol.assign) max_id = std::max(max_id, c);
  std::vector<std::size_t> slot(max_id + 1, sol.centers.size());
  for (std::size_t s = 0; s < sol.centers.size(); ++s) slot[sol.centers[s]] = s;
  for (PointId j = 0; j < sol.assign.size(); ++j) {
    const std::size_t s = slot[sol.assign[j]];
    if (s == sol.centers.size()) throw InputError("solution: point assigned to a non-center");
    out[s].push_back(j);
  }
  return out;
}

std::vector<std::vector<std::size_t>> color_histograms(const Instance& inst,
                                                       const ClusteringSolution& sol) {
  const auto clusters = clusters_of(sol);
  std::vector<std::vector<std::size_t>> hist(clusters.size(),
                                             std::vector<std::size_t>(inst.num_colors(), 0));
  for (std::size_t s = 0; s < clusters.size(); ++s) {
    for (PointId j : clusters[s]) ++hist[s][inst.color(j)];
  }
  return hist;
}

bool check_capped(const Instance& inst, const ClusteringSolution& sol) {
  validate_solution(inst, sol);
  for (const auto& row : color_histograms(inst, sol)) {
    std::size_t size = 0;
    for (std::size_t n : row) size += n;
    const double cap = inst.alpha() * static_cast<double>(size) + kCapTolerance;
    for (std::size_t n : row) {
      if (static_cast<double>(n) > cap) return false;
    }
  }
  return true;
}

std::vector<PointId> nearest_assignment(const Instance& inst,
                                        const std::vector<PointId>& centers) {
  if (centers.empty()) throw InputError("nearest_assignment: no centers");
  std::vector<PointId> assign(inst.size());
  for (PointId j = 0; j < inst.size(); ++j) {
    double best = std::numeric_limits<double>::infinity();
    PointId arg = centers.front();
    for (PointId c : centers) {
      const double d = inst.dist(j, c);
      if (d < best) {
        best = d;
        arg = c;
      }
    }
    assign[j] = arg;
  }
  return assign;
}

ClusteringSolution nearest_solution(const Instance& inst, std::vector<PointId> centers) {
  std::sort(centers.begin(), centers.end());
  centers.erase(std::unique(centers.begin(), centers.end()), centers.end());
  ClusteringSolution sol;
  sol.assign = nearest_assignment(inst, centers);
  sol.centers = std::move(centers);
  return sol;
}

RadiusGrid candidate_radii(const Instance& inst) {
  std::vector<double> values;
  values.reserve(inst.size() * (inst.size() - 1) / 2 + 1);
  values.push_back(0.0);
  for (PointId i = 0; i < inst.size(); ++i) {
    for (PointId j = i + 1; j < inst.size(); ++j) values.push_back(inst.dist(i, j));
  }
  std::sort(values.begin(), values.end());
  RadiusGrid grid;
  grid.values.reserve(values.size());
  for (double v : values) {
    if (grid.values.empty() ||
        v - grid.values.back() > std::numeric_limits<double>::epsilon() *
                                     std::max(1.0, std::abs(v))) {
      grid.values.push_back(v);
    }
  }
  return grid;
}

}  // namespace capk
