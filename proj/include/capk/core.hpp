#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace capk {

// Bad user input: malformed files, violated preconditions, size guards.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The LP solver could not reach a verdict (iteration limit, singular basis,
// failed re-verification). Never to be read as "infeasible".
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A guarantee that should hold by construction was observed to fail.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

using PointId = std::size_t;
using ColorId = int;

struct Point {
  PointId id = 0;
  std::vector<double> coords;
  ColorId color = 0;
};

// Euclidean distance. Throws InputError on a dimension mismatch.
double distance(const Point& p, const Point& q);

// Dense symmetric distance table for instances whose metric is not given by
// coordinates (e.g. shortest-path metrics on graphs).
class DistanceMatrix {
 public:
  explicit DistanceMatrix(std::size_t n, double fill = 0.0);

  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, double value);

 private:
  std::size_t n_;
  std::vector<double> d_;
};

// An alpha-capped k-center instance. The facility set is the point set.
// Colors must be dense ids in [0, num_colors). Immutable after construction.
class Instance {
 public:
  Instance(std::vector<Point> points, int k, double alpha,
           std::vector<std::string> color_labels = {});
  Instance(std::vector<Point> points, DistanceMatrix metric, int k, double alpha,
           std::vector<std::string> color_labels = {});

  std::size_t size() const { return points_.size(); }
  int k() const { return k_; }
  double alpha() const { return alpha_; }
  int num_colors() const { return num_colors_; }
  std::size_t dimension() const;

  const std::vector<Point>& points() const { return points_; }
  const Point& point(PointId i) const { return points_[i]; }
  ColorId color(PointId i) const { return points_[i].color; }
  const std::string& color_label(ColorId c) const { return color_labels_[c]; }
  const std::vector<std::string>& color_labels() const { return color_labels_; }
  bool has_explicit_metric() const { return metric_ != nullptr; }

  double dist(PointId i, PointId j) const;

  // Number of points of each color.
  std::vector<std::size_t> color_counts() const;

  Instance with_k(int k) const;
  Instance with_alpha(double alpha) const;

 private:
  void validate();

  std::vector<Point> points_;
  int k_;
  double alpha_;
  int num_colors_ = 0;
  std::vector<std::string> color_labels_;
  std::shared_ptr<const DistanceMatrix> metric_;
};

// (F', sigma): opened centers and a total assignment of points to centers.
struct ClusteringSolution {
  std::vector<PointId> centers;
  std::vector<PointId> assign;

  bool operator==(const ClusteringSolution&) const = default;
};

// Throws InputError unless every point is assigned to one of the listed
// centers, centers are distinct, and at most k centers are used.
void validate_solution(const Instance& inst, const ClusteringSolution& sol);

// max_j d(j, sigma(j)).
double solution_cost(const Instance& inst, const ClusteringSolution& sol);

// Tolerance applied to alpha * |cluster| when comparing against integer
// color counts, so that alpha = 0.1 and friends behave.
inline constexpr double kCapTolerance = 1e-9;

// True iff every cluster satisfies |C ∩ D_c| <= alpha |C| for every color.
bool check_capped(const Instance& inst, const ClusteringSolution& sol);

// Members of each center's cluster, keyed in the order of sol.centers.
std::vector<std::vector<PointId>> clusters_of(const ClusteringSolution& sol);

// histogram[cluster][color] for the clusters in sol.centers order.
std::vector<std::vector<std::size_t>> color_histograms(const Instance& inst,
                                                       const ClusteringSolution& sol);

// Assigns every point to its nearest center (ties: first in `centers`).
std::vector<PointId> nearest_assignment(const Instance& inst,
                                        const std::vector<PointId>& centers);

// Solution with sorted distinct centers and nearest assignment.
ClusteringSolution nearest_solution(const Instance& inst, std::vector<PointId> centers);

struct RadiusGrid {
  std::vector<double> values;  // strictly increasing, starts at 0
};

// All distinct pairwise distances plus zero, ascending.
RadiusGrid candidate_radii(const Instance& inst);

}  // namespace capk
