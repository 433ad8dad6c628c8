#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "capk/core.hpp"

namespace capk::testing {

inline Instance line(const std::vector<double>& xs, const std::vector<ColorId>& colors, int k,
                     double alpha = 1.0) {
  std::vector<Point> pts;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    pts.push_back(Point{i, {xs[i]}, colors.empty() ? 0 : colors[i]});
  }
  return Instance(std::move(pts), k, alpha);
}

inline Instance plane(const std::vector<std::pair<double, double>>& xy,
                      const std::vector<ColorId>& colors, int k, double alpha) {
  std::vector<Point> pts;
  for (std::size_t i = 0; i < xy.size(); ++i) {
    pts.push_back(Point{i, {xy[i].first, xy[i].second}, colors[i]});
  }
  return Instance(std::move(pts), k, alpha);
}

// 2 red + 2 blue at the corners of the unit square, same colors diagonal.
inline Instance unit_square(int k = 2, double alpha = 0.5) {
  return plane({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {0, 1, 0, 1}, k, alpha);
}

// Random points in [0,1]^dims; every color in 0..colors-1 appears at least
// once when n >= colors.
inline Instance random_instance(std::mt19937_64& rng, std::size_t n, int dims, int colors, int k,
                                double alpha) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> c(0, colors - 1);
  std::vector<Point> pts(n);
  for (std::size_t i = 0; i < n; ++i) {
    pts[i].id = i;
    pts[i].coords.resize(dims);
    for (double& v : pts[i].coords) v = u(rng);
    pts[i].color = i < static_cast<std::size_t>(colors) ? static_cast<ColorId>(i) : c(rng);
  }
  return Instance(std::move(pts), k, alpha);
}

// Random instance whose colors satisfy the aggregate cap |D_c| <= alpha |D|.
inline Instance random_feasible_instance(std::mt19937_64& rng, std::size_t n, int dims, int colors,
                                         int k, double alpha) {
  const auto per_color = static_cast<std::size_t>(std::floor(alpha * static_cast<double>(n) + 1e-9));
  if (per_color * static_cast<std::size_t>(colors) < n) {
    throw InputError("random_feasible_instance: too few colors for the cap");
  }
  for (;;) {
    Instance inst = random_instance(rng, n, dims, colors, k, alpha);
    bool ok = true;
    for (std::size_t cnt : inst.color_counts()) {
      if (cnt > alpha * static_cast<double>(n) + kCapTolerance) ok = false;
    }
    if (ok) return inst;
  }
}

}  // namespace capk::testing
