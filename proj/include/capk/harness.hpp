#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "capk/core.hpp"
#include "capk/rounding.hpp"

namespace capk {

enum class Algorithm { Greedy, Random, Lp, Half };

std::string to_string(Algorithm a);
// "greedy", "random", "lp", "half"; InputError otherwise.
Algorithm parse_algorithm(const std::string& name);

struct RunConfig {
  int k = 25;
  double alpha = 0.5;
  double epsilon = 0.1;
  int m = 2;
  Algorithm algorithm = Algorithm::Lp;
  std::uint64_t seed = 0;
};

// Throws InputError on k < 1, alpha outside (0, 1], epsilon <= 0 or m < 1.
void validate_config(const RunConfig& cfg);

// lambda'/2, lambda'/2 (1+eps), ... while below 2 lambda'', then 2 lambda''
// itself. A zero lower end is kept as the first value and the geometric part
// then starts from `positive_floor`.
RadiusGrid geometric_grid(double lower, double upper, double epsilon, double positive_floor);

struct FasterResult {
  std::optional<ClusteringSolution> solution;
  double lambda = 0.0;          // accepted grid value
  double lambda_greedy = 0.0;   // lambda'
  double lambda_far = 0.0;      // lambda''
  std::vector<PointId> coreset;  // F^c in greedy selection order
  RadiusGrid grid;
  std::size_t probes = 0;  // grid values tried
};

// Coreset-restricted LP route over the (1 + epsilon) grid.
FasterResult faster_algorithm(const Instance& inst, const RunConfig& cfg,
                              const FairOptions& options = {});

// max over clusters C and colors c of max(|C ∩ D_c| - floor(|C| alpha), 0).
int max_additive_violation(const Instance& inst, const ClusteringSolution& sol, double alpha);

struct RandomBaselineSummary {
  double mean_cost = 0.0;
  double mean_delta = 0.0;
  std::vector<double> costs;
  std::vector<int> deltas;
};

// Random baseline under seeds base, base + 1, ..., base + 9.
RandomBaselineSummary random_baseline_average(const Instance& inst, std::uint64_t base_seed);

struct CappedInstanceReport {
  RunConfig config;
  std::string status;  // "ok" or "infeasible"
  std::size_t num_points = 0;
  int num_colors = 0;
  double max_color_fraction = 0.0;
  double cost = 0.0;
  int delta = 0;
  double lambda = 0.0;  // accepted radius guess (lp, half)
  double greedy_cost = 0.0;
  int greedy_delta = 0;
  double random_cost = 0.0;  // average over 10 seeds
  double random_delta = 0.0;
  double cost_vs_greedy = 0.0;  // cost / greedy_cost; 1 when both vanish
  double cost_vs_random = 0.0;
  std::vector<PointId> centers;
  std::vector<PointId> assignment;
  std::vector<std::vector<std::size_t>> histograms;  // per center, per color
  double wall_ms = 0.0;
};

// One configuration on one instance, with both baselines for the ratios.
// k larger than |D| is clamped for the random baseline only.
CappedInstanceReport run(const Instance& inst, const RunConfig& cfg, bool timing = true);

void write_json(const CappedInstanceReport& report, const Instance& inst, std::ostream& out);
// Header plus one row per report, in the column layout of the summary table.
void write_csv(const std::vector<CappedInstanceReport>& reports, std::ostream& out);

// Cost against alpha, one series per algorithm.
void write_svg(const std::vector<CappedInstanceReport>& reports, std::ostream& out);

}  // namespace capk
