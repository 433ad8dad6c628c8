#include "capk/harness.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <limits>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

#include "capk/greedy.hpp"
#include "capk/halfcap.hpp"

namespace capk {

std::string to_string(Algorithm a) {
  switch (a) {
    case Algorithm::Greedy:
      return "greedy";
    case Algorithm::Random:
      return "random";
    case Algorithm::Lp:
      return "lp";
    case Algorithm::Half:
      return "half";
  }
  return "?";
}

Algorithm parse_algorithm(const std::string& name) {
  if (name == "greedy") return Algorithm::Greedy;
  if (name == "random") return Algorithm::Random;
  if (name == "lp") return Algorithm::Lp;
  if (name == "half") return Algorithm::Half;
  throw InputError("unknown algorithm '" + name + "' (expected greedy, random, lp or half)");
}

void validate_config(const RunConfig& cfg) {
  if (cfg.k < 1) throw InputError("k must be >= 1");
  if (!(cfg.alpha > 0.0 && cfg.alpha <= 1.0)) throw InputError("alpha must lie in (0, 1]");
  if (!(cfg.epsilon > 0.0) || !std::isfinite(cfg.epsilon)) throw InputError("epsilon must be > 0");
  if (cfg.m < 1) throw InputError("m must be >= 1");
}

RadiusGrid geometric_grid(double lower, double upper, double epsilon, double positive_floor) {
  if (!(epsilon > 0.0)) throw InputError("geometric_grid: epsilon must be > 0");
  if (!(lower >= 0.0) || !(upper >= 0.0)) throw InputError("geometric_grid: negative endpoint");
  RadiusGrid grid;
  double v = lower;
  if (v <= 0.0) {
    grid.values.push_back(0.0);
    if (upper <= 0.0) return grid;
    v = positive_floor > 0.0 ? std::min(positive_floor, upper) : upper;
  }
  while (v < upper) {
    grid.values.push_back(v);
    v *= 1.0 + epsilon;
  }
  if (grid.values.empty() || grid.values.back() < upper) grid.values.push_back(upper);
  return grid;
}

namespace {

double smallest_positive_distance(const Instance& inst) {
  double best = std::numeric_limits<double>::infinity();
  for (PointId i = 0; i < inst.size(); ++i) {
    for (PointId j = i + 1; j < inst.size(); ++j) {
      const double d = inst.dist(i, j);
      if (d > 0.0) best = std::min(best, d);
    }
  }
  return std::isfinite(best) ? best : 0.0;
}

}  // namespace

FasterResult faster_algorithm(const Instance& inst, const RunConfig& cfg,
                              const FairOptions& options) {
  validate_config(cfg);
  const Instance work = inst.with_k(cfg.k).with_alpha(cfg.alpha);
  FasterResult res;
  for (PointId j = 0; j < work.size(); ++j) res.lambda_far = std::max(res.lambda_far, work.dist(0, j));
  res.lambda_greedy = greedy_k_center(work).cost;

  std::vector<PointId> all(work.size());
  std::iota(all.begin(), all.end(), PointId{0});
  const std::size_t coreset_size = static_cast<std::size_t>(cfg.m) * static_cast<std::size_t>(cfg.k);
  res.coreset = greedy_k_center_on(work, all, coreset_size).centers;

  const double lower = res.lambda_greedy / 2.0;
  res.grid = geometric_grid(lower, 2.0 * res.lambda_far, cfg.epsilon,
                            lower > 0.0 ? lower : smallest_positive_distance(work) / 2.0);
  const std::optional<std::vector<PointId>> restricted = res.coreset;
  for (double lambda : res.grid.values) {
    ++res.probes;
    if (auto sol = fair_k_center(work, lambda, restricted, options)) {
      res.solution = std::move(sol);
      res.lambda = lambda;
      return res;
    }
  }
  return res;
}

int max_additive_violation(const Instance& inst, const ClusteringSolution& sol, double alpha) {
  int worst = 0;
  for (const auto& hist : color_histograms(inst, sol)) {
    const std::size_t size = std::accumulate(hist.begin(), hist.end(), std::size_t{0});
    const auto allowed = static_cast<long long>(std::floor(static_cast<double>(size) * alpha + 1e-9));
    for (std::size_t count : hist) {
      worst = std::max(worst, static_cast<int>(static_cast<long long>(count) - allowed));
    }
  }
  return worst;
}

RandomBaselineSummary random_baseline_average(const Instance& inst, std::uint64_t base_seed) {
  RandomBaselineSummary out;
  for (std::uint64_t s = 0; s < 10; ++s) {
    const ClusteringSolution sol = random_baseline(inst, base_seed + s);
    out.costs.push_back(solution_cost(inst, sol));
    out.deltas.push_back(max_additive_violation(inst, sol, inst.alpha()));
  }
  out.mean_cost = std::accumulate(out.costs.begin(), out.costs.end(), 0.0) / 10.0;
  out.mean_delta = std::accumulate(out.deltas.begin(), out.deltas.end(), 0.0) / 10.0;
  return out;
}

namespace {

double ratio(double a, double b) {
  if (b > 0.0) return a / b;
  return a == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
}

}  // namespace

CappedInstanceReport run(const Instance& inst, const RunConfig& cfg, bool timing) {
  validate_config(cfg);
  const auto start = std::chrono::steady_clock::now();
  const Instance work = inst.with_k(cfg.k).with_alpha(cfg.alpha);

  CappedInstanceReport rep;
  rep.config = cfg;
  rep.num_points = work.size();
  rep.num_colors = work.num_colors();
  const auto counts = work.color_counts();
  rep.max_color_fraction = static_cast<double>(*std::max_element(counts.begin(), counts.end())) /
                           static_cast<double>(work.size());

  const ClusteringSolution greedy = lloyd_kcenter_round(work, greedy_k_center(work).solution);
  rep.greedy_cost = solution_cost(work, greedy);
  rep.greedy_delta = max_additive_violation(work, greedy, cfg.alpha);

  const int random_k = std::min<int>(cfg.k, static_cast<int>(work.size()));
  const RandomBaselineSummary random = random_baseline_average(work.with_k(random_k), cfg.seed);
  rep.random_cost = random.mean_cost;
  rep.random_delta = random.mean_delta;

  std::optional<ClusteringSolution> sol;
  switch (cfg.algorithm) {
    case Algorithm::Greedy:
      sol = greedy;
      break;
    case Algorithm::Random:
      sol = random_baseline(work.with_k(random_k), cfg.seed);
      break;
    case Algorithm::Lp: {
      FasterResult fr = faster_algorithm(work, cfg);
      sol = std::move(fr.solution);
      rep.lambda = fr.lambda;
      break;
    }
    case Algorithm::Half: {
      if (auto hr = non_dominant_k_center(work)) {
        sol = std::move(hr->solution);
        rep.lambda = hr->lambda;
      }
      break;
    }
  }

  if (sol) {
    rep.status = "ok";
    rep.cost = solution_cost(work, *sol);
    rep.delta = max_additive_violation(work, *sol, cfg.alpha);
    rep.cost_vs_greedy = ratio(rep.cost, rep.greedy_cost);
    rep.cost_vs_random = ratio(rep.cost, rep.random_cost);
    rep.centers = sol->centers;
    rep.assignment = sol->assign;
    rep.histograms = color_histograms(work, *sol);
  } else {
    rep.status = "infeasible";
  }
  if (timing) {
    rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                      .count();
  }
  return rep;
}

namespace {

nlohmann::ordered_json number_or_null(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

}  // namespace

void write_json(const CappedInstanceReport& rep, const Instance& inst, std::ostream& out) {
  using nlohmann::ordered_json;
  const bool ok = rep.status == "ok";
  ordered_json j;
  j["status"] = rep.status;
  j["params"] = {{"algorithm", to_string(rep.config.algorithm)},
                 {"k", rep.config.k},
                 {"alpha", rep.config.alpha},
                 {"epsilon", rep.config.epsilon},
                 {"m", rep.config.m},
                 {"seed", rep.config.seed}};
  j["num_points"] = rep.num_points;
  j["num_colors"] = rep.num_colors;
  j["max_color_fraction"] = rep.max_color_fraction;
  j["cost"] = ok ? number_or_null(rep.cost) : ordered_json(nullptr);
  j["delta"] = ok ? ordered_json(rep.delta) : ordered_json(nullptr);
  j["lambda"] = ok ? number_or_null(rep.lambda) : ordered_json(nullptr);
  j["greedy_cost"] = rep.greedy_cost;
  j["greedy_delta"] = rep.greedy_delta;
  j["random_cost"] = rep.random_cost;
  j["random_delta"] = rep.random_delta;
  j["cost_vs_greedy"] = ok ? number_or_null(rep.cost_vs_greedy) : ordered_json(nullptr);
  j["cost_vs_random"] = ok ? number_or_null(rep.cost_vs_random) : ordered_json(nullptr);
  j["centers"] = rep.centers;
  j["assignment"] = rep.assignment;
  ordered_json hist = ordered_json::array();
  for (std::size_t s = 0; s < rep.histograms.size(); ++s) {
    ordered_json counts = ordered_json::object();
    for (std::size_t c = 0; c < rep.histograms[s].size(); ++c) {
      if (rep.histograms[s][c] > 0) counts[inst.color_label(static_cast<ColorId>(c))] = rep.histograms[s][c];
    }
    hist.push_back({{"center", rep.centers[s]}, {"counts", counts}});
  }
  j["histograms"] = hist;
  j["wall_ms"] = rep.wall_ms;
  out << j.dump(2) << "\n";
}

namespace {

std::string fmt(double v) {
  if (!std::isfinite(v)) return "";
  std::ostringstream s;
  s << std::setprecision(10) << v;
  return s.str();
}

}  // namespace

void write_csv(const std::vector<CappedInstanceReport>& reports, std::ostream& out) {
  out << "algorithm,k,alpha,epsilon,m,seed,status,cost,cost_vs_greedy,cost_vs_random,delta,"
         "delta_greedy,delta_random,lambda,wall_ms\n";
  for (const auto& r : reports) {
    const bool ok = r.status == "ok";
    out << to_string(r.config.algorithm) << ',' << r.config.k << ',' << fmt(r.config.alpha) << ','
        << fmt(r.config.epsilon) << ',' << r.config.m << ',' << r.config.seed << ',' << r.status
        << ',' << (ok ? fmt(r.cost) : "") << ',' << (ok ? fmt(r.cost_vs_greedy) : "") << ','
        << (ok ? fmt(r.cost_vs_random) : "") << ',' << (ok ? std::to_string(r.delta) : "") << ','
        << r.greedy_delta << ',' << fmt(r.random_delta) << ',' << (ok ? fmt(r.lambda) : "") << ','
        << fmt(r.wall_ms) << '\n';
  }
}

void write_svg(const std::vector<CappedInstanceReport>& reports, std::ostream& out) {
  constexpr double W = 640, H = 400, pad = 50;
  double amax = 1.0, cmax = 0.0;
  for (const auto& r : reports) {
    if (r.status == "ok") cmax = std::max(cmax, r.cost);
  }
  if (cmax <= 0.0) cmax = 1.0;
  auto px = [&](double a) { return pad + a / amax * (W - 2 * pad); };
  auto py = [&](double c) { return H - pad - c / cmax * (H - 2 * pad); };
  const std::map<Algorithm, std::string> palette = {{Algorithm::Greedy, "#1f77b4"},
                                                    {Algorithm::Random, "#7f7f7f"},
                                                    {Algorithm::Lp, "#d62728"},
                                                    {Algorithm::Half, "#2ca02c"}};
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
      << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<line x1=\"" << pad << "\" y1=\"" << H - pad << "\" x2=\"" << W - pad << "\" y2=\""
      << H - pad << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << pad << "\" y1=\"" << pad << "\" x2=\"" << pad << "\" y2=\"" << H - pad
      << "\" stroke=\"black\"/>\n";
  out << "<text x=\"" << W / 2 << "\" y=\"" << H - 10 << "\" text-anchor=\"middle\">alpha</text>\n";
  out << "<text x=\"15\" y=\"" << H / 2 << "\" transform=\"rotate(-90 15 " << H / 2
      << ")\" text-anchor=\"middle\">cost (max " << fmt(cmax) << ")</text>\n";
  int row = 0;
  for (const auto& [algo, color] : palette) {
    bool any = false;
    for (const auto& r : reports) {
      if (r.config.algorithm != algo || r.status != "ok") continue;
      any = true;
      out << "<circle cx=\"" << fmt(px(r.config.alpha)) << "\" cy=\"" << fmt(py(r.cost))
          << "\" r=\"4\" fill=\"" << color << "\"/>\n";
    }
    if (any) {
      out << "<text x=\"" << W - pad - 60 << "\" y=\"" << pad + 15 * row++ << "\" fill=\"" << color
          << "\">" << to_string(algo) << "</text>\n";
    }
  }
  out << "</svg>\n";
}

}  // namespace capk
