#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "capk/dataset.hpp"
#include "capk/flow.hpp"
#include "capk/harness.hpp"
#include "capk/lp.hpp"
#include "capk/rounding.hpp"

using namespace capk;

namespace {

struct RunArgs {
  std::string input;
  std::string output;
  std::string svg;
  std::string format = "json";
  int k = 25;
  std::vector<double> alphas{0.5};
  double epsilon = 0.1;
  int m = 2;
  std::vector<std::string> algos{"lp"};
  std::uint64_t seed = 0;
  int jobs = 1;
  bool no_timing = false;
};

struct SynthArgs {
  SyntheticSpec spec;
  std::string output;
};

struct DumpArgs {
  std::string input;
  int k = 25;
  double alpha = 0.5;
  double lambda = 0.0;
  std::string lp_path;
  std::string dot_path;
};

// Stream to a file, or stdout when the path is empty or "-".
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw InputError("cannot write " + path);
    }
  }
  std::ostream& get() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

int do_run(const RunArgs& a) {
  if (a.format != "json" && a.format != "csv") throw InputError("--format must be json or csv");
  if (a.jobs < 1) throw InputError("--jobs must be >= 1");
  const Instance inst = load_csv_file(a.input, a.k, a.alphas.front());

  std::vector<RunConfig> configs;
  for (const std::string& name : a.algos) {
    for (double alpha : a.alphas) {
      RunConfig cfg;
      cfg.k = a.k;
      cfg.alpha = alpha;
      cfg.epsilon = a.epsilon;
      cfg.m = a.m;
      cfg.algorithm = parse_algorithm(name);
      cfg.seed = a.seed;
      validate_config(cfg);
      configs.push_back(cfg);
    }
  }

  std::vector<CappedInstanceReport> reports(configs.size());
  for (std::size_t start = 0; start < configs.size(); start += static_cast<std::size_t>(a.jobs)) {
    const std::size_t stop = std::min(configs.size(), start + static_cast<std::size_t>(a.jobs));
    std::vector<std::future<CappedInstanceReport>> batch;
    for (std::size_t i = start; i < stop; ++i) {
      batch.push_back(std::async(std::launch::async, [&, i] { return run(inst, configs[i], !a.no_timing); }));
    }
    for (std::size_t i = start; i < stop; ++i) reports[i] = batch[i - start].get();
  }

  Sink sink(a.output);
  if (a.format == "csv") {
    write_csv(reports, sink.get());
  } else if (reports.size() == 1) {
    write_json(reports.front(), inst, sink.get());
  } else {
    sink.get() << "[\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
      write_json(reports[i], inst, sink.get());
      if (i + 1 < reports.size()) sink.get() << ",\n";
    }
    sink.get() << "]\n";
  }
  if (!a.svg.empty()) {
    Sink svg(a.svg);
    write_svg(reports, svg.get());
  }
  const bool infeasible = std::any_of(reports.begin(), reports.end(),
                                      [](const auto& r) { return r.status != "ok"; });
  return infeasible ? 2 : 0;
}

int do_synth(const SynthArgs& a) {
  const Instance inst = synthetic_balanced(a.spec, 1, 1.0);
  Sink sink(a.output);
  write_csv(inst, sink.get());
  return 0;
}

int do_dump(const DumpArgs& a) {
  const Instance inst = load_csv_file(a.input, a.k, a.alpha);
  const LinearSystem sys = build_polytope(inst, a.lambda);
  if (!a.lp_path.empty()) {
    Sink lp(a.lp_path);
    write_lp_text(sys, lp.get());
  }
  if (a.dot_path.empty()) return 0;
  const auto frac = check_feasible(sys);
  if (!frac) {
    std::cerr << "relaxation is empty at lambda = " << a.lambda << "\n";
    return 2;
  }
  std::vector<PointId> order(inst.size());
  std::iota(order.begin(), order.end(), PointId{0});
  const FacilityMap fmap = select_separated_facilities(inst, a.lambda, order);
  const FractionalSolution r = reroute_fractional(*frac, fmap);
  const FlowNetwork net = build_assignment_network(inst, r, fmap.opened);
  const auto flow = max_flow_lower_bounds(net, static_cast<std::int64_t>(inst.size()));
  Sink dot(a.dot_path);
  write_dot(net, dot.get(), flow ? &*flow : nullptr);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"capped k-center clustering"};
  app.require_subcommand(1);

  RunArgs run_args;
  auto* run_cmd = app.add_subcommand("run", "cluster a dataset and write a report");
  run_cmd->add_option("--input", run_args.input, "CSV with header id,color,x0,...")->required();
  run_cmd->add_option("--output", run_args.output, "report path (default stdout)");
  run_cmd->add_option("--format", run_args.format, "json or csv")->capture_default_str();
  run_cmd->add_option("--k", run_args.k, "number of centers")->capture_default_str();
  run_cmd->add_option("--alpha", run_args.alphas, "cap; several values run several configs")
      ->capture_default_str();
  run_cmd->add_option("--epsilon", run_args.epsilon, "grid ratio minus one")->capture_default_str();
  run_cmd->add_option("--m", run_args.m, "coreset size multiplier")->capture_default_str();
  run_cmd->add_option("--algo", run_args.algos, "greedy, random, lp or half")->capture_default_str();
  run_cmd->add_option("--seed", run_args.seed, "seed for the random baseline")->capture_default_str();
  run_cmd->add_option("--jobs", run_args.jobs, "configs run concurrently")->capture_default_str();
  run_cmd->add_option("--svg", run_args.svg, "cost against alpha scatter");
  run_cmd->add_flag("--no-timing", run_args.no_timing, "write wall_ms as 0");

  SynthArgs synth_args;
  auto* synth_cmd = app.add_subcommand("synth", "write a balanced Gaussian-blob dataset");
  synth_cmd->add_option("--colors", synth_args.spec.colors)->capture_default_str();
  synth_cmd->add_option("--per-color", synth_args.spec.per_color)->capture_default_str();
  synth_cmd->add_option("--dims", synth_args.spec.dims)->capture_default_str();
  synth_cmd->add_option("--blobs", synth_args.spec.blobs)->capture_default_str();
  synth_cmd->add_option("--seed", synth_args.spec.seed)->capture_default_str();
  synth_cmd->add_option("--output", synth_args.output, "CSV path (default stdout)");

  DumpArgs dump_args;
  auto* dump_cmd = app.add_subcommand("dump", "write the relaxation (LP text) and flow network (DOT)");
  dump_cmd->add_option("--input", dump_args.input)->required();
  dump_cmd->add_option("--k", dump_args.k)->capture_default_str();
  dump_cmd->add_option("--alpha", dump_args.alpha)->capture_default_str();
  dump_cmd->add_option("--lambda", dump_args.lambda)->required();
  dump_cmd->add_option("--lp", dump_args.lp_path);
  dump_cmd->add_option("--dot", dump_args.dot_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*run_cmd) return do_run(run_args);
    if (*synth_cmd) return do_synth(synth_args);
    if (*dump_cmd) return do_dump(dump_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
