#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "capk/core.hpp"
#include "capk/dataset.hpp"
#include "capk/greedy.hpp"
#include "capk/halfcap.hpp"
#include "capk/harness.hpp"
#include "capk/oracle.hpp"
#include "capk/rounding.hpp"

namespace py = pybind11;
using namespace capk;

namespace {

Instance make_instance(const std::vector<std::vector<double>>& coords,
                       const std::vector<ColorId>& colors, int k, double alpha,
                       std::vector<std::string> labels) {
  if (coords.size() != colors.size()) throw InputError("coords and colors differ in length");
  std::vector<Point> pts(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) pts[i] = Point{i, coords[i], colors[i]};
  return Instance(std::move(pts), k, alpha, std::move(labels));
}

RunConfig make_config(const std::string& algorithm, int k, double alpha, double epsilon, int m,
                      int seed) {
  RunConfig cfg;
  cfg.algorithm = parse_algorithm(algorithm);
  cfg.k = k;
  cfg.alpha = alpha;
  cfg.epsilon = epsilon;
  cfg.m = m;
  cfg.seed = seed;
  validate_config(cfg);
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "alpha-capped k-center clustering";

  py::class_<Instance>(m, "Instance")
      .def(py::init(&make_instance), py::arg("coords"), py::arg("colors"), py::arg("k"),
           py::arg("alpha"), py::arg("labels") = std::vector<std::string>{})
      .def_property_readonly("k", &Instance::k)
      .def_property_readonly("alpha", &Instance::alpha)
      .def_property_readonly("num_colors", &Instance::num_colors)
      .def_property_readonly("color_labels", &Instance::color_labels)
      .def("__len__", &Instance::size)
      .def("dist", &Instance::dist)
      .def("color", &Instance::color)
      .def("color_counts", &Instance::color_counts)
      .def("with_k", &Instance::with_k)
      .def("with_alpha", &Instance::with_alpha);

  py::class_<ClusteringSolution>(m, "ClusteringSolution")
      .def_readonly("centers", &ClusteringSolution::centers)
      .def_readonly("assign", &ClusteringSolution::assign)
      .def("__repr__", [](const ClusteringSolution& s) {
        return "<ClusteringSolution centers=" + std::to_string(s.centers.size()) + ">";
      });

  m.def("load_csv", &load_csv_file, py::arg("path"), py::arg("k"), py::arg("alpha"));
  m.def(
      "synthetic_balanced",
      [](int colors, int per_color, int dims, int blobs, std::uint64_t seed, int k, double alpha) {
        SyntheticSpec spec;
        spec.colors = colors;
        spec.per_color = per_color;
        spec.dims = dims;
        spec.blobs = blobs;
        spec.seed = seed;
        return synthetic_balanced(spec, k, alpha);
      },
      py::arg("colors") = 50, py::arg("per_color") = 50, py::arg("dims") = 10,
      py::arg("blobs") = 25, py::arg("seed") = 1, py::arg("k") = 25, py::arg("alpha") = 0.5);

  m.def("solution_cost", &solution_cost);
  m.def("check_capped", &check_capped);
  m.def("max_additive_violation", &max_additive_violation, py::arg("inst"), py::arg("solution"),
        py::arg("alpha"));

  m.def("greedy_k_center", [](const Instance& inst) { return greedy_k_center(inst).solution; });
  m.def(
      "fair_k_center",
      [](const Instance& inst, double lambda) { return fair_k_center(inst, lambda); },
      py::arg("inst"), py::arg("radius"), py::call_guard<py::gil_scoped_release>());
  m.def(
      "non_dominant_k_center",
      [](const Instance& inst) -> std::optional<std::pair<ClusteringSolution, double>> {
        auto r = non_dominant_k_center(inst);
        if (!r) return std::nullopt;
        return std::make_pair(r->solution, r->lambda);
      },
      py::call_guard<py::gil_scoped_release>());
  m.def(
      "faster_algorithm",
      [](const Instance& inst, double epsilon, int m_factor)
          -> std::optional<std::pair<ClusteringSolution, double>> {
        RunConfig cfg = make_config("lp", inst.k(), inst.alpha(), epsilon, m_factor, 0);
        auto r = faster_algorithm(inst, cfg);
        if (!r.solution) return std::nullopt;
        return std::make_pair(*r.solution, r.lambda);
      },
      py::arg("inst"), py::arg("epsilon") = 0.1, py::arg("m") = 2,
      py::call_guard<py::gil_scoped_release>());
  m.def(
      "brute_force_capped_opt",
      [](const Instance& inst) -> std::optional<double> {
        auto r = brute_force_capped_opt(inst);
        if (!r) return std::nullopt;
        return r->cost;
      });

  m.def(
      "run_json",
      [](const Instance& inst, const std::string& algorithm, int k, double alpha, double epsilon,
         int m_factor, int seed, bool timing) {
        const RunConfig cfg = make_config(algorithm, k, alpha, epsilon, m_factor, seed);
        std::ostringstream os;
        {
          py::gil_scoped_release release;
          write_json(run(inst, cfg, timing), inst, os);
        }
        return os.str();
      },
      py::arg("inst"), py::arg("algorithm") = "lp", py::arg("k") = 25, py::arg("alpha") = 0.5,
      py::arg("epsilon") = 0.1, py::arg("m") = 2, py::arg("seed") = 0, py::arg("timing") = true);
}
