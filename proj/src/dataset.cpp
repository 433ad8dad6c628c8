#include "capk/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

namespace capk {

namespace {

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream s(line);
  while (std::getline(s, cell, ',')) {
    const auto b = cell.find_first_not_of(" \t\r");
    const auto e = cell.find_last_not_of(" \t\r");
    out.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
  }
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw InputError("line " + std::to_string(line) + ": " + what);
}

}  // namespace

Instance load_csv(std::istream& in, int k, double alpha) {
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    header = split_row(line);
    break;
  }
  if (header.empty()) throw InputError("empty dataset file");
  if (header.size() < 2 || header[0] != "id" || header[1] != "color") {
    fail(lineno, "header must start with id,color");
  }
  const std::size_t dims = header.size() - 2;

  std::vector<Point> points;
  std::map<std::string, ColorId> color_ids;
  std::vector<std::string> labels;
  std::set<long long> seen_ids;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto cells = split_row(line);
    if (cells.size() != dims + 2) {
      fail(lineno, "expected " + std::to_string(dims + 2) + " fields, got " +
                       std::to_string(cells.size()));
    }
    long long id = 0;
    const auto [ptr, ec] = std::from_chars(cells[0].data(), cells[0].data() + cells[0].size(), id);
    if (ec != std::errc() || ptr != cells[0].data() + cells[0].size()) fail(lineno, "bad id");
    if (!seen_ids.insert(id).second) fail(lineno, "duplicate id " + cells[0]);
    if (cells[1].empty()) fail(lineno, "empty color");
    auto [it, fresh] = color_ids.emplace(cells[1], static_cast<ColorId>(labels.size()));
    if (fresh) labels.push_back(cells[1]);

    Point p;
    p.id = points.size();
    p.color = it->second;
    p.coords.reserve(dims);
    for (std::size_t d = 0; d < dims; ++d) {
      const std::string& cell = cells[d + 2];
      double v = 0.0;
      const auto [p2, ec2] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (ec2 != std::errc() || p2 != cell.data() + cell.size() || !std::isfinite(v)) {
        fail(lineno, "bad coordinate '" + cell + "'");
      }
      p.coords.push_back(v);
    }
    points.push_back(std::move(p));
  }
  if (points.empty()) throw InputError("dataset has no data rows");
  return Instance(std::move(points), k, alpha, std::move(labels));
}

Instance load_csv_file(const std::string& path, int k, double alpha) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return load_csv(in, k, alpha);
}

void write_csv(const Instance& inst, std::ostream& out) {
  out << "id,color";
  for (std::size_t d = 0; d < inst.dimension(); ++d) out << ",x" << d;
  out << "\n";
  const auto old = out.precision(17);
  for (const Point& p : inst.points()) {
    out << p.id << ',' << inst.color_label(p.color);
    for (double v : p.coords) out << ',' << v;
    out << "\n";
  }
  out.precision(old);
}

Instance synthetic_balanced(const SyntheticSpec& spec, int k, double alpha) {
  if (spec.colors < 1 || spec.per_color < 1 || spec.dims < 1 || spec.blobs < 1) {
    throw InputError("synthetic_balanced: sizes must be positive");
  }
  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> box(0.0, spec.box);
  std::normal_distribution<double> noise(0.0, spec.spread);
  std::vector<std::vector<double>> centers(spec.blobs, std::vector<double>(spec.dims));
  for (auto& c : centers) {
    for (double& v : c) v = box(rng);
  }
  const std::size_t n = static_cast<std::size_t>(spec.colors) * spec.per_color;
  std::vector<ColorId> colors(n);
  for (std::size_t j = 0; j < n; ++j) colors[j] = static_cast<ColorId>(j / spec.per_color);
  std::shuffle(colors.begin(), colors.end(), rng);
  // Ids follow first appearance, as load_csv would assign them.
  std::vector<ColorId> remap(spec.colors, -1);
  std::vector<std::string> labels;
  for (ColorId& c : colors) {
    if (remap[c] < 0) {
      remap[c] = static_cast<ColorId>(labels.size());
      labels.push_back("c" + std::to_string(c));
    }
    c = remap[c];
  }

  std::vector<Point> points(n);
  std::uniform_int_distribution<int> pick(0, spec.blobs - 1);
  for (std::size_t j = 0; j < n; ++j) {
    const auto& c = centers[pick(rng)];
    points[j].id = j;
    points[j].color = colors[j];
    points[j].coords.resize(spec.dims);
    for (int d = 0; d < spec.dims; ++d) points[j].coords[d] = c[d] + noise(rng);
  }
  return Instance(std::move(points), k, alpha, std::move(labels));
}

}  // namespace capk
