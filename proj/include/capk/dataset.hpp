#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "capk/core.hpp"

namespace capk {

// Header "id,color,x0,x1,...", then one row per point. Ids are integers and
// must be unique; colors are arbitrary labels, re-indexed densely in order of
// first appearance. Point order follows the file. Errors carry the line
// number.
Instance load_csv(std::istream& in, int k, double alpha);
Instance load_csv_file(const std::string& path, int k, double alpha);

// Writes the file format above with round-trip precision. Ids are the
// point indices.
void write_csv(const Instance& inst, std::ostream& out);

struct SyntheticSpec {
  int colors = 50;
  int per_color = 50;
  int dims = 10;
  int blobs = 25;
  double spread = 1.0;  // within-blob standard deviation
  double box = 10.0;    // blob centers uniform in [0, box]^dims
  std::uint64_t seed = 1;
};

// Gaussian blobs; colors are a random balanced labelling of the points.
Instance synthetic_balanced(const SyntheticSpec& spec, int k, double alpha);

}  // namespace capk
