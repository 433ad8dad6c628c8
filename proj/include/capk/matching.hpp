#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace capk {

// Undirected simple graph on nodes 0..n-1.
class SimpleGraph {
 public:
  explicit SimpleGraph(std::size_t n = 0) : adj_(n) {}

  std::size_t size() const { return adj_.size(); }

  // Adds {u, v}; returns false if the edge already exists. Self-loops are
  // rejected with InputError.
  bool add_edge(std::size_t u, std::size_t v);
  bool has_edge(std::size_t u, std::size_t v) const;

  const std::vector<std::size_t>& neighbors(std::size_t u) const { return adj_[u]; }
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  std::size_t edge_count() const;

 private:
  std::vector<std::vector<std::size_t>> adj_;
};

using Matching = std::vector<std::pair<std::size_t, std::size_t>>;

// Maximum-cardinality matching on a general graph (Edmonds' blossom
// shrinking, O(n^3)). Pairs are reported with first < second, sorted.
Matching max_matching(const SimpleGraph& g);

bool has_perfect_matching(const SimpleGraph& g);

}  // namespace capk
