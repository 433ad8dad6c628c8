#include "capk/matching.hpp"

#include <algorithm>
#include <deque>

#include "capk/core.hpp"

namespace capk {

bool SimpleGraph::add_edge(std::size_t u, std::size_t v) {
  if (u >= adj_.size() || v >= adj_.size()) throw InputError("SimpleGraph: node out of range");
  if (u == v) throw InputError("SimpleGraph: self-loops are not allowed");
  if (has_edge(u, v)) return false;
  adj_[u].push_back(v);
  adj_[v].push_back(u);
  return true;
}

bool SimpleGraph::has_edge(std::size_t u, std::size_t v) const {
  const auto& a = adj_[u];
  return std::find(a.begin(), a.end(), v) != a.end();
}

std::vector<std::pair<std::size_t, std::size_t>> SimpleGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < adj_.size(); ++u) {
    for (std::size_t v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t SimpleGraph::edge_count() const {
  std::size_t deg = 0;
  for (const auto& a : adj_) deg += a.size();
  return deg / 2;
}

namespace {

constexpr std::size_t kNil = static_cast<std::size_t>(-1);

class Blossom {
 public:
  explicit Blossom(const SimpleGraph& g)
      : g_(g), n_(g.size()), match_(n_, kNil), parent_(n_), base_(n_), used_(n_), in_blossom_(n_) {}

  Matching solve() {
    // Greedy start, then one augmenting search per exposed node.
    for (std::size_t u = 0; u < n_; ++u) {
      if (match_[u] != kNil) continue;
      for (std::size_t v : g_.neighbors(u)) {
        if (match_[v] == kNil) {
          match_[u] = v;
          match_[v] = u;
          break;
        }
      }
    }
    for (std::size_t root = 0; root < n_; ++root) {
      if (match_[root] != kNil) continue;
      const std::size_t end = find_path(root);
      // Flip the alternating path ending at `end`.
      for (std::size_t v = end; v != kNil;) {
        const std::size_t pv = parent_[v];
        const std::size_t next = match_[pv];
        match_[v] = pv;
        match_[pv] = v;
        v = next;
      }
    }
    Matching out;
    for (std::size_t u = 0; u < n_; ++u) {
      if (match_[u] != kNil && u < match_[u]) out.emplace_back(u, match_[u]);
    }
    return out;
  }

 private:
  std::size_t lca(std::size_t a, std::size_t b) {
    std::vector<bool> seen(n_, false);
    for (;;) {
      a = base_[a];
      seen[a] = true;
      if (match_[a] == kNil) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(std::size_t v, std::size_t b, std::size_t child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  // Returns an exposed node reachable by an augmenting path from root, or kNil.
  std::size_t find_path(std::size_t root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), kNil);
    for (std::size_t i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = true;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != kNil && parent_[match_[to]] != kNil)) {
          const std::size_t cur = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (std::size_t i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = true;
                queue.push_back(i);
              }
            }
          }
        } else if (parent_[to] == kNil) {
          parent_[to] = v;
          if (match_[to] == kNil) return to;
          used_[match_[to]] = true;
          queue.push_back(match_[to]);
        }
      }
    }
    return kNil;
  }

  const SimpleGraph& g_;
  std::size_t n_;
  std::vector<std::size_t> match_, parent_, base_;
  std::vector<bool> used_, in_blossom_;
};

}  // namespace

Matching max_matching(const SimpleGraph& g) { return Blossom(g).solve(); }

bool has_perfect_matching(const SimpleGraph& g) {
  if (g.size() % 2 != 0) return false;
  return max_matching(g).size() * 2 == g.size();
}

}  // namespace capk
