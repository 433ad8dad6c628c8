#include "capk/flow.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <map>
#include <ostream>

namespace capk {

FlowNetwork::FlowNetwork() {
  nodes_.push_back({NodeKind::Source, 0, 0});
  nodes_.push_back({NodeKind::Sink, 0, 0});
}

std::size_t FlowNetwork::add_node(FlowNode node) {
  nodes_.push_back(node);
  return nodes_.size() - 1;
}

std::size_t FlowNetwork::add_arc(std::size_t from, std::size_t to, std::int64_t lower,
                                 std::int64_t capacity) {
  arcs_.push_back({from, to, lower, capacity});
  return arcs_.size() - 1;
}

void FlowNetwork::validate() const {
  for (const FlowArc& a : arcs_) {
    if (a.from >= nodes_.size() || a.to >= nodes_.size()) {
      throw InputError("flow network: arc endpoint out of range");
    }
    if (a.lower < 0 || a.lower > a.capacity) {
      throw InputError("flow network: arc bounds must satisfy 0 <= lower <= capacity");
    }
  }
}

namespace {

std::int64_t snap_floor(double v) {
  const double r = std::round(v);
  return static_cast<std::int64_t>(std::abs(v - r) <= kRoundingSnap ? r : std::floor(v));
}

std::int64_t snap_ceil(double v) {
  const double r = std::round(v);
  return static_cast<std::int64_t>(std::abs(v - r) <= kRoundingSnap ? r : std::ceil(v));
}

// Edmonds-Karp on a residual graph with paired arcs.
class MaxFlow {
 public:
  explicit MaxFlow(std::size_t n) : adj_(n) {}

  std::size_t add(std::size_t u, std::size_t v, std::int64_t cap) {
    adj_[u].push_back(to_.size());
    to_.push_back(v);
    cap_.push_back(cap);
    adj_[v].push_back(to_.size());
    to_.push_back(u);
    cap_.push_back(0);
    return to_.size() - 2;
  }

  std::int64_t run(std::size_t s, std::size_t t) {
    std::int64_t total = 0;
    std::vector<std::size_t> via(adj_.size());
    for (;;) {
      std::vector<bool> seen(adj_.size(), false);
      std::deque<std::size_t> queue{s};
      seen[s] = true;
      while (!queue.empty() && !seen[t]) {
        const std::size_t u = queue.front();
        queue.pop_front();
        for (std::size_t e : adj_[u]) {
          if (cap_[e] > 0 && !seen[to_[e]]) {
            seen[to_[e]] = true;
            via[to_[e]] = e;
            queue.push_back(to_[e]);
          }
        }
      }
      if (!seen[t]) return total;
      std::int64_t push = std::numeric_limits<std::int64_t>::max();
      for (std::size_t v = t; v != s; v = to_[via[v] ^ 1]) push = std::min(push, cap_[via[v]]);
      for (std::size_t v = t; v != s; v = to_[via[v] ^ 1]) {
        cap_[via[v]] -= push;
        cap_[via[v] ^ 1] += push;
      }
      total += push;
    }
  }

  std::int64_t flow_on(std::size_t e) const { return cap_[e ^ 1]; }

 private:
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> to_;
  std::vector<std::int64_t> cap_;
};

}  // namespace

FlowNetwork build_assignment_network(const Instance& inst, const FractionalSolution& frac,
                                     const std::vector<PointId>& opened) {
  FlowNetwork net;
  std::map<PointId, std::size_t> facility_node;
  for (PointId i : opened) {
    facility_node[i] = net.add_node({NodeKind::Facility, i, 0});
  }
  std::vector<std::size_t> client_node(inst.size());
  for (PointId j = 0; j < inst.size(); ++j) {
    client_node[j] = net.add_node({NodeKind::Client, j, 0});
    net.add_arc(net.source(), client_node[j], 0, 1);
  }

  std::map<std::pair<PointId, ColorId>, std::size_t> pair_node;
  std::map<std::pair<PointId, ColorId>, double> pair_mass;
  std::map<PointId, double> facility_mass;
  for (const auto& [key, v] : frac.x) {
    const auto [i, j] = key;
    if (v <= kSupportTolerance) continue;
    if (!facility_node.count(i)) {
      throw InputError("build_assignment_network: mass on a facility that is not opened");
    }
    const ColorId c = inst.color(j);
    auto it = pair_node.find({i, c});
    if (it == pair_node.end()) {
      it = pair_node.emplace(std::make_pair(i, c), net.add_node({NodeKind::FacilityColor, i, c}))
               .first;
    }
    net.add_arc(client_node[j], it->second, 0, 1);
    pair_mass[{i, c}] += v;
    facility_mass[i] += v;
  }
  for (const auto& [key, node] : pair_node) {
    const double mass = pair_mass[key];
    net.add_arc(node, facility_node[key.first], snap_floor(mass), snap_ceil(mass));
  }
  for (PointId i : opened) {
    const double mass = facility_mass[i];
    net.add_arc(facility_node[i], net.sink(), snap_floor(mass), snap_ceil(mass));
  }
  return net;
}

std::optional<IntegralFlow> max_flow_lower_bounds(const FlowNetwork& net, std::int64_t demand) {
  net.validate();
  if (demand < 0) throw InputError("max_flow_lower_bounds: negative demand");
  const std::size_t n = net.nodes().size();
  const std::size_t super_s = n;
  const std::size_t super_t = n + 1;
  MaxFlow mf(n + 2);

  // Lower bounds become node imbalances; the t -> s return arc carries
  // exactly `demand`, so it is folded in the same way.
  std::vector<std::int64_t> excess(n, 0);
  std::vector<std::size_t> handle;
  handle.reserve(net.arcs().size());
  for (const FlowArc& a : net.arcs()) {
    handle.push_back(mf.add(a.from, a.to, a.capacity - a.lower));
    excess[a.to] += a.lower;
    excess[a.from] -= a.lower;
  }
  excess[net.source()] += demand;
  excess[net.sink()] -= demand;

  std::int64_t required = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (excess[v] > 0) {
      mf.add(super_s, v, excess[v]);
      required += excess[v];
    } else if (excess[v] < 0) {
      mf.add(v, super_t, -excess[v]);
    }
  }
  if (mf.run(super_s, super_t) != required) return std::nullopt;

  IntegralFlow out;
  out.flow.resize(net.arcs().size());
  for (std::size_t e = 0; e < net.arcs().size(); ++e) {
    out.flow[e] = net.arcs()[e].lower + mf.flow_on(handle[e]);
  }
  out.value = demand;
  return out;
}

std::vector<PointId> extract_assignment(const Instance& inst, const FlowNetwork& net,
                                        const IntegralFlow& flow) {
  constexpr PointId kUnset = static_cast<PointId>(-1);
  std::vector<PointId> assign(inst.size(), kUnset);
  std::vector<bool> is_client_node(net.nodes().size(), false);
  for (std::size_t e = 0; e < net.arcs().size(); ++e) {
    const FlowArc& a = net.arcs()[e];
    const FlowNode& from = net.nodes()[a.from];
    const FlowNode& to = net.nodes()[a.to];
    if (from.kind == NodeKind::Client) is_client_node[a.from] = true;
    if (from.kind != NodeKind::Client || to.kind != NodeKind::FacilityColor) continue;
    if (flow.flow[e] == 0) continue;
    if (assign[from.point] != kUnset) {
      throw InternalError("extract_assignment: client sends flow to two facilities");
    }
    assign[from.point] = to.point;
  }
  for (std::size_t v = 0; v < net.nodes().size(); ++v) {
    const FlowNode& node = net.nodes()[v];
    if (node.kind == NodeKind::Client && is_client_node[v] && assign[node.point] == kUnset) {
      throw InternalError("extract_assignment: client " + std::to_string(node.point) +
                          " carries no flow");
    }
  }
  return assign;
}

void write_dot(const FlowNetwork& net, std::ostream& out, const IntegralFlow* flow) {
  auto label = [](const FlowNode& v) -> std::string {
    switch (v.kind) {
      case NodeKind::Source:
        return "s";
      case NodeKind::Sink:
        return "t";
      case NodeKind::Client:
        return "j" + std::to_string(v.point);
      case NodeKind::FacilityColor:
        return "(" + std::to_string(v.point) + "," + std::to_string(v.color) + ")";
      case NodeKind::Facility:
        return "i" + std::to_string(v.point);
    }
    return "?";
  };
  out << "digraph assignment {\n  rankdir=LR;\n";
  for (std::size_t v = 0; v < net.nodes().size(); ++v) {
    out << "  n" << v << " [label=\"" << label(net.nodes()[v]) << "\"];\n";
  }
  for (std::size_t e = 0; e < net.arcs().size(); ++e) {
    const FlowArc& a = net.arcs()[e];
    out << "  n" << a.from << " -> n" << a.to << " [label=\"[" << a.lower << "," << a.capacity
        << "]";
    if (flow) out << " f=" << flow->flow[e];
    out << "\"];\n";
  }
  out << "}\n";
}

}  // namespace capk
