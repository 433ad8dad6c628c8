#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "capk/core.hpp"
#include "capk/lp.hpp"

namespace capk {

enum class NodeKind { Source, Sink, Client, FacilityColor, Facility };

struct FlowNode {
  NodeKind kind = NodeKind::Client;
  PointId point = 0;  // client or facility id
  ColorId color = 0;  // FacilityColor only
};

struct FlowArc {
  std::size_t from = 0;
  std::size_t to = 0;
  std::int64_t lower = 0;
  std::int64_t capacity = 0;
};

class FlowNetwork {
 public:
  FlowNetwork();

  std::size_t add_node(FlowNode node);
  std::size_t add_arc(std::size_t from, std::size_t to, std::int64_t lower, std::int64_t capacity);

  std::size_t source() const { return 0; }
  std::size_t sink() const { return 1; }
  const std::vector<FlowNode>& nodes() const { return nodes_; }
  const std::vector<FlowArc>& arcs() const { return arcs_; }

  // Throws InputError on a bad endpoint or lower > capacity.
  void validate() const;

 private:
  std::vector<FlowNode> nodes_;
  std::vector<FlowArc> arcs_;
};

struct IntegralFlow {
  std::vector<std::int64_t> flow;  // per arc
  std::int64_t value = 0;
};

// Column sums within this distance of an integer are snapped before taking
// floors and ceilings.
inline constexpr double kRoundingSnap = 1e-6;
// Assignment values at or below this are treated as zero.
inline constexpr double kSupportTolerance = 1e-9;

// s -> client (cap 1), client -> (facility, color) for x'_ij > 0 (cap 1),
// (facility, color) -> facility with [floor, ceil] of the color mass, and
// facility -> t with [floor, ceil] of the total mass.
FlowNetwork build_assignment_network(const Instance& inst, const FractionalSolution& frac,
                                     const std::vector<PointId>& opened);

// Integral s-t flow of exactly `demand` units respecting every lower bound,
// via the circulation reduction and shortest augmenting paths. Empty when
// no such flow exists.
std::optional<IntegralFlow> max_flow_lower_bounds(const FlowNetwork& net, std::int64_t demand);

// Client -> facility map read off the client -> (facility, color) arcs.
// Entry j is meaningful for every client node in the network.
std::vector<PointId> extract_assignment(const Instance& inst, const FlowNetwork& net,
                                        const IntegralFlow& flow);

// Graphviz dump; arcs are labelled [lower, capacity] and, when given, flow.
void write_dot(const FlowNetwork& net, std::ostream& out, const IntegralFlow* flow = nullptr);

}  // namespace capk
