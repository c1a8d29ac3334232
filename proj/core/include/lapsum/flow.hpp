#pragma once

#include <vector>

#include "lapsum/rational.hpp"

namespace lapsum {

struct FlowArc {
  int from = 0;
  int to = 0;
  Rational capacity;
};

class FlowNetwork {
 public:
  FlowNetwork(int nodes, int source, int sink);

  int add_node();
  // Returns the arc index. Capacity must be non-negative.
  int add_arc(int from, int to, Rational capacity);

  int node_count() const noexcept { return nodes_; }
  int source() const noexcept { return source_; }
  int sink() const noexcept { return sink_; }
  const std::vector<FlowArc>& arcs() const noexcept { return arcs_; }

 private:
  int nodes_;
  int source_;
  int sink_;
  std::vector<FlowArc> arcs_;
};

struct FlowResult {
  Rational value;
  std::vector<Rational> arc_flow;  // parallel to FlowNetwork::arcs()
  // Nodes reachable from the source in the final residual graph: the source
  // side of the inclusion-minimal minimum cut.
  std::vector<char> min_source_side;
  // Nodes that cannot reach the sink in the final residual graph: the source
  // side of the inclusion-maximal minimum cut.
  std::vector<char> max_source_side;
};

/// Shortest augmenting paths (Edmonds-Karp) in exact rational arithmetic.
FlowResult max_flow(const FlowNetwork& net);

}  // namespace lapsum
