#include "lapsum/flow.hpp"

#include <queue>
#include <string>

#include "lapsum/errors.hpp"

namespace lapsum {

FlowNetwork::FlowNetwork(int nodes, int source, int sink)
    : nodes_(nodes), source_(source), sink_(sink) {
  if (nodes < 2 || source < 0 || sink < 0 || source >= nodes || sink >= nodes || source == sink) {
    throw ContractError("flow network needs distinct source and sink among its nodes");
  }
}

int FlowNetwork::add_node() { return nodes_++; }

int FlowNetwork::add_arc(int from, int to, Rational capacity) {
  if (from < 0 || to < 0 || from >= nodes_ || to >= nodes_) {
    throw ContractError("flow arc endpoint out of range");
  }
  if (capacity < Rational(0)) throw ContractError("negative flow capacity");
  arcs_.push_back({from, to, capacity});
  return static_cast<int>(arcs_.size()) - 1;
}

namespace {

// Residual graph: arc 2i is forward arc i, arc 2i+1 its reverse.
struct Residual {
  std::vector<std::vector<int>> out;
  std::vector<int> head;
  std::vector<Rational> cap;

  explicit Residual(const FlowNetwork& net)
      : out(static_cast<std::size_t>(net.node_count())) {
    head.reserve(net.arcs().size() * 2);
    cap.reserve(net.arcs().size() * 2);
    for (const FlowArc& a : net.arcs()) {
      out[static_cast<std::size_t>(a.from)].push_back(static_cast<int>(head.size()));
      head.push_back(a.to);
      cap.push_back(a.capacity);
      out[static_cast<std::size_t>(a.to)].push_back(static_cast<int>(head.size()));
      head.push_back(a.from);
      cap.emplace_back(0);
    }
  }

  int tail(int r) const { return head[static_cast<std::size_t>(r ^ 1)]; }
};

}  // namespace

FlowResult max_flow(const FlowNetwork& net) {
  Residual res(net);
  const int n = net.node_count();
  const Rational zero(0);
  FlowResult result;

  std::vector<int> parent_arc(static_cast<std::size_t>(n));
  for (;;) {
    std::fill(parent_arc.begin(), parent_arc.end(), -1);
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::queue<int> q;
    q.push(net.source());
    seen[static_cast<std::size_t>(net.source())] = 1;
    while (!q.empty() && !seen[static_cast<std::size_t>(net.sink())]) {
      const int u = q.front();
      q.pop();
      for (int r : res.out[static_cast<std::size_t>(u)]) {
        const int w = res.head[static_cast<std::size_t>(r)];
        if (!seen[static_cast<std::size_t>(w)] && res.cap[static_cast<std::size_t>(r)] > zero) {
          seen[static_cast<std::size_t>(w)] = 1;
          parent_arc[static_cast<std::size_t>(w)] = r;
          q.push(w);
        }
      }
    }
    if (!seen[static_cast<std::size_t>(net.sink())]) break;

    Rational bottleneck;
    bool first = true;
    for (int v = net.sink(); v != net.source(); v = res.tail(parent_arc[static_cast<std::size_t>(v)])) {
      const Rational& c = res.cap[static_cast<std::size_t>(parent_arc[static_cast<std::size_t>(v)])];
      if (first || c < bottleneck) bottleneck = c;
      first = false;
    }
    for (int v = net.sink(); v != net.source(); v = res.tail(parent_arc[static_cast<std::size_t>(v)])) {
      const int r = parent_arc[static_cast<std::size_t>(v)];
      res.cap[static_cast<std::size_t>(r)] -= bottleneck;
      res.cap[static_cast<std::size_t>(r ^ 1)] += bottleneck;
    }
    result.value += bottleneck;
  }

  result.arc_flow.reserve(net.arcs().size());
  for (std::size_t i = 0; i < net.arcs().size(); ++i) result.arc_flow.push_back(res.cap[2 * i + 1]);

  // Forward reachability from the source.
  result.min_source_side.assign(static_cast<std::size_t>(n), 0);
  {
    std::queue<int> q;
    q.push(net.source());
    result.min_source_side[static_cast<std::size_t>(net.source())] = 1;
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int r : res.out[static_cast<std::size_t>(u)]) {
        const int w = res.head[static_cast<std::size_t>(r)];
        if (!result.min_source_side[static_cast<std::size_t>(w)] &&
            res.cap[static_cast<std::size_t>(r)] > zero) {
          result.min_source_side[static_cast<std::size_t>(w)] = 1;
          q.push(w);
        }
      }
    }
  }
  // Backward reachability to the sink: w reaches t if some residual arc w->u
  // has capacity and u reaches t.
  std::vector<char> reaches_sink(static_cast<std::size_t>(n), 0);
  {
    std::queue<int> q;
    q.push(net.sink());
    reaches_sink[static_cast<std::size_t>(net.sink())] = 1;
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int r : res.out[static_cast<std::size_t>(u)]) {
        // r goes u -> w; its partner r^1 goes w -> u.
        const int w = res.head[static_cast<std::size_t>(r)];
        if (!reaches_sink[static_cast<std::size_t>(w)] &&
            res.cap[static_cast<std::size_t>(r ^ 1)] > zero) {
          reaches_sink[static_cast<std::size_t>(w)] = 1;
          q.push(w);
        }
      }
    }
  }
  result.max_source_side.assign(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    result.max_source_side[static_cast<std::size_t>(v)] = reaches_sink[static_cast<std::size_t>(v)] ? 0 : 1;
  }
  return result;
}

}  // namespace lapsum
