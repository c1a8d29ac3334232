#include "lapsum/density.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "lapsum/errors.hpp"
#include "lapsum/flow.hpp"
#include "lapsum/matching.hpp"

namespace lapsum {

int edges_inside(const Graph& g, std::span<const int> vertices) {
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  for (int v : vertices) in[static_cast<std::size_t>(v)] = 1;
  int count = 0;
  for (const Edge& e : g.edges()) {
    count += (in[static_cast<std::size_t>(e.u)] && in[static_cast<std::size_t>(e.v)]) ? 1 : 0;
  }
  return count;
}

ExcessResult max_edge_excess(const Graph& g, const Rational& lambda, std::span<const int> forced_in,
                             std::span<const int> forced_out) {
  if (lambda < Rational(0)) throw ContractError("max_edge_excess: negative lambda");
  const int n = g.order();
  const int m = g.size();
  const std::int64_t p = lambda.num();
  const std::int64_t q = lambda.den();
  // Scaled by q so every capacity is an integer.
  const Rational inf(q * m + p * n + 1);

  constexpr int kSource = 0;
  constexpr int kSink = 1;
  const int edge_base = 2;
  const int vertex_base = 2 + m;
  FlowNetwork net(2 + m + n, kSource, kSink);
  for (int i = 0; i < m; ++i) {
    const Edge& e = g.edges()[static_cast<std::size_t>(i)];
    net.add_arc(kSource, edge_base + i, Rational(q));
    net.add_arc(edge_base + i, vertex_base + e.u, inf);
    net.add_arc(edge_base + i, vertex_base + e.v, inf);
  }
  std::vector<char> out_flag(static_cast<std::size_t>(n), 0);
  for (int v : forced_out) out_flag[static_cast<std::size_t>(v)] = 1;
  for (int v = 0; v < n; ++v) {
    net.add_arc(vertex_base + v, kSink, out_flag[static_cast<std::size_t>(v)] ? inf : Rational(p));
  }
  for (int v : forced_in) {
    if (out_flag[static_cast<std::size_t>(v)]) {
      throw ContractError("max_edge_excess: vertex both forced in and out");
    }
    net.add_arc(kSource, vertex_base + v, inf);
  }

  const FlowResult flow = max_flow(net);
  ExcessResult out;
  out.value = (Rational(q * m) - flow.value) / Rational(q);
  for (int v = 0; v < n; ++v) {
    if (flow.min_source_side[static_cast<std::size_t>(vertex_base + v)]) out.subset.push_back(v);
  }
  return out;
}

namespace {

Rational subset_density(const Graph& g, std::span<const int> subset) {
  return Rational(edges_inside(g, subset), static_cast<std::int64_t>(subset.size()));
}

// Dinkelbach iteration on λ -> max_U e(U) - λ|U|; returns the optimum and the
// last improving subset.
DensityWitness density_value(const Graph& g) {
  if (g.order() < 1) throw ContractError("density: graph has no vertices");
  DensityWitness w;
  w.subset.resize(static_cast<std::size_t>(g.order()));
  std::iota(w.subset.begin(), w.subset.end(), 0);
  w.value = Rational(g.size(), g.order());
  for (;;) {
    ExcessResult r = max_edge_excess(g, w.value);
    if (r.value <= Rational(0)) break;
    w.value = subset_density(g, r.subset);
    w.subset = std::move(r.subset);
  }
  return w;
}

}  // namespace

DensityWitness density(const Graph& g) {
  DensityWitness best = density_value(g);
  const Rational rho = best.value;
  const int n = g.order();

  // Lexicographically smallest optimal set, one forced-inclusion test per step.
  std::vector<int> chosen;
  std::vector<int> excluded;
  int last = -1;
  for (;;) {
    bool extended = false;
    for (int v = last + 1; v < n; ++v) {
      std::vector<int> in = chosen;
      in.push_back(v);
      std::vector<int> out = excluded;
      for (int x = last + 1; x < v; ++x) out.push_back(x);
      if (max_edge_excess(g, rho, in, out).value >= Rational(0)) {
        chosen = std::move(in);
        excluded = std::move(out);
        last = v;
        extended = true;
        break;
      }
    }
    if (!extended) throw AlgorithmError("density: lexicographic witness search failed");
    if (subset_density(g, chosen) == rho) break;
  }
  best.subset = std::move(chosen);
  return best;
}

// ---------------------------------------------------------------------------
// Partition density

namespace {

struct ComponentDp {
  int size = 0;
  std::vector<int> vertices;         // local index -> vertex
  std::vector<std::uint16_t> edges;  // edges[T] = |E(G[T])| over local masks
};

ComponentDp make_component_dp(const Graph& g, const std::vector<int>& comp) {
  ComponentDp dp;
  dp.size = static_cast<int>(comp.size());
  dp.vertices = comp;
  std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
  for (int i = 0; i < dp.size; ++i) local[static_cast<std::size_t>(comp[static_cast<std::size_t>(i)])] = i;
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(dp.size), 0);
  for (int i = 0; i < dp.size; ++i) {
    for (int w : g.neighbors(comp[static_cast<std::size_t>(i)])) {
      adj[static_cast<std::size_t>(i)] |= std::uint32_t{1} << local[static_cast<std::size_t>(w)];
    }
  }
  const std::uint32_t full = dp.size == 32 ? ~0U : (std::uint32_t{1} << dp.size) - 1;
  dp.edges.assign(static_cast<std::size_t>(full) + 1, 0);
  for (std::uint32_t t = 1; t <= full; ++t) {
    const int low = std::countr_zero(t);
    const std::uint32_t rest = t & (t - 1);
    dp.edges[t] = static_cast<std::uint16_t>(
        dp.edges[rest] + std::popcount(adj[static_cast<std::size_t>(low)] & rest));
  }
  return dp;
}

// Max total inside-edges over partitions with every part of size <= cap.
// Optionally records, per mask, the part containing the lowest vertex.
int best_with_cap(const ComponentDp& dp, int cap, std::vector<std::uint32_t>* choice) {
  const std::uint32_t full = (std::uint32_t{1} << dp.size) - 1;
  if (cap >= dp.size) {
    if (choice) {
      choice->assign(static_cast<std::size_t>(full) + 1, 0);
      (*choice)[full] = full;
    }
    return dp.edges[full];
  }
  std::vector<std::uint16_t> f(static_cast<std::size_t>(full) + 1, 0);
  if (choice) choice->assign(static_cast<std::size_t>(full) + 1, 0);
  for (std::uint32_t s = 1; s <= full; ++s) {
    const std::uint32_t low = s & (~s + 1);
    const std::uint32_t rest = s ^ low;
    int best = -1;
    std::uint32_t best_t = low;
    for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
      const std::uint32_t t = sub | low;
      if (std::popcount(t) <= cap) {
        const int value = dp.edges[t] + f[s ^ t];
        if (value > best) {
          best = value;
          best_t = t;
        }
      }
      if (sub == 0) break;
    }
    f[s] = static_cast<std::uint16_t>(best);
    if (choice) (*choice)[s] = best_t;
  }
  return f[full];
}

void append_parts(const ComponentDp& dp, const std::vector<std::uint32_t>& choice,
                  std::vector<std::vector<int>>& parts) {
  std::uint32_t s = (std::uint32_t{1} << dp.size) - 1;
  while (s != 0) {
    const std::uint32_t t = choice[s];
    std::vector<int> part;
    for (int i = 0; i < dp.size; ++i) {
      if (t >> i & 1U) part.push_back(dp.vertices[static_cast<std::size_t>(i)]);
    }
    parts.push_back(std::move(part));
    s ^= t;
  }
}

}  // namespace

PartitionWitness partition_density(const Graph& g) {
  if (g.order() < 1) throw ContractError("partition_density: graph has no vertices");
  const ComponentsInfo info = components_info(g);
  if (info.n_prime > kPartitionDensityExactLimit) {
    throw SizeLimitError("partition_density: component of " + std::to_string(info.n_prime) +
                         " vertices exceeds exact limit " +
                         std::to_string(kPartitionDensityExactLimit));
  }

  std::vector<ComponentDp> dps;
  for (const auto& comp : info.components) {
    if (comp.size() > 1) dps.push_back(make_component_dp(g, comp));
  }

  // totals[s] = Σ over components of best_with_cap(component, s).
  PartitionWitness w;
  w.value = Rational(0);
  w.attained_part_size = 1;
  std::vector<std::vector<int>> per_cap(dps.size());
  for (std::size_t c = 0; c < dps.size(); ++c) {
    per_cap[c].assign(static_cast<std::size_t>(info.n_prime) + 1, 0);
    for (int s = 2; s <= info.n_prime; ++s) {
      per_cap[c][static_cast<std::size_t>(s)] =
          s >= dps[c].size ? dps[c].edges.back() : best_with_cap(dps[c], s, nullptr);
    }
  }
  for (int s = 2; s <= info.n_prime; ++s) {
    std::int64_t total = 0;
    for (const auto& row : per_cap) total += row[static_cast<std::size_t>(s)];
    const Rational ratio(total, s);
    if (ratio > w.value) {
      w.value = ratio;
      w.attained_part_size = s;
    }
  }

  std::vector<char> covered(static_cast<std::size_t>(g.order()), 0);
  if (w.value > Rational(0)) {
    std::vector<std::uint32_t> choice;
    for (const auto& dp : dps) {
      best_with_cap(dp, w.attained_part_size, &choice);
      append_parts(dp, choice, w.parts);
    }
  }
  for (const auto& part : w.parts) {
    for (int v : part) covered[static_cast<std::size_t>(v)] = 1;
  }
  for (int v = 0; v < g.order(); ++v) {
    if (!covered[static_cast<std::size_t>(v)]) w.parts.push_back({v});
  }
  std::sort(w.parts.begin(), w.parts.end());

  std::int64_t inside = 0;
  std::size_t largest = 0;
  for (const auto& part : w.parts) {
    inside += edges_inside(g, part);
    largest = std::max(largest, part.size());
  }
  if (static_cast<int>(largest) != w.attained_part_size ||
      Rational(inside, w.attained_part_size) != w.value) {
    throw AlgorithmError("partition_density: witness does not reproduce the optimum");
  }
  return w;
}

PartitionDensityBracket partition_density_bounds(const Graph& g) {
  if (g.order() < 1) throw ContractError("partition_density: graph has no vertices");
  const ComponentsInfo info = components_info(g);
  PartitionDensityBracket out;
  if (info.n_prime <= kPartitionDensityExactLimit) {
    out.lower = out.upper = partition_density(g).value;
    out.exact = true;
    return out;
  }
  const Rational rho = density_value(g).value;
  const std::int64_t m = g.size();
  const std::int64_t n = g.order();
  const std::int64_t cover = maximum_matching(g).nu <= kVertexCoverNuLimit
                                 ? static_cast<std::int64_t>(min_vertex_cover(g).size())
                                 : static_cast<std::int64_t>(maximal_matching_cover(g).size());

  out.lower = std::max(rho, Rational(m, info.n_prime));
  out.upper = Rational(0);
  for (std::int64_t s = 2; s <= info.n_prime; ++s) {
    // Every part of size <= s holds at most |S∩V_i|(s-1) edges for a vertex
    // cover S, at most |V_i|(s-1)/2 edges, and at most ρ|V_i| edges.
    Rational cap(m);
    cap = std::min(cap, Rational(cover * (s - 1)));
    cap = std::min(cap, Rational(n * (s - 1), 2));
    cap = std::min(cap, rho * Rational(n));
    out.upper = std::max(out.upper, cap / Rational(s));
  }
  out.upper = std::max(out.upper, out.lower);
  return out;
}

bool partition_density_below(const Graph& g, int k) {
  const PartitionDensityBracket b = partition_density_bounds(g);
  if (b.upper < Rational(k)) return true;
  if (b.lower >= Rational(k)) return false;
  throw SizeLimitError("cannot decide partition density < " + std::to_string(k) +
                       ": bracket [" + b.lower.str() + ", " + b.upper.str() + "] straddles it");
}

// ---------------------------------------------------------------------------
// Orientations

Orientation::Orientation(Graph g, std::vector<int> edge_heads)
    : base(std::move(g)), heads(std::move(edge_heads)) {
  if (heads.size() != base.edges().size()) throw ContractError("orientation: one head per edge");
  indegrees.assign(static_cast<std::size_t>(base.order()), 0);
  for (std::size_t i = 0; i < heads.size(); ++i) {
    if (!base.edges()[i].contains(heads[i])) throw ContractError("orientation: head not on edge");
    ++indegrees[static_cast<std::size_t>(heads[i])];
  }
}

int Orientation::max_indegree() const noexcept {
  int best = 0;
  for (int d : indegrees) best = std::max(best, d);
  return best;
}

std::vector<std::vector<int>> Orientation::in_neighbors() const {
  std::vector<std::vector<int>> in(static_cast<std::size_t>(base.order()));
  for (std::size_t i = 0; i < heads.size(); ++i) {
    in[static_cast<std::size_t>(heads[i])].push_back(base.edges()[i].other(heads[i]));
  }
  for (auto& list : in) std::sort(list.begin(), list.end());
  return in;
}

OrientationResult k_orientation_with_fixed(const Graph& g, int k, std::span<const int> fixed_heads) {
  if (k < 0) throw ContractError("k_orientation: negative k");
  const int n = g.order();
  const int m = g.size();
  if (!fixed_heads.empty() && static_cast<int>(fixed_heads.size()) != m) {
    throw ContractError("k_orientation: fixed_heads must have one entry per edge");
  }
  auto fixed = [&](int i) { return fixed_heads.empty() ? -1 : fixed_heads[static_cast<std::size_t>(i)]; };

  std::vector<int> load(static_cast<std::size_t>(n), 0);
  std::vector<int> free_edges;
  for (int i = 0; i < m; ++i) {
    const int h = fixed(i);
    if (h >= 0) {
      if (!g.edges()[static_cast<std::size_t>(i)].contains(h)) {
        throw ContractError("k_orientation: pinned head is not an endpoint");
      }
      ++load[static_cast<std::size_t>(h)];
    } else {
      free_edges.push_back(i);
    }
  }
  OrientationResult result;
  for (int v = 0; v < n; ++v) {
    if (load[static_cast<std::size_t>(v)] > k) return result;
  }

  constexpr int kSource = 0;
  constexpr int kSink = 1;
  const int f = static_cast<int>(free_edges.size());
  const int vertex_base = 2 + f;
  FlowNetwork net(2 + f + n, kSource, kSink);
  const Rational inf(m + 1);
  std::vector<int> arc_to_u(static_cast<std::size_t>(f));
  for (int j = 0; j < f; ++j) {
    const Edge& e = g.edges()[static_cast<std::size_t>(free_edges[static_cast<std::size_t>(j)])];
    net.add_arc(kSource, 2 + j, Rational(1));
    arc_to_u[static_cast<std::size_t>(j)] = net.add_arc(2 + j, vertex_base + e.u, inf);
    net.add_arc(2 + j, vertex_base + e.v, inf);
  }
  for (int v = 0; v < n; ++v) {
    net.add_arc(vertex_base + v, kSink, Rational(k - load[static_cast<std::size_t>(v)]));
  }
  const FlowResult flow = max_flow(net);

  if (flow.value == Rational(f)) {
    std::vector<int> heads(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) heads[static_cast<std::size_t>(i)] = fixed(i);
    for (int j = 0; j < f; ++j) {
      const Edge& e = g.edges()[static_cast<std::size_t>(free_edges[static_cast<std::size_t>(j)])];
      const bool to_u = flow.arc_flow[static_cast<std::size_t>(arc_to_u[static_cast<std::size_t>(j)])] == Rational(1);
      heads[static_cast<std::size_t>(free_edges[static_cast<std::size_t>(j)])] = to_u ? e.u : e.v;
    }
    Orientation o(g, std::move(heads));
    if (o.max_indegree() > k) throw AlgorithmError("k_orientation: flow produced an overloaded vertex");
    result.orientation = std::move(o);
    return result;
  }
  for (int v = 0; v < n; ++v) {
    if (flow.min_source_side[static_cast<std::size_t>(vertex_base + v)]) result.violating_subset.push_back(v);
  }
  if (fixed_heads.empty() &&
      edges_inside(g, result.violating_subset) <= static_cast<long long>(k) * static_cast<long long>(result.violating_subset.size())) {
    throw AlgorithmError("k_orientation: min cut did not yield a density certificate");
  }
  return result;
}

OrientationResult k_orientation(const Graph& g, int k) { return k_orientation_with_fixed(g, k, {}); }

// ---------------------------------------------------------------------------
// Peeling

PeelResult peel_to_low_partition_density(const Graph& g, int k) {
  if (k < 1) throw ContractError("peel: k must be positive");
  PeelResult out{g, {}};
  for (;;) {
    PartitionWitness w = partition_density(out.graph);
    if (w.value < Rational(k)) break;
    PeelStep step;
    step.rho_tilde_before = w.value;
    for (const auto& part : w.parts) {
      std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
      for (int v : part) in[static_cast<std::size_t>(v)] = 1;
      for (const Edge& e : out.graph.edges()) {
        if (in[static_cast<std::size_t>(e.u)] && in[static_cast<std::size_t>(e.v)]) step.removed.push_back(e);
      }
    }
    std::sort(step.removed.begin(), step.removed.end());
    step.n_prime = components_info(Graph(g.order(), step.removed)).n_prime;
    if (static_cast<long long>(step.removed.size()) < static_cast<long long>(k) * step.n_prime ||
        step.removed.empty()) {
      throw AlgorithmError("peel: witness subgraph is not removable");
    }
    step.parts = std::move(w.parts);
    out.graph = remove_edges(out.graph, step.removed);
    out.log.push_back(std::move(step));
  }
  return out;
}

}  // namespace lapsum
