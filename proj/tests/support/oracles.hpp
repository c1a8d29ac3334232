#pragma once

// Brute-force reference implementations. Deliberately naive and independent
// of the library algorithms; only Graph, Edge and Rational are shared.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "lapsum/graph.hpp"
#include "lapsum/rational.hpp"

namespace oracle {

using lapsum::Edge;
using lapsum::Graph;
using lapsum::Rational;

inline std::vector<int> bits_to_vertices(std::uint32_t mask) {
  std::vector<int> out;
  for (int v = 0; mask != 0; ++v, mask >>= 1) {
    if (mask & 1U) out.push_back(v);
  }
  return out;
}

inline int edges_in_mask(const Graph& g, std::uint32_t mask) {
  int count = 0;
  for (const Edge& e : g.edges()) {
    if ((mask >> e.u & 1U) && (mask >> e.v & 1U)) ++count;
  }
  return count;
}

struct DensityAnswer {
  Rational value;
  std::vector<int> subset;  // lexicographically smallest maximiser
};

inline DensityAnswer density(const Graph& g) {
  const int n = g.order();
  DensityAnswer best{Rational(-1), {}};
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    const Rational r(edges_in_mask(g, mask), std::popcount(mask));
    const std::vector<int> set = bits_to_vertices(mask);
    if (r > best.value || (r == best.value && set < best.subset)) best = {r, set};
  }
  return best;
}

inline void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> block(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int v, int blocks) {
    if (v == n) {
      fn(block);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      block[static_cast<std::size_t>(v)] = b;
      rec(v + 1, std::max(blocks, b + 1));
    }
  };
  rec(0, 0);
}

// max over partitions of (edges inside parts) / (largest part size)
inline Rational partition_density(const Graph& g) {
  const int n = g.order();
  Rational best(0);
  for_each_partition(n, [&](const std::vector<int>& block) {
    std::map<int, int> sizes;
    for (int b : block) ++sizes[b];
    int largest = 0;
    for (const auto& [b, s] : sizes) largest = std::max(largest, s);
    int inside = 0;
    for (const Edge& e : g.edges()) {
      if (block[static_cast<std::size_t>(e.u)] == block[static_cast<std::size_t>(e.v)]) ++inside;
    }
    best = std::max(best, Rational(inside, largest));
  });
  return best;
}

inline int matching_number(const Graph& g) {
  const int n = g.order();
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::function<int(int)> rec = [&](int v) -> int {
    while (v < n && used[static_cast<std::size_t>(v)]) ++v;
    if (v >= n) return 0;
    used[static_cast<std::size_t>(v)] = 1;
    int best = rec(v + 1);
    for (int w : g.neighbors(v)) {
      if (used[static_cast<std::size_t>(w)]) continue;
      used[static_cast<std::size_t>(w)] = 1;
      best = std::max(best, 1 + rec(v + 1));
      used[static_cast<std::size_t>(w)] = 0;
    }
    used[static_cast<std::size_t>(v)] = 0;
    return best;
  };
  return rec(0);
}

inline int vertex_cover_number(const Graph& g) {
  const int n = g.order();
  int best = n;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    const bool covers = std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
      return (mask >> e.u & 1U) || (mask >> e.v & 1U);
    });
    if (covers) best = std::min(best, std::popcount(mask));
  }
  return best;
}

// Maximum number of vertex-disjoint stars with ell leaves, by memoised DP
// over the set of still-available vertices.
inline int star_packing_number(const Graph& g, int ell) {
  const int n = g.order();
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (const Edge& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u)] |= 1U << e.v;
    adj[static_cast<std::size_t>(e.v)] |= 1U << e.u;
  }
  std::map<std::uint32_t, int> memo;
  std::function<int(std::uint32_t)> f = [&](std::uint32_t avail) -> int {
    if (avail == 0) return 0;
    if (auto it = memo.find(avail); it != memo.end()) return it->second;
    int best = 0;
    // Pick any centre c in avail and any ell-subset of its available neighbours.
    for (int c = 0; c < n; ++c) {
      if (!(avail >> c & 1U)) continue;
      const std::uint32_t nb = adj[static_cast<std::size_t>(c)] & avail;
      if (std::popcount(nb) < ell) continue;
      for (std::uint32_t sub = nb; sub != 0; sub = (sub - 1) & nb) {
        if (std::popcount(sub) != ell) continue;
        best = std::max(best, 1 + f(avail & ~sub & ~(1U << c)));
      }
    }
    memo[avail] = best;
    return best;
  };
  return f(n == 0 ? 0 : (1U << n) - 1);
}

// min |X| + Σ (|B|-1)/2 over X ⊆ V and partitions of V \ X into odd blocks
// that contain every edge of G - X.
inline int min_odd_set_cover_weight(const Graph& g) {
  const int n = g.order();
  int best = n;
  for (std::uint32_t x = 0; x < (1U << n); ++x) {
    const int base = std::popcount(x);
    if (base >= best) continue;
    std::vector<int> rest;
    for (int v = 0; v < n; ++v) {
      if (!(x >> v & 1U)) rest.push_back(v);
    }
    for_each_partition(static_cast<int>(rest.size()), [&](const std::vector<int>& block) {
      std::vector<int> where(static_cast<std::size_t>(n), -1);
      std::map<int, int> sizes;
      for (std::size_t i = 0; i < rest.size(); ++i) {
        where[static_cast<std::size_t>(rest[i])] = block[i];
        ++sizes[block[i]];
      }
      int weight = base;
      for (const auto& [b, s] : sizes) {
        if (s % 2 == 0) return;
        weight += (s - 1) / 2;
      }
      for (const Edge& e : g.edges()) {
        const int bu = where[static_cast<std::size_t>(e.u)];
        const int bv = where[static_cast<std::size_t>(e.v)];
        if (bu >= 0 && bv >= 0 && bu != bv) return;
      }
      best = std::min(best, weight);
    });
  }
  return best;
}

// max over |U| >= 2 of ⌈|E(U)| / (|U| - 1)⌉; 0 when edgeless.
inline int arboricity(const Graph& g) {
  const int n = g.order();
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    const int s = std::popcount(mask);
    if (s < 2) continue;
    const int e = edges_in_mask(g, mask);
    best = std::max(best, (e + s - 2) / (s - 1));
  }
  return best;
}

inline bool star_forest(int n, const std::vector<Edge>& edges) {
  // Every component has a vertex meeting all of its edges, and no cycles.
  std::vector<int> comp(static_cast<std::size_t>(n));
  std::iota(comp.begin(), comp.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return comp[static_cast<std::size_t>(x)] == x ? x : comp[static_cast<std::size_t>(x)] = find(comp[static_cast<std::size_t>(x)]);
  };
  for (const Edge& e : edges) {
    const int a = find(e.u);
    const int b = find(e.v);
    if (a == b) return false;
    comp[static_cast<std::size_t>(a)] = b;
  }
  std::map<int, std::vector<Edge>> by_comp;
  for (const Edge& e : edges) by_comp[find(e.u)].push_back(e);
  for (const auto& [root, es] : by_comp) {
    bool centred = false;
    for (int v = 0; v < n && !centred; ++v) {
      centred = std::all_of(es.begin(), es.end(), [v](const Edge& e) { return e.contains(v); });
    }
    if (!centred) return false;
  }
  return true;
}

// Smallest t such that some t-colouring of the edges has star-forest classes.
inline int star_arboricity(const Graph& g) {
  const int m = g.size();
  if (m == 0) return 0;
  for (int t = 1;; ++t) {
    std::vector<int> colour(static_cast<std::size_t>(m), 0);
    for (;;) {
      bool ok = true;
      for (int c = 0; c < t && ok; ++c) {
        std::vector<Edge> cls;
        for (int i = 0; i < m; ++i) {
          if (colour[static_cast<std::size_t>(i)] == c) cls.push_back(g.edges()[static_cast<std::size_t>(i)]);
        }
        ok = star_forest(g.order(), cls);
      }
      if (ok) return t;
      int i = 0;
      while (i < m && ++colour[static_cast<std::size_t>(i)] == t) colour[static_cast<std::size_t>(i++)] = 0;
      if (i == m) break;
    }
  }
}

// Straightforward graph6 writer, used to cross-check the library encoder.
inline std::string graph6(const Graph& g) {
  const int n = g.order();
  std::string out(1, static_cast<char>(n + 63));
  std::vector<int> bits;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j) ? 1 : 0);
  }
  while (bits.size() % 6 != 0) bits.push_back(0);
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    int x = 0;
    for (std::size_t b = 0; b < 6; ++b) x = (x << 1) | bits[i + b];
    out.push_back(static_cast<char>(x + 63));
  }
  return out;
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

inline Graph labeled(int n, std::uint64_t mask) {
  std::vector<Edge> edges;
  int bit = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++bit) {
      if (mask >> bit & 1U) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

}  // namespace oracle
