#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lapsum {

/// Undirected edge with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool contains(int x) const noexcept { return u == x || v == x; }
  int other(int x) const noexcept { return x == u ? v : u; }

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1. Immutable once built; keeps
/// both a lexicographically sorted edge list and sorted neighbour lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  // Throws ContractError on self-loops, duplicates or out-of-range endpoints.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const int> neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  bool has_edge(int u, int v) const;
  int max_degree() const noexcept;
  // Index of edge {u,v} in edges(), or -1.
  int edge_index(int u, int v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

struct ComponentsInfo {
  std::vector<std::vector<int>> components;  // each sorted; ordered by smallest vertex
  int n_prime = 0;                           // size of the largest component
};

ComponentsInfo components_info(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_parent;  // new vertex i is parent vertex to_parent[i]
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> vertices);

// Same vertex set, only the listed edges (each must be an edge of g).
Graph edge_subgraph(const Graph& g, std::span<const Edge> edges);
// Same vertex set with the listed edges deleted.
Graph remove_edges(const Graph& g, std::span<const Edge> edges);
// Vertices of b are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

std::vector<int> degree_sequence(const Graph& g);
/// d^T_i = |{v : deg(v) >= i}| for i = 1..n, returned 0-indexed.
std::vector<int> conjugate_degrees(const Graph& g);
int non_isolated_count(const Graph& g);
/// Two-colouring if one exists; side[v] in {0,1}.
bool is_bipartite(const Graph& g, std::vector<int>* side = nullptr);
bool is_independent(const Graph& g, std::span<const int> vertices);

enum class FamilyKind { kComplete, kStar, kPath, kCycle, kCompleteBipartite, kSplit, kEmpty };

struct GraphFamilyId {
  FamilyKind kind = FamilyKind::kEmpty;
  int a = 0;  // n, or first part size for complete-bipartite
  int b = 0;  // second part size, or r for the split family

  std::string str() const;
  friend bool operator==(const GraphFamilyId&, const GraphFamilyId&) = default;
};

/// Accepts "complete:5", "star:6", "path:4", "cycle:5", "empty:3",
/// "complete-bipartite:3,5" (alias "kbip:3,5") and "split:6,2".
GraphFamilyId parse_family(std::string_view text);
/// Like parse_family, but every numeric field may also be a range "2..10" or
/// an alternation "3|5|7". Expands to the cartesian product, silently
/// dropping combinations outside the family's parameter range.
std::vector<GraphFamilyId> parse_family_list(std::string_view text);

Graph make_family(const GraphFamilyId& id);

inline constexpr int kGraph6MaxOrder = 62;

Graph parse_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

/// Edge-list text: "n m" then m lines "u v", 0-based.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace lapsum
