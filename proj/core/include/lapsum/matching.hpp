#pragma once

#include <span>
#include <string>
#include <vector>

#include "lapsum/graph.hpp"

namespace lapsum {

struct MatchingResult {
  std::vector<Edge> pairs;
  int nu = 0;
  std::vector<int> mate;  // mate[v] or -1
};

/// Edmonds' blossom algorithm, O(n^3). Exposed vertices are processed in
/// increasing index order.
MatchingResult maximum_matching(const Graph& g);
/// ν(G - excluded) without materialising the subgraph.
int matching_number(const Graph& g, std::span<const char> excluded = {});

/// Greedy maximal matching in edge order; both endpoints of every matched
/// edge. A vertex cover of size <= 2ν.
std::vector<int> maximal_matching_cover(const Graph& g);

inline constexpr int kVertexCoverNuLimit = 15;

/// Minimum vertex cover by branch and bound; requires ν(G) <= 15.
std::vector<int> min_vertex_cover(const Graph& g);
bool is_vertex_cover(const Graph& g, std::span<const int> cover);

struct GallaiEdmonds {
  std::vector<int> D;  // missed by some maximum matching
  std::vector<int> A;  // N(D) \ D
  std::vector<int> C;  // the rest; G[C] has a perfect matching
  int nu = 0;
};

GallaiEdmonds gallai_edmonds(const Graph& g);

struct Star {
  int center = 0;
  std::vector<int> leaves;
};

struct StarPacking {
  int ell = 1;
  std::vector<Star> stars;

  int count() const noexcept { return static_cast<int>(stars.size()); }
};

/// Checks vertex-disjointness, leaf counts and that every center-leaf pair is an edge.
bool is_valid_star_packing(const Graph& g, const StarPacking& p);

inline constexpr int kStarPackingExactLimit = 16;

/// ν_ℓ(G): maximum number of vertex-disjoint copies of the star with ℓ leaves.
/// ℓ = 1 uses the blossom algorithm; ℓ >= 2 is an exact search for n <= 16.
StarPacking nu_ell(const Graph& g, int ell);

struct HallResult {
  bool saturating = false;
  // saturating: a packing with one ℓ-star centred at every vertex of A.
  // otherwise: a packing saturating A \ violator, certifying
  // |A \ violator| <= ν_ℓ(G; A).
  StarPacking packing;
  std::vector<int> violator;  // non-empty A' ⊆ A with |N(A')| <= ℓ|A'| - 1
};

/// g must be bipartite with side A = side_a and side B = the other vertices.
HallResult hall_violator(const Graph& g, std::span<const int> side_a, int ell);

struct OddSetCover {
  std::vector<int> vertices;
  std::vector<std::vector<int>> odd_sets;  // sorted, pairwise disjoint, odd sizes

  int weight() const noexcept;
};

/// Checks every edge is covered, sets are odd and pairwise disjoint. On
/// failure writes a reason when one is requested.
bool verify_odd_set_cover(const Graph& g, const OddSetCover& cover, std::string* reason = nullptr);

/// An odd set cover of weight exactly ν(G), built recursively from the
/// Gallai-Edmonds decomposition.
OddSetCover odd_set_cover(const Graph& g);

/// Makes the odd sets pairwise disjoint by merging intersecting pairs: odd
/// union is kept whole; even union drops its largest vertex into the vertex
/// list. Weight never increases. Throws ContractError if the input does not
/// cover g or contains an even set.
OddSetCover normalize_odd_set_cover(const Graph& g, OddSetCover raw);

}  // namespace lapsum
