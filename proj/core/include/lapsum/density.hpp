#pragma once

#include <optional>
#include <span>
#include <vector>

#include "lapsum/graph.hpp"
#include "lapsum/rational.hpp"

namespace lapsum {

int edges_inside(const Graph& g, std::span<const int> vertices);

/// max over U of |E(G[U])| - lambda*|U| subject to forced_in ⊆ U and
/// U ∩ forced_out = ∅, solved as a closure problem by one max-flow.
/// The returned subset is the inclusion-minimal maximiser.
struct ExcessResult {
  Rational value;
  std::vector<int> subset;
};
ExcessResult max_edge_excess(const Graph& g, const Rational& lambda,
                             std::span<const int> forced_in = {},
                             std::span<const int> forced_out = {});

struct DensityWitness {
  Rational value;           // |E(G[U])| / |U|
  std::vector<int> subset;  // lexicographically smallest optimal U
};

/// ρ(G) = max over non-empty U of |E(G[U])|/|U|, exact, with witness.
DensityWitness density(const Graph& g);

struct PartitionWitness {
  Rational value;
  std::vector<std::vector<int>> parts;  // partition of 0..n-1
  int attained_part_size = 0;           // max part size; the ratio's denominator
};

inline constexpr int kPartitionDensityExactLimit = 20;

/// ρ̃(G) = max over partitions V_1..V_m of (Σ|E(G[V_i])|) / max|V_i|, exact.
/// Parts never need to straddle components, so the subset dynamic programme
/// runs per component; throws SizeLimitError when a component has more than
/// kPartitionDensityExactLimit vertices.
PartitionWitness partition_density(const Graph& g);

struct PartitionDensityBracket {
  Rational lower;
  Rational upper;
  bool exact = false;
};

/// Exact when every component is within the exact limit, otherwise a bracket
/// lower <= ρ̃ <= upper built from density, components and a vertex cover
/// (minimum when ν <= kVertexCoverNuLimit, otherwise a maximal-matching cover).
PartitionDensityBracket partition_density_bounds(const Graph& g);

/// Decides ρ̃(G) < k, using the bracket when the exact routine is out of
/// reach. Throws SizeLimitError when the bracket straddles k.
bool partition_density_below(const Graph& g, int k);

struct Orientation {
  Graph base;
  std::vector<int> heads;      // heads[i] is the head of base.edges()[i]
  std::vector<int> indegrees;  // derived

  Orientation() = default;
  Orientation(Graph g, std::vector<int> edge_heads);

  int max_indegree() const noexcept;
  // In-neighbours of v: tails of arcs pointing at v.
  std::vector<std::vector<int>> in_neighbors() const;
};

struct OrientationResult {
  std::optional<Orientation> orientation;
  // When infeasible: U with |E(G[U])| > k|U|.
  std::vector<int> violating_subset;
};

/// Orientation with all in-degrees <= k, from a max-flow; or a subset proving
/// ρ(G) > k when none exists.
OrientationResult k_orientation(const Graph& g, int k);

/// As k_orientation, but fixed_heads[i] >= 0 pins the head of edge i. The
/// certificate in the infeasible case is empty when pinned arcs alone already
/// overload a vertex.
OrientationResult k_orientation_with_fixed(const Graph& g, int k, std::span<const int> fixed_heads);

struct PeelStep {
  std::vector<Edge> removed;               // edge set of the removed subgraph H
  std::vector<std::vector<int>> parts;     // the witness partition that produced H
  int n_prime = 0;                         // n'(H)
  Rational rho_tilde_before;
};

struct PeelResult {
  Graph graph;
  std::vector<PeelStep> log;
};

/// Repeatedly deletes the edges of a partition-density witness H with
/// |E(H)| >= k·n'(H) until ρ̃ < k. Vertices are kept.
PeelResult peel_to_low_partition_density(const Graph& g, int k);

}  // namespace lapsum
