#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lapsum/density.hpp"
#include "lapsum/graph.hpp"
#include "lapsum/rational.hpp"

namespace lapsum {

struct ArboricityWitness {
  int value = 0;            // a(G) = max ⌈|E(U)| / (|U|-1)⌉
  Rational ratio;           // the maximum of |E(U)| / (|U|-1) itself
  std::vector<int> subset;  // a maximiser U; empty for edgeless graphs
};

/// Nash-Williams value by parametric flow: max over U ∋ r of
/// |E(U)| - λ(|U|-1), one forced root r at a time.
ArboricityWitness arboricity_value(const Graph& g);

struct ForestDecomposition {
  std::vector<std::vector<Edge>> classes;
};

struct StarForestDecomposition {
  std::vector<std::vector<Edge>> classes;
};

bool is_forest(int n, std::span<const Edge> edges);
/// Every component of the edge set has a vertex incident to all its edges.
bool is_star_forest(int n, std::span<const Edge> edges);

/// Classes are a partition of E(g) and each class is acyclic.
bool verify_forest_decomposition(const Graph& g, const ForestDecomposition& d,
                                 std::string* reason = nullptr);
bool verify_star_forest_decomposition(const Graph& g, const StarForestDecomposition& d,
                                      std::string* reason = nullptr);

/// Matroid-partition augmentation over edges in lexicographic order; a new
/// forest is opened only when no swap path exists, so the class count is a(G).
ForestDecomposition forest_decomposition(const Graph& g);

/// Splits one forest into at most two star forests by parent-depth parity,
/// rooting each tree at its smallest vertex. Empty classes are dropped.
std::vector<std::vector<Edge>> forest_to_two_star_forests(int n, std::span<const Edge> forest);

inline constexpr int kStarArboricityEdgeLimit = 30;

struct StarArboricityOptions {
  int max_edges = kStarArboricityEdgeLimit;
};

struct StarArboricityResult {
  int value = 0;
  StarForestDecomposition decomposition;
};

/// Iterative deepening from a(G) with backtracking over edges; exact.
StarArboricityResult star_arboricity_exact(const Graph& g, const StarArboricityOptions& opts = {});

/// Class i holds the edges whose first cover vertex in list order is cover[i].
StarForestDecomposition sa_via_cover(const Graph& g, std::span<const int> cover);

struct StructureDecomposition {
  int k = 0;
  std::vector<int> U;
  std::vector<int> C;
  std::vector<int> I;
};

bool verify_structure_decomposition(const Graph& g, const StructureDecomposition& s,
                                    std::string* reason = nullptr);

/// (U, C, I) with |U| <= 4k²+2k-3, |C| <= k, I independent and N(I) ⊆ C.
/// Requires ρ̃(g) < k (ContractError otherwise).
StructureDecomposition structure_decomposition(const Graph& g, int k);

struct KCAssignment {
  int k = 0;
  int c = 0;
  std::vector<std::vector<int>> lists;  // per vertex, sorted colours in 1..k+c
};

/// Vertices whose in-neighbour lists have no transversal; empty means valid.
std::vector<int> kc_failures(const Orientation& d, const KCAssignment& a);

struct KCAssignmentOptions {
  std::uint64_t seed = 0;
  int max_tries = 50;
  std::map<int, std::vector<int>> pinned;  // fixed lists, never resampled
};

struct KCAssignmentResult {
  bool success = false;
  int tries = 0;
  KCAssignment assignment;           // the last sample
  std::vector<int> failure_counts;   // per vertex, number of failed tries
};

/// Samples every list uniformly among c-subsets of {1..k+c}; between tries
/// only the in-neighbourhoods of failed vertices are resampled.
KCAssignmentResult random_kc_assignment(const Orientation& d, int k, int c,
                                        const KCAssignmentOptions& opts = {});

/// c = ⌈5 ln k + 20⌉.
int assignment_list_size(int k);
/// k + 15 ln k + 65.
double sa_bound_claimed(int k);

struct AuxiliaryGraph {
  StructureDecomposition structure;
  Orientation orientation;     // of G' = G[U ∪ C] + apex
  std::vector<int> to_parent;  // G' vertex -> g vertex; the apex maps to -1
  int apex = 0;
};

/// G' with the orientation induced from a k-orientation of g whose I-edges
/// point into I; every C-vertex gets the arc v -> apex.
AuxiliaryGraph auxiliary_graph(const Graph& g, int k);

struct PipelineOptions {
  std::uint64_t seed = 0;
  int max_tries = 50;
};

struct PipelineResult {
  int k = 0;
  double bound_claimed = 0.0;
  std::string route;  // "2a" or "assignment"
  std::optional<StarForestDecomposition> decomposition;
  std::optional<AuxiliaryGraph> auxiliary;
  std::optional<KCAssignmentResult> assignment;
};

/// Requires ρ̃(g) < k. k <= 100 builds explicit star forests from a forest
/// decomposition; larger k returns the (k,c)-assignment certificate of G'.
PipelineResult sa_upper_bound_pipeline(const Graph& g, int k, const PipelineOptions& opts = {});

}  // namespace lapsum
