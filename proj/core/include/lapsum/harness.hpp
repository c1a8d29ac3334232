#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lapsum/graph.hpp"
#include "lapsum/graph_source.hpp"
#include "lapsum/spectral.hpp"

namespace lapsum {

struct KRange {
  enum class Mode { kAll, kList, kUpToNMinus2, kUpToNMinus1, kExactlyNMinus1 };

  Mode mode = Mode::kAll;
  std::vector<int> list;
  bool allow_beyond_n = false;  // keep listed k > n (ε_k = |E| convention)

  /// "all", "n-1", "<=n-1", "<=n-2" or a comma list such as "1,2,5".
  static KRange parse(std::string_view text);
  std::string str() const;
  std::vector<int> values(int n) const;
};

struct ScanOptions {
  std::vector<BoundId> bounds;
  KRange ks;
  int jobs = 1;
  bool timing = true;  // false writes runtime_ms as null for byte-stable reports
  std::size_t chunk_size = 512;
  std::size_t max_listed_equalities = 50;  // per (bound, k)
  std::size_t max_listed_skips = 1000;
  int sa_edge_limit = 30;
};

struct BoundTotals {
  BoundId bound = BoundId::kBrouwer;
  int k = 0;
  std::uint64_t graphs_checked = 0;
  std::uint64_t violations = 0;
  std::optional<double> min_slack;
  std::uint64_t equalities = 0;
  double max_lhs_over_k2 = 0.0;
};

/// Every invariant computed for the graph, as carried by a witness.
struct GraphInvariants {
  std::string graph6;
  int n = 0;
  int m = 0;
  int n_prime = 0;
  int non_isolated = 0;
  bool bipartite = false;
  std::vector<double> spectrum;
  std::optional<int> nu;
  std::optional<int> tau;
  std::optional<int> sa;
};

struct Violation {
  BoundId bound = BoundId::kBrouwer;
  int k = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  GraphInvariants witness;
};

struct EqualityCase {
  BoundId bound = BoundId::kBrouwer;
  int k = 0;
  std::string graph6;
  double lhs = 0.0;
  double rhs = 0.0;
};

struct SkipRecord {
  std::string graph6;
  std::string bound;  // empty when the whole graph was skipped
  std::string reason;
};

struct ScanReport {
  std::string source;
  std::string k_range;
  std::vector<BoundId> bounds;
  std::uint64_t graphs = 0;
  std::vector<BoundTotals> totals;  // ordered by requested bound, then k
  std::vector<Violation> violations;
  std::vector<EqualityCase> equalities;
  std::uint64_t skipped_total = 0;
  std::vector<SkipRecord> skipped;
  std::vector<SourceIssue> source_issues;
  std::optional<double> runtime_ms;

  bool has_violation() const noexcept { return !violations.empty(); }
  std::string to_json(int indent = 2) const;
  std::string to_csv() const;
};

/// Every graph of the source against every requested bound and k. Graphs are
/// processed in chunks by `jobs` workers and merged in source order.
ScanReport scan(const GraphSource& src, const ScanOptions& opts);

struct ProbeRow {
  std::string family;
  std::string graph6;
  int k = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool equality = false;
};

/// Slack of one bound over a family range; inapplicable (graph, k) pairs are
/// left out.
std::vector<ProbeRow> tightness_probe(std::span<const GraphFamilyId> families, BoundId bound,
                                      const KRange& ks);

std::string probe_to_json(const std::vector<ProbeRow>& rows, BoundId bound, int indent = 2);
std::string probe_to_csv(const std::vector<ProbeRow>& rows);

}  // namespace lapsum
