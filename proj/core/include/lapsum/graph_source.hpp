#pragma once

#include <cstdint>
#include <fstream>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "lapsum/graph.hpp"

namespace lapsum {

inline constexpr int kMaxAllLabeledOrder = 7;

struct AllLabeledSource {
  int n = 0;
};
struct Graph6FileSource {
  std::string path;
  bool strict = false;  // abort on the first malformed line instead of skipping it
};
struct GnpSource {
  int n = 0;
  double p = 0.0;
  std::uint64_t count = 1;
  std::uint64_t seed = 0;
};
struct SingleGraphSource {
  Graph graph;
  std::string label;
};

// An explicit in-memory list, e.g. an expanded family range.
struct GraphListSource {
  std::vector<Graph> graphs;
  std::string label;
};

using GraphSource =
    std::variant<AllLabeledSource, Graph6FileSource, GnpSource, SingleGraphSource, GraphListSource>;

std::string describe(const GraphSource& src);

struct SourceIssue {
  std::size_t line = 0;
  std::string message;
};

/// Single-consumer stream over a GraphSource. Order is deterministic: labeled
/// graphs by edge bitmask (bit i = i-th pair in graph6 order), file lines in
/// file order, G(n,p) draws from a seeded 64-bit Mersenne twister.
class GraphStream {
 public:
  explicit GraphStream(GraphSource src);

  std::optional<Graph> next();
  // Malformed file lines skipped so far (non-strict mode only).
  const std::vector<SourceIssue>& issues() const noexcept { return issues_; }

 private:
  GraphSource src_;
  std::uint64_t index_ = 0;
  std::uint64_t limit_ = 0;
  std::unique_ptr<std::ifstream> file_;
  std::size_t line_no_ = 0;
  std::mt19937_64 rng_;
  std::vector<SourceIssue> issues_;
};

/// Labeled graph on n vertices whose edges are the set bits of mask, using the
/// graph6 pair order (0,1),(0,2),(1,2),(0,3),...
Graph graph_from_mask(int n, std::uint64_t mask);

/// One G(n,p) sample; edges are tested in graph6 pair order.
Graph sample_gnp(int n, double p, std::mt19937_64& rng);

// Uniform double in [0,1) from 53 random bits.
double uniform_unit(std::mt19937_64& rng);
// Uniform integer in [0, bound) by rejection; bound > 0.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

}  // namespace lapsum
