#include "lapsum/graph_source.hpp"

#include <sstream>

#include "lapsum/errors.hpp"

namespace lapsum {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

}  // namespace

std::string describe(const GraphSource& src) {
  return std::visit(
      Overloaded{
          [](const AllLabeledSource& s) { return "all-labeled:" + std::to_string(s.n); },
          [](const Graph6FileSource& s) { return "graph6-file:" + s.path; },
          [](const GnpSource& s) {
            std::ostringstream os;
            os << "gnp:" << s.n << ":" << s.p << ":" << s.count << ":" << s.seed;
            return os.str();
          },
          [](const SingleGraphSource& s) {
            return "graph:" + (s.label.empty() ? encode_graph6(s.graph) : s.label);
          },
          [](const GraphListSource& s) {
            return "list:" + (s.label.empty() ? std::to_string(s.graphs.size()) + " graphs" : s.label);
          },
      },
      src);
}

double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw ContractError("uniform_below: empty range");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

Graph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<Edge> edges;
  int bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if (mask >> bit & 1U) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

Graph sample_gnp(int n, double p, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (uniform_unit(rng) < p) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

GraphStream::GraphStream(GraphSource src) : src_(std::move(src)) {
  std::visit(Overloaded{
                 [this](const AllLabeledSource& s) {
                   if (s.n < 0 || s.n > kMaxAllLabeledOrder) {
                     throw SizeLimitError("all-labeled enumeration is limited to n <= 7; use a graph6 file");
                   }
                   limit_ = std::uint64_t{1} << (s.n * (s.n - 1) / 2);
                 },
                 [this](const Graph6FileSource& s) {
                   file_ = std::make_unique<std::ifstream>(s.path);
                   if (!*file_) throw std::runtime_error("cannot open graph6 file '" + s.path + "'");
                 },
                 [this](const GnpSource& s) {
                   if (!(s.p >= 0.0 && s.p <= 1.0)) throw ContractError("gnp: p must lie in [0,1]");
                   if (s.n < 0) throw ContractError("gnp: negative n");
                   limit_ = s.count;
                   rng_.seed(s.seed);
                 },
                 [this](const SingleGraphSource&) { limit_ = 1; },
                 [this](const GraphListSource& s) { limit_ = s.graphs.size(); },
             },
             src_);
}

std::optional<Graph> GraphStream::next() {
  if (auto* s = std::get_if<AllLabeledSource>(&src_)) {
    if (index_ >= limit_) return std::nullopt;
    return graph_from_mask(s->n, index_++);
  }
  if (auto* s = std::get_if<GnpSource>(&src_)) {
    if (index_ >= limit_) return std::nullopt;
    ++index_;
    return sample_gnp(s->n, s->p, rng_);
  }
  if (auto* s = std::get_if<SingleGraphSource>(&src_)) {
    if (index_ >= limit_) return std::nullopt;
    ++index_;
    return s->graph;
  }
  if (auto* s = std::get_if<GraphListSource>(&src_)) {
    if (index_ >= limit_) return std::nullopt;
    return s->graphs[static_cast<std::size_t>(index_++)];
  }
  auto& file = std::get<Graph6FileSource>(src_);
  std::string line;
  while (std::getline(*file_, line)) {
    ++line_no_;
    std::string_view text = trim(line);
    constexpr std::string_view kHeader = ">>graph6<<";
    if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
    if (text.empty()) continue;
    try {
      return parse_graph6(text);
    } catch (const ParseError& e) {
      if (file.strict) throw ParseError(e.what(), e.offset(), line_no_);
      issues_.push_back({line_no_, e.what()});
    }
  }
  return std::nullopt;
}

}  // namespace lapsum
