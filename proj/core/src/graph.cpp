#include "lapsum/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <numeric>
#include <ostream>
#include <queue>
#include <sstream>

#include "lapsum/errors.hpp"

namespace lapsum {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))) {
  if (n < 0) throw ContractError("negative vertex count");
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n) {
      throw ContractError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                          "} out of range for n=" + std::to_string(n));
    }
    if (e.u == e.v) throw ContractError("self-loop at vertex " + std::to_string(e.u));
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw ContractError("duplicate edge {" + std::to_string(dup->u) + "," +
                        std::to_string(dup->v) + "}");
  }
  for (const Edge& e : edges_) {
    adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  const auto& list = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(list.begin(), list.end(), v);
}

int Graph::max_degree() const noexcept {
  int best = 0;
  for (const auto& list : adj_) best = std::max(best, static_cast<int>(list.size()));
  return best;
}

int Graph::edge_index(int u, int v) const {
  const Edge key(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return -1;
  return static_cast<int>(it - edges_.begin());
}

ComponentsInfo components_info(const Graph& g) {
  ComponentsInfo info;
  const int n = g.order();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int s = 0; s < n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<int> comp{s};
    seen[static_cast<std::size_t>(s)] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (int w : g.neighbors(comp[head])) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    info.n_prime = std::max(info.n_prime, static_cast<int>(comp.size()));
    info.components.push_back(std::move(comp));
  }
  return info;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  InducedSubgraph out;
  out.to_parent.assign(vertices.begin(), vertices.end());
  std::sort(out.to_parent.begin(), out.to_parent.end());
  out.to_parent.erase(std::unique(out.to_parent.begin(), out.to_parent.end()),
                      out.to_parent.end());
  std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) {
    const int v = out.to_parent[i];
    if (v < 0 || v >= g.order()) {
      throw ContractError("induced_subgraph: vertex " + std::to_string(v) + " out of range");
    }
    local[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const int a = local[static_cast<std::size_t>(e.u)];
    const int b = local[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) edges.emplace_back(a, b);
  }
  out.graph = Graph(static_cast<int>(out.to_parent.size()), edges);
  return out;
}

Graph edge_subgraph(const Graph& g, std::span<const Edge> edges) {
  for (const Edge& e : edges) {
    if (!g.has_edge(e.u, e.v)) {
      throw ContractError("edge_subgraph: {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                          "} is not an edge");
    }
  }
  return Graph(g.order(), edges);
}

Graph remove_edges(const Graph& g, std::span<const Edge> edges) {
  std::vector<Edge> drop(edges.begin(), edges.end());
  std::sort(drop.begin(), drop.end());
  std::vector<Edge> kept;
  kept.reserve(g.edges().size());
  for (const Edge& e : g.edges()) {
    if (!std::binary_search(drop.begin(), drop.end(), e)) kept.push_back(e);
  }
  return Graph(g.order(), kept);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges(a.edges());
  const int shift = a.order();
  for (const Edge& e : b.edges()) edges.emplace_back(e.u + shift, e.v + shift);
  return Graph(a.order() + b.order(), edges);
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> deg(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
  return deg;
}

std::vector<int> conjugate_degrees(const Graph& g) {
  const int n = g.order();
  std::vector<int> conj(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    // deg(v) >= i for i = 1..deg(v)
    for (int i = 1; i <= g.degree(v); ++i) ++conj[static_cast<std::size_t>(i - 1)];
  }
  return conj;
}

int non_isolated_count(const Graph& g) {
  int count = 0;
  for (int v = 0; v < g.order(); ++v) count += g.degree(v) > 0 ? 1 : 0;
  return count;
}

bool is_bipartite(const Graph& g, std::vector<int>* side) {
  std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
  for (int s = 0; s < g.order(); ++s) {
    if (color[static_cast<std::size_t>(s)] >= 0) continue;
    color[static_cast<std::size_t>(s)] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int w : g.neighbors(u)) {
        auto& cw = color[static_cast<std::size_t>(w)];
        if (cw < 0) {
          cw = 1 - color[static_cast<std::size_t>(u)];
          q.push(w);
        } else if (cw == color[static_cast<std::size_t>(u)]) {
          return false;
        }
      }
    }
  }
  if (side) *side = std::move(color);
  return true;
}

bool is_independent(const Graph& g, std::span<const int> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (g.has_edge(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Families

namespace {

struct FamilyName {
  std::string_view name;
  FamilyKind kind;
  int arity;
};

constexpr FamilyName kFamilyNames[] = {
    {"complete", FamilyKind::kComplete, 1},
    {"star", FamilyKind::kStar, 1},
    {"path", FamilyKind::kPath, 1},
    {"cycle", FamilyKind::kCycle, 1},
    {"empty", FamilyKind::kEmpty, 1},
    {"complete-bipartite", FamilyKind::kCompleteBipartite, 2},
    {"kbip", FamilyKind::kCompleteBipartite, 2},
    {"split", FamilyKind::kSplit, 2},
};

int parse_int(std::string_view s, std::size_t offset) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("expected integer, got '" + std::string(s) + "'", offset);
  }
  return value;
}

std::vector<int> parse_int_set(std::string_view s, std::size_t offset) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t bar = s.find('|', start);
    if (bar == std::string_view::npos) bar = s.size();
    std::string_view item = s.substr(start, bar - start);
    std::size_t dots = item.find("..");
    if (dots != std::string_view::npos) {
      const int lo = parse_int(item.substr(0, dots), offset + start);
      const int hi = parse_int(item.substr(dots + 2), offset + start + dots + 2);
      for (int x = lo; x <= hi; ++x) out.push_back(x);
    } else {
      out.push_back(parse_int(item, offset + start));
    }
    start = bar + 1;
  }
  return out;
}

const FamilyName& lookup_family(std::string_view name) {
  for (const auto& f : kFamilyNames) {
    if (f.name == name) return f;
  }
  throw ParseError("unknown graph family '" + std::string(name) + "'", 0);
}

bool family_in_range(const GraphFamilyId& id) {
  switch (id.kind) {
    case FamilyKind::kCompleteBipartite:
      return id.a >= 1 && id.b >= 1;
    case FamilyKind::kSplit:
      return id.a >= 1 && id.b >= 1 && id.b <= id.a;
    default:
      return id.a >= 1;
  }
}

std::vector<std::vector<int>> split_fields(std::string_view text, const FamilyName& fam,
                                           std::size_t offset) {
  std::vector<std::vector<int>> fields;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    fields.push_back(parse_int_set(text.substr(start, comma - start), offset + start));
    start = comma + 1;
  }
  if (static_cast<int>(fields.size()) != fam.arity) {
    throw ParseError("family '" + std::string(fam.name) + "' takes " + std::to_string(fam.arity) +
                         " parameter(s)",
                     offset);
  }
  return fields;
}

}  // namespace

std::string GraphFamilyId::str() const {
  switch (kind) {
    case FamilyKind::kComplete: return "complete:" + std::to_string(a);
    case FamilyKind::kStar: return "star:" + std::to_string(a);
    case FamilyKind::kPath: return "path:" + std::to_string(a);
    case FamilyKind::kCycle: return "cycle:" + std::to_string(a);
    case FamilyKind::kEmpty: return "empty:" + std::to_string(a);
    case FamilyKind::kCompleteBipartite:
      return "complete-bipartite:" + std::to_string(a) + "," + std::to_string(b);
    case FamilyKind::kSplit: return "split:" + std::to_string(a) + "," + std::to_string(b);
  }
  return "?";
}

std::vector<GraphFamilyId> parse_family_list(std::string_view text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("graph family must look like NAME:ARGS", text.size());
  }
  const FamilyName& fam = lookup_family(text.substr(0, colon));
  auto fields = split_fields(text.substr(colon + 1), fam, colon + 1);
  std::vector<GraphFamilyId> out;
  for (int a : fields[0]) {
    if (fam.arity == 1) {
      GraphFamilyId id{fam.kind, a, 0};
      if (family_in_range(id)) out.push_back(id);
      continue;
    }
    for (int b : fields[1]) {
      GraphFamilyId id{fam.kind, a, b};
      if (family_in_range(id)) out.push_back(id);
    }
  }
  return out;
}

GraphFamilyId parse_family(std::string_view text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("graph family must look like NAME:ARGS", text.size());
  }
  const FamilyName& fam = lookup_family(text.substr(0, colon));
  auto fields = split_fields(text.substr(colon + 1), fam, colon + 1);
  for (const auto& f : fields) {
    if (f.size() != 1) throw ParseError("expected a single graph, got a range", colon + 1);
  }
  GraphFamilyId id{fam.kind, fields[0][0], fam.arity == 2 ? fields[1][0] : 0};
  if (!family_in_range(id)) throw ContractError("family parameters out of range: " + id.str());
  return id;
}

Graph make_family(const GraphFamilyId& id) {
  if (!family_in_range(id)) throw ContractError("family parameters out of range: " + id.str());
  std::vector<Edge> edges;
  const int n = id.a;
  switch (id.kind) {
    case FamilyKind::kComplete:
      for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) edges.emplace_back(i, j);
      return Graph(n, edges);
    case FamilyKind::kStar:
      for (int j = 1; j < n; ++j) edges.emplace_back(0, j);
      return Graph(n, edges);
    case FamilyKind::kPath:
      for (int j = 1; j < n; ++j) edges.emplace_back(j - 1, j);
      return Graph(n, edges);
    case FamilyKind::kCycle:
      if (n < 3) throw ContractError("cycle needs n >= 3");
      for (int j = 1; j < n; ++j) edges.emplace_back(j - 1, j);
      edges.emplace_back(0, n - 1);
      return Graph(n, edges);
    case FamilyKind::kEmpty:
      return Graph(n);
    case FamilyKind::kCompleteBipartite: {
      // Vertices 0..a-1 form the first part.
      for (int i = 0; i < id.a; ++i)
        for (int j = 0; j < id.b; ++j) edges.emplace_back(i, id.a + j);
      return Graph(id.a + id.b, edges);
    }
    case FamilyKind::kSplit: {
      // Pairs {i,j} with i <= r and i < j, on 1-based labels shifted down.
      const int r = id.b;
      for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
      return Graph(n, edges);
    }
  }
  throw ContractError("unknown family");
}

// ---------------------------------------------------------------------------
// graph6 (short form)

Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw ParseError("graph6: empty input", 0);
  const auto first = static_cast<unsigned char>(text[0]);
  if (first < 63 || first > 63 + kGraph6MaxOrder) {
    throw ParseError("graph6: malformed length byte", 0);
  }
  const int n = first - 63;
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (text.size() != 1 + body) {
    throw ParseError("graph6: expected " + std::to_string(1 + body) + " bytes for n=" +
                         std::to_string(n) + ", got " + std::to_string(text.size()),
                     std::min(text.size(), 1 + body));
  }
  for (std::size_t i = 1; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw ParseError("graph6: byte out of range", i);
  }
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = static_cast<unsigned char>(text[1 + k / 6]) - 63;
      if (byte & (1 << (5 - static_cast<int>(k % 6)))) edges.emplace_back(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int last = static_cast<unsigned char>(text.back()) - 63;
    const int pad_mask = (1 << (6 - static_cast<int>(bits % 6))) - 1;
    if (last & pad_mask) throw ParseError("graph6: nonzero padding bits", text.size() - 1);
  }
  return Graph(n, edges);
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder) {
    throw SizeLimitError("graph6: n=" + std::to_string(n) + " exceeds short-form limit 62");
  }
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  std::string out(1 + (bits + 5) / 6, static_cast<char>(63));
  out[0] = static_cast<char>(63 + n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (g.has_edge(i, j)) {
        auto& c = out[1 + k / 6];
        c = static_cast<char>(c + (1 << (5 - static_cast<int>(k % 6))));
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Edge lists

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line()) throw ParseError("edge list: missing header", 0, 1);
  std::istringstream header(line);
  long long n = -1;
  long long m = -1;
  if (!(header >> n >> m) || n < 0 || m < 0) {
    throw ParseError("edge list: header must be 'n m'", 0, line_no);
  }
  std::vector<Edge> edges;
  for (long long i = 0; i < m; ++i) {
    if (!next_line()) throw ParseError("edge list: expected " + std::to_string(m) + " edges", 0, line_no);
    std::istringstream row(line);
    int u = -1;
    int v = -1;
    if (!(row >> u >> v)) throw ParseError("edge list: expected 'u v'", 0, line_no);
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
      throw ParseError("edge list: invalid edge", 0, line_no);
    }
    edges.emplace_back(u, v);
  }
  try {
    return Graph(static_cast<int>(n), edges);
  } catch (const ContractError& e) {
    throw ParseError(std::string("edge list: ") + e.what(), 0, line_no);
  }
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace lapsum
