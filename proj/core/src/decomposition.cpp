#include "lapsum/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <random>

#include "lapsum/errors.hpp"
#include "lapsum/graph_source.hpp"
#include "lapsum/matching.hpp"

namespace lapsum {

namespace {

using Index = std::size_t;

inline Index ix(int v) { return static_cast<Index>(v); }

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(ix(n)) { std::iota(parent.begin(), parent.end(), 0); }

  int find(int x) {
    while (parent[ix(x)] != x) {
      parent[ix(x)] = parent[ix(parent[ix(x)])];
      x = parent[ix(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[ix(std::max(a, b))] = std::min(a, b);
    return true;
  }
};

bool edges_in_range(int n, std::span<const Edge> edges) {
  return std::all_of(edges.begin(), edges.end(),
                     [n](const Edge& e) { return e.u >= 0 && e.u < e.v && e.v < n; });
}

}  // namespace

// ---------------------------------------------------------------------------
// Arboricity

ArboricityWitness arboricity_value(const Graph& g) {
  ArboricityWitness w;
  if (g.size() == 0) return w;
  const Edge& first = g.edges().front();
  w.subset = {first.u, first.v};
  w.ratio = Rational(1);
  for (;;) {
    Rational best(0);
    std::vector<int> best_set;
    for (int r = 0; r < g.order(); ++r) {
      if (g.degree(r) == 0) continue;
      const int root[] = {r};
      ExcessResult ex = max_edge_excess(g, w.ratio, root);
      const Rational value = ex.value + w.ratio;
      if (value > best) {
        best = value;
        best_set = std::move(ex.subset);
      }
    }
    if (best == Rational(0)) break;
    if (best_set.size() < 2) throw AlgorithmError("arboricity_value: degenerate maximiser");
    w.ratio = Rational(edges_inside(g, best_set), static_cast<std::int64_t>(best_set.size()) - 1);
    w.subset = std::move(best_set);
  }
  w.value = static_cast<int>(w.ratio.ceil());
  return w;
}

// ---------------------------------------------------------------------------
// Structural verifiers

bool is_forest(int n, std::span<const Edge> edges) {
  if (!edges_in_range(n, edges)) return false;
  UnionFind uf(n);
  return std::all_of(edges.begin(), edges.end(), [&](const Edge& e) { return uf.unite(e.u, e.v); });
}

bool is_star_forest(int n, std::span<const Edge> edges) {
  if (!is_forest(n, edges)) return false;
  UnionFind uf(n);
  std::vector<int> degree(ix(n), 0);
  for (const Edge& e : edges) {
    uf.unite(e.u, e.v);
    ++degree[ix(e.u)];
    ++degree[ix(e.v)];
  }
  std::vector<int> comp_edges(ix(n), 0);
  std::vector<int> comp_max_degree(ix(n), 0);
  for (const Edge& e : edges) ++comp_edges[ix(uf.find(e.u))];
  for (int v = 0; v < n; ++v) {
    const int root = uf.find(v);
    comp_max_degree[ix(root)] = std::max(comp_max_degree[ix(root)], degree[ix(v)]);
  }
  for (int v = 0; v < n; ++v) {
    if (comp_edges[ix(v)] > 0 && comp_max_degree[ix(v)] != comp_edges[ix(v)]) return false;
  }
  return true;
}

namespace {

bool verify_partition(const Graph& g, const std::vector<std::vector<Edge>>& classes,
                      bool (*class_ok)(int, std::span<const Edge>), const char* what,
                      std::string* reason) {
  std::vector<int> seen(g.edges().size(), 0);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (const Edge& e : classes[c]) {
      const int i = g.edge_index(e.u, e.v);
      if (i < 0) {
        if (reason) *reason = "class " + std::to_string(c) + " contains a non-edge";
        return false;
      }
      if (seen[ix(i)]++) {
        if (reason) *reason = "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} repeated";
        return false;
      }
    }
    if (!class_ok(g.order(), classes[c])) {
      if (reason) *reason = "class " + std::to_string(c) + " is not a " + what;
      return false;
    }
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i]) {
      const Edge& e = g.edges()[i];
      if (reason) *reason = "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} missing";
      return false;
    }
  }
  return true;
}

}  // namespace

bool verify_forest_decomposition(const Graph& g, const ForestDecomposition& d, std::string* reason) {
  return verify_partition(g, d.classes, &is_forest, "forest", reason);
}

bool verify_star_forest_decomposition(const Graph& g, const StarForestDecomposition& d,
                                      std::string* reason) {
  return verify_partition(g, d.classes, &is_star_forest, "star forest", reason);
}

// ---------------------------------------------------------------------------
// Forest decomposition by matroid partition

namespace {

class ForestPartition {
 public:
  explicit ForestPartition(const Graph& g) : g_(g), owner_(g.edges().size(), -1) {}

  void insert(int e) {
    if (!augment(e)) {
      owner_[ix(e)] = classes_++;
    }
  }

  ForestDecomposition result() const {
    ForestDecomposition d;
    d.classes.resize(ix(classes_));
    for (std::size_t i = 0; i < owner_.size(); ++i) {
      if (owner_[i] >= 0) d.classes[ix(owner_[i])].push_back(g_.edges()[i]);
    }
    return d;
  }

 private:
  // Edge indices on the path between u and v in class c, or nullopt if
  // u and v are in different trees of that class.
  std::optional<std::vector<int>> tree_path(int c, int u, int v) const {
    const int n = g_.order();
    std::vector<int> via(ix(n), -2);
    via[ix(u)] = -1;
    std::queue<int> q;
    q.push(u);
    while (!q.empty() && via[ix(v)] == -2) {
      const int x = q.front();
      q.pop();
      for (int y : g_.neighbors(x)) {
        const int e = g_.edge_index(x, y);
        if (owner_[ix(e)] != c || via[ix(y)] != -2) continue;
        via[ix(y)] = e;
        q.push(y);
      }
    }
    if (via[ix(v)] == -2) return std::nullopt;
    std::vector<int> path;
    for (int x = v; x != u;) {
      const int e = via[ix(x)];
      path.push_back(e);
      x = g_.edges()[ix(e)].other(x);
    }
    return path;
  }

  bool augment(int start) {
    const std::size_t m = owner_.size();
    std::vector<int> prev(m, -2);
    std::vector<int> target(m, -1);  // class the edge moves into on the path
    prev[ix(start)] = -1;
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
      const int x = q.front();
      q.pop();
      const Edge& ex = g_.edges()[ix(x)];
      for (int c = 0; c < classes_; ++c) {
        if (owner_[ix(x)] == c) continue;
        const auto path = tree_path(c, ex.u, ex.v);
        if (!path) {
          // x enters c freely; shift the chain back to the start.
          int into = c;
          for (int cur = x; cur != -1; cur = prev[ix(cur)]) {
            const int next_into = target[ix(cur)];
            owner_[ix(cur)] = into;
            into = next_into;
          }
          return true;
        }
        for (int y : *path) {
          if (prev[ix(y)] != -2) continue;
          prev[ix(y)] = x;
          target[ix(y)] = c;  // x takes c, displacing y
          q.push(y);
        }
      }
    }
    return false;
  }

  const Graph& g_;
  std::vector<int> owner_;
  int classes_ = 0;
};

}  // namespace

ForestDecomposition forest_decomposition(const Graph& g) {
  ForestPartition fp(g);
  for (int e = 0; e < g.size(); ++e) fp.insert(e);
  ForestDecomposition d = fp.result();
  std::string reason;
  if (!verify_forest_decomposition(g, d, &reason)) throw AlgorithmError("forest_decomposition: " + reason);
  if (static_cast<int>(d.classes.size()) != arboricity_value(g).value) {
    throw AlgorithmError("forest_decomposition: class count differs from arboricity");
  }
  return d;
}

std::vector<std::vector<Edge>> forest_to_two_star_forests(int n, std::span<const Edge> forest) {
  if (!is_forest(n, forest)) throw ContractError("forest_to_two_star_forests: input is not a forest");
  std::vector<std::vector<int>> adj(ix(n));
  for (const Edge& e : forest) {
    adj[ix(e.u)].push_back(e.v);
    adj[ix(e.v)].push_back(e.u);
  }
  std::vector<int> depth(ix(n), -1);
  std::vector<std::vector<Edge>> classes(2);
  for (int root = 0; root < n; ++root) {
    if (depth[ix(root)] >= 0) continue;
    depth[ix(root)] = 0;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      const int p = q.front();
      q.pop();
      for (int c : adj[ix(p)]) {
        if (depth[ix(c)] >= 0) continue;
        depth[ix(c)] = depth[ix(p)] + 1;
        classes[ix(depth[ix(p)] % 2)].emplace_back(p, c);
        q.push(c);
      }
    }
  }
  std::vector<std::vector<Edge>> out;
  for (auto& cls : classes) {
    if (cls.empty()) continue;
    std::sort(cls.begin(), cls.end());
    if (!is_star_forest(n, cls)) throw AlgorithmError("forest_to_two_star_forests: class is not a star forest");
    out.push_back(std::move(cls));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Exact star arboricity

namespace {

class StarSearch {
 public:
  StarSearch(int n, std::vector<Edge> edges, int classes)
      : n_(n), edges_(std::move(edges)), t_(classes),
        degree_(ix(classes), std::vector<int>(ix(n), 0)),
        adj_(ix(classes), std::vector<std::uint64_t>(ix(n), 0)),
        assign_(edges_.size(), -1) {}

  bool run() { return place(0, -1); }

  std::vector<std::vector<Edge>> classes() const {
    std::vector<std::vector<Edge>> out(ix(t_));
    for (std::size_t i = 0; i < edges_.size(); ++i) out[ix(assign_[i])].push_back(edges_[i]);
    out.erase(std::remove_if(out.begin(), out.end(), [](const auto& c) { return c.empty(); }), out.end());
    for (auto& c : out) std::sort(c.begin(), c.end());
    return out;
  }

 private:
  // w can take a new leaf in class c: isolated, a centre, or one end of a
  // single-edge star.
  bool can_grow(int c, int w) const {
    const int d = degree_[ix(c)][ix(w)];
    if (d != 1) return true;
    const int only = std::countr_zero(adj_[ix(c)][ix(w)]);
    return degree_[ix(c)][ix(only)] == 1;
  }

  bool fits(int c, const Edge& e) const {
    const int du = degree_[ix(c)][ix(e.u)];
    const int dv = degree_[ix(c)][ix(e.v)];
    if (du > 0 && dv > 0) return false;
    if (du == 0) return can_grow(c, e.v);
    return can_grow(c, e.u);
  }

  void set(int c, const Edge& e, int delta) {
    degree_[ix(c)][ix(e.u)] += delta;
    degree_[ix(c)][ix(e.v)] += delta;
    adj_[ix(c)][ix(e.u)] ^= std::uint64_t{1} << e.v;
    adj_[ix(c)][ix(e.v)] ^= std::uint64_t{1} << e.u;
  }

  bool place(std::size_t i, int max_used) {
    if (i == edges_.size()) return true;
    const Edge& e = edges_[i];
    const int limit = std::min(t_ - 1, max_used + 1);
    for (int c = 0; c <= limit; ++c) {
      if (!fits(c, e)) continue;
      set(c, e, 1);
      assign_[i] = c;
      if (place(i + 1, std::max(max_used, c))) return true;
      set(c, e, -1);
    }
    assign_[i] = -1;
    return false;
  }

  int n_;
  std::vector<Edge> edges_;
  int t_;
  std::vector<std::vector<int>> degree_;
  std::vector<std::vector<std::uint64_t>> adj_;
  std::vector<int> assign_;
};

}  // namespace

StarArboricityResult star_arboricity_exact(const Graph& g, const StarArboricityOptions& opts) {
  if (g.size() > opts.max_edges) {
    throw SizeLimitError("star_arboricity_exact: |E|=" + std::to_string(g.size()) +
                         " exceeds exact limit " + std::to_string(opts.max_edges));
  }
  StarArboricityResult r;
  if (g.size() == 0) return r;

  // Relabel non-isolated vertices so adjacency fits a 64-bit mask.
  std::vector<int> local(ix(g.order()), -1);
  std::vector<int> global;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) > 0) {
      local[ix(v)] = static_cast<int>(global.size());
      global.push_back(v);
    }
  }
  if (global.size() > 64) throw SizeLimitError("star_arboricity_exact: more than 64 non-isolated vertices");
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.emplace_back(local[ix(e.u)], local[ix(e.v)]);
  std::stable_sort(edges.begin(), edges.end(), [&](const Edge& a, const Edge& b) {
    const int da = std::max(g.degree(global[ix(a.u)]), g.degree(global[ix(a.v)]));
    const int db = std::max(g.degree(global[ix(b.u)]), g.degree(global[ix(b.v)]));
    return da > db;
  });

  const int n_local = static_cast<int>(global.size());
  for (int t = std::max(1, arboricity_value(g).value);; ++t) {
    StarSearch search(n_local, edges, t);
    if (!search.run()) continue;
    r.value = t;
    for (const auto& cls : search.classes()) {
      std::vector<Edge> mapped;
      for (const Edge& e : cls) mapped.emplace_back(global[ix(e.u)], global[ix(e.v)]);
      std::sort(mapped.begin(), mapped.end());
      r.decomposition.classes.push_back(std::move(mapped));
    }
    break;
  }
  std::string reason;
  if (!verify_star_forest_decomposition(g, r.decomposition, &reason) ||
      static_cast<int>(r.decomposition.classes.size()) != r.value) {
    throw AlgorithmError("star_arboricity_exact: " + (reason.empty() ? "class count mismatch" : reason));
  }
  return r;
}

StarForestDecomposition sa_via_cover(const Graph& g, std::span<const int> cover) {
  if (!is_vertex_cover(g, cover)) throw ContractError("sa_via_cover: not a vertex cover");
  std::vector<int> rank(ix(g.order()), -1);
  for (std::size_t i = 0; i < cover.size(); ++i) {
    if (rank[ix(cover[i])] < 0) rank[ix(cover[i])] = static_cast<int>(i);
  }
  std::vector<std::vector<Edge>> classes(cover.size());
  for (const Edge& e : g.edges()) {
    const int ru = rank[ix(e.u)];
    const int rv = rank[ix(e.v)];
    const int first = ru < 0 ? rv : (rv < 0 ? ru : std::min(ru, rv));
    classes[ix(first)].push_back(e);
  }
  StarForestDecomposition d;
  for (auto& c : classes) {
    if (!c.empty()) d.classes.push_back(std::move(c));
  }
  std::string reason;
  if (!verify_star_forest_decomposition(g, d, &reason)) throw AlgorithmError("sa_via_cover: " + reason);
  return d;
}

// ---------------------------------------------------------------------------
// Structure decomposition

bool verify_structure_decomposition(const Graph& g, const StructureDecomposition& s,
                                    std::string* reason) {
  auto fail = [&](const std::string& why) {
    if (reason) *reason = why;
    return false;
  };
  const long long k = s.k;
  std::vector<int> where(ix(g.order()), -1);
  int part = 0;
  for (const auto* set : {&s.U, &s.C, &s.I}) {
    for (int v : *set) {
      if (v < 0 || v >= g.order()) return fail("vertex out of range");
      if (where[ix(v)] >= 0) return fail("vertex " + std::to_string(v) + " in two parts");
      where[ix(v)] = part;
    }
    ++part;
  }
  if (std::count(where.begin(), where.end(), -1) != 0) return fail("parts do not cover V");
  if (static_cast<long long>(s.U.size()) > 4 * k * k + 2 * k - 3) return fail("|U| exceeds 4k^2+2k-3");
  if (static_cast<long long>(s.C.size()) > k) return fail("|C| exceeds k");
  for (const Edge& e : g.edges()) {
    const int pu = where[ix(e.u)];
    const int pv = where[ix(e.v)];
    if (pu == 2 && pv == 2) return fail("I is not independent");
    if ((pu == 2 && pv != 1) || (pv == 2 && pu != 1)) return fail("N(I) is not inside C");
  }
  return true;
}

StructureDecomposition structure_decomposition(const Graph& g, int k) {
  if (k < 1) throw ContractError("structure_decomposition: k must be positive");
  if (!partition_density_below(g, k)) {
    throw ContractError("structure_decomposition: partition density is not below k=" + std::to_string(k));
  }
  StructureDecomposition s;
  s.k = k;
  const std::vector<int> cover = maximal_matching_cover(g);
  std::vector<char> in_s(ix(g.order()), 0);
  for (int v : cover) in_s[ix(v)] = 1;

  if (static_cast<int>(cover.size()) <= k) {
    s.C = cover;
    for (int v = 0; v < g.order(); ++v) {
      if (!in_s[ix(v)]) s.I.push_back(v);
    }
  } else {
    std::vector<Edge> crossing;
    for (const Edge& e : g.edges()) {
      if (in_s[ix(e.u)] != in_s[ix(e.v)]) crossing.push_back(e);
    }
    const Graph bip = edge_subgraph(g, crossing);
    const HallResult hall = hall_violator(bip, cover, k);
    if (hall.saturating) {
      throw AlgorithmError("structure_decomposition: cover is saturable, contradicting the density bound");
    }
    std::vector<char> in_u(ix(g.order()), 0);
    for (int a : hall.violator) {
      in_u[ix(a)] = 1;
      for (int b : bip.neighbors(a)) in_u[ix(b)] = 1;
    }
    for (int v = 0; v < g.order(); ++v) {
      if (in_u[ix(v)]) {
        s.U.push_back(v);
      } else if (in_s[ix(v)]) {
        s.C.push_back(v);
      } else {
        s.I.push_back(v);
      }
    }
  }
  std::string reason;
  if (!verify_structure_decomposition(g, s, &reason)) throw AlgorithmError("structure_decomposition: " + reason);
  return s;
}

// ---------------------------------------------------------------------------
// (k,c)-assignments

namespace {

// Kuhn's algorithm: can every in-neighbour pick a distinct colour from its list?
class Transversal {
 public:
  explicit Transversal(int colours) : owner_(ix(colours + 1), -1), stamp_(ix(colours + 1), 0) {}

  bool exists(const std::vector<const std::vector<int>*>& family) {
    if (family.size() + 1 > owner_.size()) return false;
    std::fill(owner_.begin(), owner_.end(), -1);
    family_ = &family;
    for (std::size_t i = 0; i < family.size(); ++i) {
      ++round_;
      if (!try_assign(static_cast<int>(i))) return false;
    }
    return true;
  }

 private:
  bool try_assign(int i) {
    for (int colour : *(*family_)[ix(i)]) {
      if (stamp_[ix(colour)] == round_) continue;
      stamp_[ix(colour)] = round_;
      if (owner_[ix(colour)] < 0 || try_assign(owner_[ix(colour)])) {
        owner_[ix(colour)] = i;
        return true;
      }
    }
    return false;
  }

  std::vector<int> owner_;
  std::vector<std::uint64_t> stamp_;
  std::uint64_t round_ = 0;
  const std::vector<const std::vector<int>*>* family_ = nullptr;
};

std::vector<int> sample_list(int k, int c, std::mt19937_64& rng) {
  std::vector<int> pool(ix(k + c));
  std::iota(pool.begin(), pool.end(), 1);
  for (int i = 0; i < c; ++i) {
    const auto j = static_cast<std::size_t>(i) +
                   static_cast<std::size_t>(uniform_below(rng, static_cast<std::uint64_t>(k + c - i)));
    std::swap(pool[ix(i)], pool[j]);
  }
  pool.resize(ix(c));
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace

std::vector<int> kc_failures(const Orientation& d, const KCAssignment& a) {
  if (static_cast<int>(a.lists.size()) != d.base.order()) {
    throw ContractError("kc_failures: one list per vertex required");
  }
  const auto in = d.in_neighbors();
  Transversal t(a.k + a.c);
  std::vector<int> failed;
  std::vector<const std::vector<int>*> family;
  for (int v = 0; v < d.base.order(); ++v) {
    family.clear();
    for (int u : in[ix(v)]) family.push_back(&a.lists[ix(u)]);
    if (!t.exists(family)) failed.push_back(v);
  }
  return failed;
}

KCAssignmentResult random_kc_assignment(const Orientation& d, int k, int c, const KCAssignmentOptions& opts) {
  if (k < 1 || c < 1) throw ContractError("random_kc_assignment: k and c must be positive");
  if (opts.max_tries < 1) throw ContractError("random_kc_assignment: max_tries must be positive");
  if (d.max_indegree() > k) throw ContractError("random_kc_assignment: orientation is not a k-orientation");
  const int n = d.base.order();
  for (const auto& [v, list] : opts.pinned) {
    if (v < 0 || v >= n || static_cast<int>(list.size()) > c ||
        std::any_of(list.begin(), list.end(), [&](int x) { return x < 1 || x > k + c; })) {
      throw ContractError("random_kc_assignment: invalid pinned list");
    }
  }
  std::mt19937_64 rng(opts.seed);
  KCAssignmentResult r;
  r.assignment.k = k;
  r.assignment.c = c;
  r.assignment.lists.resize(ix(n));
  r.failure_counts.assign(ix(n), 0);
  auto draw = [&](int v) {
    const auto it = opts.pinned.find(v);
    if (it != opts.pinned.end()) {
      r.assignment.lists[ix(v)] = it->second;
      std::sort(r.assignment.lists[ix(v)].begin(), r.assignment.lists[ix(v)].end());
    } else {
      r.assignment.lists[ix(v)] = sample_list(k, c, rng);
    }
  };
  for (int v = 0; v < n; ++v) draw(v);
  const auto in = d.in_neighbors();
  for (r.tries = 1;; ++r.tries) {
    const std::vector<int> failed = kc_failures(d, r.assignment);
    if (failed.empty()) {
      r.success = true;
      return r;
    }
    for (int v : failed) ++r.failure_counts[ix(v)];
    if (r.tries == opts.max_tries) return r;
    std::vector<char> redraw(ix(n), 0);
    for (int v : failed) {
      for (int u : in[ix(v)]) redraw[ix(u)] = 1;
    }
    for (int u = 0; u < n; ++u) {
      if (redraw[ix(u)]) draw(u);
    }
  }
}

int assignment_list_size(int k) {
  if (k < 1) throw ContractError("assignment_list_size: k must be positive");
  return static_cast<int>(std::ceil(5.0 * std::log(static_cast<double>(k)) + 20.0));
}

double sa_bound_claimed(int k) {
  if (k < 1) throw ContractError("sa_bound_claimed: k must be positive");
  return k + 15.0 * std::log(static_cast<double>(k)) + 65.0;
}

// ---------------------------------------------------------------------------
// Pipeline

AuxiliaryGraph auxiliary_graph(const Graph& g, int k) {
  AuxiliaryGraph aux;
  aux.structure = structure_decomposition(g, k);
  const StructureDecomposition& s = aux.structure;
  std::vector<char> in_i(ix(g.order()), 0);
  for (int v : s.I) in_i[ix(v)] = 1;

  std::vector<int> fixed(g.edges().size(), -1);
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const Edge& e = g.edges()[i];
    if (in_i[ix(e.u)]) fixed[i] = e.u;
    if (in_i[ix(e.v)]) fixed[i] = e.v;
  }
  const OrientationResult full = k_orientation_with_fixed(g, k, fixed);
  if (!full.orientation) throw AlgorithmError("auxiliary_graph: no k-orientation with I-edges pinned");

  std::vector<int> kept;
  kept.insert(kept.end(), s.U.begin(), s.U.end());
  kept.insert(kept.end(), s.C.begin(), s.C.end());
  std::sort(kept.begin(), kept.end());
  const InducedSubgraph sub = induced_subgraph(g, kept);
  const int apex = sub.graph.order();
  std::vector<int> local(ix(g.order()), -1);
  for (std::size_t i = 0; i < sub.to_parent.size(); ++i) local[ix(sub.to_parent[i])] = static_cast<int>(i);

  std::vector<Edge> edges(sub.graph.edges().begin(), sub.graph.edges().end());
  for (int v : s.C) edges.emplace_back(local[ix(v)], apex);
  Graph gp(apex + 1, edges);
  std::vector<int> heads(gp.edges().size(), apex);
  for (std::size_t i = 0; i < gp.edges().size(); ++i) {
    const Edge& e = gp.edges()[i];
    if (e.v == apex) continue;
    const int pi = g.edge_index(sub.to_parent[ix(e.u)], sub.to_parent[ix(e.v)]);
    heads[i] = local[ix(full.orientation->heads[ix(pi)])];
  }
  aux.orientation = Orientation(std::move(gp), std::move(heads));
  aux.to_parent = sub.to_parent;
  aux.to_parent.push_back(-1);
  aux.apex = apex;
  if (aux.orientation.max_indegree() > k) throw AlgorithmError("auxiliary_graph: in-degree exceeds k");
  return aux;
}

PipelineResult sa_upper_bound_pipeline(const Graph& g, int k, const PipelineOptions& opts) {
  if (k < 1) throw ContractError("sa_upper_bound_pipeline: k must be positive");
  if (!partition_density_below(g, k)) {
    throw ContractError("sa_upper_bound_pipeline: partition density is not below k=" + std::to_string(k));
  }
  PipelineResult r;
  r.k = k;
  r.bound_claimed = sa_bound_claimed(k);
  if (k <= 100) {
    r.route = "2a";
    StarForestDecomposition d;
    for (const auto& forest : forest_decomposition(g).classes) {
      for (auto& cls : forest_to_two_star_forests(g.order(), forest)) d.classes.push_back(std::move(cls));
    }
    std::string reason;
    if (!verify_star_forest_decomposition(g, d, &reason)) throw AlgorithmError("pipeline: " + reason);
    if (static_cast<int>(d.classes.size()) > 2 * (k + 1)) {
      throw AlgorithmError("pipeline: more than 2(k+1) star forests");
    }
    r.decomposition = std::move(d);
    return r;
  }
  r.route = "assignment";
  r.auxiliary = auxiliary_graph(g, k);
  KCAssignmentOptions ko;
  ko.seed = opts.seed;
  ko.max_tries = opts.max_tries;
  r.assignment = random_kc_assignment(r.auxiliary->orientation, k, assignment_list_size(k), ko);
  return r;
}

}  // namespace lapsum
