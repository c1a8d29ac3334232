#include "lapsum/matching.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <queue>

#include "lapsum/errors.hpp"
#include "lapsum/flow.hpp"

namespace lapsum {

namespace {

using Index = std::size_t;

inline Index ix(int v) { return static_cast<Index>(v); }

class Blossom {
 public:
  Blossom(const Graph& g, std::span<const char> excluded)
      : g_(g),
        n_(g.order()),
        excluded_(excluded),
        match_(ix(n_), -1),
        parent_(ix(n_), -1),
        base_(ix(n_), 0),
        used_(ix(n_), 0),
        in_blossom_(ix(n_), 0) {}

  void run() {
    for (int root = 0; root < n_; ++root) {
      if (match_[ix(root)] != -1 || is_excluded(root)) continue;
      int v = find_path(root);
      while (v != -1) {
        const int pv = parent_[ix(v)];
        const int ppv = match_[ix(pv)];
        match_[ix(v)] = pv;
        match_[ix(pv)] = v;
        v = ppv;
      }
    }
  }

  const std::vector<int>& mate() const { return match_; }

 private:
  bool is_excluded(int v) const { return !excluded_.empty() && excluded_[ix(v)]; }

  int lca(int a, int b) {
    std::vector<char> seen(ix(n_), 0);
    for (;;) {
      a = base_[ix(a)];
      seen[ix(a)] = 1;
      if (match_[ix(a)] == -1) break;
      a = parent_[ix(match_[ix(a)])];
    }
    for (;;) {
      b = base_[ix(b)];
      if (seen[ix(b)]) return b;
      b = parent_[ix(match_[ix(b)])];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[ix(v)] != b) {
      in_blossom_[ix(base_[ix(v)])] = 1;
      in_blossom_[ix(base_[ix(match_[ix(v)])])] = 1;
      parent_[ix(v)] = child;
      child = match_[ix(v)];
      v = parent_[ix(match_[ix(v)])];
    }
  }

  int find_path(int root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (int i = 0; i < n_; ++i) base_[ix(i)] = i;
    used_[ix(root)] = 1;
    std::vector<int> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      for (int to : g_.neighbors(v)) {
        if (is_excluded(to)) continue;
        if (base_[ix(v)] == base_[ix(to)] || match_[ix(v)] == to) continue;
        if (to == root || (match_[ix(to)] != -1 && parent_[ix(match_[ix(to)])] != -1)) {
          const int cur = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i) {
            if (in_blossom_[ix(base_[ix(i)])]) {
              base_[ix(i)] = cur;
              if (!used_[ix(i)]) {
                used_[ix(i)] = 1;
                queue.push_back(i);
              }
            }
          }
        } else if (parent_[ix(to)] == -1) {
          parent_[ix(to)] = v;
          if (match_[ix(to)] == -1) return to;
          const int next = match_[ix(to)];
          used_[ix(next)] = 1;
          queue.push_back(next);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  int n_;
  std::span<const char> excluded_;
  std::vector<int> match_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<char> used_;
  std::vector<char> in_blossom_;
};

}  // namespace

MatchingResult maximum_matching(const Graph& g) {
  Blossom b(g, {});
  b.run();
  MatchingResult r;
  r.mate = b.mate();
  for (int v = 0; v < g.order(); ++v) {
    const int w = r.mate[ix(v)];
    if (w > v) r.pairs.emplace_back(v, w);
  }
  r.nu = static_cast<int>(r.pairs.size());
  return r;
}

int matching_number(const Graph& g, std::span<const char> excluded) {
  Blossom b(g, excluded);
  b.run();
  int matched = 0;
  for (int w : b.mate()) matched += w >= 0 ? 1 : 0;
  return matched / 2;
}

std::vector<int> maximal_matching_cover(const Graph& g) {
  std::vector<char> used(ix(g.order()), 0);
  std::vector<int> cover;
  for (const Edge& e : g.edges()) {
    if (!used[ix(e.u)] && !used[ix(e.v)]) {
      used[ix(e.u)] = used[ix(e.v)] = 1;
      cover.push_back(e.u);
      cover.push_back(e.v);
    }
  }
  std::sort(cover.begin(), cover.end());
  return cover;
}

bool is_vertex_cover(const Graph& g, std::span<const int> cover) {
  std::vector<char> in(ix(g.order()), 0);
  for (int v : cover) {
    if (v < 0 || v >= g.order()) return false;
    in[ix(v)] = 1;
  }
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return in[ix(e.u)] || in[ix(e.v)]; });
}

// ---------------------------------------------------------------------------
// Minimum vertex cover

namespace {

class CoverSearch {
 public:
  explicit CoverSearch(const Graph& g) : g_(g), removed_(ix(g.order()), 0) {}

  std::vector<int> solve() {
    best_ = maximal_matching_cover(g_);
    recurse();
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  int live_degree(int v) const {
    int d = 0;
    for (int w : g_.neighbors(v)) d += removed_[ix(w)] ? 0 : 1;
    return d;
  }

  int matching_lower_bound() const {
    std::vector<char> used(removed_);
    int size = 0;
    for (const Edge& e : g_.edges()) {
      if (!used[ix(e.u)] && !used[ix(e.v)]) {
        used[ix(e.u)] = used[ix(e.v)] = 1;
        ++size;
      }
    }
    return size;
  }

  void take(int v) {
    removed_[ix(v)] = 1;
    current_.push_back(v);
  }
  void untake(int v) {
    removed_[ix(v)] = 0;
    current_.pop_back();
  }

  void recurse() {
    if (current_.size() + static_cast<std::size_t>(matching_lower_bound()) >= best_.size()) return;
    int pick = -1;
    int pick_degree = 0;
    for (int v = 0; v < g_.order(); ++v) {
      if (removed_[ix(v)]) continue;
      const int d = live_degree(v);
      if (d > pick_degree) {
        pick = v;
        pick_degree = d;
      }
    }
    if (pick < 0) {
      best_ = current_;
      return;
    }
    take(pick);
    recurse();
    untake(pick);

    std::vector<int> nbrs;
    for (int w : g_.neighbors(pick)) {
      if (!removed_[ix(w)]) nbrs.push_back(w);
    }
    removed_[ix(pick)] = 1;  // pick stays out of the cover in this branch
    for (int w : nbrs) take(w);
    recurse();
    for (auto it = nbrs.rbegin(); it != nbrs.rend(); ++it) untake(*it);
    removed_[ix(pick)] = 0;
  }

  const Graph& g_;
  std::vector<char> removed_;
  std::vector<int> current_;
  std::vector<int> best_;
};

}  // namespace

std::vector<int> min_vertex_cover(const Graph& g) {
  const int nu = matching_number(g);
  if (nu > kVertexCoverNuLimit) {
    throw SizeLimitError("min_vertex_cover: nu=" + std::to_string(nu) + " exceeds exact limit " +
                         std::to_string(kVertexCoverNuLimit));
  }
  std::vector<int> cover = CoverSearch(g).solve();
  if (!is_vertex_cover(g, cover) || static_cast<int>(cover.size()) < nu ||
      static_cast<int>(cover.size()) > 2 * nu) {
    throw AlgorithmError("min_vertex_cover: result violates nu <= tau <= 2nu");
  }
  return cover;
}

// ---------------------------------------------------------------------------
// Gallai-Edmonds

GallaiEdmonds gallai_edmonds(const Graph& g) {
  const int n = g.order();
  GallaiEdmonds ge;
  ge.nu = matching_number(g);
  std::vector<char> excluded(ix(n), 0);
  std::vector<char> in_d(ix(n), 0);
  for (int v = 0; v < n; ++v) {
    excluded[ix(v)] = 1;
    if (matching_number(g, excluded) == ge.nu) {
      in_d[ix(v)] = 1;
      ge.D.push_back(v);
    }
    excluded[ix(v)] = 0;
  }
  std::vector<char> in_a(ix(n), 0);
  for (int v : ge.D) {
    for (int w : g.neighbors(v)) {
      if (!in_d[ix(w)]) in_a[ix(w)] = 1;
    }
  }
  for (int v = 0; v < n; ++v) {
    if (in_a[ix(v)]) {
      ge.A.push_back(v);
    } else if (!in_d[ix(v)]) {
      ge.C.push_back(v);
    }
  }

  // Invariants: factor-critical D-components, the ν formula, and a perfect
  // matching on G[C].
  const ComponentsInfo d_parts = components_info(induced_subgraph(g, ge.D).graph);
  long long formula = static_cast<long long>(ge.A.size());
  const InducedSubgraph gd = induced_subgraph(g, ge.D);
  for (const auto& comp : d_parts.components) {
    if (comp.size() % 2 == 0) throw AlgorithmError("gallai_edmonds: even component in G[D]");
    const InducedSubgraph part = induced_subgraph(gd.graph, comp);
    std::vector<char> drop(ix(part.graph.order()), 0);
    for (int w = 0; w < part.graph.order(); ++w) {
      drop[ix(w)] = 1;
      if (2 * matching_number(part.graph, drop) != part.graph.order() - 1) {
        throw AlgorithmError("gallai_edmonds: component of G[D] is not factor-critical");
      }
      drop[ix(w)] = 0;
    }
    formula += static_cast<long long>((comp.size() - 1) / 2);
  }
  const Graph gc = induced_subgraph(g, ge.C).graph;
  if (2 * matching_number(gc) != gc.order()) {
    throw AlgorithmError("gallai_edmonds: G[C] has no perfect matching");
  }
  formula += static_cast<long long>(ge.C.size() / 2);
  if (formula != ge.nu) throw AlgorithmError("gallai_edmonds: matching formula mismatch");
  return ge;
}

// ---------------------------------------------------------------------------
// Star packings

bool is_valid_star_packing(const Graph& g, const StarPacking& p) {
  std::vector<char> used(ix(g.order()), 0);
  auto claim = [&](int v) {
    if (v < 0 || v >= g.order() || used[ix(v)]) return false;
    used[ix(v)] = 1;
    return true;
  };
  for (const Star& s : p.stars) {
    if (static_cast<int>(s.leaves.size()) != p.ell) return false;
    if (!claim(s.center)) return false;
    for (int leaf : s.leaves) {
      if (!claim(leaf) || !g.has_edge(s.center, leaf)) return false;
    }
  }
  return true;
}

namespace {

class StarSearch {
 public:
  StarSearch(const Graph& g, int ell) : n_(g.order()), ell_(ell), adj_(ix(g.order()), 0) {
    for (const Edge& e : g.edges()) {
      adj_[ix(e.u)] |= 1U << e.v;
      adj_[ix(e.v)] |= 1U << e.u;
    }
  }

  std::vector<Star> solve() {
    const std::uint32_t all = n_ == 0 ? 0 : (n_ == 32 ? ~0U : (1U << n_) - 1);
    recurse(all);
    return best_;
  }

 private:
  void consider() {
    if (current_.size() > best_.size()) best_ = current_;
  }

  // Choose `need` leaves for `center` from `pool`, then continue with `avail`.
  void choose_leaves(int center, std::uint32_t pool, int need, std::uint32_t avail,
                     std::vector<int>& leaves) {
    if (need == 0) {
      current_.push_back({center, leaves});
      std::sort(current_.back().leaves.begin(), current_.back().leaves.end());
      recurse(avail);
      current_.pop_back();
      return;
    }
    if (std::popcount(pool) < need) return;
    const int low = std::countr_zero(pool);
    const std::uint32_t bit = 1U << low;
    leaves.push_back(low);
    choose_leaves(center, pool & ~bit, need - 1, avail & ~bit, leaves);
    leaves.pop_back();
    choose_leaves(center, pool & ~bit, need, avail, leaves);
  }

  void recurse(std::uint32_t avail) {
    consider();
    const int room = std::popcount(avail) / (ell_ + 1);
    if (static_cast<int>(current_.size()) + room <= static_cast<int>(best_.size())) return;
    if (avail == 0) return;
    const int v = std::countr_zero(avail);
    const std::uint32_t vbit = 1U << v;
    const std::uint32_t rest = avail & ~vbit;
    std::vector<int> leaves;
    // v as a centre.
    choose_leaves(v, adj_[ix(v)] & rest, ell_, rest, leaves);
    // v as a leaf of some centre c.
    for (std::uint32_t cands = adj_[ix(v)] & rest; cands != 0; cands &= cands - 1) {
      const int c = std::countr_zero(cands);
      const std::uint32_t cbit = 1U << c;
      leaves.assign(1, v);
      choose_leaves(c, adj_[ix(c)] & rest & ~cbit, ell_ - 1, rest & ~cbit, leaves);
    }
    // v unused.
    recurse(rest);
  }

  int n_;
  int ell_;
  std::vector<std::uint32_t> adj_;
  std::vector<Star> current_;
  std::vector<Star> best_;
};

}  // namespace

StarPacking nu_ell(const Graph& g, int ell) {
  if (ell < 1) throw ContractError("nu_ell: ell must be positive");
  StarPacking p;
  p.ell = ell;
  if (ell == 1) {
    for (const Edge& e : maximum_matching(g).pairs) p.stars.push_back({e.u, {e.v}});
    return p;
  }
  if (g.order() > kStarPackingExactLimit) {
    throw SizeLimitError("nu_ell: n=" + std::to_string(g.order()) + " exceeds exact limit " +
                         std::to_string(kStarPackingExactLimit));
  }
  p.stars = StarSearch(g, ell).solve();
  std::sort(p.stars.begin(), p.stars.end(),
            [](const Star& a, const Star& b) { return a.center < b.center; });
  if (!is_valid_star_packing(g, p)) throw AlgorithmError("nu_ell: invalid packing");
  return p;
}

// ---------------------------------------------------------------------------
// Hall violators for ℓ-star forests centred on one side

namespace {

// Max-flow b-matching: each a in `centers` gets up to ell leaves among
// `allowed` leaves (adjacent, distinct).
struct CenteredFlow {
  FlowResult flow;
  std::vector<std::pair<int, int>> middle;  // (arc index, a, b) flattened below
  std::vector<int> middle_a;
  std::vector<int> middle_b;
  std::vector<int> middle_arc;
  int source = 0;
  int node_base = 2;
};

CenteredFlow run_centered_flow(const Graph& g, std::span<const int> centers,
                               std::span<const char> allowed_leaf, int ell) {
  CenteredFlow cf;
  const int n = g.order();
  FlowNetwork net(2 + n, 0, 1);
  const Rational inf(static_cast<std::int64_t>(ell) * static_cast<std::int64_t>(centers.size()) + 1);
  std::vector<char> is_center(ix(n), 0);
  for (int a : centers) is_center[ix(a)] = 1;
  for (int a : centers) {
    net.add_arc(0, 2 + a, Rational(ell));
    for (int b : g.neighbors(a)) {
      if (is_center[ix(b)] || !allowed_leaf[ix(b)]) continue;
      cf.middle_arc.push_back(net.add_arc(2 + a, 2 + b, inf));
      cf.middle_a.push_back(a);
      cf.middle_b.push_back(b);
    }
  }
  for (int b = 0; b < n; ++b) {
    if (!is_center[ix(b)] && allowed_leaf[ix(b)]) net.add_arc(2 + b, 1, Rational(1));
  }
  cf.flow = max_flow(net);
  return cf;
}

StarPacking packing_from_flow(const CenteredFlow& cf, std::span<const int> centers, int ell) {
  StarPacking p;
  p.ell = ell;
  std::vector<std::vector<int>> leaves;
  std::vector<int> order(centers.begin(), centers.end());
  std::sort(order.begin(), order.end());
  for (int a : order) {
    Star s{a, {}};
    for (std::size_t i = 0; i < cf.middle_arc.size(); ++i) {
      if (cf.middle_a[i] == a && cf.flow.arc_flow[ix(cf.middle_arc[i])] > Rational(0)) {
        s.leaves.push_back(cf.middle_b[i]);
      }
    }
    std::sort(s.leaves.begin(), s.leaves.end());
    s.leaves.resize(std::min(s.leaves.size(), static_cast<std::size_t>(ell)));
    if (static_cast<int>(s.leaves.size()) == ell) p.stars.push_back(std::move(s));
  }
  return p;
}

}  // namespace

HallResult hall_violator(const Graph& g, std::span<const int> side_a, int ell) {
  if (ell < 1) throw ContractError("hall_violator: ell must be positive");
  const int n = g.order();
  std::vector<char> in_a(ix(n), 0);
  for (int a : side_a) {
    if (a < 0 || a >= n || in_a[ix(a)]) throw ContractError("hall_violator: invalid side A");
    in_a[ix(a)] = 1;
  }
  for (const Edge& e : g.edges()) {
    if (in_a[ix(e.u)] == in_a[ix(e.v)]) {
      throw ContractError("hall_violator: edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                          "} does not cross the bipartition");
    }
  }
  std::vector<int> a_sorted(side_a.begin(), side_a.end());
  std::sort(a_sorted.begin(), a_sorted.end());
  std::vector<char> all_leaves(ix(n), 1);

  HallResult out;
  const CenteredFlow full = run_centered_flow(g, a_sorted, all_leaves, ell);
  const Rational target(static_cast<std::int64_t>(ell) * static_cast<std::int64_t>(a_sorted.size()));
  if (full.flow.value == target) {
    out.saturating = true;
    out.packing = packing_from_flow(full, a_sorted, ell);
    if (out.packing.count() != static_cast<int>(a_sorted.size()) || !is_valid_star_packing(g, out.packing)) {
      throw AlgorithmError("hall_violator: saturating flow did not give a packing");
    }
    return out;
  }

  // Inclusion-maximal maximum-deficiency set: A-vertices that cannot reach the
  // sink in the residual graph.
  for (int a : a_sorted) {
    if (full.flow.max_source_side[ix(2 + a)]) out.violator.push_back(a);
  }
  std::vector<char> in_violator(ix(n), 0);
  for (int a : out.violator) in_violator[ix(a)] = 1;
  std::vector<char> allowed(ix(n), 1);
  int neighborhood = 0;
  for (int a : out.violator) {
    for (int b : g.neighbors(a)) {
      if (allowed[ix(b)]) {
        allowed[ix(b)] = 0;
        ++neighborhood;
      }
    }
  }
  if (out.violator.empty() ||
      neighborhood > ell * static_cast<int>(out.violator.size()) - 1) {
    throw AlgorithmError("hall_violator: min cut did not give a deficient set");
  }
  std::vector<int> rest;
  for (int a : a_sorted) {
    if (!in_violator[ix(a)]) rest.push_back(a);
  }
  const CenteredFlow partial = run_centered_flow(g, rest, allowed, ell);
  out.packing = packing_from_flow(partial, rest, ell);
  if (out.packing.count() != static_cast<int>(rest.size()) || !is_valid_star_packing(g, out.packing)) {
    throw AlgorithmError("hall_violator: remainder of A is not saturable");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Odd set covers

int OddSetCover::weight() const noexcept {
  int w = static_cast<int>(vertices.size());
  for (const auto& s : odd_sets) w += static_cast<int>((s.size() - 1) / 2);
  return w;
}

namespace {

bool covers_all_edges(const Graph& g, const OddSetCover& c, std::string* reason) {
  const int n = g.order();
  std::vector<char> is_vertex(ix(n), 0);
  for (int v : c.vertices) {
    if (v < 0 || v >= n) {
      if (reason) *reason = "cover vertex out of range";
      return false;
    }
    is_vertex[ix(v)] = 1;
  }
  std::vector<std::vector<char>> membership;
  membership.reserve(c.odd_sets.size());
  for (const auto& s : c.odd_sets) {
    if (s.size() % 2 == 0) {
      if (reason) *reason = "odd set of even size";
      return false;
    }
    std::vector<char> in(ix(n), 0);
    for (int v : s) {
      if (v < 0 || v >= n) {
        if (reason) *reason = "odd set vertex out of range";
        return false;
      }
      in[ix(v)] = 1;
    }
    membership.push_back(std::move(in));
  }
  for (const Edge& e : g.edges()) {
    if (is_vertex[ix(e.u)] || is_vertex[ix(e.v)]) continue;
    const bool inside = std::any_of(membership.begin(), membership.end(),
                                    [&](const auto& in) { return in[ix(e.u)] && in[ix(e.v)]; });
    if (!inside) {
      if (reason) *reason = "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} uncovered";
      return false;
    }
  }
  return true;
}

void build_cover(const Graph& h, const std::vector<int>& label, OddSetCover& out) {
  if (h.size() == 0) return;
  const GallaiEdmonds ge = gallai_edmonds(h);
  for (int a : ge.A) out.vertices.push_back(label[ix(a)]);
  const InducedSubgraph gd = induced_subgraph(h, ge.D);
  for (const auto& comp : components_info(gd.graph).components) {
    if (comp.size() < 3) continue;  // singletons cover nothing
    std::vector<int> set;
    for (int local : comp) set.push_back(label[ix(gd.to_parent[ix(local)])]);
    std::sort(set.begin(), set.end());
    out.odd_sets.push_back(std::move(set));
  }
  if (ge.C.empty()) return;
  // G[C] is perfectly matchable: its smallest vertex joins the cover and the
  // remainder recurses with ν one lower.
  out.vertices.push_back(label[ix(ge.C.front())]);
  std::vector<int> rest(ge.C.begin() + 1, ge.C.end());
  const InducedSubgraph sub = induced_subgraph(h, rest);
  std::vector<int> sub_label;
  sub_label.reserve(sub.to_parent.size());
  for (int v : sub.to_parent) sub_label.push_back(label[ix(v)]);
  build_cover(sub.graph, sub_label, out);
}

}  // namespace

bool verify_odd_set_cover(const Graph& g, const OddSetCover& cover, std::string* reason) {
  if (!covers_all_edges(g, cover, reason)) return false;
  std::vector<char> seen(ix(g.order()), 0);
  for (const auto& s : cover.odd_sets) {
    for (int v : s) {
      if (seen[ix(v)]) {
        if (reason) *reason = "odd sets overlap at vertex " + std::to_string(v);
        return false;
      }
      seen[ix(v)] = 1;
    }
  }
  return true;
}

OddSetCover odd_set_cover(const Graph& g) {
  OddSetCover out;
  std::vector<int> label(ix(g.order()));
  for (int v = 0; v < g.order(); ++v) label[ix(v)] = v;
  build_cover(g, label, out);
  std::sort(out.vertices.begin(), out.vertices.end());
  std::sort(out.odd_sets.begin(), out.odd_sets.end());
  std::string reason;
  if (!verify_odd_set_cover(g, out, &reason)) throw AlgorithmError("odd_set_cover: " + reason);
  if (out.weight() != matching_number(g)) throw AlgorithmError("odd_set_cover: weight differs from nu");
  return out;
}

OddSetCover normalize_odd_set_cover(const Graph& g, OddSetCover raw) {
  std::string reason;
  for (auto& s : raw.odd_sets) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  if (!covers_all_edges(g, raw, &reason)) throw ContractError("normalize_odd_set_cover: " + reason);
  const int input_weight = raw.weight();

  auto intersects = [](const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] == b[j]) return true;
      a[i] < b[j] ? ++i : ++j;
    }
    return false;
  };

  bool merged = true;
  while (merged) {
    merged = false;
    for (std::size_t i = 0; i < raw.odd_sets.size() && !merged; ++i) {
      for (std::size_t j = i + 1; j < raw.odd_sets.size() && !merged; ++j) {
        if (!intersects(raw.odd_sets[i], raw.odd_sets[j])) continue;
        std::vector<int> uni;
        std::set_union(raw.odd_sets[i].begin(), raw.odd_sets[i].end(), raw.odd_sets[j].begin(),
                       raw.odd_sets[j].end(), std::back_inserter(uni));
        if (uni.size() % 2 == 0) {
          raw.vertices.push_back(uni.back());
          uni.pop_back();
        }
        raw.odd_sets.erase(raw.odd_sets.begin() + static_cast<std::ptrdiff_t>(j));
        raw.odd_sets[i] = std::move(uni);
        merged = true;
      }
    }
  }
  std::sort(raw.vertices.begin(), raw.vertices.end());
  raw.vertices.erase(std::unique(raw.vertices.begin(), raw.vertices.end()), raw.vertices.end());
  if (!verify_odd_set_cover(g, raw, &reason)) throw AlgorithmError("normalize_odd_set_cover: " + reason);
  if (raw.weight() > input_weight) throw AlgorithmError("normalize_odd_set_cover: weight increased");
  return raw;
}

}  // namespace lapsum
