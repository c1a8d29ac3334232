#include <doctest.h>

#include <numeric>
#include <random>

#include "lapsum/density.hpp"
#include "lapsum/errors.hpp"
#include "lapsum/graph_source.hpp"
#include "lapsum/matching.hpp"
#include "oracles.hpp"

using namespace lapsum;

namespace {

Graph family(const std::string& name) { return make_family(parse_family(name)); }

Graph petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, e);
}

bool valid_matching(const Graph& g, const MatchingResult& m) {
  std::vector<int> used(static_cast<std::size_t>(g.order()), 0);
  for (const Edge& e : m.pairs) {
    if (!g.has_edge(e.u, e.v)) return false;
    if (used[static_cast<std::size_t>(e.u)]++ || used[static_cast<std::size_t>(e.v)]++) return false;
    if (m.mate[static_cast<std::size_t>(e.u)] != e.v || m.mate[static_cast<std::size_t>(e.v)] != e.u) return false;
  }
  return static_cast<int>(m.pairs.size()) == m.nu;
}

}  // namespace

TEST_CASE("matching number examples") {
  CHECK(maximum_matching(family("complete:4")).nu == 2);
  CHECK(maximum_matching(family("cycle:5")).nu == 2);
  const MatchingResult p = maximum_matching(petersen());
  CHECK(p.nu == 5);
  CHECK(valid_matching(petersen(), p));
  CHECK(maximum_matching(Graph(4)).nu == 0);
  CHECK(matching_number(family("complete:5")) == 2);
  const std::vector<char> excluded{1, 0, 0, 0, 0};
  CHECK(matching_number(family("path:5"), excluded) == 2);
}

TEST_CASE("blossom agrees with brute force") {
  for (int n = 1; n <= 6; ++n) {
    GraphStream all(AllLabeledSource{n});
    while (auto g = all.next()) {
      const MatchingResult m = maximum_matching(*g);
      REQUIRE(m.nu == oracle::matching_number(*g));
      CHECK(valid_matching(*g, m));
    }
  }
  std::mt19937_64 rng(31);
  for (int i = 0; i < 2000; ++i) {
    const Graph g = oracle::random_graph(7, static_cast<double>(rng() % 10) / 10.0, rng);
    CHECK(maximum_matching(g).nu == oracle::matching_number(g));
  }
}

TEST_CASE("vertex covers") {
  CHECK(min_vertex_cover(family("star:6")) == std::vector<int>{0});
  CHECK(min_vertex_cover(family("cycle:5")).size() == 3);
  CHECK(min_vertex_cover(Graph(3)).empty());
  const std::vector<int> cov = maximal_matching_cover(family("cycle:6"));
  CHECK(is_vertex_cover(family("cycle:6"), cov));
  CHECK(cov.size() <= 6);

  std::mt19937_64 rng(2);
  for (int i = 0; i < 300; ++i) {
    const Graph g = oracle::random_graph(1 + static_cast<int>(rng() % 11), 0.35, rng);
    const std::vector<int> c = min_vertex_cover(g);
    CHECK(is_vertex_cover(g, c));
    CHECK(static_cast<int>(c.size()) == oracle::vertex_cover_number(g));
    const int nu = maximum_matching(g).nu;
    CHECK(static_cast<int>(maximal_matching_cover(g).size()) <= 2 * nu);
    std::vector<int> side;
    if (is_bipartite(g, &side)) CHECK(static_cast<int>(c.size()) == nu);
  }
  CHECK_THROWS_AS(min_vertex_cover(family("complete:40")), SizeLimitError);
}

TEST_CASE("gallai-edmonds examples") {
  const GallaiEdmonds p = gallai_edmonds(family("path:3"));
  CHECK(p.D == std::vector<int>{0, 2});
  CHECK(p.A == std::vector<int>{1});
  CHECK(p.C.empty());
  const GallaiEdmonds k4 = gallai_edmonds(family("complete:4"));
  CHECK(k4.D.empty());
  CHECK(k4.C.size() == 4);
  const GallaiEdmonds c5 = gallai_edmonds(family("cycle:5"));
  CHECK(c5.D.size() == 5);
  CHECK(c5.nu == 2);
}

TEST_CASE("gallai-edmonds sets partition the vertices") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 200; ++i) {
    const Graph g = oracle::random_graph(1 + static_cast<int>(rng() % 10), 0.3, rng);
    const GallaiEdmonds ge = gallai_edmonds(g);
    CHECK(static_cast<int>(ge.D.size() + ge.A.size() + ge.C.size()) == g.order());
    // ν = (n - c(D) + |A|) / 2 where c(D) counts components of G[D]
    const int cd = static_cast<int>(components_info(induced_subgraph(g, ge.D).graph).components.size());
    CHECK(2 * ge.nu == g.order() - cd + static_cast<int>(ge.A.size()));
  }
}

TEST_CASE("star packings") {
  const StarPacking s = nu_ell(family("star:5"), 2);
  CHECK(s.count() == 1);
  CHECK(is_valid_star_packing(family("star:5"), s));
  const Graph k38 = family("kbip:3,8");
  const StarPacking p = nu_ell(k38, 3);
  CHECK(p.count() == 2);
  CHECK(is_valid_star_packing(k38, p));
  CHECK(nu_ell(family("complete:5"), 2).count() == 1);
  CHECK(nu_ell(family("path:4"), 1).count() == 2);
  CHECK_THROWS_AS(nu_ell(family("complete:20"), 2), SizeLimitError);
}

TEST_CASE("star packings agree with brute force") {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 300; ++i) {
    const Graph g = oracle::random_graph(1 + static_cast<int>(rng() % 9), static_cast<double>(rng() % 10) / 10.0, rng);
    for (int ell = 1; ell <= 3; ++ell) {
      const StarPacking p = nu_ell(g, ell);
      CHECK(is_valid_star_packing(g, p));
      CHECK(p.count() == oracle::star_packing_number(g, ell));
    }
  }
}

TEST_CASE("star packing is bounded by partition density") {
  std::mt19937_64 rng(78);
  for (int i = 0; i < 200; ++i) {
    const Graph g = oracle::random_graph(2 + static_cast<int>(rng() % 8), 0.5, rng);
    const Rational rt = partition_density(g).value;
    for (int ell = 1; ell <= 3; ++ell) {
      // ν_ℓ <= ⌊(1 + 1/ℓ) ρ̃⌋
      const Rational bound = rt * Rational(ell + 1, ell);
      CHECK(Rational(nu_ell(g, ell).count()) <= bound);
    }
  }
}

TEST_CASE("hall violators") {
  const Graph k13 = family("star:4");  // centre 0, leaves 1..3
  const std::vector<int> centre{0};
  const HallResult ok = hall_violator(k13, centre, 3);
  CHECK(ok.saturating);
  CHECK(ok.packing.count() == 1);
  const HallResult bad = hall_violator(k13, centre, 4);
  CHECK_FALSE(bad.saturating);
  CHECK(bad.violator == centre);

  // Two centres sharing three leaves cannot both get two.
  const Graph shared(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
  const std::vector<int> a{0, 1};
  const HallResult h = hall_violator(shared, a, 2);
  CHECK_FALSE(h.saturating);
  CHECK(h.violator == a);
  CHECK(hall_violator(shared, a, 1).saturating);
}

TEST_CASE("hall violators on random bipartite graphs") {
  std::mt19937_64 rng(90);
  for (int i = 0; i < 300; ++i) {
    const int na = 1 + static_cast<int>(rng() % 5);
    const int nb = 1 + static_cast<int>(rng() % 9);
    std::vector<Edge> e;
    for (int x = 0; x < na; ++x) {
      for (int y = 0; y < nb; ++y) {
        if (rng() % 2) e.emplace_back(x, na + y);
      }
    }
    const Graph g(na + nb, e);
    std::vector<int> a(static_cast<std::size_t>(na));
    std::iota(a.begin(), a.end(), 0);
    const int ell = 1 + static_cast<int>(rng() % 3);
    const HallResult h = hall_violator(g, a, ell);
    CHECK(is_valid_star_packing(g, h.packing));
    if (h.saturating) {
      CHECK(h.packing.count() == na);
      continue;
    }
    REQUIRE_FALSE(h.violator.empty());
    std::vector<char> nbr(static_cast<std::size_t>(g.order()), 0);
    for (int v : h.violator) {
      for (int w : g.neighbors(v)) nbr[static_cast<std::size_t>(w)] = 1;
    }
    const int nsize = static_cast<int>(std::count(nbr.begin(), nbr.end(), 1));
    CHECK(nsize <= ell * static_cast<int>(h.violator.size()) - 1);
    CHECK(h.packing.count() >= na - static_cast<int>(h.violator.size()));
  }
}

TEST_CASE("odd set covers") {
  const OddSetCover k5 = odd_set_cover(family("complete:5"));
  CHECK(k5.weight() == 2);
  CHECK(verify_odd_set_cover(family("complete:5"), k5));
  const OddSetCover star = odd_set_cover(family("star:6"));
  CHECK(star.weight() == 1);
  CHECK(verify_odd_set_cover(family("star:6"), star));
  const OddSetCover p = odd_set_cover(petersen());
  CHECK(p.weight() == 5);

  OddSetCover even;
  even.odd_sets = {{0, 1}};
  std::string why;
  CHECK_FALSE(verify_odd_set_cover(family("complete:2"), even, &why));
  CHECK_FALSE(why.empty());
}

TEST_CASE("odd set cover weight equals the matching number") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 200; ++i) {
    const Graph g = oracle::random_graph(1 + static_cast<int>(rng() % 7), static_cast<double>(rng() % 10) / 10.0, rng);
    const OddSetCover c = odd_set_cover(g);
    std::string why;
    CHECK_MESSAGE(verify_odd_set_cover(g, c, &why), why);
    CHECK(c.weight() == maximum_matching(g).nu);
    CHECK(c.weight() == oracle::min_odd_set_cover_weight(g));
  }
}

TEST_CASE("normalizing odd set covers") {
  const Graph g1 = family("complete:5");
  OddSetCover raw;
  raw.odd_sets = {{0, 1, 2}, {2, 3, 4}};
  // covers K5 only partially; use the edges it does cover
  std::vector<Edge> covered;
  for (const Edge& e : g1.edges()) {
    if ((e.u <= 2 && e.v <= 2) || (e.u >= 2 && e.v >= 2)) covered.push_back(e);
  }
  const Graph bowtie(5, covered);
  const OddSetCover merged = normalize_odd_set_cover(bowtie, raw);
  CHECK(merged.odd_sets == std::vector<std::vector<int>>{{0, 1, 2, 3, 4}});
  CHECK(merged.vertices.empty());
  CHECK(merged.weight() <= raw.weight());

  std::vector<Edge> e2;
  for (int u = 0; u < 3; ++u) {
    for (int v = u + 1; v < 3; ++v) e2.emplace_back(u, v);
  }
  for (int u = 1; u < 6; ++u) {
    for (int v = u + 1; v < 6; ++v) {
      if (!(u < 3 && v < 3)) e2.emplace_back(u, v);
    }
  }
  const Graph g2(6, e2);
  OddSetCover raw2;
  raw2.odd_sets = {{0, 1, 2}, {1, 2, 3, 4, 5}};
  const OddSetCover n2 = normalize_odd_set_cover(g2, raw2);
  CHECK(n2.odd_sets == std::vector<std::vector<int>>{{0, 1, 2, 3, 4}});
  CHECK(n2.vertices == std::vector<int>{5});
  CHECK(verify_odd_set_cover(g2, n2));
  CHECK(n2.weight() <= raw2.weight());

  OddSetCover disjoint;
  disjoint.odd_sets = {{0, 1, 2}};
  disjoint.vertices = {3};
  const Graph g3(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  CHECK(normalize_odd_set_cover(g3, disjoint).odd_sets == disjoint.odd_sets);

  OddSetCover missing;
  missing.odd_sets = {{0, 1, 2}};
  CHECK_THROWS_AS(normalize_odd_set_cover(g3, missing), ContractError);
}
