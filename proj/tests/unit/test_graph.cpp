#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "lapsum/errors.hpp"
#include "lapsum/graph.hpp"
#include "lapsum/graph_source.hpp"
#include "lapsum/matching.hpp"
#include "oracles.hpp"

using namespace lapsum;

namespace {

Graph family(const char* name) { return make_family(parse_family(name)); }

}  // namespace

TEST_CASE("graph rejects loops, duplicates and out-of-range endpoints") {
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), ContractError);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), ContractError);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), ContractError);
  const Graph g(4, {{2, 3}, {0, 1}, {1, 2}});
  CHECK(g.size() == 3);
  CHECK(g.edges().front() == Edge(0, 1));
  CHECK(g.has_edge(2, 1));
  CHECK_FALSE(g.has_edge(0, 3));
  CHECK(g.edge_index(1, 2) == 1);
  CHECK(g.edge_index(0, 3) == -1);
  CHECK(g.max_degree() == 2);
}

TEST_CASE("graph6 small cases") {
  const Graph k2 = parse_graph6("A_");
  CHECK(k2.order() == 2);
  CHECK(k2.size() == 1);
  const Graph k3 = parse_graph6("Bw");
  CHECK(k3 == family("complete:3"));
  CHECK(parse_graph6("?").order() == 0);
  CHECK(encode_graph6(family("complete:2")) == "A_");
  CHECK(encode_graph6(family("complete:3")) == "Bw");
  CHECK(encode_graph6(Graph(0)) == "?");
  CHECK(encode_graph6(family("complete:3")) == oracle::graph6(family("complete:3")));
}

TEST_CASE("graph6 errors carry byte offsets") {
  try {
    parse_graph6("~");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 0);
  }
  CHECK_THROWS_AS(parse_graph6("B"), ParseError);       // body missing
  CHECK_THROWS_AS(parse_graph6("Bww"), ParseError);     // too long
  try {
    parse_graph6("B\x7f");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 1);
  }
  try {
    parse_graph6("Bx");  // padding bit set
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 1);
  }
  CHECK_THROWS_AS(encode_graph6(Graph(63)), SizeLimitError);
}

TEST_CASE("graph6 round trip on random graphs") {
  std::mt19937_64 rng(20240611);
  for (int i = 0; i < 1000; ++i) {
    const int n = static_cast<int>(rng() % 31);
    const Graph g = oracle::random_graph(n, 0.3, rng);
    const std::string text = encode_graph6(g);
    CHECK(text == oracle::graph6(g));
    CHECK(parse_graph6(text) == g);
  }
}

TEST_CASE("components and n prime") {
  const Graph u = disjoint_union(family("complete:3"), family("complete:2"));
  const ComponentsInfo ci = components_info(u);
  REQUIRE(ci.components.size() == 2);
  CHECK(ci.components[0] == std::vector<int>{0, 1, 2});
  CHECK(ci.components[1] == std::vector<int>{3, 4});
  CHECK(ci.n_prime == 3);
  CHECK(components_info(Graph(4)).components.size() == 4);
  CHECK(components_info(Graph(4)).n_prime == 1);
  CHECK(components_info(family("cycle:5")).n_prime == 5);
  CHECK(components_info(Graph(0)).n_prime == 0);
}

TEST_CASE("components partition the vertices and contain every edge") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const Graph g = oracle::random_graph(1 + static_cast<int>(rng() % 12), 0.15, rng);
    const ComponentsInfo ci = components_info(g);
    std::vector<int> where(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t c = 0; c < ci.components.size(); ++c) {
      for (int v : ci.components[c]) {
        CHECK(where[static_cast<std::size_t>(v)] == -1);
        where[static_cast<std::size_t>(v)] = static_cast<int>(c);
      }
    }
    for (int w : where) CHECK(w >= 0);
    for (const Edge& e : g.edges()) CHECK(where[static_cast<std::size_t>(e.u)] == where[static_cast<std::size_t>(e.v)]);
  }
}

TEST_CASE("induced subgraphs") {
  const std::vector<int> three{0, 2, 3};
  CHECK(induced_subgraph(family("complete:4"), three).graph == family("complete:3"));
  CHECK(induced_subgraph(family("complete:4"), {}).graph.order() == 0);
  const std::vector<int> arc{0, 1, 2};
  const InducedSubgraph p = induced_subgraph(family("cycle:5"), arc);
  CHECK(p.graph == family("path:3"));
  CHECK(p.to_parent == arc);
  const std::vector<int> bad{7};
  CHECK_THROWS_AS(induced_subgraph(family("cycle:5"), bad), ContractError);
}

TEST_CASE("conjugate degrees") {
  CHECK(conjugate_degrees(family("star:4")) == std::vector<int>{4, 1, 1, 0});
  CHECK(conjugate_degrees(family("complete:3")) == std::vector<int>{3, 3, 0});
  CHECK(conjugate_degrees(Graph(3)) == std::vector<int>{0, 0, 0});
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const Graph g = oracle::random_graph(1 + static_cast<int>(rng() % 10), 0.4, rng);
    const auto d = conjugate_degrees(g);
    int sum = 0;
    for (std::size_t j = 0; j < d.size(); ++j) {
      sum += d[j];
      if (j > 0) CHECK(d[j] <= d[j - 1]);
    }
    CHECK(sum == 2 * g.size());
  }
}

TEST_CASE("named families") {
  CHECK(family("split:4,4") == family("complete:4"));
  CHECK(family("split:4,1") == family("star:4"));
  const Graph kb = family("complete-bipartite:3,5");
  CHECK(kb.size() == 15);
  std::vector<int> side;
  REQUIRE(is_bipartite(kb, &side));
  CHECK(std::count(side.begin(), side.end(), side[0]) == 3);
  CHECK(family("kbip:3,5") == kb);
  CHECK(family("path:4").size() == 3);
  CHECK(family("cycle:5").size() == 5);
  CHECK(family("empty:3").size() == 0);
  CHECK_THROWS_AS(parse_family("split:3,4"), ContractError);
  CHECK_THROWS_AS(parse_family("wheel:5"), ParseError);
  CHECK(parse_family("split:6,2").str() == "split:6,2");
  for (int k = 1; k <= 4; ++k) {
    for (int n = k; n <= 6; ++n) {
      const Graph g = make_family({FamilyKind::kCompleteBipartite, k, n});
      CHECK(static_cast<int>(min_vertex_cover(g).size()) == k);
    }
  }
}

TEST_CASE("family ranges expand as a cartesian product") {
  const auto odd = parse_family_list("complete:3|5|7|9");
  REQUIRE(odd.size() == 4);
  CHECK(odd[2].a == 7);
  CHECK(parse_family_list("star:2..10").size() == 9);
  // r > n combinations are dropped
  CHECK(parse_family_list("split:2..3,1..3").size() == 5);
}

TEST_CASE("graph streams") {
  auto count = [](GraphSource src) {
    GraphStream s(std::move(src));
    int c = 0;
    while (s.next()) ++c;
    return c;
  };
  CHECK(count(AllLabeledSource{3}) == 8);
  CHECK(count(AllLabeledSource{4}) == 64);
  CHECK_THROWS_AS(GraphStream(AllLabeledSource{8}), SizeLimitError);
  GraphStream zero(GnpSource{10, 0.0, 5, 1});
  while (auto g = zero.next()) CHECK(g->size() == 0);

  GraphStream a(GnpSource{12, 0.5, 20, 99});
  GraphStream b(GnpSource{12, 0.5, 20, 99});
  for (int i = 0; i < 20; ++i) CHECK(*a.next() == *b.next());

  // All labeled graphs on 4 vertices are distinct.
  std::set<std::string> seen;
  GraphStream all(AllLabeledSource{4});
  while (auto g = all.next()) seen.insert(encode_graph6(*g));
  CHECK(seen.size() == 64);
}

TEST_CASE("graph6 files: header, skipped lines and strict mode") {
  const std::string path = "lapsum_test_stream.g6";
  {
    std::ofstream f(path);
    f << ">>graph6<<Bw\n\nA_\nnot-a-graph\n?\n";
  }
  GraphStream loose(Graph6FileSource{path, false});
  int count = 0;
  while (loose.next()) ++count;
  CHECK(count == 3);
  REQUIRE(loose.issues().size() == 1);
  CHECK(loose.issues()[0].line == 4);

  GraphStream strict(Graph6FileSource{path, true});
  try {
    while (strict.next()) {
    }
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
  std::remove(path.c_str());
}

TEST_CASE("edge list text round trip") {
  const Graph g = family("cycle:5");
  std::stringstream ss;
  write_edge_list(ss, g);
  CHECK(read_edge_list(ss) == g);
  std::stringstream bad("3 2\n0 1\n");
  try {
    read_edge_list(bad);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() >= 2);
  }
}

TEST_CASE("labeled enumeration order uses graph6 pair order") {
  // bit 0 = (0,1), bit 1 = (0,2), bit 2 = (1,2)
  CHECK(graph_from_mask(3, 0b100) == Graph(3, {{1, 2}}));
  CHECK(graph_from_mask(3, 0b010) == Graph(3, {{0, 2}}));
}
