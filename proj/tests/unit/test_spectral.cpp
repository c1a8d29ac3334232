#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "lapsum/errors.hpp"
#include "lapsum/graph.hpp"
#include "lapsum/graph_source.hpp"
#include "lapsum/spectral.hpp"
#include "oracles.hpp"

#ifdef LAPSUM_HAVE_EIGEN
#include <Eigen/Dense>
#endif

using namespace lapsum;

namespace {

Graph family(const std::string& name) { return make_family(parse_family(name)); }

std::vector<double> reference_spectrum(const Graph& g) {
#ifdef LAPSUM_HAVE_EIGEN
  const int n = g.order();
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
  for (const Edge& e : g.edges()) {
    l(e.u, e.u) += 1;
    l(e.v, e.v) += 1;
    l(e.u, e.v) = l(e.v, e.u) = -1;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(l, Eigen::EigenvaluesOnly);
  std::vector<double> v(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  std::sort(v.rbegin(), v.rend());
  return v;
#else
  return spectrum(g).values;
#endif
}

}  // namespace

TEST_CASE("laplacian entries") {
  const SymmetricMatrix k2 = laplacian(family("complete:2"));
  CHECK(k2.data == std::vector<double>{1, -1, -1, 1});
  const SymmetricMatrix empty = laplacian(Graph(3));
  CHECK(std::all_of(empty.data.begin(), empty.data.end(), [](double x) { return x == 0.0; }));
  const SymmetricMatrix p = laplacian(family("path:3"));
  CHECK(p.at(0, 0) == 1);
  CHECK(p.at(1, 1) == 2);
  CHECK(p.at(2, 2) == 1);
  CHECK(p.at(0, 1) == -1);
  CHECK(p.at(1, 2) == -1);
  CHECK(p.at(0, 2) == 0);
}

TEST_CASE("star and complete graph spectra") {
  for (int n = 2; n <= 9; ++n) {
    const Spectrum s = spectrum(family("star:" + std::to_string(n)));
    CHECK(s.values.front() == doctest::Approx(n).epsilon(1e-12));
    for (int i = 1; i + 1 < n; ++i) CHECK(std::abs(s.values[static_cast<std::size_t>(i)] - 1.0) < 1e-9);
    CHECK(std::abs(s.values.back()) < 1e-9);
  }
  for (int n = 3; n <= 8; ++n) {
    const Spectrum s = spectrum(family("complete:" + std::to_string(n)));
    for (int i = 0; i + 1 < n; ++i) CHECK(std::abs(s.values[static_cast<std::size_t>(i)] - n) < 1e-9);
    CHECK(std::abs(s.values.back()) < 1e-9);
  }
  CHECK_THROWS_AS(spectrum(Graph(0)), ContractError);
}

TEST_CASE("jacobi agrees with a reference eigensolver") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const int n = 1 + static_cast<int>(rng() % 30);
    const double p = 0.1 + static_cast<double>(rng() % 9) / 10.0;
    const Graph g = oracle::random_graph(n, p, rng);
    const auto ours = spectrum(g).values;
    const auto ref = reference_spectrum(g);
    REQUIRE(ours.size() == ref.size());
    for (std::size_t j = 0; j < ours.size(); ++j) CHECK(std::abs(ours[j] - ref[j]) < 1e-9);
  }
}

TEST_CASE("spectrum invariants on random graphs") {
  std::mt19937_64 rng(500);
  for (int i = 0; i < 500; ++i) {
    const int n = 1 + static_cast<int>(rng() % 40);
    const double p = static_cast<double>(rng() % 100) / 100.0;
    const Graph g = oracle::random_graph(n, p, rng);
    const Spectrum s = spectrum(g);
    double sum = 0;
    for (double x : s.values) sum += x;
    CHECK(std::abs(sum - 2.0 * g.size()) <= 1e-7);
    CHECK(s.largest() <= components_info(g).n_prime + 1e-7);
    CHECK(s.values.back() >= -1e-9);
    CHECK(std::abs(s.values.back()) <= 1e-9);
  }
}

TEST_CASE("disjoint union spectrum is the multiset union") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 100; ++i) {
    const Graph a = oracle::random_graph(1 + static_cast<int>(rng() % 12), 0.5, rng);
    const Graph b = oracle::random_graph(1 + static_cast<int>(rng() % 12), 0.3, rng);
    std::vector<double> merged = spectrum(a).values;
    const auto sb = spectrum(b).values;
    merged.insert(merged.end(), sb.begin(), sb.end());
    std::sort(merged.rbegin(), merged.rend());
    const auto su = spectrum(disjoint_union(a, b)).values;
    REQUIRE(su.size() == merged.size());
    for (std::size_t j = 0; j < su.size(); ++j) CHECK(std::abs(su[j] - merged[j]) < 1e-7);
  }
}

TEST_CASE("eps values") {
  for (int n = 2; n <= 10; ++n) CHECK(eps(family("star:" + std::to_string(n)), 1) == doctest::Approx(1.0));
  for (int n : {3, 5, 7, 9}) {
    CHECK(eps(family("complete:" + std::to_string(n)), n - 1) == doctest::Approx(n * (n - 1) / 2.0));
  }
  const Graph c = family("cycle:6");
  CHECK(eps(c, 11) == 6.0);
  CHECK_THROWS_AS(eps(c, 0), ContractError);
}

TEST_CASE("eps profile") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 50; ++i) {
    const Graph g = oracle::random_graph(2 + static_cast<int>(rng() % 12), 0.4, rng);
    const Spectrum s = spectrum(g);
    const EpsProfile prof(s, g.size());
    const int n = g.order();
    CHECK(std::abs(prof.at(n) - g.size()) < 1e-9 * n);
    CHECK(std::abs(prof.at(n - 1) - g.size()) < 1e-9 * n);
    CHECK(prof.at(n + 3) == g.size());
    for (int k = 1; k < n; ++k) CHECK(prof.at(k + 1) - prof.at(k) >= -1e-9);
    for (int k = 1; k <= n; ++k) CHECK(std::abs(prof.at(k) - eps(g, k)) < 1e-12);
  }
}

TEST_CASE("bound evaluation") {
  auto inputs_for = [](const Graph& g) {
    BoundInputs in;
    in.spectrum = spectrum(g);
    return in;
  };
  const Graph k3 = family("complete:3");
  BoundEvaluation b = evaluate_bound(BoundId::kBrouwer, k3, 1, inputs_for(k3));
  CHECK(b.lhs == doctest::Approx(0.0));
  CHECK(b.rhs == 1.0);
  CHECK(b.holds);

  const Graph k5 = family("complete:5");
  BoundInputs in5 = inputs_for(k5);
  in5.nu = 2;
  b = evaluate_bound(BoundId::kMatchingThm, k5, 4, in5);
  CHECK(b.equality);
  CHECK(std::abs(b.slack) < 1e-6);

  const Graph s62 = family("split:6,2");
  BoundInputs ins = inputs_for(s62);
  ins.tau = 2;
  b = evaluate_bound(BoundId::kConjCover, s62, 3, ins);
  CHECK(b.applicable);
  CHECK(b.equality);
  b = evaluate_bound(BoundId::kConjCover, s62, 1, ins);
  CHECK_FALSE(b.applicable);
  CHECK(b.holds);

  b = evaluate_bound(BoundId::kBipartiteSq, k3, 2, inputs_for(k3));
  CHECK_FALSE(b.applicable);

  try {
    evaluate_bound(BoundId::kCover, k3, 1, inputs_for(k3));
    FAIL("expected a contract error");
  } catch (const ContractError& e) {
    CHECK(std::string(e.what()).find("tau") != std::string::npos);
  }
  CHECK_THROWS_AS(evaluate_bound(BoundId::kBai, k3, 1, BoundInputs{}), ContractError);
  CHECK_THROWS_AS(evaluate_bound(BoundId::kStarArb, k3, 1, inputs_for(k3)), ContractError);
}

TEST_CASE("bound names round trip") {
  for (BoundId id : kAllBounds) CHECK(parse_bound(to_string(id)) == id);
  CHECK_THROWS_AS(parse_bound("nope"), ParseError);
  CHECK(is_conjecture(BoundId::kBrouwer));
  CHECK(is_conjecture(BoundId::kConjCover));
  CHECK_FALSE(is_conjecture(BoundId::kBai));
}

TEST_CASE("exact right-hand sides") {
  CHECK(brouwer_rhs(3) == 6);
  CHECK(matching_thm_rhs(5, 2) == 12);
  CHECK(matching_sq_rhs(3) == 16);
  CHECK(bipartite_sq_rhs(3) == 15);
  CHECK(half_component_rhs(3, 5) == 7);
  CHECK(conj_cover_rhs(4, 3) == 9);
  CHECK(weak_brouwer_rhs(1) == doctest::Approx(66.0));
}

TEST_CASE("bai and component bounds hold on all labeled graphs with 6 vertices") {
  GraphStream all(AllLabeledSource{6});
  int violations = 0;
  while (auto g = all.next()) {
    BoundInputs in;
    in.spectrum = spectrum(*g);
    const int np = components_info(*g).n_prime;
    for (int k = 1; k <= 6; ++k) {
      if (!evaluate_bound(BoundId::kBai, *g, k, in).holds) ++violations;
      if (!evaluate_bound(BoundId::kHalfComponent, *g, k, in).holds) ++violations;
      if (eps(in.spectrum.value(), g->size(), k) > k * np - g->size() + 1e-6) ++violations;
    }
  }
  CHECK(violations == 0);
}

TEST_CASE("eps is subadditive over edge partitions") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 200; ++i) {
    const Graph g = oracle::random_graph(2 + static_cast<int>(rng() % 14), 0.5, rng);
    std::vector<Edge> a;
    std::vector<Edge> b;
    for (const Edge& e : g.edges()) (rng() & 1U ? a : b).push_back(e);
    const Graph ga(g.order(), a);
    const Graph gb(g.order(), b);
    for (int k = 1; k <= g.order(); ++k) CHECK(eps(g, k) <= eps(ga, k) + eps(gb, k) + 1e-6);
  }
}

TEST_CASE("jacobi reports non-convergence") {
  SymmetricMatrix m;
  m.n = 3;
  m.data = {2, 1, 0, 1, 2, 1, 0, 1, 2};
  JacobiOptions opts;
  opts.max_sweeps = 0;
  CHECK_THROWS_AS(symmetric_eigenvalues(m, opts), NumericalError);
  const auto vals = symmetric_eigenvalues(m);
  CHECK(vals[0] == doctest::Approx(2 + std::sqrt(2.0)));
}
