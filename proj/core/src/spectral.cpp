#include "lapsum/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "lapsum/errors.hpp"

namespace lapsum {

SymmetricMatrix laplacian(const Graph& g) {
  SymmetricMatrix m;
  m.n = g.order();
  m.data.assign(static_cast<std::size_t>(m.n) * static_cast<std::size_t>(m.n), 0.0);
  for (int v = 0; v < m.n; ++v) m.at(v, v) = g.degree(v);
  for (const Edge& e : g.edges()) {
    m.at(e.u, e.v) = -1.0;
    m.at(e.v, e.u) = -1.0;
  }
  return m;
}

namespace {

double off_diagonal_norm(const SymmetricMatrix& a) {
  double sum = 0.0;
  for (int i = 0; i < a.n; ++i)
    for (int j = i + 1; j < a.n; ++j) sum += 2.0 * a.at(i, j) * a.at(i, j);
  return std::sqrt(sum);
}

double frobenius_norm(const SymmetricMatrix& a) {
  double sum = 0.0;
  for (double x : a.data) sum += x * x;
  return std::sqrt(sum);
}

void rotate(SymmetricMatrix& a, int p, int q) {
  const double apq = a.at(p, q);
  const double theta = (a.at(q, q) - a.at(p, p)) / (2.0 * apq);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  for (int k = 0; k < a.n; ++k) {
    if (k == p || k == q) continue;
    const double akp = a.at(k, p);
    const double akq = a.at(k, q);
    const double new_kp = c * akp - s * akq;
    const double new_kq = s * akp + c * akq;
    a.at(k, p) = a.at(p, k) = new_kp;
    a.at(k, q) = a.at(q, k) = new_kq;
  }
  a.at(p, p) -= t * apq;
  a.at(q, q) += t * apq;
  a.at(p, q) = a.at(q, p) = 0.0;
}

}  // namespace

std::vector<double> symmetric_eigenvalues(SymmetricMatrix a, const JacobiOptions& opts) {
  // Absolute threshold, scaled up only for matrices with large entries so that
  // round-off cannot stall convergence.
  const double threshold = opts.off_diagonal_threshold * std::max(1.0, frobenius_norm(a));
  int sweep = 0;
  while (off_diagonal_norm(a) > threshold) {
    if (sweep++ >= opts.max_sweeps) {
      throw NumericalError("Jacobi eigensolver did not converge in " +
                           std::to_string(opts.max_sweeps) + " sweeps");
    }
    for (int p = 0; p < a.n; ++p) {
      for (int q = p + 1; q < a.n; ++q) {
        if (a.at(p, q) != 0.0) rotate(a, p, q);
      }
    }
  }
  std::vector<double> values(static_cast<std::size_t>(a.n));
  for (int i = 0; i < a.n; ++i) values[static_cast<std::size_t>(i)] = a.at(i, i);
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

double Spectrum::top_sum(int k) const noexcept {
  double sum = 0.0;
  const int upto = std::min(k, size());
  for (int i = 0; i < upto; ++i) sum += values[static_cast<std::size_t>(i)];
  return sum;
}

Spectrum spectrum(const Graph& g) {
  if (g.order() < 1) throw ContractError("spectrum: graph has no vertices");
  Spectrum s;
  s.values = symmetric_eigenvalues(laplacian(g));
  return s;
}

double eps(const Spectrum& s, int edge_count, int k) {
  if (k < 1) throw ContractError("eps: k must be positive");
  if (k > s.size()) return edge_count;
  return s.top_sum(k) - edge_count;
}

double eps(const Graph& g, int k) {
  if (k < 1) throw ContractError("eps: k must be positive");
  if (g.order() == 0 || k > g.order()) return g.size();
  return eps(spectrum(g), g.size(), k);
}

EpsProfile::EpsProfile(const Spectrum& s, int edge_count) : edges_(edge_count) {
  eps_.reserve(s.values.size());
  double running = 0.0;
  for (double lambda : s.values) {
    running += lambda;
    eps_.push_back(running - edge_count);
  }
}

double EpsProfile::at(int k) const {
  if (k < 1) throw ContractError("eps: k must be positive");
  if (k > order()) return edges_;
  return eps_[static_cast<std::size_t>(k - 1)];
}

// ---------------------------------------------------------------------------
// Bound registry

namespace {

struct BoundName {
  BoundId id;
  std::string_view name;
};

constexpr BoundName kBoundNames[] = {
    {BoundId::kBrouwer, "brouwer"},
    {BoundId::kBai, "bai"},
    {BoundId::kWeakBrouwer, "weak-brouwer"},
    {BoundId::kMatchingThm, "matching-thm"},
    {BoundId::kMatchingSq, "matching-sq"},
    {BoundId::kBipartiteSq, "bipartite-sq"},
    {BoundId::kCover, "cover"},
    {BoundId::kStarArb, "star-arb"},
    {BoundId::kHalfComponent, "half-component"},
    {BoundId::kConjMatchingImproved, "conj-matching-improved"},
    {BoundId::kConjCover, "conj-cover"},
};

long long binom2(long long x) { return x * (x - 1) / 2; }

template <class T>
const T& require(const std::optional<T>& value, std::string_view quantity, BoundId id) {
  if (!value) {
    throw ContractError("evaluate_bound(" + std::string(to_string(id)) + "): missing " +
                        std::string(quantity));
  }
  return *value;
}

}  // namespace

std::string_view to_string(BoundId id) {
  for (const auto& b : kBoundNames) {
    if (b.id == id) return b.name;
  }
  return "?";
}

BoundId parse_bound(std::string_view name) {
  for (const auto& b : kBoundNames) {
    if (b.name == name) return b.id;
  }
  throw ParseError("unknown bound '" + std::string(name) + "'", 0);
}

bool is_conjecture(BoundId id) {
  return id == BoundId::kBrouwer || id == BoundId::kConjMatchingImproved ||
         id == BoundId::kConjCover;
}

bool needs_matching_number(BoundId id) {
  return id == BoundId::kMatchingThm || id == BoundId::kConjMatchingImproved;
}
bool needs_cover_number(BoundId id) {
  return id == BoundId::kCover || id == BoundId::kConjCover;
}
bool needs_star_arboricity(BoundId id) { return id == BoundId::kStarArb; }

long long brouwer_rhs(int k) { return binom2(static_cast<long long>(k) + 1); }

long long bai_rhs(std::span<const int> conjugate, int k, int edge_count) {
  long long sum = 0;
  for (int i = 0; i < k && i < static_cast<int>(conjugate.size()); ++i) {
    sum += conjugate[static_cast<std::size_t>(i)];
  }
  return sum - edge_count;
}

double weak_brouwer_rhs(int k) {
  const double kk = k;
  return kk * kk + 15.0 * kk * std::log(kk) + 65.0 * kk;
}

long long matching_thm_rhs(int k, int nu) { return static_cast<long long>(k) * nu + k / 2; }
long long matching_sq_rhs(int k) { return 2LL * k * k - (k + 1) / 2; }
long long bipartite_sq_rhs(int k) { return 2LL * k * k - k; }
long long cover_rhs(int k, int tau) { return static_cast<long long>(k) * tau; }
long long star_arb_rhs(int k, int sa) { return static_cast<long long>(k) * sa; }
long long half_component_rhs(int k, int n_prime) {
  return static_cast<long long>(k) * n_prime / 2;
}
long long conj_matching_rhs(int k, int nu) { return static_cast<long long>(k) * nu; }
long long conj_cover_rhs(int k, int tau) {
  return static_cast<long long>(k) * tau - binom2(tau);
}

BoundEvaluation evaluate_bound(BoundId id, const Graph& g, int k, const BoundInputs& inputs) {
  if (k < 1) throw ContractError("evaluate_bound: k must be positive");
  const Spectrum& spec = require(inputs.spectrum, "spectrum", id);
  if (spec.size() != g.order()) throw ContractError("evaluate_bound: spectrum does not match graph");
  const int n = g.order();
  const int m = g.size();

  BoundEvaluation out;
  out.lhs = eps(spec, m, k);
  out.applicable = k <= n;

  switch (id) {
    case BoundId::kBrouwer:
      out.rhs = static_cast<double>(brouwer_rhs(k));
      break;
    case BoundId::kBai: {
      const std::vector<int> conj =
          inputs.conjugate_degrees ? *inputs.conjugate_degrees : conjugate_degrees(g);
      out.rhs = static_cast<double>(bai_rhs(conj, k, m));
      break;
    }
    case BoundId::kWeakBrouwer:
      out.rhs = weak_brouwer_rhs(k);
      break;
    case BoundId::kMatchingThm:
      out.rhs = static_cast<double>(matching_thm_rhs(k, require(inputs.nu, "nu", id)));
      break;
    case BoundId::kMatchingSq:
      out.rhs = static_cast<double>(matching_sq_rhs(k));
      break;
    case BoundId::kBipartiteSq: {
      const bool bip = inputs.bipartite ? *inputs.bipartite : is_bipartite(g);
      out.rhs = static_cast<double>(bipartite_sq_rhs(k));
      out.applicable = out.applicable && bip;
      break;
    }
    case BoundId::kCover:
      out.rhs = static_cast<double>(cover_rhs(k, require(inputs.tau, "tau", id)));
      break;
    case BoundId::kStarArb:
      out.rhs = static_cast<double>(star_arb_rhs(k, require(inputs.sa, "sa", id)));
      break;
    case BoundId::kHalfComponent: {
      const int np = inputs.n_prime ? *inputs.n_prime : components_info(g).n_prime;
      out.rhs = static_cast<double>(half_component_rhs(k, np));
      break;
    }
    case BoundId::kConjMatchingImproved: {
      const int non_isolated = inputs.non_isolated ? *inputs.non_isolated : non_isolated_count(g);
      out.rhs = static_cast<double>(conj_matching_rhs(k, require(inputs.nu, "nu", id)));
      out.applicable = out.applicable && k <= non_isolated - 2;
      break;
    }
    case BoundId::kConjCover: {
      const int tau = require(inputs.tau, "tau", id);
      out.rhs = static_cast<double>(conj_cover_rhs(k, tau));
      out.applicable = out.applicable && k >= tau;
      break;
    }
  }

  out.slack = out.rhs - out.lhs;
  out.holds = !out.applicable || out.lhs - out.rhs <= kViolationTolerance;
  out.equality = out.applicable && std::abs(out.slack) <= kViolationTolerance;
  return out;
}

}  // namespace lapsum
