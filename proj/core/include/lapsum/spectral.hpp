#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lapsum/graph.hpp"

namespace lapsum {

/// Dense row-major symmetric matrix.
struct SymmetricMatrix {
  int n = 0;
  std::vector<double> data;

  double& at(int i, int j) { return data[static_cast<std::size_t>(i * n + j)]; }
  double at(int i, int j) const { return data[static_cast<std::size_t>(i * n + j)]; }
};

SymmetricMatrix laplacian(const Graph& g);

inline constexpr double kEigenTolerance = 1e-9;
// Global slack threshold: a violation needs lhs - rhs > kViolationTolerance.
inline constexpr double kViolationTolerance = 1e-6;

struct JacobiOptions {
  double off_diagonal_threshold = 1e-12;  // Frobenius norm of the off-diagonal part
  int max_sweeps = 100;
};

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, sorted
/// non-increasing. Throws NumericalError if the sweep cap is hit.
std::vector<double> symmetric_eigenvalues(SymmetricMatrix a, const JacobiOptions& opts = {});

struct Spectrum {
  std::vector<double> values;  // non-increasing
  double tol = kEigenTolerance;

  int size() const noexcept { return static_cast<int>(values.size()); }
  double largest() const noexcept { return values.empty() ? 0.0 : values.front(); }
  // Sum of the k largest values; k beyond n sums everything.
  double top_sum(int k) const noexcept;
};

Spectrum spectrum(const Graph& g);

/// ε_k(G) = (λ_1 + ... + λ_k) - |E|, with ε_k = |E| for k > n.
double eps(const Graph& g, int k);
double eps(const Spectrum& s, int edge_count, int k);

/// ε_k for k = 1..n.
class EpsProfile {
 public:
  EpsProfile(const Spectrum& s, int edge_count);

  int order() const noexcept { return static_cast<int>(eps_.size()); }
  // k >= 1; k > n returns |E|.
  double at(int k) const;
  const std::vector<double>& values() const noexcept { return eps_; }

 private:
  std::vector<double> eps_;
  int edges_ = 0;
};

enum class BoundId {
  kBrouwer,
  kBai,
  kWeakBrouwer,
  kMatchingThm,
  kMatchingSq,
  kBipartiteSq,
  kCover,
  kStarArb,
  kHalfComponent,
  kConjMatchingImproved,
  kConjCover,
};

inline constexpr BoundId kAllBounds[] = {
    BoundId::kBrouwer,      BoundId::kBai,       BoundId::kWeakBrouwer,
    BoundId::kMatchingThm,  BoundId::kMatchingSq, BoundId::kBipartiteSq,
    BoundId::kCover,        BoundId::kStarArb,   BoundId::kHalfComponent,
    BoundId::kConjMatchingImproved, BoundId::kConjCover,
};

std::string_view to_string(BoundId id);
BoundId parse_bound(std::string_view name);
// Conjectures are reported by scans but never asserted.
bool is_conjecture(BoundId id);

bool needs_matching_number(BoundId id);
bool needs_cover_number(BoundId id);
bool needs_star_arboricity(BoundId id);

/// Precomputed invariants handed to evaluate_bound. The spectrum, ν, τ and sa
/// must be supplied when a bound needs them; the cheap quantities are derived
/// from the graph when left empty.
struct BoundInputs {
  std::optional<Spectrum> spectrum;
  std::optional<int> nu;
  std::optional<int> tau;
  std::optional<int> sa;
  std::optional<int> n_prime;
  std::optional<int> non_isolated;
  std::optional<bool> bipartite;
  std::optional<std::vector<int>> conjugate_degrees;
};

struct BoundEvaluation {
  double lhs = 0.0;  // ε_k(G)
  double rhs = 0.0;  // bound on ε_k(G)
  bool applicable = false;
  bool holds = true;  // vacuously true when not applicable
  double slack = 0.0;
  bool equality = false;  // applicable and |slack| <= kViolationTolerance
};

/// Every bound is phrased on the ε scale: ε_k(G) <= rhs. Throws ContractError
/// naming the missing quantity when inputs lacks what the bound needs.
BoundEvaluation evaluate_bound(BoundId id, const Graph& g, int k, const BoundInputs& inputs);

// Exact right-hand sides.
long long brouwer_rhs(int k);
long long bai_rhs(std::span<const int> conjugate, int k, int edge_count);
double weak_brouwer_rhs(int k);
long long matching_thm_rhs(int k, int nu);
long long matching_sq_rhs(int k);
long long bipartite_sq_rhs(int k);
long long cover_rhs(int k, int tau);
long long star_arb_rhs(int k, int sa);
long long half_component_rhs(int k, int n_prime);
long long conj_matching_rhs(int k, int nu);
long long conj_cover_rhs(int k, int tau);

}  // namespace lapsum
