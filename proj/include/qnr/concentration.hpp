#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "qnr/grid.hpp"
#include "qnr/kernel.hpp"

namespace qnr {

/// E[M_{x,y}] under the uniform measure on S_H1 × S_H2: diag(tr A / n1, tr D / n2).
struct ExpectedReduced {
  Complex ea;
  Complex ed;

  Reduced2x2 matrix() const { return {ea, 0.0, 0.0, ed}; }
};

ExpectedReduced expected_reduced(const BlockMatrix& block);

/// max(dist(K, L), dist(L, K)) with dist(K, L) = max_k min_l |k - l|.
double hausdorff(std::span<const Complex> k, std::span<const Complex> l);

/// Eigenvalues of a 2×2 matrix as a set (a double root collapses to one point).
std::vector<Complex> spectrum_set(const Reduced2x2& m);

struct PerturbationBound {
  double lhs;  ///< d_H(σ(M1), σ(M2))
  double rhs;  ///< ((|M1| + |M2|) |M1 - M2|)^{1/2}
};

PerturbationBound perturbation_bound(const Eigen::Matrix2cd& m1, const Eigen::Matrix2cd& m2);

/// Matrix of total dimension `dim` from a scalable family.
using MatrixFamily = std::function<BlockMatrix(std::size_t dim)>;

struct ConcentrationConfig {
  std::vector<std::size_t> dims;
  std::vector<double> epsilons;
  std::size_t samples_per_dim = 100000;
  std::uint64_t seed = 0;
  /// Keep up to this many sampled eigenvalue pairs per dimension (for plots).
  std::size_t keep_points = 0;
};

struct ConcentrationReport {
  std::vector<std::size_t> dims;
  /// min(n1, n2) for each dimension.
  std::vector<std::size_t> n0;
  std::vector<double> operator_norms;
  std::vector<double> epsilons;
  /// exceedance[i][j] = fraction of samples at dims[i] with d_H > epsilons[j].
  std::vector<std::vector<double>> exceedance;
  std::size_t samples_per_dim = 0;
  std::uint64_t seed = 0;
  /// Least-squares decay rate of log-exceedance against ε⁴ n0 / |A|⁴; absent
  /// when fewer than two dimensions have a non-zero exceedance.
  std::optional<double> fitted_decay;
  /// Sampled points per dimension when keep_points > 0 (no pairs stored).
  std::vector<PointCloud> samples;
};

/// Empirical distribution of d_H(σ(M_{x,y}), σ(E M)) across dimensions.
/// Dimension i draws from Rng(seed).split(i).
ConcentrationReport concentration_experiment(const MatrixFamily& family, const ConcentrationConfig& cfg);

}  // namespace qnr
