#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace qnr {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;
using Index = Eigen::Index;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Seedable generator threaded explicitly through every sampling call.
///
/// Uniforms are built from the top 53 bits of a mt19937_64 draw and normals
/// use Box-Muller, so streams are reproducible across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform angle on [0, 2π).
  double angle() { return kTwoPi * uniform(); }

  /// Standard complex Gaussian: real and imaginary parts i.i.d. N(0, 1).
  Complex complex_gaussian();

  /// Generator for worker `index`, seeded with seed + index.
  Rng split(std::uint64_t index) const { return Rng(seed_ + index); }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/// The decomposed matrix [A B; C D] with A: n1×n1 and D: n2×n2.
class BlockMatrix {
 public:
  BlockMatrix(ComplexMatrix a, ComplexMatrix b, ComplexMatrix c, ComplexMatrix d);

  /// Splits a square matrix after row/column `split` (1 ≤ split < n).
  static BlockMatrix split(const ComplexMatrix& m, Index split);

  const ComplexMatrix& A() const noexcept { return a_; }
  const ComplexMatrix& B() const noexcept { return b_; }
  const ComplexMatrix& C() const noexcept { return c_; }
  const ComplexMatrix& D() const noexcept { return d_; }

  Index n1() const noexcept { return a_.rows(); }
  Index n2() const noexcept { return d_.rows(); }
  Index dim() const noexcept { return n1() + n2(); }

  /// factor · [A B; C D], block by block.
  BlockMatrix scaled(Complex factor) const;

  friend bool operator==(const BlockMatrix& l, const BlockMatrix& r) {
    return l.a_ == r.a_ && l.b_ == r.b_ && l.c_ == r.c_ && l.d_ == r.d_;
  }

 private:
  ComplexMatrix a_, b_, c_, d_;
};

ComplexMatrix assemble(const BlockMatrix& block);

/// A point (x, y) on the product of the unit spheres of H1 and H2.
class UnitPair {
 public:
  static constexpr double kNormTolerance = 1e-12;

  /// Requires | |x| - 1 | and | |y| - 1 | within kNormTolerance.
  UnitPair(ComplexVector x, ComplexVector y);

  /// Scales x and y to unit length; throws on a zero vector.
  static UnitPair normalized(ComplexVector x, ComplexVector y);

  const ComplexVector& x() const noexcept { return x_; }
  const ComplexVector& y() const noexcept { return y_; }

  friend bool operator==(const UnitPair& l, const UnitPair& r) {
    return l.x_ == r.x_ && l.y_ == r.y_;
  }

 private:
  ComplexVector x_, y_;
};

/// Largest singular value by power iteration on M*M.
double operator_norm(const ComplexMatrix& m, double tol = 1e-10, int max_iterations = 10000);

/// Uniform point on the complex unit sphere of dimension n.
ComplexVector sample_unit_vector(Index n, Rng& rng);

UnitPair sample_unit_pair(Index n1, Index n2, Rng& rng);

/// All eigenvalues of a square matrix, with multiplicity.
std::vector<Complex> full_spectrum(const ComplexMatrix& m);

/// Haar-distributed unitary matrix (QR of a complex Gaussian matrix).
ComplexMatrix random_unitary(Index n, Rng& rng);

/// Support function of the numerical range sampled on a uniform angle grid.
///
/// A point z lies in W(M) only if Re(e^{iθ} z) ≤ λ_max(Re(e^{iθ} M)) for every
/// θ; contains() checks this on the sampled angles.
class NumericalRangeSupport {
 public:
  explicit NumericalRangeSupport(const ComplexMatrix& m, std::size_t angles = 360);

  bool contains(Complex z, double tol = 1e-8) const;

  /// Largest value of Re(e^{iθ} z) - h(θ) over the sampled angles.
  double excess(Complex z) const;

  std::span<const double> support() const noexcept { return support_; }

 private:
  std::vector<Complex> rotations_;
  std::vector<double> support_;
};

}  // namespace qnr
