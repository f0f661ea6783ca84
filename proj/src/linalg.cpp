#include "qnr/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Eigenvalues>

#include "qnr/error.hpp"

namespace qnr {

namespace {

void require_finite(const ComplexMatrix& m, const char* name) {
  if (!m.allFinite()) throw InvalidArgument(std::string("block ") + name + " has non-finite entries");
}

std::string shape(const ComplexMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

Complex Rng::complex_gaussian() {
  // 1 - U keeps the logarithm argument in (0, 1].
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  return {radius * std::cos(kTwoPi * u2), radius * std::sin(kTwoPi * u2)};
}

BlockMatrix::BlockMatrix(ComplexMatrix a, ComplexMatrix b, ComplexMatrix c, ComplexMatrix d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (a_.rows() < 1 || d_.rows() < 1) throw DimensionMismatch("diagonal blocks must be non-empty");
  if (a_.rows() != a_.cols() || d_.rows() != d_.cols())
    throw DimensionMismatch("diagonal blocks must be square (A " + shape(a_) + ", D " + shape(d_) + ")");
  if (b_.rows() != a_.rows() || b_.cols() != d_.rows())
    throw DimensionMismatch("B is " + shape(b_) + ", expected " + std::to_string(a_.rows()) + "x" +
                            std::to_string(d_.rows()));
  if (c_.rows() != d_.rows() || c_.cols() != a_.rows())
    throw DimensionMismatch("C is " + shape(c_) + ", expected " + std::to_string(d_.rows()) + "x" +
                            std::to_string(a_.rows()));
  require_finite(a_, "A");
  require_finite(b_, "B");
  require_finite(c_, "C");
  require_finite(d_, "D");
}

BlockMatrix BlockMatrix::split(const ComplexMatrix& m, Index split) {
  if (m.rows() != m.cols()) throw DimensionMismatch("matrix must be square, got " + shape(m));
  const Index n = m.rows();
  if (split < 1 || split >= n)
    throw SplitOutOfRange("split index " + std::to_string(split) + " outside 1.." + std::to_string(n - 1));
  const Index n2 = n - split;
  return BlockMatrix(m.topLeftCorner(split, split), m.topRightCorner(split, n2),
                     m.bottomLeftCorner(n2, split), m.bottomRightCorner(n2, n2));
}

BlockMatrix BlockMatrix::scaled(Complex factor) const {
  return BlockMatrix(factor * a_, factor * b_, factor * c_, factor * d_);
}

ComplexMatrix assemble(const BlockMatrix& block) {
  const Index n1 = block.n1();
  const Index n2 = block.n2();
  ComplexMatrix m(n1 + n2, n1 + n2);
  m.topLeftCorner(n1, n1) = block.A();
  m.topRightCorner(n1, n2) = block.B();
  m.bottomLeftCorner(n2, n1) = block.C();
  m.bottomRightCorner(n2, n2) = block.D();
  return m;
}

UnitPair::UnitPair(ComplexVector x, ComplexVector y) : x_(std::move(x)), y_(std::move(y)) {
  if (x_.size() < 1 || y_.size() < 1) throw DimensionMismatch("unit pair components must be non-empty");
  if (std::abs(x_.norm() - 1.0) > kNormTolerance || std::abs(y_.norm() - 1.0) > kNormTolerance)
    throw InvalidArgument("unit pair components must have unit norm");
}

UnitPair UnitPair::normalized(ComplexVector x, ComplexVector y) {
  const double nx = x.norm();
  const double ny = y.norm();
  if (!(nx > 0.0) || !(ny > 0.0) || !std::isfinite(nx) || !std::isfinite(ny))
    throw InvalidArgument("cannot normalize a zero or non-finite vector");
  x /= nx;
  y /= ny;
  return UnitPair(std::move(x), std::move(y));
}

double operator_norm(const ComplexMatrix& m, double tol, int max_iterations) {
  if (m.size() == 0) return 0.0;
  if (m.isZero(0.0)) return 0.0;

  // Fixed start vector; a generic direction has a component along the top
  // right singular vector.
  Rng rng(0x5eed);
  ComplexVector v(m.cols());
  for (Index i = 0; i < v.size(); ++i) v[i] = rng.complex_gaussian();
  v.normalize();

  double estimate = 0.0;
  for (int it = 0; it < max_iterations; ++it) {
    ComplexVector w = m.adjoint() * (m * v);
    const double rayleigh = std::real(v.dot(w));
    const double wn = w.norm();
    if (wn == 0.0) return 0.0;
    v = w / wn;
    if (it > 0 && std::abs(rayleigh - estimate) <= tol * std::abs(rayleigh)) {
      estimate = rayleigh;
      break;
    }
    estimate = rayleigh;
  }
  return std::sqrt(std::max(estimate, 0.0));
}

ComplexVector sample_unit_vector(Index n, Rng& rng) {
  if (n < 1) throw InvalidArgument("sphere dimension must be at least 1");
  ComplexVector v(n);
  for (;;) {
    for (Index i = 0; i < n; ++i) v[i] = rng.complex_gaussian();
    const double norm = v.norm();
    if (norm > 0.0) return v / norm;
  }
}

UnitPair sample_unit_pair(Index n1, Index n2, Rng& rng) {
  ComplexVector x = sample_unit_vector(n1, rng);
  ComplexVector y = sample_unit_vector(n2, rng);
  return UnitPair(std::move(x), std::move(y));
}

std::vector<Complex> full_spectrum(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("spectrum requires a square matrix, got " + shape(m));
  if (m.size() == 0) return {};
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(m, false);
  if (solver.info() != Eigen::Success) throw Error("eigenvalue iteration did not converge");
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

ComplexMatrix random_unitary(Index n, Rng& rng) {
  ComplexMatrix g(n, n);
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i) g(i, j) = rng.complex_gaussian();
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  // Fix the phases of R's diagonal so Q is Haar distributed.
  const ComplexMatrix& r = qr.matrixQR();
  for (Index j = 0; j < n; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

NumericalRangeSupport::NumericalRangeSupport(const ComplexMatrix& m, std::size_t angles) {
  if (m.rows() != m.cols()) throw DimensionMismatch("numerical range requires a square matrix");
  if (angles == 0) throw InvalidArgument("need at least one angle");
  rotations_.reserve(angles);
  support_.reserve(angles);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver;
  for (std::size_t k = 0; k < angles; ++k) {
    const Complex rot = std::polar(1.0, kTwoPi * static_cast<double>(k) / static_cast<double>(angles));
    const ComplexMatrix rotated = rot * m;
    const ComplexMatrix hermitian = 0.5 * (rotated + rotated.adjoint());
    solver.compute(hermitian, Eigen::EigenvaluesOnly);
    rotations_.push_back(rot);
    support_.push_back(solver.eigenvalues().maxCoeff());
  }
}

double NumericalRangeSupport::excess(Complex z) const {
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < rotations_.size(); ++k)
    worst = std::max(worst, std::real(rotations_[k] * z) - support_[k]);
  return worst;
}

bool NumericalRangeSupport::contains(Complex z, double tol) const { return excess(z) <= tol; }

}  // namespace qnr
