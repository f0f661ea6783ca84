#include "qnr/kernel.hpp"

#include <cmath>

#include "qnr/error.hpp"

namespace qnr {

double Reduced2x2::norm() const {
  const double fro2 = std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d);
  const double det2 = std::norm(determinant());
  const double disc = std::max(fro2 * fro2 - 4.0 * det2, 0.0);
  return std::sqrt(0.5 * (fro2 + std::sqrt(disc)));
}

ObjectiveParams ObjectiveParams::make(double alpha, Complex lambda0, double penalty) {
  if (!(penalty >= 0.0) || !std::isfinite(penalty)) throw InvalidArgument("penalty must be finite and non-negative");
  if (!std::isfinite(alpha)) throw InvalidArgument("alpha must be finite");
  return {normalize_angle(alpha), lambda0, penalty};
}

double normalize_angle(double angle) {
  double r = std::fmod(angle, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

Reduced2x2 reduce(const BlockMatrix& block, const UnitPair& pair) {
  const ComplexVector& x = pair.x();
  const ComplexVector& y = pair.y();
  if (x.size() != block.n1() || y.size() != block.n2())
    throw DimensionMismatch("pair dimensions (" + std::to_string(x.size()) + ", " + std::to_string(y.size()) +
                            ") do not match blocks (" + std::to_string(block.n1()) + ", " +
                            std::to_string(block.n2()) + ")");
  // Eigen's u.dot(v) is u^H v, so <Mv, u> = u.dot(M v).
  return {x.dot(block.A() * x), x.dot(block.B() * y), y.dot(block.C() * x), y.dot(block.D() * y)};
}

EigenPair eigen2x2(const Reduced2x2& m) {
  const Complex mean = 0.5 * (m.a + m.d);
  const Complex half_diff = 0.5 * (m.a - m.d);
  const Complex root = std::sqrt(half_diff * half_diff + m.b * m.c);
  const Complex plus = mean + root;
  const Complex minus = mean - root;
  const Complex big = std::abs(plus) >= std::abs(minus) ? plus : minus;
  if (big == Complex(0.0)) return {big, big};
  return {big, m.determinant() / big};
}

EigenSplit split_by_alpha(const EigenPair& eigs, double alpha) {
  alpha = normalize_angle(alpha);
  const Complex rot = std::polar(1.0, alpha);
  const Complex r1 = rot * eigs.first;
  const Complex r2 = rot * eigs.second;
  bool first_wins;
  if (r1.real() != r2.real())
    first_wins = r1.real() > r2.real();
  else if (r1.imag() != r2.imag())
    first_wins = r1.imag() > r2.imag();
  else  // rotated values coincide; order the raw values so the rule ignores input order
    first_wins = eigs.first.real() != eigs.second.real() ? eigs.first.real() > eigs.second.real()
                                                          : eigs.first.imag() >= eigs.second.imag();
  if (first_wins) return {eigs.first, eigs.second, alpha};
  return {eigs.second, eigs.first, alpha};
}

std::pair<Complex, Complex> branch_eigenvalues(const Reduced2x2& m, double theta0) {
  const Complex half_diff = 0.5 * (m.a - m.d);
  const Complex radicand = half_diff * half_diff + m.b * m.c;
  const double mag = std::abs(radicand);

  // Radicand expressed relative to the cut direction.
  const Complex relative = radicand * std::polar(1.0, -theta0);
  if (mag == 0.0 || (relative.real() >= 0.0 && std::abs(relative.imag()) <= 1e-14 * mag))
    throw RadicandOnCut("radicand lies on the branch cut at angle " + std::to_string(theta0));

  // Arguments live in (φ0 - π, φ0 + π) with φ0 the ray opposite the cut,
  // normalized so that φ0 = 0 reproduces the principal branch.
  double center = normalize_angle(theta0 - kPi);
  if (center > kPi) center -= kTwoPi;
  if (center == -kPi) center = kPi;
  double arg = std::arg(radicand);
  while (arg <= center - kPi) arg += kTwoPi;
  while (arg >= center + kPi) arg -= kTwoPi;
  const Complex root = std::polar(std::sqrt(mag), 0.5 * arg);

  const Complex mean = 0.5 * (m.a + m.d);
  return {mean + root, mean - root};
}

double objective_value(Complex lambda, const ObjectiveParams& params) {
  const double dev = (lambda - params.lambda0).imag();
  return lambda.real() - params.penalty * dev * dev;
}

double objective(const BlockMatrix& block, const UnitPair& pair, const ObjectiveParams& params) {
  const EigenSplit split = split_by_alpha(eigen2x2(reduce(block, pair)), params.alpha);
  return objective_value(split.lambda_alpha, params);
}

double quadratic_residual(const Reduced2x2& m, Complex lambda) {
  return std::abs(lambda * lambda - m.trace() * lambda + m.determinant());
}

}  // namespace qnr
