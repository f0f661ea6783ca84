#pragma once

#include <utility>

#include "qnr/linalg.hpp"

namespace qnr {

/// The 2×2 matrix M_{x,y} = [<Ax,x> <By,x>; <Cx,y> <Dy,y>].
///
/// Inner products are linear in the first argument: <u, v> = v^H u.
struct Reduced2x2 {
  Complex a;
  Complex b;
  Complex c;
  Complex d;

  Complex trace() const { return a + d; }
  Complex determinant() const { return a * d - b * c; }

  /// Spectral norm, closed form for 2×2.
  double norm() const;

  Eigen::Matrix2cd matrix() const {
    Eigen::Matrix2cd m;
    m << a, b, c, d;
    return m;
  }

  static Reduced2x2 from_matrix(const Eigen::Matrix2cd& m) { return {m(0, 0), m(0, 1), m(1, 0), m(1, 1)}; }
};

/// Unordered eigenvalue pair of a Reduced2x2. A double root appears twice.
struct EigenPair {
  Complex first;
  Complex second;
};

/// Eigenvalues labelled by the α-rule: lambda_alpha has the larger real part
/// after rotation by e^{iα}; ties go to the larger rotated imaginary part.
struct EigenSplit {
  Complex lambda_alpha;
  Complex lambda_alpha_pi;
  double alpha;
};

/// Parameters of f(x,y) = Re λ^(α) - p (Im(λ^(α) - λ0))².
struct ObjectiveParams {
  double alpha = 0.0;
  Complex lambda0 = 0.0;
  double penalty = 0.0;

  /// Validates p ≥ 0 and normalizes α into [0, 2π).
  static ObjectiveParams make(double alpha, Complex lambda0, double penalty);
};

/// Maps any finite angle into [0, 2π).
double normalize_angle(double angle);

Reduced2x2 reduce(const BlockMatrix& block, const UnitPair& pair);

/// Roots of λ² - (a+d)λ + (ad-bc): the larger-magnitude root first via
/// (a+d)/2 ± sqrt(((a-d)/2)² + bc), the other as det / λ1.
EigenPair eigen2x2(const Reduced2x2& m);

EigenSplit split_by_alpha(const EigenPair& eigs, double alpha);

/// Eigenvalues from the branch formulas (a+d)/2 ± sqrt_θ0(((a-d)/2)² + bc).
///
/// sqrt_θ0 has its cut along the ray {r e^{iθ0} : r ≥ 0} and agrees with the
/// principal root on the opposite ray; θ0 = π gives the principal branch.
/// Throws RadicandOnCut when the radicand lies on the cut.
std::pair<Complex, Complex> branch_eigenvalues(const Reduced2x2& m, double theta0 = kPi);

/// Re λ - p (Im(λ - λ0))².
double objective_value(Complex lambda, const ObjectiveParams& params);

double objective(const BlockMatrix& block, const UnitPair& pair, const ObjectiveParams& params);

/// |λ² - (a+d)λ + (ad-bc)|.
double quadratic_residual(const Reduced2x2& m, Complex lambda);

}  // namespace qnr
