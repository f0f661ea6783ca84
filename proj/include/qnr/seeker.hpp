#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "qnr/kernel.hpp"

namespace qnr {

/// S, T+ = S + S*, T- = S - S*, T = T+ + 2p Im(λ - λ0) i T-, all (n1+n2)×(n1+n2).
struct AscentOperators {
  ComplexMatrix S;
  ComplexMatrix T_plus;
  ComplexMatrix T_minus;
  ComplexMatrix T;
};

/// Unit tangent vectors u ∈ T_x S_H1 and v ∈ T_y S_H2 (Re<x,u> = Re<y,v> = 0).
struct TangentPair {
  ComplexVector u;
  ComplexVector v;
};

struct SeekConfig {
  std::size_t max_iterations = 2;
  /// Coarse samples over [0, 2π) before golden-section refinement.
  std::size_t line_search_grid = 64;
  double line_search_tol = 1e-6;
  /// Search (s, t) independently instead of along the diagonal s = t.
  bool two_dimensional = false;
  /// Max-norm distance under which consecutive iterates count as repeated.
  double repeat_tolerance = 0.0;

  void validate() const;
};

struct LineSearchResult {
  double s = 0.0;
  double t = 0.0;
  double value = 0.0;
};

/// The operators of one ascent step, materialized. `lambda` is λ^(α) of the pair.
/// Throws DegenerateEigenvalue when |2λ - a - d| ≤ 1e-14 (1 + |a| + |d|).
AscentOperators ascent_operators(const BlockMatrix& block, const UnitPair& pair, Complex lambda,
                                 const ObjectiveParams& params);

/// T [x; y] without forming T, stacked as [w; z].
ComplexVector ascent_direction(const BlockMatrix& block, const UnitPair& pair, Complex lambda,
                               const ObjectiveParams& params);

/// Re<T[x;y], [u;v]>: derivative of the objective along the great circles through (u, v).
double derivative_along(const BlockMatrix& block, const UnitPair& pair, const TangentPair& tangent,
                        Complex lambda, const ObjectiveParams& params);

/// Normalized tangent projections of T[x;y]. Throws ZeroGradient when either
/// projection has norm ≤ 1e-14.
TangentPair steepest_tangent(const BlockMatrix& block, const UnitPair& pair, Complex lambda,
                             const ObjectiveParams& params);

/// (cos(s) x + sin(s) u, cos(t) y + sin(t) v), renormalized when rounding has
/// moved a component off the sphere.
UnitPair curve_point(const UnitPair& pair, const TangentPair& tangent, double s, double t);

/// Maximizes a 2π-periodic function: `grid` equispaced samples starting at 0,
/// then golden-section refinement around the best sample. Ties keep the
/// earliest sample, so a flat function returns s = 0.
LineSearchResult maximize_periodic(const std::function<double(double)>& f, std::size_t grid, double tol);

/// Maximizes the objective over the curves through (u, v). The result is never
/// worse than the origin (s = t = 0).
LineSearchResult line_search(const BlockMatrix& block, const UnitPair& pair, const TangentPair& tangent,
                             const ObjectiveParams& params, const SeekConfig& cfg);

/// One ascent step. Returns nullopt under the degenerate-eigenvalue and
/// zero-gradient guards; returns the input pair unchanged when no step improves
/// the objective.
std::optional<UnitPair> find_boundary(const BlockMatrix& block, const UnitPair& pair,
                                      const ObjectiveParams& params, const SeekConfig& cfg);

/// Repeated ascent from `start`, at most cfg.max_iterations steps. Stops when an
/// iterate repeats its predecessor (the repeat is dropped) or a guard trips;
/// every accepted iterate is returned.
std::vector<UnitPair> seek_boundary(const BlockMatrix& block, const UnitPair& start,
                                    const ObjectiveParams& params, const SeekConfig& cfg);

}  // namespace qnr
