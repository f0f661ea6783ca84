#include "qnr/seeker.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qnr/error.hpp"

namespace qnr {

namespace {

constexpr double kDegenerateTol = 1e-14;
constexpr double kZeroProjection = 1e-14;
constexpr double kGoldenRatio = 0.6180339887498949;  // (√5 - 1) / 2

void check_pair(const BlockMatrix& block, const UnitPair& pair) {
  if (pair.x().size() != block.n1() || pair.y().size() != block.n2())
    throw DimensionMismatch("pair dimensions do not match the block split");
}

// 1 / (2λ - a - d), or nullopt when the denominator is numerically zero.
std::optional<Complex> inverse_gap(const Reduced2x2& m, Complex lambda) {
  const Complex gap = 2.0 * lambda - m.a - m.d;
  if (std::abs(gap) <= kDegenerateTol * (1.0 + std::abs(m.a) + std::abs(m.d))) return std::nullopt;
  return 1.0 / gap;
}

// T [x; y] assembled from block products; nullopt under the degenerate guard.
std::optional<ComplexVector> try_ascent_direction(const BlockMatrix& block, const UnitPair& pair, Complex lambda,
                                                  const ObjectiveParams& params) {
  const ComplexVector& x = pair.x();
  const ComplexVector& y = pair.y();
  const ComplexVector ax = block.A() * x;
  const ComplexVector by = block.B() * y;
  const ComplexVector cx = block.C() * x;
  const ComplexVector dy = block.D() * y;
  const Reduced2x2 m{x.dot(ax), x.dot(by), y.dot(cx), y.dot(dy)};

  const auto inv = inverse_gap(m, lambda);
  if (!inv) return std::nullopt;
  const Complex g = *inv;
  const Complex gc = std::conj(g);

  const Index n1 = block.n1();
  const Index n2 = block.n2();
  ComplexVector s_xy(n1 + n2);
  s_xy.head(n1) = g * ((lambda - m.d) * ax + m.c * by);
  s_xy.tail(n2) = g * (m.b * cx + (lambda - m.a) * dy);

  ComplexVector s_adj_xy(n1 + n2);
  s_adj_xy.head(n1) = gc * (std::conj(lambda - m.d) * (block.A().adjoint() * x) +
                            std::conj(m.b) * (block.C().adjoint() * y));
  s_adj_xy.tail(n2) = gc * (std::conj(m.c) * (block.B().adjoint() * x) +
                            std::conj(lambda - m.a) * (block.D().adjoint() * y));

  const Complex weight(0.0, 2.0 * params.penalty * (lambda - params.lambda0).imag());
  return ComplexVector((s_xy + s_adj_xy) + weight * (s_xy - s_adj_xy));
}

std::optional<TangentPair> try_steepest_tangent(const BlockMatrix& block, const UnitPair& pair, Complex lambda,
                                                const ObjectiveParams& params) {
  const auto direction = try_ascent_direction(block, pair, lambda, params);
  if (!direction) return std::nullopt;
  const ComplexVector& x = pair.x();
  const ComplexVector& y = pair.y();
  const auto w = direction->head(block.n1());
  const auto z = direction->tail(block.n2());
  ComplexVector u = w - std::real(x.dot(w)) * x;
  ComplexVector v = z - std::real(y.dot(z)) * y;
  const double nu = u.norm();
  const double nv = v.norm();
  if (nu <= kZeroProjection || nv <= kZeroProjection) return std::nullopt;
  u /= nu;
  v /= nv;
  return TangentPair{std::move(u), std::move(v)};
}

// The reduced matrix along the curves φ(s) = cos(s)x + sin(s)u and
// ψ(t) = cos(t)y + sin(t)v is a trigonometric polynomial in (s, t); these are
// its sixteen coefficients, so each line-search sample costs O(1).
class CurveForms {
 public:
  CurveForms(const BlockMatrix& block, const UnitPair& pair, const TangentPair& tangent) {
    const ComplexVector& x = pair.x();
    const ComplexVector& y = pair.y();
    const ComplexVector& u = tangent.u;
    const ComplexVector& v = tangent.v;
    const ComplexVector ax = block.A() * x, au = block.A() * u;
    const ComplexVector by = block.B() * y, bv = block.B() * v;
    const ComplexVector cx = block.C() * x, cu = block.C() * u;
    const ComplexVector dy = block.D() * y, dv = block.D() * v;
    a_xx_ = x.dot(ax);
    a_cross_ = x.dot(au) + u.dot(ax);
    a_uu_ = u.dot(au);
    b_xy_ = x.dot(by);
    b_xv_ = x.dot(bv);
    b_uy_ = u.dot(by);
    b_uv_ = u.dot(bv);
    c_yx_ = y.dot(cx);
    c_yu_ = y.dot(cu);
    c_vx_ = v.dot(cx);
    c_vu_ = v.dot(cu);
    d_yy_ = y.dot(dy);
    d_cross_ = y.dot(dv) + v.dot(dy);
    d_vv_ = v.dot(dv);
  }

  Reduced2x2 at(double s, double t) const {
    const double cs = std::cos(s), ss = std::sin(s);
    const double ct = std::cos(t), st = std::sin(t);
    return {(cs * cs) * a_xx_ + (cs * ss) * a_cross_ + (ss * ss) * a_uu_,
            (cs * ct) * b_xy_ + (cs * st) * b_xv_ + (ss * ct) * b_uy_ + (ss * st) * b_uv_,
            (ct * cs) * c_yx_ + (ct * ss) * c_yu_ + (st * cs) * c_vx_ + (st * ss) * c_vu_,
            (ct * ct) * d_yy_ + (ct * st) * d_cross_ + (st * st) * d_vv_};
  }

 private:
  Complex a_xx_, a_cross_, a_uu_;
  Complex b_xy_, b_xv_, b_uy_, b_uv_;
  Complex c_yx_, c_yu_, c_vx_, c_vu_;
  Complex d_yy_, d_cross_, d_vv_;
};

double value_at(const Reduced2x2& m, const ObjectiveParams& params) {
  return objective_value(split_by_alpha(eigen2x2(m), params.alpha).lambda_alpha, params);
}

// Golden-section maximization on [lo, hi]; returns the best abscissa seen.
std::pair<double, double> golden_maximize(const std::function<double(double)>& f, double lo, double hi, double tol) {
  double c = hi - kGoldenRatio * (hi - lo);
  double d = lo + kGoldenRatio * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  while (hi - lo > tol) {
    if (fc >= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - kGoldenRatio * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + kGoldenRatio * (hi - lo);
      fd = f(d);
    }
  }
  return fc >= fd ? std::pair{c, fc} : std::pair{d, fd};
}

LineSearchResult two_dimensional_search(const std::function<double(double, double)>& f, const SeekConfig& cfg) {
  const std::size_t grid = std::max<std::size_t>(8, cfg.line_search_grid / 4);
  const double h = kTwoPi / static_cast<double>(grid);
  LineSearchResult best{0.0, 0.0, f(0.0, 0.0)};
  for (std::size_t i = 0; i < grid; ++i) {
    for (std::size_t j = 0; j < grid; ++j) {
      const double s = h * static_cast<double>(i);
      const double t = h * static_cast<double>(j);
      const double value = f(s, t);
      if (value > best.value) best = {s, t, value};
    }
  }
  // Coordinate ascent; each sweep refines s then t within one coarse cell.
  for (int sweep = 0; sweep < 20; ++sweep) {
    const double before = best.value;
    const auto [s, fs] = golden_maximize([&](double s_) { return f(s_, best.t); }, best.s - h, best.s + h,
                                         cfg.line_search_tol);
    if (fs > best.value) best = {normalize_angle(s), best.t, fs};
    const auto [t, ft] = golden_maximize([&](double t_) { return f(best.s, t_); }, best.t - h, best.t + h,
                                         cfg.line_search_tol);
    if (ft > best.value) best = {best.s, normalize_angle(t), ft};
    if (best.value - before <= cfg.line_search_tol * std::max(1.0, std::abs(best.value))) break;
  }
  return best;
}

}  // namespace

void SeekConfig::validate() const {
  if (max_iterations < 1) throw InvalidArgument("max_iterations must be at least 1");
  if (line_search_grid < 8) throw InvalidArgument("line_search_grid must be at least 8");
  if (!(line_search_tol > 0.0)) throw InvalidArgument("line_search_tol must be positive");
  if (!(repeat_tolerance >= 0.0)) throw InvalidArgument("repeat_tolerance must be non-negative");
}

AscentOperators ascent_operators(const BlockMatrix& block, const UnitPair& pair, Complex lambda,
                                 const ObjectiveParams& params) {
  check_pair(block, pair);
  const Reduced2x2 m = reduce(block, pair);
  const auto inv = inverse_gap(m, lambda);
  if (!inv) throw DegenerateEigenvalue("2λ equals a + d; the eigenvalue is not simple");

  const Index n1 = block.n1();
  const Index n2 = block.n2();
  ComplexMatrix s(n1 + n2, n1 + n2);
  s.topLeftCorner(n1, n1) = (lambda - m.d) * block.A();
  s.topRightCorner(n1, n2) = m.c * block.B();
  s.bottomLeftCorner(n2, n1) = m.b * block.C();
  s.bottomRightCorner(n2, n2) = (lambda - m.a) * block.D();
  s *= *inv;

  AscentOperators ops;
  ops.T_plus = s + s.adjoint();
  ops.T_minus = s - s.adjoint();
  const Complex weight(0.0, 2.0 * params.penalty * (lambda - params.lambda0).imag());
  ops.T = ops.T_plus + weight * ops.T_minus;
  ops.S = std::move(s);
  return ops;
}

ComplexVector ascent_direction(const BlockMatrix& block, const UnitPair& pair, Complex lambda,
                               const ObjectiveParams& params) {
  check_pair(block, pair);
  auto direction = try_ascent_direction(block, pair, lambda, params);
  if (!direction) throw DegenerateEigenvalue("2λ equals a + d; the eigenvalue is not simple");
  return std::move(*direction);
}

double derivative_along(const BlockMatrix& block, const UnitPair& pair, const TangentPair& tangent,
                        Complex lambda, const ObjectiveParams& params) {
  const ComplexVector direction = ascent_direction(block, pair, lambda, params);
  if (tangent.u.size() != block.n1() || tangent.v.size() != block.n2())
    throw DimensionMismatch("tangent dimensions do not match the block split");
  return std::real(tangent.u.dot(direction.head(block.n1())) + tangent.v.dot(direction.tail(block.n2())));
}

TangentPair steepest_tangent(const BlockMatrix& block, const UnitPair& pair, Complex lambda,
                             const ObjectiveParams& params) {
  check_pair(block, pair);
  if (!inverse_gap(reduce(block, pair), lambda))
    throw DegenerateEigenvalue("2λ equals a + d; the eigenvalue is not simple");
  auto tangent = try_steepest_tangent(block, pair, lambda, params);
  if (!tangent) throw ZeroGradient("projected ascent direction vanishes");
  return std::move(*tangent);
}

UnitPair curve_point(const UnitPair& pair, const TangentPair& tangent, double s, double t) {
  ComplexVector x = std::cos(s) * pair.x() + std::sin(s) * tangent.u;
  ComplexVector y = std::cos(t) * pair.y() + std::sin(t) * tangent.v;
  constexpr double kSlack = 4.0 * std::numeric_limits<double>::epsilon();
  if (std::abs(x.squaredNorm() - 1.0) > kSlack) x.normalize();
  if (std::abs(y.squaredNorm() - 1.0) > kSlack) y.normalize();
  return UnitPair(std::move(x), std::move(y));
}

LineSearchResult maximize_periodic(const std::function<double(double)>& f, std::size_t grid, double tol) {
  if (grid < 1) throw InvalidArgument("grid must be positive");
  const double h = kTwoPi / static_cast<double>(grid);
  double best_s = 0.0;
  double best_value = f(0.0);
  for (std::size_t k = 1; k < grid; ++k) {
    const double s = h * static_cast<double>(k);
    const double value = f(s);
    if (value > best_value) {
      best_value = value;
      best_s = s;
    }
  }
  const auto [s, value] = golden_maximize(f, best_s - h, best_s + h, tol);
  if (value > best_value) return {normalize_angle(s), normalize_angle(s), value};
  return {best_s, best_s, best_value};
}

LineSearchResult line_search(const BlockMatrix& block, const UnitPair& pair, const TangentPair& tangent,
                             const ObjectiveParams& params, const SeekConfig& cfg) {
  const CurveForms forms(block, pair, tangent);
  if (cfg.two_dimensional)
    return two_dimensional_search([&](double s, double t) { return value_at(forms.at(s, t), params); }, cfg);
  return maximize_periodic([&](double s) { return value_at(forms.at(s, s), params); }, cfg.line_search_grid,
                           cfg.line_search_tol);
}

std::optional<UnitPair> find_boundary(const BlockMatrix& block, const UnitPair& pair,
                                      const ObjectiveParams& params, const SeekConfig& cfg) {
  check_pair(block, pair);
  const Complex lambda = split_by_alpha(eigen2x2(reduce(block, pair)), params.alpha).lambda_alpha;
  const auto tangent = try_steepest_tangent(block, pair, lambda, params);
  if (!tangent) return std::nullopt;

  const LineSearchResult best = line_search(block, pair, *tangent, params, cfg);
  if (best.s == 0.0 && best.t == 0.0) return pair;
  UnitPair next = curve_point(pair, *tangent, best.s, best.t);
  // The sampled objective and the recomputed one can disagree by rounding, or
  // by a label swap when the two eigenvalues nearly tie; never step downhill.
  if (objective(block, next, params) < objective_value(lambda, params)) return pair;
  return next;
}

std::vector<UnitPair> seek_boundary(const BlockMatrix& block, const UnitPair& start,
                                    const ObjectiveParams& params, const SeekConfig& cfg) {
  cfg.validate();
  std::vector<UnitPair> path;
  path.reserve(cfg.max_iterations);
  const UnitPair* current = &start;
  for (std::size_t i = 0; i < cfg.max_iterations; ++i) {
    auto next = find_boundary(block, *current, params, cfg);
    if (!next) break;
    if (i > 0) {
      const UnitPair& prev = path.back();
      const bool repeated =
          cfg.repeat_tolerance == 0.0
              ? *next == prev
              : std::max((next->x() - prev.x()).cwiseAbs().maxCoeff(), (next->y() - prev.y()).cwiseAbs().maxCoeff()) <=
                    cfg.repeat_tolerance;
      if (repeated) break;
    }
    path.push_back(std::move(*next));
    current = &path.back();
  }
  return path;
}

}  // namespace qnr
