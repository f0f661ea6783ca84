#include <doctest.h>

#include <cmath>

#include "qnr/error.hpp"
#include "qnr/seeker.hpp"
#include "qnr/zoo.hpp"
#include "support.hpp"

using namespace qnr;
using namespace std::complex_literals;
using qnr::testing::random_block;

namespace {

ComplexVector stacked(const UnitPair& p) {
  ComplexVector v(p.x().size() + p.y().size());
  v << p.x(), p.y();
  return v;
}

Complex lambda_of(const BlockMatrix& b, const UnitPair& p, double alpha) {
  return split_by_alpha(eigen2x2(reduce(b, p)), alpha).lambda_alpha;
}

// Random unit tangents at the pair.
TangentPair random_tangent(const UnitPair& p, Rng& rng) {
  ComplexVector u = sample_unit_vector(p.x().size(), rng);
  ComplexVector v = sample_unit_vector(p.y().size(), rng);
  u -= std::real(p.x().dot(u)) * p.x();
  v -= std::real(p.y().dot(v)) * p.y();
  return {u.normalized(), v.normalized()};
}

// Separation of the two eigenvalues along the selection direction.
double rotated_gap(const BlockMatrix& b, const UnitPair& p, double alpha) {
  const EigenPair e = eigen2x2(reduce(b, p));
  return std::abs((std::polar(1.0, alpha) * (e.first - e.second)).real());
}

}  // namespace

TEST_CASE("ascent operators without coupling") {
  Rng rng(1);
  ComplexMatrix a = qnr::testing::random_matrix(3, 3, rng);
  ComplexMatrix d = qnr::testing::random_matrix(2, 2, rng);
  const BlockMatrix block(a, ComplexMatrix::Zero(3, 2), ComplexMatrix::Zero(2, 3), d);
  const UnitPair pair = sample_unit_pair(3, 2, rng);
  const Reduced2x2 m = reduce(block, pair);
  const Complex lambda = lambda_of(block, pair, 0.0);
  const ObjectiveParams params = ObjectiveParams::make(0.0, 0.0, 0.0);
  const AscentOperators ops = ascent_operators(block, pair, lambda, params);

  ComplexMatrix s = ComplexMatrix::Zero(5, 5);
  const Complex g = 1.0 / (2.0 * lambda - m.a - m.d);
  s.topLeftCorner(3, 3) = g * (lambda - m.d) * a;
  s.bottomRightCorner(2, 2) = g * (lambda - m.a) * d;
  CHECK((ops.S - s).norm() <= 1e-13 * s.norm());
  CHECK((ops.T - (s + s.adjoint())).norm() <= 1e-13 * s.norm());
  CHECK(ops.T == ops.T_plus);
}

TEST_CASE("ascent operator symmetries and the matrix-free direction") {
  Rng rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const BlockMatrix block = random_block(4, 4, rng);
    const UnitPair pair = sample_unit_pair(4, 4, rng);
    const Complex lambda = lambda_of(block, pair, 0.3);
    const ObjectiveParams params = ObjectiveParams::make(0.3, rng.complex_gaussian(), 1.7);
    const AscentOperators ops = ascent_operators(block, pair, lambda, params);
    CHECK((ops.T_plus - ops.T_plus.adjoint()).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK((ops.T_minus + ops.T_minus.adjoint()).cwiseAbs().maxCoeff() <= 1e-12);
    const ComplexVector dense = ops.T * stacked(pair);
    CHECK((ascent_direction(block, pair, lambda, params) - dense).norm() <= 1e-12 * (1.0 + dense.norm()));
  }
}

TEST_CASE("degenerate eigenvalue is refused") {
  const BlockMatrix block = qnr::testing::scalar_block(1, 1, 1.0, 1.0);
  const UnitPair pair(ComplexVector::Ones(1), ComplexVector::Ones(1));
  const ObjectiveParams params = ObjectiveParams::make(0.0, 0.0, 0.0);
  CHECK_THROWS_AS(ascent_operators(block, pair, 1.0, params), DegenerateEigenvalue);
  CHECK_THROWS_AS(steepest_tangent(block, pair, 1.0, params), DegenerateEigenvalue);
  CHECK_FALSE(find_boundary(block, pair, params, SeekConfig{}).has_value());
  CHECK(seek_boundary(block, pair, params, SeekConfig{}).empty());
}

TEST_CASE("derivative vanishes along directions orthogonal to the gradient") {
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const BlockMatrix block = random_block(3, 4, rng);
    const UnitPair pair = sample_unit_pair(3, 4, rng);
    const ObjectiveParams params = ObjectiveParams::make(0.0, 0.0, 0.5);
    const Complex lambda = lambda_of(block, pair, 0.0);
    const ComplexVector dir = ascent_direction(block, pair, lambda, params);
    const ComplexVector gu = dir.head(3) - std::real(pair.x().dot(dir.head(3))) * pair.x();
    const ComplexVector gv = dir.tail(4) - std::real(pair.y().dot(dir.tail(4))) * pair.y();
    const TangentPair t = random_tangent(pair, rng);
    const double along = std::real(gu.dot(t.u) + gv.dot(t.v));
    const double scale = gu.squaredNorm() + gv.squaredNorm();
    const TangentPair orth{t.u - (along / scale) * gu, t.v - (along / scale) * gv};
    CHECK(std::abs(derivative_along(block, pair, orth, lambda, params)) <= 1e-12 * (1.0 + dir.norm()));
  }
}

TEST_CASE("steepest tangent beats random tangents") {
  Rng rng(4);
  const BlockMatrix block = random_block(5, 5, rng);
  const UnitPair pair = sample_unit_pair(5, 5, rng);
  const ObjectiveParams params = ObjectiveParams::make(1.0, 0.2, 0.3);
  const Complex lambda = lambda_of(block, pair, params.alpha);
  const double best = derivative_along(block, pair, steepest_tangent(block, pair, lambda, params), lambda, params);
  for (int i = 0; i < 100; ++i)
    CHECK(derivative_along(block, pair, random_tangent(pair, rng), lambda, params) <= best + 1e-12);
}

TEST_CASE("derivative matches central differences") {
  Rng rng(5);
  int tested = 0;
  while (tested < 100) {
    const BlockMatrix block = random_block(3, 3, rng);
    const UnitPair pair = sample_unit_pair(3, 3, rng);
    const double alpha = rng.angle();
    if (rotated_gap(block, pair, alpha) <= 0.1) continue;
    ++tested;
    const ObjectiveParams params = ObjectiveParams::make(alpha, rng.complex_gaussian(), 2.0 * rng.uniform());
    const TangentPair tangent = random_tangent(pair, rng);
    const double h = 1e-5;
    const double fd = (objective(block, curve_point(pair, tangent, h, h), params) -
                       objective(block, curve_point(pair, tangent, -h, -h), params)) /
                      (2 * h);
    const double exact = derivative_along(block, pair, tangent, lambda_of(block, pair, alpha), params);
    CHECK(std::abs(fd - exact) <= 1e-6 * std::abs(exact));
  }
}

TEST_CASE("steepest tangent") {
  SUBCASE("gradient parallel to the point has no tangent part") {
    // A = I, D = -I: T[x; y] = [2x; 0].
    const BlockMatrix block = qnr::testing::scalar_block(2, 2, 1.0, -1.0);
    Rng rng(6);
    const UnitPair pair = sample_unit_pair(2, 2, rng);
    CHECK_THROWS_AS(steepest_tangent(block, pair, 1.0, ObjectiveParams::make(0.0, 0.0, 0.0)), ZeroGradient);
  }
  SUBCASE("tangency and unit norm") {
    Rng rng(7);
    for (int i = 0; i < 100; ++i) {
      const BlockMatrix block = random_block(4, 2, rng);
      const UnitPair pair = sample_unit_pair(4, 2, rng);
      const ObjectiveParams params = ObjectiveParams::make(rng.angle(), 0.0, 1.0);
      const TangentPair t = steepest_tangent(block, pair, lambda_of(block, pair, params.alpha), params);
      CHECK(std::abs(std::real(pair.x().dot(t.u))) <= 1e-10);
      CHECK(std::abs(std::real(pair.y().dot(t.v))) <= 1e-10);
      CHECK(std::abs(t.u.norm() - 1.0) <= 1e-12);
      CHECK(std::abs(t.v.norm() - 1.0) <= 1e-12);
    }
  }
}

TEST_CASE("curve points") {
  Rng rng(8);
  const UnitPair pair = sample_unit_pair(3, 3, rng);
  const TangentPair t = random_tangent(pair, rng);
  CHECK(curve_point(pair, t, 0.0, 0.0) == pair);
  const UnitPair quarter = curve_point(pair, t, kPi / 2, kPi / 2);
  CHECK((quarter.x() - t.u).norm() <= 1e-15);
  CHECK((quarter.y() - t.v).norm() <= 1e-15);
  const UnitPair antipode = curve_point(pair, t, kPi, 0.0);
  CHECK((antipode.x() + pair.x()).norm() <= 1e-15);
  CHECK(antipode.y() == pair.y());
  for (int i = 0; i < 1000; ++i) {
    const UnitPair p = curve_point(pair, t, 100 * rng.uniform(), -100 * rng.uniform());
    CHECK(std::abs(p.x().norm() - 1.0) <= 1e-12);
  }
}

TEST_CASE("periodic maximization") {
  const double tol = 1e-6;
  CHECK(maximize_periodic([](double) { return 3.0; }, 64, tol).s == 0.0);
  CHECK(std::abs(maximize_periodic([](double s) { return std::cos(s); }, 64, tol).s) <= tol);

  // Dense grid over [0, 2π) locates the maximum of -cos(s - 1.3) to within
  // its spacing.
  auto f = [](double s) { return -std::cos(s - 1.3); };
  const double spacing = kTwoPi / 1e6;
  double dense_best = 0.0, dense_value = -2.0;
  for (int k = 0; k < 1000000; ++k) {
    const double s = spacing * k;
    if (f(s) > dense_value) {
      dense_value = f(s);
      dense_best = s;
    }
  }
  const LineSearchResult r = maximize_periodic(f, 64, tol);
  CHECK(std::abs(r.s - dense_best) <= 0.5 * spacing + tol);
  CHECK(std::abs(r.s - (1.3 + kPi)) <= tol);
  CHECK(r.s == r.t);
}

TEST_CASE("line search never loses to the origin") {
  Rng rng(9);
  for (int i = 0; i < 50; ++i) {
    const BlockMatrix block = random_block(3, 3, rng);
    const UnitPair pair = sample_unit_pair(3, 3, rng);
    const ObjectiveParams params = ObjectiveParams::make(rng.angle(), rng.complex_gaussian(), rng.uniform());
    const TangentPair t = steepest_tangent(block, pair, lambda_of(block, pair, params.alpha), params);
    const double origin = objective(block, pair, params);
    SeekConfig cfg;
    const LineSearchResult diag = line_search(block, pair, t, params, cfg);
    CHECK(diag.value >= origin);
    CHECK(diag.s == diag.t);
    CHECK(std::abs(objective(block, curve_point(pair, t, diag.s, diag.t), params) - diag.value) <= 1e-10);
    cfg.two_dimensional = true;
    const LineSearchResult both = line_search(block, pair, t, params, cfg);
    CHECK(both.value >= origin);
    CHECK(std::abs(objective(block, curve_point(pair, t, both.s, both.t), params) - both.value) <= 1e-10);
  }
}

TEST_CASE("seek configuration is validated") {
  const BlockMatrix block = gen_a3();
  Rng rng(10);
  const UnitPair start = sample_unit_pair(2, 2, rng);
  const ObjectiveParams params = ObjectiveParams::make(0.0, 0.0, 0.0);
  SeekConfig cfg;
  cfg.max_iterations = 0;
  CHECK_THROWS_AS(seek_boundary(block, start, params, cfg), InvalidArgument);
  cfg = SeekConfig{};
  cfg.line_search_grid = 4;
  CHECK_THROWS_AS(seek_boundary(block, start, params, cfg), InvalidArgument);
}

TEST_CASE("seek boundary lengths") {
  Rng rng(11);
  const UnitPair start = sample_unit_pair(2, 2, rng);
  SeekConfig cfg;
  cfg.max_iterations = 1;
  CHECK(seek_boundary(gen_a3(), start, ObjectiveParams::make(0.0, 0.0, 0.0), cfg).size() == 1);

  // Constant reductions: every pair is a maximizer.
  const BlockMatrix flat = qnr::testing::scalar_block(2, 2, 2.0, -2.0);
  cfg.max_iterations = 10;
  CHECK(seek_boundary(flat, start, ObjectiveParams::make(0.0, 0.0, 0.0), cfg).size() <= 1);
}

TEST_CASE("seeking is monotone and stays on the spheres") {
  Rng rng(12);
  SeekConfig cfg;
  cfg.max_iterations = 50;
  for (int run = 0; run < 20; ++run) {
    const BlockMatrix block = run % 2 == 0 ? gen_a3() : random_block(4, 4, rng);
    const UnitPair start = sample_unit_pair(block.n1(), block.n2(), rng);
    const double alpha = run < 10 ? 0.0 : rng.angle();
    const ObjectiveParams params = ObjectiveParams::make(alpha, lambda_of(block, start, alpha), 0.3 * run);
    double previous = objective(block, start, params);
    for (const UnitPair& p : seek_boundary(block, start, params, cfg)) {
      const double value = objective(block, p, params);
      CHECK(value >= previous - 1e-12);
      previous = value;
      CHECK(std::abs(p.x().norm() - 1.0) <= UnitPair::kNormTolerance);
      CHECK(std::abs(p.y().norm() - 1.0) <= UnitPair::kNormTolerance);
      const Reduced2x2 m = reduce(block, p);
      const EigenPair e = eigen2x2(m);
      const double bound = 1e-10 * (1.0 + m.norm() * m.norm());
      CHECK(quadratic_residual(m, e.first) <= bound);
      CHECK(quadratic_residual(m, e.second) <= bound);
    }
  }
}

TEST_CASE("a seek on the rotated matrix ascends the rotated objective of the original") {
  // On e^{iθ}A with angle α-θ and anchor e^{iθ}λ0, the selected eigenvalue is
  // e^{iθ} times the one selected on A at angle α, and the objective is
  // Re(e^{iθ}λ) - p Im(e^{iθ}(λ - λ0))² in terms of A's eigenvalue λ.
  Rng rng(13);
  SeekConfig cfg;
  cfg.max_iterations = 20;
  for (int run = 0; run < 20; ++run) {
    const BlockMatrix block = random_block(3, 3, rng);
    const UnitPair start = sample_unit_pair(3, 3, rng);
    const double alpha = rng.angle(), theta = rng.angle(), p = 0.5;
    const Complex rot = std::polar(1.0, theta);
    const Complex lambda0 = lambda_of(block, start, alpha);
    const BlockMatrix rotated = block.scaled(rot);
    const ObjectiveParams params = ObjectiveParams::make(alpha - theta, rot * lambda0, p);

    auto rotated_objective = [&](const UnitPair& q) {
      const Complex l = lambda_of(block, q, alpha);
      const double dev = (rot * (l - lambda0)).imag();
      return (rot * l).real() - p * dev * dev;
    };
    double previous = rotated_objective(start);
    for (const UnitPair& q : seek_boundary(rotated, start, params, cfg)) {
      if (rotated_gap(block, q, alpha) > 1e-6)
        CHECK(std::abs(lambda_of(rotated, q, params.alpha) - rot * lambda_of(block, q, alpha)) <= 1e-10);
      const double value = rotated_objective(q);
      CHECK(value >= previous - 1e-10);
      previous = value;
    }
  }
}
