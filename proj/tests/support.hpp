#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "qnr/kernel.hpp"
#include "qnr/linalg.hpp"

namespace qnr::testing {

inline ComplexMatrix random_matrix(Index rows, Index cols, Rng& rng) {
  ComplexMatrix m(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) m(i, j) = rng.complex_gaussian();
  return m;
}

inline BlockMatrix random_block(Index n1, Index n2, Rng& rng) {
  return BlockMatrix(random_matrix(n1, n1, rng), random_matrix(n1, n2, rng), random_matrix(n2, n1, rng),
                     random_matrix(n2, n2, rng));
}

// A = a·I, D = d·I, no coupling: every pair reduces to diag(a, d).
inline BlockMatrix scalar_block(Index n1, Index n2, Complex a, Complex d) {
  return BlockMatrix(a * ComplexMatrix::Identity(n1, n1), ComplexMatrix::Zero(n1, n2), ComplexMatrix::Zero(n2, n1),
                     d * ComplexMatrix::Identity(n2, n2));
}

// Largest singular value from a full SVD.
inline double svd_norm(const ComplexMatrix& m) {
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues()(0);
}

// Greedy nearest matching; returns the largest matched distance.
inline double multiset_distance(std::vector<Complex> a, std::vector<Complex> b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (const Complex& z : a) {
    auto it = std::min_element(b.begin(), b.end(),
                               [&](const Complex& l, const Complex& r) { return std::abs(l - z) < std::abs(r - z); });
    worst = std::max(worst, std::abs(*it - z));
    b.erase(it);
  }
  return worst;
}

// Reference roots straight from the quadratic formula (no cancellation care).
inline std::vector<Complex> naive_roots(const Reduced2x2& m) {
  const Complex half = 0.5 * (m.a + m.d);
  const Complex disc = std::sqrt(0.25 * (m.a - m.d) * (m.a - m.d) + m.b * m.c);
  return {half + disc, half - disc};
}

}  // namespace qnr::testing
