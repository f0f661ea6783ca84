#include "qnr/concentration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qnr/error.hpp"

namespace qnr {

namespace {

double one_sided(std::span<const Complex> k, std::span<const Complex> l) {
  double worst = 0.0;
  for (const Complex& p : k) {
    double nearest = std::numeric_limits<double>::infinity();
    for (const Complex& q : l) nearest = std::min(nearest, std::abs(p - q));
    worst = std::max(worst, nearest);
  }
  return worst;
}

double spectral_norm(const Eigen::Matrix2cd& m) { return Reduced2x2::from_matrix(m).norm(); }

}  // namespace

ExpectedReduced expected_reduced(const BlockMatrix& block) {
  return {block.A().trace() / static_cast<double>(block.n1()), block.D().trace() / static_cast<double>(block.n2())};
}

double hausdorff(std::span<const Complex> k, std::span<const Complex> l) {
  if (k.empty() || l.empty()) throw EmptySet("Hausdorff distance needs non-empty sets");
  return std::max(one_sided(k, l), one_sided(l, k));
}

std::vector<Complex> spectrum_set(const Reduced2x2& m) {
  const EigenPair e = eigen2x2(m);
  if (e.first == e.second) return {e.first};
  return {e.first, e.second};
}

PerturbationBound perturbation_bound(const Eigen::Matrix2cd& m1, const Eigen::Matrix2cd& m2) {
  const auto s1 = spectrum_set(Reduced2x2::from_matrix(m1));
  const auto s2 = spectrum_set(Reduced2x2::from_matrix(m2));
  const double rhs = std::sqrt((spectral_norm(m1) + spectral_norm(m2)) * spectral_norm(m1 - m2));
  return {hausdorff(s1, s2), rhs};
}

ConcentrationReport concentration_experiment(const MatrixFamily& family, const ConcentrationConfig& cfg) {
  if (cfg.dims.empty()) throw InvalidArgument("need at least one dimension");
  if (!std::is_sorted(cfg.dims.begin(), cfg.dims.end())) throw InvalidArgument("dimensions must be ascending");
  if (cfg.samples_per_dim < 1000) throw InvalidArgument("samples_per_dim must be at least 1000");
  if (cfg.epsilons.empty()) throw InvalidArgument("need at least one epsilon");

  ConcentrationReport report;
  report.dims = cfg.dims;
  report.epsilons = cfg.epsilons;
  report.samples_per_dim = cfg.samples_per_dim;
  report.seed = cfg.seed;
  const Rng master(cfg.seed);

  for (std::size_t i = 0; i < cfg.dims.size(); ++i) {
    const BlockMatrix block = family(cfg.dims[i]);
    const ExpectedReduced expected = expected_reduced(block);
    const auto expected_set = spectrum_set(expected.matrix());
    report.n0.push_back(static_cast<std::size_t>(std::min(block.n1(), block.n2())));
    report.operator_norms.push_back(operator_norm(assemble(block)));

    Rng rng = master.split(i);
    std::vector<std::size_t> exceed(cfg.epsilons.size(), 0);
    PointCloud kept;
    for (std::size_t s = 0; s < cfg.samples_per_dim; ++s) {
      const UnitPair pair = sample_unit_pair(block.n1(), block.n2(), rng);
      const Reduced2x2 m = reduce(block, pair);
      const double dist = hausdorff(spectrum_set(m), expected_set);
      for (std::size_t j = 0; j < cfg.epsilons.size(); ++j)
        if (dist > cfg.epsilons[j]) ++exceed[j];
      if (s < cfg.keep_points) {
        const EigenPair e = eigen2x2(m);
        const EigenSplit split = split_by_alpha(e, 0.0);
        kept.append_point(split.lambda_alpha, split.lambda_alpha_pi);
      }
    }
    std::vector<double> row;
    for (std::size_t count : exceed)
      row.push_back(static_cast<double>(count) / static_cast<double>(cfg.samples_per_dim));
    report.exceedance.push_back(std::move(row));
    if (cfg.keep_points > 0) report.samples.push_back(std::move(kept));
  }

  // Pooled fit of log P against ε⁴ n0 / |A|⁴, the exponent's argument.
  std::vector<double> xs, ys;
  std::vector<std::size_t> dims_used;
  for (std::size_t i = 0; i < report.dims.size(); ++i) {
    const double norm4 = std::pow(report.operator_norms[i], 4);
    for (std::size_t j = 0; j < report.epsilons.size(); ++j) {
      const double frac = report.exceedance[i][j];
      if (frac <= 0.0 || norm4 == 0.0) continue;
      xs.push_back(std::pow(report.epsilons[j], 4) * static_cast<double>(report.n0[i]) / norm4);
      ys.push_back(std::log(frac));
      if (dims_used.empty() || dims_used.back() != i) dims_used.push_back(i);
    }
  }
  if (dims_used.size() >= 2) {
    const double n = static_cast<double>(xs.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
      mx += xs[k];
      my += ys[k];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
      sxx += (xs[k] - mx) * (xs[k] - mx);
      sxy += (xs[k] - mx) * (ys[k] - my);
    }
    if (sxx > 0.0) report.fitted_decay = -sxy / sxx;
  }
  return report;
}

}  // namespace qnr
