#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>

#include "qnr/grid.hpp"
#include "qnr/seeker.hpp"

namespace qnr {

using Seconds = std::chrono::duration<double>;

struct DriverConfig {
  double alpha = 0.0;
  /// Wall-clock budget. May be unset when max_outer_iterations is set.
  std::optional<Seconds> time_budget = Seconds(60.0);
  /// Fixed number of outer iterations (each runs the W and W̃ passes).
  std::optional<std::size_t> max_outer_iterations;
  std::size_t initial_samples = 256;
  std::size_t boxes_initial = 20;
  std::size_t directions_per_start = 5;
  std::size_t seek_iterations = 2;
  std::uint64_t seed = 0;
  double escalation_ratio = 0.99;
  double escalation_factor = 1.4142135623730951;
  SeekConfig seek{};
  GridOptions grid{};

  void validate() const;
};

/// One line of progress per finished pass.
struct PassLog {
  std::size_t iteration;
  bool tilde_pass;
  std::size_t starts;
  std::size_t boxes_per_side;
  double penalty;
  std::size_t cloud_size;
  double elapsed_seconds;
};

struct DriverStats {
  std::size_t outer_iterations = 0;
  std::size_t passes = 0;
  std::size_t seeks = 0;
  std::size_t boxes_final = 0;
  std::size_t boxes_tilde_final = 0;
  double elapsed_seconds = 0.0;
};

/// Boundary-seeking computation of the quadratic numerical range.
///
/// Seeds W/W̃ with random pairs, then alternates grid passes over W (angle α)
/// and W̃ (angle α+π). Every selected start is pushed towards the boundary in
/// `directions_per_start` equally spaced, randomly offset directions by
/// rotating the matrix. The deadline is checked after each direction.
PointCloud compute_qnr(const BlockMatrix& block, const DriverConfig& cfg, DriverStats* stats = nullptr,
                       const std::function<void(const PassLog&)>& on_pass = {});

struct SamplingBudget {
  std::optional<std::size_t> count;
  std::optional<Seconds> duration;
};

/// Random vector sampling: uniform pairs until the count or the duration is
/// exhausted, whichever comes first. Pairs are kept only when `keep_pairs`.
PointCloud random_sampling_baseline(const BlockMatrix& block, const SamplingBudget& budget, double alpha,
                                    std::uint64_t seed, bool keep_pairs = true);

}  // namespace qnr
