#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qnr/linalg.hpp"

namespace qnr {

/// Accumulated eigenvalues: W[j] = λ^(α), W_tilde[j] = λ^(α+π) of pairs[j].
///
/// `pairs` is either aligned with W or empty (point-only clouds, e.g. a long
/// sampling run where keeping the vectors would not fit in memory).
struct PointCloud {
  std::vector<Complex> W;
  std::vector<Complex> W_tilde;
  std::vector<UnitPair> pairs;

  std::size_t size() const noexcept { return W.size(); }
  bool empty() const noexcept { return W.empty(); }
  bool has_pairs() const noexcept { return !pairs.empty() || W.empty(); }

  void append(Complex w, Complex w_tilde, UnitPair pair) {
    W.push_back(w);
    W_tilde.push_back(w_tilde);
    pairs.push_back(std::move(pair));
  }
  void append_point(Complex w, Complex w_tilde) {
    W.push_back(w);
    W_tilde.push_back(w_tilde);
  }
};

struct GridStart {
  UnitPair pair;
  Complex lambda0;
  /// Position of the representative in the input cloud component.
  std::size_t source_index;
};

struct GridOptions {
  /// Also emit representatives of row/column 0 and B-1; neighbours outside
  /// the grid count as empty.
  bool include_border = false;
  /// p = iteration² / penalty_divisor · extent.
  double penalty_divisor = 100.0;
};

/// Box-grid start selection over one cloud component.
struct GridSelection {
  std::size_t boxes_per_side = 0;
  /// Row-major B×B; row k counts down from the top (largest imaginary part).
  std::vector<std::uint8_t> occupancy;
  /// 1-based index of each box's representative after pruning, 0 = none.
  std::vector<std::size_t> index;
  std::vector<GridStart> starts;
  double penalty = 0.0;
  double cell_width = 0.0;
  double cell_height = 0.0;

  bool occupied(std::size_t k, std::size_t l) const { return occupancy[k * boxes_per_side + l] != 0; }
  std::size_t index_at(std::size_t k, std::size_t l) const { return index[k * boxes_per_side + l]; }
};

struct BoxIndex {
  std::size_t row;
  std::size_t col;
};

/// Box of `z` for a grid anchored at (re_min, im_max) with the given cell
/// sizes; clamps the far edge into the last box.
BoxIndex box_of(Complex z, double re_min, double im_max, double cell_width, double cell_height,
                std::size_t boxes_per_side);

GridSelection grid_select(std::span<const Complex> cloud_component, std::span<const UnitPair> pairs,
                          std::size_t boxes_per_side, std::size_t iteration, const GridOptions& options = {});

/// True iff previous > 0 and ratio < current / previous ≤ 1.
bool should_escalate(std::size_t previous_count, std::size_t current_count, double ratio = 0.99);

}  // namespace qnr
