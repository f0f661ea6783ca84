#include "qnr/grid.hpp"

#include <algorithm>
#include <cmath>

#include "qnr/error.hpp"

namespace qnr {

namespace {

constexpr double kMinExtent = 1e-300;

std::size_t clamp_box(double coordinate, std::size_t boxes) {
  // Out-of-range values only arise from rounding at the edges.
  if (!(coordinate > 0.0)) return 0;
  const auto k = static_cast<std::size_t>(std::floor(coordinate));
  return std::min(k, boxes - 1);
}

}  // namespace

BoxIndex box_of(Complex z, double re_min, double im_max, double cell_width, double cell_height,
                std::size_t boxes_per_side) {
  return {clamp_box((im_max - z.imag()) / cell_height, boxes_per_side),
          clamp_box((z.real() - re_min) / cell_width, boxes_per_side)};
}

GridSelection grid_select(std::span<const Complex> cloud_component, std::span<const UnitPair> pairs,
                          std::size_t boxes_per_side, std::size_t iteration, const GridOptions& options) {
  if (cloud_component.empty()) throw EmptySet("grid selection needs a non-empty cloud");
  if (boxes_per_side < 2) throw InvalidArgument("boxes_per_side must be at least 2");
  if (pairs.size() != cloud_component.size())
    throw DimensionMismatch("pairs must be aligned with the cloud component");

  double re_min = cloud_component[0].real(), re_max = re_min;
  double im_min = cloud_component[0].imag(), im_max = im_min;
  for (const Complex& z : cloud_component) {
    re_min = std::min(re_min, z.real());
    re_max = std::max(re_max, z.real());
    im_min = std::min(im_min, z.imag());
    im_max = std::max(im_max, z.imag());
  }

  const std::size_t nb = boxes_per_side;
  GridSelection sel;
  sel.boxes_per_side = nb;
  const double width = std::abs(re_max - re_min);
  const double height = std::abs(im_max - im_min);
  const double it = static_cast<double>(iteration);
  sel.penalty = it * it / options.penalty_divisor * std::max(width, height);
  // A collapsed dimension gets unit cells, which puts every point in box 0.
  sel.cell_width = width < kMinExtent ? 1.0 : (re_max - re_min) / static_cast<double>(nb);
  sel.cell_height = height < kMinExtent ? 1.0 : (im_max - im_min) / static_cast<double>(nb);

  sel.occupancy.assign(nb * nb, 0);
  sel.index.assign(nb * nb, 0);
  for (std::size_t j = 0; j < cloud_component.size(); ++j) {
    const BoxIndex box = box_of(cloud_component[j], re_min, im_max, sel.cell_width, sel.cell_height, nb);
    const std::size_t cell = box.row * nb + box.col;
    if (sel.occupancy[cell] == 0) {
      sel.occupancy[cell] = 1;
      sel.index[cell] = j + 1;
    }
  }

  // Scan range: interior rows/columns 1..B-2 (the full 3×3 neighbourhood
  // stays on the grid), or everything with include_border.
  const std::size_t first = options.include_border ? 0 : 1;
  const std::size_t last = options.include_border ? nb : nb - 1;  // exclusive
  auto occupied_or_empty = [&](std::ptrdiff_t k, std::ptrdiff_t l) {
    if (k < 0 || l < 0 || k >= static_cast<std::ptrdiff_t>(nb) || l >= static_cast<std::ptrdiff_t>(nb)) return false;
    return sel.occupancy[static_cast<std::size_t>(k) * nb + static_cast<std::size_t>(l)] != 0;
  };

  for (std::size_t k = first; k < last; ++k) {
    for (std::size_t l = first; l < last; ++l) {
      bool surrounded = true;
      for (int m = -1; m <= 1 && surrounded; ++m)
        for (int n = -1; n <= 1 && surrounded; ++n)
          surrounded = occupied_or_empty(static_cast<std::ptrdiff_t>(k) + m, static_cast<std::ptrdiff_t>(l) + n);
      if (surrounded) sel.index[k * nb + l] = 0;
    }
  }

  for (std::size_t k = first; k < last; ++k) {
    for (std::size_t l = first; l < last; ++l) {
      const std::size_t rep = sel.index[k * nb + l];
      if (rep != 0) sel.starts.push_back({pairs[rep - 1], cloud_component[rep - 1], rep - 1});
    }
  }
  return sel;
}

bool should_escalate(std::size_t previous_count, std::size_t current_count, double ratio) {
  if (previous_count == 0) return false;
  const double r = static_cast<double>(current_count) / static_cast<double>(previous_count);
  return r > ratio && r <= 1.0;
}

}  // namespace qnr
