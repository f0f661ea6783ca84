#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>

#include "qnr/concentration.hpp"
#include "qnr/grid.hpp"

namespace qnr {

/// Header "re_W,im_W,re_Wt,im_Wt", one row per point, 17 significant digits.
void write_cloud_csv(std::ostream& out, const PointCloud& cloud);
/// Reads the points back (pairs are not part of the CSV).
PointCloud read_cloud_csv(std::istream& in);

struct CloudMetadata {
  std::string matrix;
  std::uint64_t seed = 0;
  std::string budget;
  std::string method;
};

/// Cloud plus metadata; pairs are written as {x, y} lists of [re, im] when
/// `include_pairs` is set and the cloud carries them.
std::string cloud_to_json(const PointCloud& cloud, const CloudMetadata& meta, bool include_pairs = true);

/// Scatter plot colours and marker radius (in output pixels).
inline constexpr const char* kSvgColorW = "#08306b";
inline constexpr const char* kSvgColorWTilde = "#6baed6";
inline constexpr double kSvgMarkerRadius = 1.2;
inline constexpr double kSvgWidth = 800.0;

/// One <circle> per point of W and W̃, equal axis scaling, 5% margin.
void render_svg(std::ostream& out, const PointCloud& cloud, const std::string& title = {});

/// Deterministic JSON for a concentration report.
std::string report_to_json(const ConcentrationReport& report, const std::string& matrix);

/// Writes `text` to `path`, reporting failures with the path.
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace qnr
