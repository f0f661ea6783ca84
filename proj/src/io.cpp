#include "qnr/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "qnr/error.hpp"

namespace qnr {

namespace {

std::string format_g(double v, int digits) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string full(double v) { return format_g(v, 17); }

double parse_double(std::string_view field, std::size_t line, std::size_t column) {
  double v = 0.0;
  const auto* first = field.data();
  const auto* last = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) throw ParseError("not a number: '" + std::string(field) + "'", line, column);
  return v;
}

nlohmann::ordered_json complex_list(const std::vector<Complex>& values) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const Complex& z : values) out.push_back({z.real(), z.imag()});
  return out;
}

nlohmann::ordered_json vector_list(const ComplexVector& v) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back({v[i].real(), v[i].imag()});
  return out;
}

}  // namespace

void write_cloud_csv(std::ostream& out, const PointCloud& cloud) {
  out << "re_W,im_W,re_Wt,im_Wt\n";
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    const Complex w = cloud.W[i];
    const Complex wt = cloud.W_tilde[i];
    out << full(w.real()) << ',' << full(w.imag()) << ',' << full(wt.real()) << ',' << full(wt.imag()) << '\n';
  }
  if (!out) throw IoError("failed writing CSV");
}

PointCloud read_cloud_csv(std::istream& in) {
  PointCloud cloud;
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw ParseError("missing CSV header", 1);
  ++line_no;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "re_W,im_W,re_Wt,im_Wt") throw ParseError("unexpected CSV header '" + line + "'", line_no, 1);
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    double v[4];
    std::size_t start = 0;
    for (int k = 0; k < 4; ++k) {
      const std::size_t comma = line.find(',', start);
      const bool last = k == 3;
      if (last != (comma == std::string::npos)) throw ParseError("expected 4 fields", line_no, start + 1);
      const std::size_t end = last ? line.size() : comma;
      v[k] = parse_double(std::string_view(line).substr(start, end - start), line_no, start + 1);
      start = end + 1;
    }
    cloud.append_point({v[0], v[1]}, {v[2], v[3]});
  }
  return cloud;
}

std::string cloud_to_json(const PointCloud& cloud, const CloudMetadata& meta, bool include_pairs) {
  nlohmann::ordered_json doc;
  doc["matrix"] = meta.matrix;
  doc["seed"] = meta.seed;
  doc["budget"] = meta.budget;
  doc["method"] = meta.method;
  doc["count"] = cloud.size();
  doc["W"] = complex_list(cloud.W);
  doc["W_tilde"] = complex_list(cloud.W_tilde);
  if (include_pairs && !cloud.pairs.empty()) {
    nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
    for (const UnitPair& p : cloud.pairs) {
      nlohmann::ordered_json entry;
      entry["x"] = vector_list(p.x());
      entry["y"] = vector_list(p.y());
      pairs.push_back(std::move(entry));
    }
    doc["pairs"] = std::move(pairs);
  }
  return doc.dump();
}

void render_svg(std::ostream& out, const PointCloud& cloud, const std::string& title) {
  if (cloud.empty()) throw InvalidArgument("cannot plot an empty cloud");
  double re_min = std::numeric_limits<double>::infinity(), re_max = -re_min;
  double im_min = re_min, im_max = -re_min;
  auto extend = [&](Complex z) {
    re_min = std::min(re_min, z.real());
    re_max = std::max(re_max, z.real());
    im_min = std::min(im_min, z.imag());
    im_max = std::max(im_max, z.imag());
  };
  for (const Complex& z : cloud.W) extend(z);
  for (const Complex& z : cloud.W_tilde) extend(z);

  double width = re_max - re_min;
  double height = im_max - im_min;
  // A single point or a segment still needs a visible frame.
  const double span = std::max({width, height, 1e-12});
  if (width < 1e-3 * span) width = 1e-3 * span;
  if (height < 1e-3 * span) height = 1e-3 * span;
  const double margin = 0.05 * std::max(width, height);
  const double cx = 0.5 * (re_min + re_max);
  const double cy = 0.5 * (im_min + im_max);
  const double vw = width + 2 * margin;
  const double vh = height + 2 * margin;
  const double x0 = cx - 0.5 * vw;
  const double y0 = -cy - 0.5 * vh;  // SVG's y axis points down
  const double pixel_height = kSvgWidth * vh / vw;
  const double r = kSvgMarkerRadius * vw / kSvgWidth;

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << format_g(kSvgWidth, 6) << "\" height=\""
      << format_g(pixel_height, 6) << "\" viewBox=\"" << format_g(x0, 10) << ' ' << format_g(y0, 10) << ' '
      << format_g(vw, 10) << ' ' << format_g(vh, 10) << "\" preserveAspectRatio=\"xMidYMid meet\">\n";
  if (!title.empty()) {
    std::string escaped;
    for (char c : title) {
      if (c == '<') escaped += "&lt;";
      else if (c == '>') escaped += "&gt;";
      else if (c == '&') escaped += "&amp;";
      else escaped += c;
    }
    out << "<title>" << escaped << "</title>\n";
  }
  out << "<rect x=\"" << format_g(x0, 10) << "\" y=\"" << format_g(y0, 10) << "\" width=\"" << format_g(vw, 10)
      << "\" height=\"" << format_g(vh, 10) << "\" fill=\"white\"/>\n";
  auto group = [&](const std::vector<Complex>& pts, const char* color, const char* name) {
    out << "<g class=\"" << name << "\" fill=\"" << color << "\">\n";
    const std::string radius = format_g(r, 6);
    for (const Complex& z : pts)
      out << "<circle cx=\"" << format_g(z.real(), 9) << "\" cy=\"" << format_g(-z.imag(), 9) << "\" r=\"" << radius
          << "\"/>\n";
    out << "</g>\n";
  };
  group(cloud.W_tilde, kSvgColorWTilde, "w-tilde");
  group(cloud.W, kSvgColorW, "w");
  out << "</svg>\n";
  if (!out) throw IoError("failed writing SVG");
}

std::string report_to_json(const ConcentrationReport& report, const std::string& matrix) {
  nlohmann::ordered_json doc;
  doc["matrix"] = matrix;
  doc["seed"] = report.seed;
  doc["samples_per_dim"] = report.samples_per_dim;
  doc["dims"] = report.dims;
  doc["n0"] = report.n0;
  doc["operator_norms"] = report.operator_norms;
  doc["epsilons"] = report.epsilons;
  doc["exceedance"] = report.exceedance;
  if (report.fitted_decay) doc["fitted_decay"] = *report.fitted_decay;
  return doc.dump(2) + "\n";
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << text;
  out.close();
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace qnr
