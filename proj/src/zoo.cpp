#include "qnr/zoo.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "qnr/error.hpp"

namespace qnr {

namespace {

using namespace std::complex_literals;

ComplexMatrix tridiag(Index n, Complex off, Complex diag) {
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    m(i, i) = diag;
    if (i + 1 < n) {
      m(i, i + 1) = off;
      m(i + 1, i) = off;
    }
  }
  return m;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace

BlockMatrix gen_a1(std::size_t half_block_dim) {
  if (half_block_dim < 2) throw InvalidArgument("a1 needs half_block_dim >= 2");
  const auto n = static_cast<Index>(half_block_dim);
  const ComplexMatrix coupling = tridiag(n, 3.0 + 1i, 1.0);
  return BlockMatrix(tridiag(n, 1i, 2.0), coupling, coupling, tridiag(n, 1i, -2.0));
}

BlockMatrix gen_a2() {
  ComplexMatrix c = tridiag(4, -1.0, -2.0);
  ComplexMatrix d = ComplexMatrix::Zero(4, 4);
  for (Index i = 0; i < 4; ++i) {
    d(i, i) = 1i;
    if (i + 1 < 4) {
      d(i, i + 1) = 5i;
      d(i + 1, i) = -5i;
    }
  }
  return BlockMatrix(ComplexMatrix::Zero(4, 4), ComplexMatrix::Identity(4, 4), std::move(c), std::move(d));
}

BlockMatrix gen_a3() {
  ComplexMatrix m(4, 4);
  m << 0, 0, 0, 1,
       0, 1, 2, 3,
       0, -2, -1, 0,
       -1, -3, 0, 0;
  return BlockMatrix::split(m, 2);
}

BlockMatrix gen_a4() {
  ComplexMatrix m = ComplexMatrix::Zero(5, 5);
  m(1, 2) = 1.0 + 1i;
  m(2, 1) = 2i;
  m(4, 0) = -1.0;
  m(4, 1) = 2.0;
  m(4, 2) = -2.0;
  m(4, 3) = 1i;
  return BlockMatrix::split(m, 3);
}

BlockMatrix gen_a5(std::size_t half_block_dim) {
  if (half_block_dim < 2 || half_block_dim % 2 != 0)
    throw InvalidArgument("a5 needs an even half_block_dim >= 2, got " + std::to_string(half_block_dim));
  const auto n = static_cast<Index>(half_block_dim);
  ComplexMatrix a = ComplexMatrix::Zero(n, n);
  ComplexMatrix d = ComplexMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    const bool first_half = i < n / 2;
    a(i, i) = first_half ? 2.0 : -2.0;
    d(i, i) = first_half ? 1.0 + 1i : 1.0 - 1i;
  }
  ComplexMatrix b = ComplexMatrix::Zero(n, n);
  ComplexMatrix c = ComplexMatrix::Zero(n, n);
  b(0, 0) = 1.0;
  c(n - 1, n - 1) = 1.0;
  return BlockMatrix(std::move(a), std::move(b), std::move(c), std::move(d));
}

BlockMatrix generate(std::string_view name, std::size_t dim) {
  const std::string key = lower(std::string(name));
  if (key == "a1") {
    if (dim % 2 != 0) throw InvalidArgument("a1 needs an even total dimension");
    return gen_a1(dim / 2);
  }
  if (key == "a2") return gen_a2();
  if (key == "a3") return gen_a3();
  if (key == "a4") return gen_a4();
  if (key == "a5") {
    if (dim % 4 != 0) throw InvalidArgument("a5 needs a total dimension divisible by 4");
    return gen_a5(dim / 2);
  }
  throw InvalidArgument("unknown generator '" + std::string(name) + "' (expected a1..a5)");
}

BlockMatrix parse_matrix_json(std::string_view text, std::optional<Index> split) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, column] = line_and_column(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError("invalid JSON", line, column);
  }
  try {
    const auto n = doc.at("n").get<Index>();
    const auto& entries = doc.at("entries");
    if (n < 2) throw ParseError("'n' must be at least 2", 1);
    if (!entries.is_array() || entries.size() != static_cast<std::size_t>(n * n))
      throw ParseError("'entries' must hold n*n = " + std::to_string(n * n) + " [re, im] pairs", 1);
    ComplexMatrix m(n, n);
    for (Index k = 0; k < n * n; ++k) {
      const auto& e = entries[static_cast<std::size_t>(k)];
      if (!e.is_array() || e.size() != 2)
        throw ParseError("entry " + std::to_string(k) + " is not a [re, im] pair", 1);
      m(k / n, k % n) = Complex(e[0].get<double>(), e[1].get<double>());
    }
    Index s;
    if (split)
      s = *split;
    else if (doc.contains("split"))
      s = doc.at("split").get<Index>();
    else
      throw ParseError("missing 'split'", 1);
    return BlockMatrix::split(m, s);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad matrix document: ") + e.what(), 1);
  }
}

BlockMatrix parse_matrix_market(std::istream& in, Index split) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw ParseError("empty Matrix Market file", 1);
  ++line_no;
  std::istringstream header(line);
  std::string banner, object, layout, field, symmetry;
  header >> banner >> object >> layout >> field >> symmetry;
  if (lower(banner) != "%%matrixmarket" || lower(object) != "matrix")
    throw ParseError("missing %%MatrixMarket matrix banner", line_no);
  layout = lower(layout);
  field = lower(field);
  symmetry = lower(symmetry);
  if (layout != "array" && layout != "coordinate") throw ParseError("unknown layout '" + layout + "'", line_no);
  if (field != "real" && field != "integer" && field != "complex")
    throw ParseError("unsupported field '" + field + "'", line_no);
  if (symmetry != "general" && symmetry != "symmetric" && symmetry != "skew-symmetric" && symmetry != "hermitian")
    throw ParseError("unsupported symmetry '" + symmetry + "'", line_no);
  const bool is_complex = field == "complex";

  auto next_data_line = [&](std::string& out) {
    while (std::getline(in, out)) {
      ++line_no;
      const auto first = out.find_first_not_of(" \t\r");
      if (first == std::string::npos || out[first] == '%') continue;
      return true;
    }
    return false;
  };

  if (!next_data_line(line)) throw ParseError("missing size line", line_no + 1);
  std::istringstream size_line(line);
  Index rows = 0, cols = 0, nnz = 0;
  size_line >> rows >> cols;
  if (layout == "coordinate") size_line >> nnz;
  if (!size_line || rows <= 0 || cols <= 0) throw ParseError("malformed size line", line_no);
  if (rows != cols) throw ParseError("matrix must be square", line_no);

  ComplexMatrix m = ComplexMatrix::Zero(rows, cols);
  auto read_value = [&](std::istringstream& is) {
    double re = 0.0, im = 0.0;
    is >> re;
    if (is_complex) is >> im;
    if (!is) throw ParseError("malformed entry", line_no);
    return Complex(re, im);
  };
  auto place = [&](Index i, Index j, Complex v) {
    m(i, j) = v;
    if (i == j) return;
    if (symmetry == "symmetric") m(j, i) = v;
    if (symmetry == "skew-symmetric") m(j, i) = -v;
    if (symmetry == "hermitian") m(j, i) = std::conj(v);
  };

  if (layout == "array") {
    // Column-major; symmetric variants store the lower triangle only.
    const bool lower_only = symmetry != "general";
    for (Index j = 0; j < cols; ++j) {
      for (Index i = lower_only ? j : 0; i < rows; ++i) {
        if (symmetry == "skew-symmetric" && i == j) continue;
        if (!next_data_line(line)) throw ParseError("too few entries", line_no + 1);
        std::istringstream is(line);
        place(i, j, read_value(is));
      }
    }
  } else {
    for (Index k = 0; k < nnz; ++k) {
      if (!next_data_line(line)) throw ParseError("expected " + std::to_string(nnz) + " entries", line_no + 1);
      std::istringstream is(line);
      Index i = 0, j = 0;
      is >> i >> j;
      if (!is || i < 1 || j < 1 || i > rows || j > cols) throw ParseError("bad coordinate", line_no);
      place(i - 1, j - 1, read_value(is));
    }
  }
  return BlockMatrix::split(m, split);
}

BlockMatrix load_block_matrix(const std::filesystem::path& path, std::optional<Index> split) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  const bool is_json = lower(path.extension().string()) == ".json" || (first != std::string::npos && text[first] == '{');
  if (is_json) return parse_matrix_json(text, split);
  if (!split) throw SplitOutOfRange("a split index is required for Matrix Market input");
  std::istringstream stream(text);
  return parse_matrix_market(stream, *split);
}

std::string matrix_to_json(const BlockMatrix& block) {
  const ComplexMatrix m = assemble(block);
  nlohmann::json entries = nlohmann::json::array();
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) entries.push_back({m(i, j).real(), m(i, j).imag()});
  nlohmann::json doc;
  doc["n"] = m.rows();
  doc["split"] = block.n1();
  doc["entries"] = std::move(entries);
  return doc.dump();
}

}  // namespace qnr
