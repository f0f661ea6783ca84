#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "qnr/error.hpp"
#include "qnr/zoo.hpp"
#include "support.hpp"

using namespace qnr;
using namespace std::complex_literals;

namespace {

std::filesystem::path temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("qnr_test_" + name);
  std::ofstream(path, std::ios::binary) << text;
  return path;
}

}  // namespace

TEST_CASE("tridiagonal example") {
  const BlockMatrix a1 = gen_a1(2);
  ComplexMatrix a(2, 2), b(2, 2), d(2, 2);
  a << 2.0, 1i, 1i, 2.0;
  b << 1.0, 3.0 + 1i, 3.0 + 1i, 1.0;
  d << -2.0, 1i, 1i, -2.0;
  CHECK(a1.A() == a);
  CHECK(a1.B() == b);
  CHECK(a1.C() == b);
  CHECK(a1.D() == d);

  const BlockMatrix big = gen_a1(20);
  CHECK(big.dim() == 40);
  const ComplexMatrix m = assemble(big);
  CHECK(m == m.transpose());
  CHECK(big.A() == big.A().transpose());
  CHECK_THROWS_AS(gen_a1(1), InvalidArgument);
}

TEST_CASE("fixed examples") {
  const BlockMatrix a2 = gen_a2();
  CHECK(a2.dim() == 8);
  CHECK(a2.B() == ComplexMatrix::Identity(4, 4));
  CHECK(a2.A() == ComplexMatrix::Zero(4, 4));
  CHECK(a2.C()(1, 0) == Complex(-1.0));
  CHECK(a2.C()(1, 1) == Complex(-2.0));
  CHECK(a2.D()(0, 1) == 5i);
  CHECK(a2.D()(1, 0) == -5i);
  CHECK(a2.D()(2, 2) == 1i);

  // Second row of the printed 4×4 example is "0 1 2 3".
  const ComplexMatrix a3 = assemble(gen_a3());
  CHECK(a3(1, 3) == Complex(3.0));
  CHECK(a3(1, 2) == Complex(2.0));

  const BlockMatrix a4 = gen_a4();
  CHECK(a4.n1() == 3);
  CHECK(a4.n2() == 2);
  CHECK(a4.C()(1, 0) == Complex(-1.0));
  CHECK(a4.D()(1, 0) == 1i);
  CHECK(a4.A()(1, 2) == 1.0 + 1i);
}

TEST_CASE("diagonal example with unit couplings") {
  for (const std::size_t k : {2, 4, 8, 32, 64}) {
    const BlockMatrix a5 = gen_a5(k);
    CHECK(std::abs(operator_norm(assemble(a5)) - 2.36) <= 0.02);
    CHECK(a5.D().isDiagonal());
    CHECK(a5.B().cwiseAbs().sum() == 1.0);
    CHECK(a5.C().cwiseAbs().sum() == 1.0);
    CHECK(a5.C()(a5.n2() - 1, a5.n1() - 1) == Complex(1.0));
  }
  CHECK_THROWS_AS(gen_a5(3), InvalidArgument);
  CHECK_THROWS_AS(gen_a5(0), InvalidArgument);
}

TEST_CASE("generators by name") {
  CHECK(generate("a1", 10) == gen_a1(5));
  CHECK(generate("A3", 0) == gen_a3());
  CHECK(generate("a5", 16) == gen_a5(8));
  CHECK_THROWS_AS(generate("a5", 10), InvalidArgument);
  CHECK_THROWS_AS(generate("a6", 10), InvalidArgument);
}

TEST_CASE("JSON matrices") {
  const std::string a3_json =
      R"({"n": 4, "split": 2, "entries": [[0,0],[0,0],[0,0],[1,0], [0,0],[1,0],[2,0],[3,0],)"
      R"( [0,0],[-2,0],[-1,0],[0,0], [-1,0],[-3,0],[0,0],[0,0]]})";
  CHECK(parse_matrix_json(a3_json) == gen_a3());
  CHECK(load_block_matrix(temp_file("a3.json", a3_json)) == gen_a3());
  CHECK(load_block_matrix(temp_file("a3.json", a3_json), 1).n1() == 1);
  CHECK_THROWS_AS(load_block_matrix(temp_file("a3.json", a3_json), 0), SplitOutOfRange);

  Rng rng(1);
  const BlockMatrix random = qnr::testing::random_block(3, 4, rng);
  const std::string text = matrix_to_json(random);
  CHECK(parse_matrix_json(text) == random);
  CHECK(matrix_to_json(parse_matrix_json(text)) == text);
}

TEST_CASE("JSON errors report a position") {
  try {
    parse_matrix_json("{\n  \"n\": 2,\n  \"split\": 1\n  \"entries\": []\n}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
  CHECK_THROWS_AS(parse_matrix_json(R"({"n": 2, "split": 1, "entries": [[1,0]]})"), ParseError);
  CHECK_THROWS_AS(parse_matrix_json(R"({"n": 2, "entries": [[1,0],[0,0],[0,0],[1,0]]})"), ParseError);
  CHECK_THROWS_AS(parse_matrix_json(R"({"n": 2, "split": 1, "entries": [[1],[0,0],[0,0],[1,0]]})"), ParseError);
}

TEST_CASE("Matrix Market input") {
  const std::string identity =
      "%%MatrixMarket matrix array real general\n% identity\n4 4\n"
      "1\n0\n0\n0\n0\n1\n0\n0\n0\n0\n1\n0\n0\n0\n0\n1\n";
  const BlockMatrix id = load_block_matrix(temp_file("id.mtx", identity), 2);
  CHECK(id.A() == ComplexMatrix::Identity(2, 2));
  CHECK(id.D() == ComplexMatrix::Identity(2, 2));
  CHECK(id.B() == ComplexMatrix::Zero(2, 2));
  CHECK_THROWS_AS(load_block_matrix(temp_file("id.mtx", identity)), SplitOutOfRange);

  std::istringstream herm(
      "%%MatrixMarket matrix coordinate complex hermitian\n3 3 3\n1 1 2 0\n3 1 1 2\n2 2 0 -1\n");
  const BlockMatrix h = parse_matrix_market(herm, 1);
  const ComplexMatrix m = assemble(h);
  CHECK(m(2, 0) == 1.0 + 2i);
  CHECK(m(0, 2) == 1.0 - 2i);
  CHECK(m(1, 1) == -1i);

  std::istringstream skew("%%MatrixMarket matrix array integer skew-symmetric\n3 3\n4\n5\n6\n");
  const ComplexMatrix s = assemble(parse_matrix_market(skew, 2));
  CHECK(s(1, 0) == Complex(4.0));
  CHECK(s(0, 1) == Complex(-4.0));
  CHECK(s(2, 1) == Complex(6.0));
  CHECK(s(1, 1) == Complex(0.0));
}

TEST_CASE("Matrix Market errors report a line") {
  std::istringstream bad("%%MatrixMarket matrix coordinate real general\n2 2 2\n1 1 1.0\n3 1 1.0\n");
  try {
    parse_matrix_market(bad, 1);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
  std::istringstream banner("%%NotMarket matrix array real general\n");
  CHECK_THROWS_AS(parse_matrix_market(banner, 1), ParseError);
  std::istringstream nonsquare("%%MatrixMarket matrix array real general\n2 3\n");
  CHECK_THROWS_AS(parse_matrix_market(nonsquare, 1), ParseError);
  CHECK_THROWS_AS(load_block_matrix("/nonexistent/matrix.json"), IoError);
}
