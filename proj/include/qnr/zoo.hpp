#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "qnr/linalg.hpp"

namespace qnr {

/// Tridiagonal example: A = tridiag(i, 2, i), B = C = tridiag(3+i, 1, 3+i),
/// D = tridiag(i, -2, i), each half_block_dim square.
BlockMatrix gen_a1(std::size_t half_block_dim);

/// 8×8 example with A = 0, B = I4.
BlockMatrix gen_a2();

/// 4×4 example split 2|2.
BlockMatrix gen_a3();

/// 5×5 example split 3|2.
BlockMatrix gen_a4();

/// Diagonal A = (2, …, 2, -2, …, -2), D = (1+i, …, 1-i, …) with single unit
/// couplings B(1,1) and C(n2,n1). |A5| ≈ 2.36 for every size. Requires an
/// even half_block_dim ≥ 2.
BlockMatrix gen_a5(std::size_t half_block_dim);

/// Generator by name ("a1".."a5"); `dim` is the total dimension for the
/// scalable families and ignored otherwise.
BlockMatrix generate(std::string_view name, std::size_t dim);

/// Reads a dense matrix from JSON ({n, split, entries: [[re, im], …]},
/// row-major) or Matrix Market (array or coordinate; real, integer or
/// complex; general, symmetric, skew-symmetric or hermitian).
///
/// JSON uses its own split unless `split` is given; Matrix Market needs one.
BlockMatrix load_block_matrix(const std::filesystem::path& path, std::optional<Index> split = std::nullopt);

BlockMatrix parse_matrix_json(std::string_view text, std::optional<Index> split = std::nullopt);
BlockMatrix parse_matrix_market(std::istream& in, Index split);

/// JSON in the schema read by parse_matrix_json; doubles round-trip exactly.
std::string matrix_to_json(const BlockMatrix& block);

}  // namespace qnr
