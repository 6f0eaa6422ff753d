#pragma once

#include "rook/one_line.hpp"

#include <cstdint>

namespace rook {

/// A finite list of flattened n x n matrices and the exact rank of its span.
/// Rows are vectors of length n^2 in row-major cell order.
struct MatrixSpan {
  int ambient_dim = 0;
  DenseMatrix<std::int64_t> basis_rows;
  int rank = 0;
};

/// Span of { E_ij * x : i <= j }, i.e. the upper-triangular matrices times x.
MatrixSpan left_span(const OneLine& x);

/// Span of { x * E_ij : i <= j }.
MatrixSpan right_span(const OneLine& x);

/// dim(left ∩ right) = rank(left) + rank(right) - rank(left + right).
/// Throws std::invalid_argument if the ambient dimensions differ.
int meet_dim(const MatrixSpan& left, const MatrixSpan& right);

struct OrbitDimensions {
  int left = 0;
  int right = 0;
  int meet = 0;
  int length = 0;
};

OrbitDimensions orbit_dimensions(const OneLine& x);

/// Orbit dimension computed from explicit spans, independent of the
/// closed-form length.
int oracle_length(const OneLine& x);

}  // namespace rook
