#include "rook/orbit.hpp"

#include "rook/exact_rank.hpp"

#include <stdexcept>

namespace rook {

namespace {

using IntMatrix = DenseMatrix<std::int64_t>;

IntMatrix unit(int n, int i, int j) {
  IntMatrix e = IntMatrix::Zero(n, n);
  e(i, j) = 1;
  return e;
}

template <typename Product>
MatrixSpan triangular_span(const OneLine& x, Product&& product) {
  const int n = x.size();
  const IntMatrix dense = to_dense<std::int64_t>(x);
  MatrixSpan span;
  span.ambient_dim = n * n;
  span.basis_rows.resize(n * (n + 1) / 2, n * n);
  int row = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const IntMatrix p = product(unit(n, i, j), dense);
      for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) span.basis_rows(row, r * n + c) = p(r, c);
      }
      ++row;
    }
  }
  span.rank = static_cast<int>(exact_rank(span.basis_rows));
  return span;
}

}  // namespace

MatrixSpan left_span(const OneLine& x) {
  return triangular_span(x, [](const IntMatrix& e, const IntMatrix& m) -> IntMatrix { return e * m; });
}

MatrixSpan right_span(const OneLine& x) {
  return triangular_span(x, [](const IntMatrix& e, const IntMatrix& m) -> IntMatrix { return m * e; });
}

int meet_dim(const MatrixSpan& left, const MatrixSpan& right) {
  if (left.ambient_dim != right.ambient_dim) {
    throw std::invalid_argument("meet_dim: ambient dimensions differ");
  }
  IntMatrix stacked(left.basis_rows.rows() + right.basis_rows.rows(), left.ambient_dim);
  stacked << left.basis_rows, right.basis_rows;
  const int joint = static_cast<int>(exact_rank(stacked));
  return left.rank + right.rank - joint;
}

OrbitDimensions orbit_dimensions(const OneLine& x) {
  const MatrixSpan l = left_span(x);
  const MatrixSpan r = right_span(x);
  OrbitDimensions d;
  d.left = l.rank;
  d.right = r.rank;
  d.meet = meet_dim(l, r);
  d.length = d.left + d.right - d.meet;
  return d;
}

int oracle_length(const OneLine& x) { return orbit_dimensions(x).length; }

}  // namespace rook
