#pragma once

#include <Eigen/Core>

#include <stdexcept>
#include <type_traits>
#include <utility>

namespace rook {

namespace detail {

template <typename Scalar>
Scalar checked_mul(Scalar a, Scalar b) {
  Scalar r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("exact_rank: overflow");
  return r;
}

template <typename Scalar>
Scalar checked_sub(Scalar a, Scalar b) {
  Scalar r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("exact_rank: overflow");
  return r;
}

}  // namespace detail

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
///
/// After k pivots every live entry is a (k+1)-minor of the input, so each
/// division by the previous pivot is exact. Columns without a pivot are
/// skipped, which keeps that property. Throws std::overflow_error if an
/// intermediate minor does not fit in Scalar.
template <typename Derived>
Eigen::Index exact_rank(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  static_assert(std::is_integral_v<Scalar> && std::is_signed_v<Scalar>,
                "exact_rank requires a signed integral scalar");

  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m = input;
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  Scalar prev_pivot = 1;
  Eigen::Index rank = 0;

  for (Eigen::Index c = 0; c < cols && rank < rows; ++c) {
    Eigen::Index pivot = rank;
    while (pivot < rows && m(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) m.row(pivot).swap(m.row(rank));

    const Scalar p = m(rank, c);
    for (Eigen::Index i = rank + 1; i < rows; ++i) {
      const Scalar f = m(i, c);
      for (Eigen::Index j = c + 1; j < cols; ++j) {
        const Scalar num = detail::checked_sub(detail::checked_mul(p, m(i, j)),
                                               detail::checked_mul(f, m(rank, j)));
        m(i, j) = num / prev_pivot;
      }
      m(i, c) = 0;
    }
    prev_pivot = p;
    ++rank;
  }
  return rank;
}

}  // namespace rook
