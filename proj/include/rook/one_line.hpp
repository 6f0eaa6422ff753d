#pragma once

#include <Eigen/Core>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rook {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// An element of the rook monoid R_n in one-line notation.
///
/// Entry j (1-based) is the row index of the 1 in column j of the matrix,
/// or 0 when column j is empty. Nonzero values are distinct and at most n.
class OneLine {
 public:
  /// Validates the entries; throws std::invalid_argument on an empty vector,
  /// a value outside [0, n], or a repeated nonzero value.
  explicit OneLine(std::vector<int> entries);

  static OneLine zero(int n);
  static OneLine identity(int n);
  /// (n, n-1, ..., 1), the unique maximal element.
  static OneLine longest(int n);

  int size() const noexcept { return static_cast<int>(entries_.size()); }

  /// 1-based access; throws std::out_of_range.
  int entry(int i) const;

  /// 0-based view over the entries.
  std::span<const int> entries() const noexcept { return entries_; }

  /// Dense integer code, base (n + 1), first entry least significant.
  std::uint64_t code() const noexcept;

  friend bool operator==(const OneLine&, const OneLine&) = default;
  friend auto operator<=>(const OneLine&, const OneLine&) = default;

 private:
  std::vector<int> entries_;
};

/// The same element as an n x n 0-1 matrix.
class RookMatrix {
 public:
  /// Throws std::invalid_argument unless the matrix is square, 0-1, and has
  /// at most one 1 in each row and each column.
  explicit RookMatrix(DenseMatrix<int> cells);

  int size() const noexcept { return static_cast<int>(cells_.rows()); }
  const DenseMatrix<int>& cells() const noexcept { return cells_; }

  friend bool operator==(const RookMatrix& a, const RookMatrix& b) {
    return a.cells_ == b.cells_;
  }

 private:
  DenseMatrix<int> cells_;
};

/// Accepts the canonical `a1,a2,...,an` form and, for n <= 9, the compact
/// digit form `3040`. Surrounding parentheses and whitespace are ignored.
OneLine parse_one_line(std::string_view text);

/// Canonical comma-separated text.
std::string to_string(const OneLine& x);
std::ostream& operator<<(std::ostream& os, const OneLine& x);

OneLine from_matrix(const RookMatrix& m);
RookMatrix to_matrix(const OneLine& x);

template <typename Scalar>
DenseMatrix<Scalar> to_dense(const OneLine& x) {
  const int n = x.size();
  DenseMatrix<Scalar> m = DenseMatrix<Scalar>::Zero(n, n);
  for (int col = 0; col < n; ++col) {
    const int row = x.entries()[col];
    if (row != 0) m(row - 1, col) = Scalar(1);
  }
  return m;
}

/// Matrix product x * y. Throws std::invalid_argument on size mismatch.
OneLine multiply(const OneLine& x, const OneLine& y);

/// Number of nonzero entries.
int rank(const OneLine& x) noexcept;

bool is_permutation(const OneLine& x) noexcept;

/// All of R_n in lexicographic order of the entry vectors.
/// Throws std::invalid_argument unless 1 <= n <= 8.
std::vector<OneLine> enumerate(int n);

/// Reads one element per line; blank lines and `#` comments are skipped.
/// Throws std::invalid_argument naming the offending line.
std::vector<OneLine> read_elements(std::istream& in);

}  // namespace rook

template <>
struct std::hash<rook::OneLine> {
  std::size_t operator()(const rook::OneLine& x) const noexcept {
    return std::hash<std::uint64_t>{}(x.code() * 0x9e3779b97f4a7c15ULL +
                                      static_cast<std::uint64_t>(x.size()));
  }
};
