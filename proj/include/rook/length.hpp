#pragma once

#include "rook/one_line.hpp"

#include <utility>
#include <vector>

namespace rook {

/// Pairs (i, j), 1-based with i < j, such that 0 < a_i < a_j.
struct CoinversionSet {
  std::vector<std::pair<int, int>> pairs;

  int count() const noexcept { return static_cast<int>(pairs.size()); }
};

CoinversionSet coinversions(const OneLine& x);

/// a_i + n - i for a nonzero entry, 0 otherwise. `i` is 1-based.
int star_weight(const OneLine& x, int i);

/// Dimension of the two-sided Borel orbit of x: sum of star weights minus
/// the number of coinversion pairs.
int length(const OneLine& x);

/// Classical inversion count. Throws std::invalid_argument unless x is a
/// permutation.
int inversions(const OneLine& w);

/// Sum of the entries: positions on or above a nonzero entry.
int dim_bx(const OneLine& x);
/// Sum of n - i + 1 over nonzero entries: positions on or right of one.
int dim_xb(const OneLine& x);
/// rank(x) + coinv(x).
int dim_meet(const OneLine& x);

struct LengthBreakdown {
  std::vector<int> star_weights;
  int star_sum = 0;
  CoinversionSet coinversions;
  int coinv = 0;
  int rank = 0;
  int length = 0;
  int dim_bx = 0;
  int dim_xb = 0;
  int dim_meet = 0;
};

LengthBreakdown length_breakdown(const OneLine& x);

}  // namespace rook
