#include "rook/length.hpp"

#include <stdexcept>

namespace rook {

CoinversionSet coinversions(const OneLine& x) {
  CoinversionSet result;
  const auto a = x.entries();
  for (int i = 0; i < x.size(); ++i) {
    if (a[i] == 0) continue;
    for (int j = i + 1; j < x.size(); ++j) {
      if (a[i] < a[j]) result.pairs.emplace_back(i + 1, j + 1);
    }
  }
  return result;
}

int star_weight(const OneLine& x, int i) {
  const int a = x.entry(i);
  return a == 0 ? 0 : a + x.size() - i;
}

int length(const OneLine& x) {
  int sum = 0;
  for (int i = 1; i <= x.size(); ++i) sum += star_weight(x, i);
  return sum - coinversions(x).count();
}

int inversions(const OneLine& w) {
  if (!is_permutation(w)) {
    throw std::invalid_argument("inversions: " + to_string(w) + " is not a permutation");
  }
  const auto a = w.entries();
  int count = 0;
  for (int i = 0; i < w.size(); ++i) {
    for (int j = i + 1; j < w.size(); ++j) count += a[i] > a[j];
  }
  return count;
}

int dim_bx(const OneLine& x) {
  int sum = 0;
  for (int v : x.entries()) sum += v;
  return sum;
}

int dim_xb(const OneLine& x) {
  int sum = 0;
  for (int i = 1; i <= x.size(); ++i) {
    if (x.entry(i) != 0) sum += x.size() - i + 1;
  }
  return sum;
}

int dim_meet(const OneLine& x) { return rank(x) + coinversions(x).count(); }

LengthBreakdown length_breakdown(const OneLine& x) {
  LengthBreakdown b;
  b.star_weights.reserve(x.size());
  for (int i = 1; i <= x.size(); ++i) {
    b.star_weights.push_back(star_weight(x, i));
    b.star_sum += b.star_weights.back();
  }
  b.coinversions = coinversions(x);
  b.coinv = b.coinversions.count();
  b.rank = rank(x);
  b.length = b.star_sum - b.coinv;
  b.dim_bx = dim_bx(x);
  b.dim_xb = dim_xb(x);
  b.dim_meet = b.rank + b.coinv;
  return b;
}

}  // namespace rook
