#include "doctest.h"

#include "rook/length.hpp"
#include "rook/orbit.hpp"
#include "support/oracles.hpp"

#include <stdexcept>

using rook::OneLine;
using rook::parse_one_line;

namespace {

std::vector<int> as_vector(const OneLine& x) { return {x.entries().begin(), x.entries().end()}; }

}  // namespace

TEST_SUITE_BEGIN("length-dim");

TEST_CASE("coinversions") {
  const auto c = rook::coinversions(parse_one_line("4,0,2,3"));
  CHECK(c.count() == 1);
  CHECK(c.pairs == std::vector<std::pair<int, int>>{{3, 4}});

  CHECK(rook::coinversions(OneLine::longest(5)).count() == 0);

  const auto c6 = rook::coinversions(parse_one_line("3,0,5,1,0,4"));
  CHECK(c6.pairs == std::vector<std::pair<int, int>>{{1, 3}, {1, 6}, {4, 6}});

  // Every listed pair satisfies 0 < a_i < a_j.
  for (const OneLine& x : rook::enumerate(4)) {
    for (const auto& [i, j] : rook::coinversions(x).pairs) {
      CHECK(i < j);
      CHECK(0 < x.entry(i));
      CHECK(x.entry(i) < x.entry(j));
    }
  }
}

TEST_CASE("star_weight") {
  const OneLine x = parse_one_line("4,0,2,3");
  CHECK(rook::star_weight(x, 1) == 7);
  CHECK(rook::star_weight(x, 2) == 0);
  CHECK(rook::star_weight(x, 4) == 3);
  CHECK_THROWS_AS(rook::star_weight(x, 0), std::out_of_range);
  CHECK_THROWS_AS(rook::star_weight(x, 5), std::out_of_range);
}

TEST_CASE("length on worked examples") {
  CHECK(rook::length(parse_one_line("4,0,2,3")) == 12);
  CHECK(rook::length(parse_one_line("4,0,5,0,3,1")) == 21);
  CHECK(rook::length(parse_one_line("4,0,5,0,6,1")) == 22);
  CHECK(rook::length(parse_one_line("2,6,5,0,4,1,7")) == 35);
  CHECK(rook::length(parse_one_line("4,6,5,0,2,1,7")) == 36);
  CHECK(rook::length(parse_one_line("7,6,5,0,4,1,2")) == 42);
  CHECK(rook::length(OneLine::zero(5)) == 0);
  CHECK(rook::length(OneLine::identity(4)) == 10);
}

TEST_CASE("length of (6,0,5,0,3,1) is 24 by formula and by spans") {
  const OneLine z = parse_one_line("6,0,5,0,3,1");
  CHECK(rook::length(z) == 24);
  CHECK(rook::oracle_length(z) == 24);
  CHECK(rook::coinversions(z).count() == 0);
}

TEST_CASE("inversions") {
  CHECK(rook::inversions(parse_one_line("3,1,4,2")) == 3);
  CHECK(rook::inversions(OneLine::identity(4)) == 0);
  for (int n = 1; n <= 6; ++n) {
    CHECK(rook::inversions(OneLine::longest(n)) == static_cast<int>(rook::testing::binomial(n, 2)));
  }
  CHECK_THROWS_AS(rook::inversions(parse_one_line("3,0,4,0")), std::invalid_argument);
}

TEST_CASE("orbit dimension parts") {
  const OneLine x = parse_one_line("4,0,2,3");
  CHECK(rook::dim_bx(x) == 9);
  CHECK(rook::dim_xb(x) == 7);
  CHECK(rook::dim_meet(x) == 4);
  CHECK(rook::dim_bx(OneLine::zero(3)) == 0);
  CHECK(rook::dim_xb(OneLine::zero(3)) == 0);
  CHECK(rook::dim_meet(OneLine::zero(3)) == 0);
  CHECK(rook::dim_bx(OneLine::identity(3)) == 6);
  CHECK(rook::dim_xb(OneLine::identity(3)) == 6);
  CHECK(rook::dim_meet(parse_one_line("1,2")) == 3);
}

TEST_CASE("breakdown invariants over R_1..R_5") {
  for (int n = 1; n <= 5; ++n) {
    for (const OneLine& x : rook::enumerate(n)) {
      const rook::LengthBreakdown b = rook::length_breakdown(x);
      CHECK(b.length == b.star_sum - b.coinv);
      CHECK(b.length == b.dim_bx + b.dim_xb - b.dim_meet);
      CHECK(b.dim_meet == b.rank + b.coinv);
      CHECK(b.length == rook::length(x));
      CHECK(b.length == rook::testing::length_by_definition(as_vector(x)));
    }
  }
}

TEST_CASE("permutations: length = inv + C(n+1,2)") {
  for (int n = 1; n <= 5; ++n) {
    for (const OneLine& w : rook::enumerate(n)) {
      if (!rook::is_permutation(w)) continue;
      CHECK(rook::length(w) ==
            rook::testing::inversion_count(as_vector(w)) + static_cast<int>(rook::testing::binomial(n + 1, 2)));
    }
  }
}

TEST_CASE("length range: 0 only at zero, n^2 only at the longest element") {
  for (int n = 1; n <= 4; ++n) {
    for (const OneLine& x : rook::enumerate(n)) {
      const int l = rook::length(x);
      CHECK(l >= 0);
      CHECK(l <= n * n);
      CHECK((l == 0) == (x == OneLine::zero(n)));
      CHECK((l == n * n) == (x == OneLine::longest(n)));
    }
  }
}

TEST_SUITE_END();
