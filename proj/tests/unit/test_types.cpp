#include <doctest.h>

#include "bicrit/errors.hpp"
#include "bicrit/types.hpp"

using namespace bicrit;

TEST_CASE("dominates") {
  CHECK(dominates({2, 4}, {4, 4}));
  CHECK_FALSE(dominates({3, 3}, {3, 3}));
  CHECK_FALSE(dominates({4, 2}, {2, 4}));
  CHECK_FALSE(dominates({2, 4}, {4, 2}));
  CHECK(dominates({1, 1}, {1, 2}));
}

TEST_CASE("dominates is transitive on a small image set") {
  std::vector<CostPair> images;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) images.push_back({a, b});
  }
  for (const auto& x : images) {
    CHECK_FALSE(dominates(x, x));
    for (const auto& y : images) {
      for (const auto& z : images) {
        if (dominates(x, y) && dominates(y, z)) CHECK(dominates(x, z));
      }
    }
  }
}

TEST_CASE("epsilon and weight domains") {
  CHECK_NOTHROW(Epsilon(Rational{1}));
  CHECK_NOTHROW(Epsilon(Rational(1, 100)));
  CHECK_THROWS_AS(Epsilon(Rational{0}), InvalidArgument);
  CHECK_THROWS_AS(Epsilon(Rational(3, 2)), InvalidArgument);
  CHECK_THROWS_AS(Epsilon(Rational(-1, 2)), InvalidArgument);
  CHECK(Epsilon(Rational(1, 2)).base() == Rational(3, 2));
  CHECK_THROWS_AS(Weight(Rational{0}), InvalidArgument);
  CHECK(Weight(Rational(2, 3)).gamma() == Rational(2, 3));
}

TEST_CASE("pow_one_plus_eps") {
  CHECK(pow_one_plus_eps(Epsilon(Rational{1}), 3) == 8);
  CHECK(pow_one_plus_eps(Epsilon(Rational{1}), -1) == Rational(1, 2));
  CHECK(pow_one_plus_eps(Epsilon(Rational(1, 2)), 2) == Rational(9, 4));
}

TEST_CASE("floor_log and ceil_log compare powers exactly") {
  const Rational two{2};
  CHECK(floor_log(two, Rational(3, 5)) == -1);
  CHECK(ceil_log(two, Rational(3, 2)) == 1);
  CHECK(floor_log(two, Rational{8}) == 3);
  CHECK(ceil_log(two, Rational{8}) == 3);
  CHECK(floor_log(two, Rational{1}) == 0);
  CHECK(ceil_log(two, Rational{1}) == 0);
  CHECK(floor_log(two, Rational(1, 8)) == -3);
  CHECK(ceil_log(two, Rational(1, 9)) == -3);
  CHECK(floor_log(Rational(3, 2), Rational(1, 4)) == -4);
  CHECK_THROWS_AS(floor_log(Rational{1}, Rational{2}), InvalidArgument);
  CHECK_THROWS_AS(ceil_log(two, Rational{0}), InvalidArgument);
}

TEST_CASE("floor_log and ceil_log bracket their argument") {
  for (int p = 1; p < 40; ++p) {
    for (int q = 1; q < 12; ++q) {
      const Rational x(p, q);
      const Rational b(5, 4);
      const auto lo = floor_log(b, x);
      const auto hi = ceil_log(b, x);
      CHECK(b.pow(lo) <= x);
      CHECK(b.pow(lo + 1) > x);
      CHECK(b.pow(hi) >= x);
      CHECK(b.pow(hi - 1) < x);
    }
  }
}

TEST_CASE("bounds check and contains") {
  const Bounds ok{2, 5, 2, 5};
  CHECK_NOTHROW(ok.check());
  CHECK(ok.contains({2, 4}));
  CHECK_FALSE(ok.contains({1, 4}));
  CHECK_FALSE(ok.contains({0, 4}));
  CHECK(ok.contains({0, 4}, true));
  CHECK_THROWS_AS((Bounds{0, 1, 1, 1}.check()), InvalidArgument);
  CHECK_THROWS_AS((Bounds{2, 1, 1, 1}.check()), InvalidArgument);
}

TEST_CASE("index range size") {
  CHECK(IndexRange{-1, 1}.size() == 3);
  CHECK(IndexRange{0, 0}.size() == 1);
}
