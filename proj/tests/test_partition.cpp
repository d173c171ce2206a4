#include <doctest.h>

#include <random>
#include <stdexcept>

#include "qzeta/partition.hpp"

using namespace qzeta;

TEST_CASE("construction and normalization") {
  CHECK(Partition({1, 3, 0, 2}) == Partition({3, 2, 1}));
  CHECK(Partition().empty());
  CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
  CHECK(Partition::rectangle(3, 2) == Partition({3, 3}));
  CHECK(Partition::rectangle(0, 5).empty());
}

TEST_CASE("conjugation") {
  CHECK(Partition({2, 1}).conjugate() == Partition({2, 1}));
  CHECK(Partition({3}).conjugate() == Partition({1, 1, 1}));
  std::mt19937 rng(4);
  std::uniform_int_distribution<std::int64_t> d(0, 6);
  for (int i = 0; i < 100; ++i) {
    Partition lam({d(rng), d(rng), d(rng), d(rng)});
    CHECK(lam.conjugate().conjugate() == lam);
    CHECK(lam.conjugate().size() == lam.size());
  }
}

TEST_CASE("complement inside a rectangle") {
  CHECK(Partition({1}).complement_in(2, 2) == Partition({2, 1}));
  CHECK_THROWS_AS(Partition({3}).complement_in(2, 2), std::domain_error);
  CHECK_THROWS_AS(Partition({1, 1, 1}).complement_in(2, 2), std::domain_error);
  for (const auto& lam : subpartitions(Partition::rectangle(3, 4)))
    CHECK(lam.complement_in(3, 4).complement_in(3, 4) == lam);
}

TEST_CASE("concat, duplicate, half-split") {
  CHECK(Partition({2, 1}).concat(Partition({3})) == Partition({3, 2, 1}));
  CHECK(Partition({2, 1}).duplicate() == Partition({2, 2, 1, 1}));
  CHECK(Partition({3}).half_split() == Partition({2, 1}));
  CHECK(Partition({1}).half_split() == Partition({1}));
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::int64_t> d(0, 9);
  for (int i = 0; i < 100; ++i) {
    Partition lam({d(rng), d(rng), d(rng)});
    CHECK(lam.half_split().size() == lam.size());
    CHECK(lam.duplicate().size() == 2 * lam.size());
  }
}

TEST_CASE("containment and subpartitions") {
  CHECK(Partition({3, 2}).contains(Partition({2, 2})));
  CHECK_FALSE(Partition({2, 2}).contains(Partition({3})));
  CHECK(subpartitions(Partition({2, 1})).size() == 5);
  CHECK(subpartitions(Partition()).size() == 1);
  // partitions in an m x n box are counted by a central binomial
  CHECK(subpartitions(Partition::rectangle(2, 2)).size() == 6);
}

TEST_CASE("rectangle minus a column strip") {
  CHECK(Partition::rectangle_minus_ones(3, 4, 2) == Partition({3, 3, 2, 2}));
  CHECK(Partition::rectangle_minus_ones(1, 3, 2) == Partition({1}));
  CHECK(Partition::rectangle_minus_ones(2, 2, 0) == Partition({2, 2}));
  CHECK_THROWS_AS(Partition::rectangle_minus_ones(2, 2, 3),
                  std::invalid_argument);
}

TEST_CASE("decreasing tuple iteration") {
  int count = 0;
  for_each_decreasing_tuple(0, 3, 2, [&](const std::vector<std::int64_t>& s) {
    CHECK(s[0] >= s[1]);
    ++count;
  });
  CHECK(count == 10);  // C(3+2, 2)
  count = 0;
  for_each_decreasing_tuple(-1, 1, 1,
                            [&](const std::vector<std::int64_t>&) { ++count; });
  CHECK(count == 3);
}
