#include <doctest.h>

#include "qzeta/oracle.hpp"
#include "qzeta/qseries.hpp"

using namespace qzeta;

namespace {

const Laurent kQ = Laurent::q();
const Laurent kOne(1);

Laurent q_pow(std::int64_t e) { return Laurent::q(e); }

}  // namespace

TEST_CASE("g_skew hypergeometric Hall form") {
  std::vector<std::int64_t> r{2}, s{1};
  Laurent g = g_skew(r, s);
  CHECK(g == kOne + kQ);
  // oracle: lines of a 2-dimensional space over F_2, F_3
  EnumGuard guard;
  CHECK(g.eval(2, 1) ==
        Rat((long)hall_count_oracle(Partition({1, 1}), Partition({1}),
                                    FieldSpec::prime(2), guard)));
  CHECK(g.eval(3, 1) ==
        Rat((long)hall_count_oracle(Partition({1, 1}), Partition({1}),
                                    FieldSpec::prime(3), guard)));

  // vanishing guard: rows must be weakly decreasing
  std::vector<std::int64_t> r2{1, 2}, s2{1, 1};
  CHECK(g_skew(r2, s2).is_zero());
  std::vector<std::int64_t> r3{5}, s3{0};
  CHECK(g_skew(r3, s3) == kOne);
  std::vector<std::int64_t> bad{1};
  CHECK_THROWS_AS(g_skew(r2, bad), std::invalid_argument);
}

TEST_CASE("g_skew counts have nonnegative coefficients") {
  for (std::int64_t r1 = 0; r1 <= 6; ++r1)
    for (std::int64_t r2 = 0; r2 <= r1; ++r2)
      for (std::int64_t s1 = 0; s1 <= 6; ++s1)
        for (std::int64_t s2 = 0; s2 <= s1; ++s2) {
          std::vector<std::int64_t> r{r1, r2}, s{s1, s2};
          Laurent g = g_skew(r, s);
          for (const auto& [e, c] : g.terms()) CHECK(c > 0);
        }
}

TEST_CASE("hall polynomial via conjugates") {
  for (std::int64_t m = 1; m <= 3; ++m)
    for (std::int64_t n = 1; n <= 3; ++n)
      for (std::int64_t r = 0; r <= n; ++r)
        CHECK(hall_g(Partition::rectangle(m, n),
                     Partition::rectangle(1, r)) == qbinom(n, r, 1));
  CHECK(hall_g(Partition({2, 2}), Partition({3})).is_zero());
  CHECK(hall_g(Partition({3, 1}), Partition({3, 1})) == kOne);
  CHECK(hall_g(Partition(), Partition()) == kOne);
}

TEST_CASE("AG multisum") {
  for (int m = 1; m <= 3; ++m) CHECK(ag_multisum(m, 0) == kOne);
  CHECK(ag_multisum(1, 1) == kOne + Laurent::monomial(1, 1, 2));

  SUBCASE("only even t-powers appear") {
    for (int m = 1; m <= 3; ++m)
      for (std::int64_t n = 0; n <= 6; ++n) {
        Laurent p = ag_multisum(m, n);
        for (const auto& [e, c] : p.terms()) CHECK(e.et % 2 == 0);
      }
  }

  SUBCASE("t = 1 collapses to the single sum") {
    for (int m = 1; m <= 3; ++m)
      for (std::int64_t n = 0; n <= 6; ++n)
        CHECK(ag_multisum(m, n).substitute(Var::T, kOne) ==
              singlesum({SumFamily::AG, m}, n));
  }
}

TEST_CASE("Bressoud multisum") {
  for (int m = 1; m <= 3; ++m) {
    CHECK(br_multisum(m, 0, +1) == Fraction(kOne));
    CHECK(br_multisum(m, 0, -1) == Fraction(kOne));
  }
  // Br_1(q,t;4) = 1 + q t^2 / (1 + t q)
  Fraction lhs = br_multisum(1, 1, +1);
  Fraction extra(Laurent::monomial(1, 1, 2),
                 {PochFactor(Laurent::monomial(-1, 1, 1), 1, 1)});
  CHECK(lhs == Fraction(kOne) + extra);
  CHECK(lhs.num() == kOne + Laurent::monomial(1, 1, 1) + Laurent::monomial(1, 1, 2));

  SUBCASE("t = 1 against the single sum over (-q;q)_n") {
    for (int m = 1; m <= 3; ++m)
      for (std::int64_t n = 0; n <= 6; ++n) {
        Fraction at1 = br_multisum(m, n, +1).substitute(Var::T, kOne);
        std::vector<PochFactor> den;
        if (n > 0) den.emplace_back(Laurent::monomial(-1, 1, 0), 1, n);
        CHECK(at1 == Fraction(singlesum({SumFamily::Br, m}, n), std::move(den)));
      }
  }

  SUBCASE("the -t specialization at t=1 telescopes to 1/(q;q)_n") {
    for (int m = 1; m <= 3; ++m)
      for (std::int64_t n = 0; n <= 8; ++n) {
        Fraction at1 = br_multisum(m, n, -1).substitute(Var::T, kOne);
        std::vector<PochFactor> den;
        if (n > 0) den.emplace_back(kQ, 1, n);
        CHECK(at1 == Fraction(kOne, std::move(den)));
      }
  }
}

TEST_CASE("single sums") {
  CHECK(singlesum({SumFamily::AG, 1}, 0) == kOne);
  CHECK(singlesum({SumFamily::AG, 1}, 1) == kOne + kQ);
  CHECK(singlesum({SumFamily::Br, 2}, 0) == kOne);
}

TEST_CASE("infinite sums and product sides") {
  // Rogers-Ramanujan: 1,1,1,1,2,2,3,3,4,5,6
  QSeries rr = infinite_sum({SumFamily::AG, 1}, 10);
  Laurent expected = kOne + q_pow(1) + q_pow(2) + q_pow(3) +
                     Laurent(2) * q_pow(4) + Laurent(2) * q_pow(5) +
                     Laurent(3) * q_pow(6) + Laurent(3) * q_pow(7) +
                     Laurent(4) * q_pow(8) + Laurent(5) * q_pow(9) +
                     Laurent(6) * q_pow(10);
  CHECK(rr.poly == expected);
  CHECK(product_side({SumFamily::AG, 1}, 10).poly == expected);

  CHECK(infinite_sum({SumFamily::Br, 2}, 0).poly == kOne);
  CHECK(product_side({SumFamily::AG, 3}, 0).poly == kOne);

  SUBCASE("central identities at modest order") {
    for (int m = 1; m <= 3; ++m) {
      CHECK(infinite_sum({SumFamily::AG, m}, 25) ==
            product_side({SumFamily::AG, m}, 25));
      CHECK(infinite_sum({SumFamily::Br, m}, 25) ==
            product_side({SumFamily::Br, m}, 25));
    }
  }
}
