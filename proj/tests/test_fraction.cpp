#include <doctest.h>

#include "qzeta/fraction.hpp"

using namespace qzeta;

namespace {

PochFactor tfac(std::int64_t len) { return PochFactor(Laurent::t(), 1, len); }

}  // namespace

TEST_CASE("fraction equality by cross-multiplication") {
  // 1/(1-t) == (1+t)/(1-t^2)
  Fraction a(Laurent(1), {tfac(1)});
  Fraction b(Laurent(1) + Laurent::t(), {PochFactor(Laurent::t(2), 2, 1)});
  CHECK(a == b);
  Fraction c(Laurent(1) + Laurent::t() + Laurent::t(2),
             {PochFactor(Laurent::t(2), 2, 1)});
  CHECK_FALSE(a == c);
}

TEST_CASE("factored denominators expand as pochhammers") {
  PochFactor f(Laurent::t(), 1, 2);  // (t; q)_2
  CHECK(f.expand() == (Laurent(1) - Laurent::t()) *
                          (Laurent(1) - Laurent::t() * Laurent::q()));
  CHECK(f.binomials().size() == 2);
  CHECK_THROWS_AS(PochFactor(Laurent(1) + Laurent::t(), 1, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(PochFactor(Laurent::t(), 0, 1), std::invalid_argument);
}

TEST_CASE("addition over a common factored denominator") {
  // 1/(1-t) + t/(1-t) = (1+t)/(1-t)
  Fraction a(Laurent(1), {tfac(1)});
  Fraction b(Laurent::t(), {tfac(1)});
  Fraction s = a + b;
  CHECK(s == Fraction(Laurent(1) + Laurent::t(), {tfac(1)}));
  // shared factors are not duplicated in the common denominator
  CHECK(s.den().size() == 1);

  // 1/(1-t) - 1/(1-tq) = (t q - t)/((1-t)(1-tq))
  Fraction c(Laurent(1), {PochFactor(Laurent::monomial(1, 1, 1), 1, 1)});
  Fraction d = a - c;
  CHECK(d.den().size() == 2);
  CHECK(d.num() == Laurent::t() - Laurent::monomial(1, 1, 1));
}

TEST_CASE("fraction substitution") {
  // 1/(t q^-1; q^-1)_2 under q -> q^-1 becomes 1/(t q; q)_2
  Fraction a(Laurent(1), {PochFactor(Laurent::monomial(1, -1, 1), -1, 2)});
  Fraction b = a.substitute(Var::Q, Laurent::q(-1));
  REQUIRE(b.den().size() == 1);
  CHECK(b.den()[0].base == Laurent::monomial(1, 1, 1));
  CHECK(b.den()[0].step == 1);
  CHECK(b.den()[0].len == 2);
}

TEST_CASE("t-series expansion") {
  // 1/(1-t) = 1 + t + t^2 + ...
  Fraction geom(Laurent(1), {tfac(1)});
  TSeries s = geom.t_series(4);
  for (std::int64_t j = 0; j <= 4; ++j) CHECK(s.coeff(j) == Laurent(1));

  // (1+t)/(1 - t^2 q^-2): t^2 coefficient is q^-2
  Fraction f(Laurent(1) + Laurent::t(),
             {PochFactor(Laurent::monomial(1, -2, 2), -2, 1)});
  TSeries s2 = f.t_series(3);
  CHECK(s2.coeff(0) == Laurent(1));
  CHECK(s2.coeff(1) == Laurent(1));
  CHECK(s2.coeff(2) == Laurent::q(-2));
  CHECK(s2.coeff(3) == Laurent::q(-2));

  // a denominator factor without t cannot be expanded
  Fraction bad(Laurent(1), {PochFactor(Laurent::q(), 1, 1)});
  CHECK_THROWS_AS(bad.t_series(2), std::domain_error);
}

TEST_CASE("series arithmetic truncates at the smaller order") {
  TSeries a(3), b(2);
  a.set_coeff(0, Laurent(1));
  a.set_coeff(2, Laurent::q());
  b.set_coeff(1, Laurent(1));
  TSeries sum = a + b;
  CHECK(sum.order() == 2);
  CHECK(sum.coeff(1) == Laurent(1));
  TSeries prod = a * b;
  CHECK(prod.order() == 2);
  CHECK(prod.coeff(1) == Laurent(1));
  CHECK(prod.coeff(2).is_zero());
  CHECK_THROWS_AS(a.set_coeff(1, Laurent::t()), std::invalid_argument);
}

TEST_CASE("exact cancellation to a Laurent polynomial") {
  Laurent value = Laurent(1) + Laurent::monomial(1, -1, 1);
  Fraction f(value * poch(Laurent::t(), 1, 2), {tfac(2)});
  CHECK(f.to_laurent_exact() == value);
  Fraction g(Laurent(1), {tfac(1)});
  CHECK_THROWS_AS(g.to_laurent_exact(), std::domain_error);
}
