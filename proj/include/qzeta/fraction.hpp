#pragma once

#include <cstdint>
#include <vector>

#include "qzeta/laurent.hpp"
#include "qzeta/tseries.hpp"

namespace qzeta {

/// One denominator factor: the Pochhammer product
/// (base; q^step)_len = prod_{k=0}^{len-1} (1 - base * q^{step k}),
/// with base a monomial and step nonzero.
struct PochFactor {
  Laurent base;
  std::int64_t step = 1;
  std::int64_t len = 0;

  PochFactor() = default;
  PochFactor(Laurent b, std::int64_t s, std::int64_t l);

  Laurent expand() const { return poch(base, step, len); }
  /// The individual binomial monomials base * q^{step k}, k = 0..len-1.
  std::vector<Laurent> binomials() const;

  friend bool operator==(const PochFactor&, const PochFactor&);
  friend bool operator<(const PochFactor&, const PochFactor&);
};

/// Rational value num / prod(den factors).  Denominators are kept in
/// factored Pochhammer form and never reduced to lowest terms; equality
/// is decided by cross-multiplication of expanded denominators.
class Fraction {
public:
  Fraction() : num_(1) {}
  Fraction(Laurent num) : num_(std::move(num)) {}
  Fraction(Laurent num, std::vector<PochFactor> den);

  const Laurent& num() const { return num_; }
  const std::vector<PochFactor>& den() const { return den_; }
  Laurent den_expanded() const;

  bool is_polynomial_form() const { return den_.empty(); }

  friend Fraction operator*(const Fraction& a, const Fraction& b);
  friend Fraction operator+(const Fraction& a, const Fraction& b);
  friend Fraction operator-(const Fraction& a, const Fraction& b);
  /// Exact equality by cross-multiplication.
  friend bool operator==(const Fraction& a, const Fraction& b);

  Fraction substitute(Var var, const Laurent& image) const;

  /// Expand as a power series in t up to t-degree `order`.  Every
  /// denominator binomial must have positive t-degree (constant term 1).
  TSeries t_series(std::int64_t order) const;

  /// Cancel the denominator into the numerator exactly; throws
  /// std::domain_error if any factor does not divide.
  Laurent to_laurent_exact() const;

private:
  Laurent num_;
  std::vector<PochFactor> den_;  // canonically sorted
  void normalize();
};

}  // namespace qzeta
