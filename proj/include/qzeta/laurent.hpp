#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>

namespace qzeta {

using Int = mpz_class;
using Rat = mpq_class;

/// Raised when an enumeration or expansion exceeds its configured guard.
class ResourceError : public std::runtime_error {
public:
  ResourceError(const std::string& what, long long estimate)
      : std::runtime_error(what), estimate(estimate) {}
  long long estimate;
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("exponent overflow in add");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("exponent overflow in mul");
  return r;
}

/// Exponent pair of a term c * q^eq * t^et.
/// The canonical term order is lexicographic by (et, eq).
struct ExpPair {
  std::int64_t et = 0;
  std::int64_t eq = 0;
  friend auto operator<=>(const ExpPair&, const ExpPair&) = default;
};

enum class Var { Q, T };

/// Exact Laurent polynomial in q and t with arbitrary-precision integer
/// coefficients.  Terms with zero coefficient are never stored, so two
/// values are equal iff their term maps are identical.  All operations
/// are pure; values are immutable once built and safe to share.
class Laurent {
public:
  using TermMap = std::map<ExpPair, Int>;

  Laurent() = default;
  Laurent(long c) { add_term(0, 0, Int(c)); }
  Laurent(const Int& c) { add_term(0, 0, c); }

  static Laurent monomial(Int c, std::int64_t eq, std::int64_t et);
  static Laurent q(std::int64_t e = 1) { return monomial(1, e, 0); }
  static Laurent t(std::int64_t e = 1) { return monomial(1, 0, e); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// Coefficient of q^eq * t^et (zero if absent).
  Int coeff(std::int64_t eq, std::int64_t et) const;

  bool is_monomial() const { return terms_.size() == 1; }
  bool is_pure_q() const;

  std::int64_t min_t_degree() const;  // throws on zero polynomial
  std::int64_t max_t_degree() const;
  std::int64_t min_q_degree() const;
  std::int64_t max_q_degree() const;

  /// Slice: the pure-q Laurent coefficient of t^k.
  Laurent t_coefficient(std::int64_t k) const;

  Laurent operator-() const;
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o) { *this = *this * o; return *this; }
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }

  Laurent pow(std::int64_t k) const;  // k >= 0

  /// Substitute a monomial for one variable.  The image must have a single
  /// term with coefficient +1 or -1; a q-image must be a pure q-monomial
  /// with nonzero exponent (so the result stays a Laurent polynomial).
  Laurent substitute(Var var, const Laurent& image) const;

  /// Exact evaluation at rational q, t (negative exponents need nonzero values).
  Rat eval(const Rat& qv, const Rat& tv) const;

  void add_term(std::int64_t eq, std::int64_t et, const Int& c);

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const Laurent& p) {
    return os << p.to_string();
  }

private:
  TermMap terms_;
};

/// q-Pochhammer (base; q^step)_n = prod_{k=0}^{n-1} (1 - base * q^{step k}).
/// base must be a monomial, step nonzero, n >= 0.
Laurent poch(const Laurent& base, std::int64_t step, std::int64_t n);

/// Gaussian binomial [n over k] in the variable q^base_exp, via the Pascal
/// recurrence (memoized); no polynomial division.  Zero when k < 0 or k > n.
Laurent qbinom(std::int64_t n, std::int64_t k, std::int64_t base_exp);

/// Exact division of p by (1 - mono), where mono is a nonconstant monomial.
/// Throws std::domain_error if the division does not terminate exactly.
Laurent divide_by_one_minus(const Laurent& p, const Laurent& mono);

/// Exact division by a whole Pochhammer product (base; q^step)_len.
Laurent divide_by_poch(Laurent p, const Laurent& base, std::int64_t step,
                       std::int64_t len);

/// c^e for rational c (e may be negative; c must be nonzero then).
Rat rat_pow(const Rat& c, std::int64_t e);

}  // namespace qzeta
