#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qzeta/fraction.hpp"
#include "qzeta/laurent.hpp"
#include "qzeta/partition.hpp"

namespace qzeta {

/// Andrews-Gordon (modulus 2m+3) or Bressoud (modulus 2m+2) sum family.
struct SumFamily {
  enum Kind { AG, Br };
  Kind kind;
  int m;

  SumFamily(Kind k, int m_) : kind(k), m(m_) {
    if (m < 1) throw std::invalid_argument("sum family needs m >= 1");
  }
  int modulus() const { return kind == AG ? 2 * m + 3 : 2 * m + 2; }
};

/// Truncated power series in q (integer coefficients, degrees 0..order).
struct QSeries {
  std::int64_t order = 0;
  Laurent poly;  // pure q, degrees within [0, order]

  friend bool operator==(const QSeries&, const QSeries&) = default;
};

/// Hypergeometric form of the one-row Hall polynomial
///   G^r_s(q) = q^{sum s_i (r_i - s_i)} prod_i [r_i - s_{i+1} over r_i - s_i]_{q^-1}
/// with r_{m+1} = s_{m+1} = 0.  Returns exactly 0 unless r and s are weakly
/// decreasing and nonnegative with r_i >= s_i (explicit guard).
Laurent g_skew(std::span<const std::int64_t> r, std::span<const std::int64_t> s);

/// Hall polynomial g^lambda_mu(q): the number of submodules of type mu
/// (equivalently cotype mu) inside a module of type lambda over a DVR with
/// residue field F_q.  Computed as G^{lambda'}_{mu'}(q); zero if mu is not
/// contained in lambda.
Laurent hall_g(const Partition& lambda, const Partition& mu);

/// AG_n(q,t; 2m+3): the t-deformed finitized Andrews-Gordon multi-sum.
/// A polynomial in q and t; only even t-powers occur.
Laurent ag_multisum(int m, std::int64_t n);

/// Br_n(q, sign*t; 2m+2) as a fraction over the common denominator
/// (-sign*t*q; q)_n.  sign is +1 or -1.
Fraction br_multisum(int m, std::int64_t n, int sign);

/// Single-sum finitization (t = 1 specialization):
///   AG: (q;q)_n sum_r (-1)^r q^{C(r,2)+(m+1)r^2} / ((q;q)_{n-r}(q;q)_{n+r})
///   Br: same with exponent (m+1)r^2, normalized by the extra (-q;q)_n
///       that clears the Bressoud denominator.
/// Both are q-polynomials; the multisums at t = 1 reproduce them after
/// cross-multiplication.
Laurent singlesum(const SumFamily& fam, std::int64_t n);

/// The m-fold infinite sum truncated to q-degree N.  The AG denominator
/// chain ends in (q;q)_{n_m}, the Br chain in (q^2;q^2)_{n_m}.
QSeries infinite_sum(const SumFamily& fam, std::int64_t N);

/// Product side of the central identity, truncated to q-degree N:
///   AG: (q^{m+1}, q^{m+2}, q^{2m+3}; q^{2m+3})_inf / (q;q)_inf
///   Br: (q^{m+1}, q^{m+1}, q^{2m+2}; q^{2m+2})_inf / (q;q)_inf
QSeries product_side(const SumFamily& fam, std::int64_t N);

// Truncated pure-q series helpers.
Laurent q_truncate(const Laurent& p, std::int64_t N);
Laurent q_mul_trunc(const Laurent& a, const Laurent& b, std::int64_t N);
/// Multiply by 1/(1 - q^k) as a truncated series.
Laurent q_geom_divide(const Laurent& a, std::int64_t k, std::int64_t N);

}  // namespace qzeta
