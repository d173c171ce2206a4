#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "qzeta/fraction.hpp"
#include "qzeta/laurent.hpp"
#include "qzeta/partition.hpp"

namespace qzeta {

/// The three families of non-maximal quadratic orders over F_q((X)):
/// ramified (modulus 2m+1), split (2m), inert (2m).
enum class Family { Ramified, Split, Inert };

struct OrderFamily {
  Family kind;
  int m;

  OrderFamily(Family k, int m_) : kind(k), m(m_) {
    if (m < 1) throw std::invalid_argument("order family needs m >= 1");
  }

  /// Residue-field size exponents of the DVR factors of the normalization:
  /// ramified {1}, split {1,1}, inert {2}.
  std::vector<int> residue_exponents() const;
  /// d with |~R/R| = q^d; equal to m for all three families.
  int conductor_exponent() const { return m; }
  std::string name() const;
};

/// How the type of a module over the bigger conductor quotient B converts
/// to a type over the smaller A: split parts in half (ramified), collect
/// parts of a pair (split), or double every part (inert).
enum class DescentRule { HalfSplit, Concat, Duplicate };

Partition descend(DescentRule rule, std::span<const Partition> mus);

/// Saturation zeta function eps_{B^n}^{A <= B}(s) as a t-polynomial with
/// q-Laurent coefficients, computed generically by Moebius inversion on the
/// poset of B-submodules: only cotypes (1^r) survive, the rectangle forces
/// the complementary type, and the descent rule converts to A-types.
Laurent saturation_zeta(const OrderFamily& fam, std::int64_t n);

/// The same saturation zeta function from the explicit closed-form sums
/// (Gaussian binomial weights times G-polynomials); an independent code
/// path kept for cross-checking against the generic engine.
Laurent rtilde_numerator(const OrderFamily& fam, std::int64_t n);

/// zeta_{~R^n}^R(s) as a fraction: the explicit numerator over
/// (t;q)_n, (t;q)_n^2, or (t^2;q^2)_n by family.
Fraction rtilde_zeta(const OrderFamily& fam, std::int64_t n);

/// zeta over a product of DVRs: prod_i 1/(t^{e_i}; q^{e_i})_n.
Fraction solomon_zeta(std::span<const int> residue_exponents, std::int64_t n);

/// Local-ring recursion: sum_r [n over r]_q t^r zeta_{m R^r}(s - n + r),
/// with sub_zetas[r] = zeta_{m R^r} as a function of t, put over a common
/// denominator.  Missing r is rejected.
Fraction nakayama_compose(const std::map<std::int64_t, Fraction>& sub_zetas,
                          std::int64_t n);

/// Finitized Coh zeta function of the inert order with m = 1, by the double
/// sum over i >= j >= 0 with common denominator (t^2 q^{-2}; q^{-2})_n.
/// Only the inert m = 1 family admits this closed form.
Fraction coh_finitized(const OrderFamily& fam, std::int64_t n);

struct ClosedForm {
  Fraction value;
  bool conjectural;  // the inert closed form is a conjecture, not a theorem
};

/// Closed-form finitized Coh zeta: AG (ramified) or Bressoud (split: -t,
/// inert: +t) multisum under q -> q^{-1}, over (t q^{-1}; q^{-1})_n.
ClosedForm closed_form_coh(const OrderFamily& fam, std::int64_t n);

enum class NuhatForm { Theorem, Alternative };

/// Normalized finitized Coh zeta at s = 0, as a pure-q Laurent polynomial.
/// Theorem form: q^{-m n^2} times the t=1 specialization of the explicit
/// saturation sums.  Alternative form: the equivalent multi-sum in base
/// q^{-1} obtained by reversing the summation variables.
Laurent nuhat_zero(const OrderFamily& fam, std::int64_t n, NuhatForm form);

/// Divide a finitized Coh zeta fraction by the normalization
/// prod_i 1/(t^{e_i} q^{-e_i}; q^{-e_i})_n; the result must cancel to an
/// exact Laurent polynomial (std::domain_error otherwise — a nonpolynomial
/// remainder signals a formula bug upstream).
Laurent normalize_nuhat(const Fraction& z, const OrderFamily& fam,
                        std::int64_t n);

struct ReflectionResult {
  bool ok;
  std::string witness;  // first differing term when not ok
};

/// Functional equation of a Gorenstein order with |~R/R| = q^d:
/// nu(t) = q^{-d n^2} t^{2nd} nu(q^n / t), checked exactly in the Laurent
/// ring.  Returns the first differing term on failure.
ReflectionResult reflection_check(const Laurent& nu, std::int64_t n,
                                  std::int64_t d);

enum class CountForm { Closed, Alternating };

/// Number of r-codimensional F_q-subspaces W of F_{q^2}^n spanning over
/// F_{q^2}, as a q-polynomial.  Closed: q^{C(r,2)} [n over r]_q
/// prod_{i=n-r+1}^{n} (1+q^i) (division-free product form).  Alternating:
/// sum_i (-1)^i q^{i^2-i} [n over i]_{q^2} [2n-2i over 2n-r]_q.
Laurent inert_m1_count(std::int64_t n, std::int64_t r, CountForm form);

}  // namespace qzeta
