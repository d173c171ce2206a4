#include "qzeta/zeta.hpp"

#include <algorithm>

#include "qzeta/qseries.hpp"

namespace qzeta {

namespace {

std::int64_t binom2(std::int64_t x) { return x * (x - 1) / 2; }

struct BFactor {
  int q_exp;        // residue field of this DVR factor is q^{q_exp}
  std::int64_t mb;  // B_i = V/pi^{mb}
};

struct Setup {
  std::vector<BFactor> factors;
  DescentRule rule;
};

Setup setup_for(const OrderFamily& fam) {
  switch (fam.kind) {
    case Family::Ramified:
      return {{{1, 2 * fam.m}}, DescentRule::HalfSplit};
    case Family::Split:
      return {{{1, fam.m}, {1, fam.m}}, DescentRule::Concat};
    case Family::Inert:
      return {{{2, fam.m}}, DescentRule::Duplicate};
  }
  throw std::logic_error("unreachable");
}

}  // namespace

std::vector<int> OrderFamily::residue_exponents() const {
  switch (kind) {
    case Family::Ramified: return {1};
    case Family::Split: return {1, 1};
    case Family::Inert: return {2};
  }
  throw std::logic_error("unreachable");
}

std::string OrderFamily::name() const {
  switch (kind) {
    case Family::Ramified: return "ramified";
    case Family::Split: return "split";
    case Family::Inert: return "inert";
  }
  throw std::logic_error("unreachable");
}

Partition descend(DescentRule rule, std::span<const Partition> mus) {
  switch (rule) {
    case DescentRule::HalfSplit:
      if (mus.size() != 1) throw std::invalid_argument("half-split takes one partition");
      return mus[0].half_split();
    case DescentRule::Concat:
      if (mus.size() != 2) throw std::invalid_argument("concat takes two partitions");
      return mus[0].concat(mus[1]);
    case DescentRule::Duplicate:
      if (mus.size() != 1) throw std::invalid_argument("duplicate takes one partition");
      return mus[0].duplicate();
  }
  throw std::logic_error("unreachable");
}

Laurent saturation_zeta(const OrderFamily& fam, std::int64_t n) {
  if (n < 0) throw std::invalid_argument("saturation_zeta needs n >= 0");
  if (n == 0) return Laurent(1);
  const Setup su = setup_for(fam);
  const std::size_t l = su.factors.size();
  const std::int64_t total = 2 * (std::int64_t)fam.m * n;  // |B^n| in q-units

  Laurent result;
  std::vector<std::int64_t> rt(l, 0);
  while (true) {
    Laurent weight(1);
    std::int64_t rsum = 0;
    for (std::size_t i = 0; i < l; ++i) {
      const auto& f = su.factors[i];
      weight = weight * qbinom(n, rt[i], f.q_exp) *
               Laurent::q((std::int64_t)f.q_exp * binom2(rt[i]));
      rsum += rt[i];
    }
    if (rsum % 2 != 0) weight = -weight;

    // cotype (1^r) in the rectangle forces the complementary type
    std::vector<Partition> mus;
    for (std::size_t i = 0; i < l; ++i)
      mus.push_back(Partition::rectangle_minus_ones(su.factors[i].mb, n, rt[i]));
    Partition down = descend(su.rule, mus);

    Laurent inner;
    for (const auto& rho : subpartitions(down))
      inner += hall_g(down, rho) * Laurent::t(total - rho.size());
    result += weight * inner;

    // next r-tuple
    std::size_t i = 0;
    for (; i < l; ++i) {
      if (rt[i] < n) { ++rt[i]; break; }
      rt[i] = 0;
    }
    if (i == l) break;
  }
  return result;
}

Laurent rtilde_numerator(const OrderFamily& fam, std::int64_t n) {
  if (n < 0) throw std::invalid_argument("rtilde_numerator needs n >= 0");
  if (n == 0) return Laurent(1);
  const int m = fam.m;
  const std::int64_t total = 2 * (std::int64_t)m * n;
  Laurent result;

  auto add_terms = [&](std::int64_t last_row, const Laurent& weight) {
    // row vector ((2n)^{m-1}, last_row)
    std::vector<std::int64_t> row((std::size_t)m, 2 * n);
    row.back() = last_row;
    for_each_decreasing_tuple(0, 2 * n, m, [&](const std::vector<std::int64_t>& s) {
      Laurent g = g_skew(row, s);
      if (g.is_zero()) return;
      std::int64_t ssum = 0;
      for (auto v : s) ssum += v;
      result += weight * g * Laurent::t(total - ssum);
    });
  };

  switch (fam.kind) {
    case Family::Ramified:
      for (std::int64_t r = 0; r <= n; ++r) {
        Laurent w = qbinom(n, r, 1) * Laurent::q(binom2(r));
        if (r % 2 != 0) w = -w;
        add_terms(2 * n - r, w);
      }
      break;
    case Family::Split:
      for (std::int64_t r1 = 0; r1 <= n; ++r1)
        for (std::int64_t r2 = 0; r2 <= n; ++r2) {
          Laurent w = qbinom(n, r1, 1) * qbinom(n, r2, 1) *
                      Laurent::q(binom2(r1) + binom2(r2));
          if ((r1 + r2) % 2 != 0) w = -w;
          add_terms(2 * n - r1 - r2, w);
        }
      break;
    case Family::Inert:
      for (std::int64_t r = 0; r <= n; ++r) {
        Laurent w = qbinom(n, r, 2) * Laurent::q(r * r - r);
        if (r % 2 != 0) w = -w;
        add_terms(2 * n - 2 * r, w);
      }
      break;
  }
  return result;
}

Fraction rtilde_zeta(const OrderFamily& fam, std::int64_t n) {
  std::vector<PochFactor> den;
  if (n > 0) {
    switch (fam.kind) {
      case Family::Ramified:
        den.emplace_back(Laurent::t(), 1, n);
        break;
      case Family::Split:
        den.emplace_back(Laurent::t(), 1, n);
        den.emplace_back(Laurent::t(), 1, n);
        break;
      case Family::Inert:
        den.emplace_back(Laurent::t(2), 2, n);
        break;
    }
  }
  return Fraction(rtilde_numerator(fam, n), std::move(den));
}

Fraction solomon_zeta(std::span<const int> residue_exponents, std::int64_t n) {
  if (n < 0) throw std::invalid_argument("solomon_zeta needs n >= 0");
  std::vector<PochFactor> den;
  for (int e : residue_exponents) {
    if (e < 1) throw std::invalid_argument("residue exponent must be >= 1");
    if (n > 0) den.emplace_back(Laurent::t(e), e, n);
  }
  return Fraction(Laurent(1), std::move(den));
}

Fraction nakayama_compose(const std::map<std::int64_t, Fraction>& sub_zetas,
                          std::int64_t n) {
  if (n < 0) throw std::invalid_argument("nakayama_compose needs n >= 0");
  Fraction total((Laurent()));
  for (std::int64_t r = 0; r <= n; ++r) {
    auto it = sub_zetas.find(r);
    if (it == sub_zetas.end())
      throw std::invalid_argument("nakayama_compose: missing sub-zeta for r=" +
                                  std::to_string(r));
    // shift s -> s - n + r, i.e. t -> q^{n-r} t
    Fraction shifted = it->second.substitute(
        Var::T, Laurent::monomial(1, n - r, 1));
    total = total + Fraction(qbinom(n, r, 1) * Laurent::t(r)) * shifted;
  }
  return total;
}

Fraction coh_finitized(const OrderFamily& fam, std::int64_t n) {
  if (fam.kind != Family::Inert || fam.m != 1)
    throw std::invalid_argument(
        "coh_finitized: closed form only available for the inert family at m=1");
  if (n < 0) throw std::invalid_argument("coh_finitized needs n >= 0");

  const Laurent tt = Laurent::monomial(1, -2, 2);  // t^2 q^{-2}
  Laurent num;
  for (std::int64_t i = 0; i <= n; ++i) {
    for (std::int64_t j = 0; j <= i; ++j) {
      // (q^{2i}; q^{-2})_j / (q^{-1}; q^{-1})_j is an exact Laurent quotient
      Laurent core = poch(Laurent::q(2 * i), -2, j);
      core = divide_by_poch(core, Laurent::q(-1), -1, j);
      Laurent term = Laurent::q(-(i * i + i * j + j)) * qbinom(n, i, -1) * core *
                     Laurent::t(i + j);
      if (j % 2 != 0) term = -term;
      for (std::int64_t k = i; k < n; ++k)
        term = term * (Laurent(1) - tt * Laurent::q(-2 * k));
      num += term;
    }
  }
  std::vector<PochFactor> den;
  if (n > 0) den.emplace_back(tt, -2, n);
  return Fraction(std::move(num), std::move(den));
}

ClosedForm closed_form_coh(const OrderFamily& fam, std::int64_t n) {
  if (n < 0) throw std::invalid_argument("closed_form_coh needs n >= 0");
  const Laurent qinv = Laurent::q(-1);
  std::vector<PochFactor> norm;
  if (n > 0) norm.emplace_back(Laurent::monomial(1, -1, 1), -1, n);  // (t q^-1; q^-1)_n
  Fraction outer(Laurent(1), std::move(norm));

  switch (fam.kind) {
    case Family::Ramified:
      return {outer * Fraction(ag_multisum(fam.m, n).substitute(Var::Q, qinv)),
              false};
    case Family::Split:
      return {outer * br_multisum(fam.m, n, -1).substitute(Var::Q, qinv), false};
    case Family::Inert:
      return {outer * br_multisum(fam.m, n, +1).substitute(Var::Q, qinv), true};
  }
  throw std::logic_error("unreachable");
}

namespace {

Laurent nuhat_zero_alternative(const OrderFamily& fam, std::int64_t n) {
  const int m = fam.m;
  Laurent result;
  for_each_decreasing_tuple(-n, n, m, [&](const std::vector<std::int64_t>& s) {
    // telescoped multinomial ratio in base q^{-1}
    Laurent chain(1);
    for (int k = 0; k + 1 < m; ++k)
      chain = chain * qbinom(n + s[(std::size_t)k],
                             s[(std::size_t)k] - s[(std::size_t)k + 1], -1);
    if (chain.is_zero()) return;
    std::int64_t tail_sq = 0;
    for (int k = 1; k < m; ++k) tail_sq += s[(std::size_t)k] * s[(std::size_t)k];
    const std::int64_t s1 = s[0];

    switch (fam.kind) {
      case Family::Ramified:
        for (std::int64_t r = 0; r <= n; ++r) {
          Laurent term = qbinom(n, r, -1) * qbinom(2 * n - r, n - r + s1, -1) *
                         Laurent::q(-(binom2(s1) + binom2(r - s1) + r) - tail_sq);
          if (r % 2 != 0) term = -term;
          result += term * chain;
        }
        break;
      case Family::Split:
        for (std::int64_t r1 = 0; r1 <= n; ++r1)
          for (std::int64_t r2 = 0; r2 <= n; ++r2) {
            const std::int64_t rr = r1 + r2;
            Laurent term =
                qbinom(n, r1, -1) * qbinom(n, r2, -1) *
                qbinom(2 * n - rr, n - rr + s1, -1) *
                Laurent::q(-(binom2(s1) + binom2(rr - s1) + rr) + r1 * r2 -
                           tail_sq);
            if (rr % 2 != 0) term = -term;
            result += term * chain;
          }
        break;
      case Family::Inert:
        for (std::int64_t r = 0; r <= n; ++r) {
          Laurent term = qbinom(n, r, -2) * qbinom(2 * n - 2 * r, n - s1, -1) *
                         Laurent::q(-r - (s1 - r) * (s1 - r) - tail_sq);
          if (r % 2 != 0) term = -term;
          result += term * chain;
        }
        break;
    }
  });
  return result;
}

}  // namespace

Laurent nuhat_zero(const OrderFamily& fam, std::int64_t n, NuhatForm form) {
  if (n < 0) throw std::invalid_argument("nuhat_zero needs n >= 0");
  if (form == NuhatForm::Theorem) {
    Laurent sum = rtilde_numerator(fam, n).substitute(Var::T, Laurent(1));
    return Laurent::q(-(std::int64_t)fam.m * n * n) * sum;
  }
  if (n == 0) return Laurent(1);
  return nuhat_zero_alternative(fam, n);
}

Laurent normalize_nuhat(const Fraction& z, const OrderFamily& fam,
                        std::int64_t n) {
  if (n < 0) throw std::invalid_argument("normalize_nuhat needs n >= 0");
  Laurent p = z.num();
  for (int e : fam.residue_exponents())
    p = p * poch(Laurent::monomial(1, -e, e), -e, n);  // (t^e q^-e; q^-e)_n
  for (const auto& f : z.den())
    for (const auto& mono : f.binomials()) p = divide_by_one_minus(p, mono);
  return p;
}

ReflectionResult reflection_check(const Laurent& nu, std::int64_t n,
                                  std::int64_t d) {
  if (n < 0 || d < 1) throw std::invalid_argument("reflection_check bad n or d");
  Laurent reflected = Laurent::monomial(1, -d * n * n, 2 * n * d) *
                      nu.substitute(Var::T, Laurent::monomial(1, n, -1));
  Laurent diff = nu - reflected;
  if (diff.is_zero()) return {true, ""};
  const auto& [e, c] = *diff.terms().begin();
  return {false, Laurent::monomial(c, e.eq, e.et).to_string()};
}

Laurent inert_m1_count(std::int64_t n, std::int64_t r, CountForm form) {
  if (n < 0) throw std::invalid_argument("inert_m1_count needs n >= 0");
  if (form == CountForm::Closed) {
    if (r < 0 || r > n) return Laurent();  // no spanning subspace outside 0..n
    Laurent prod(1);
    for (std::int64_t i = n - r + 1; i <= n; ++i)
      prod = prod * (Laurent(1) + Laurent::q(i));
    return Laurent::q(binom2(r)) * qbinom(n, r, 1) * prod;
  }
  Laurent total;
  for (std::int64_t i = 0; i <= n; ++i) {
    Laurent term = Laurent::q(i * i - i) * qbinom(n, i, 2) *
                   qbinom(2 * n - 2 * i, 2 * n - r, 1);
    if (i % 2 != 0) term = -term;
    total += term;
  }
  return total;
}

}  // namespace qzeta
