#include "qzeta/qseries.hpp"

#include <algorithm>
#include <functional>

namespace qzeta {

Laurent g_skew(std::span<const std::int64_t> r, std::span<const std::int64_t> s) {
  if (r.size() != s.size())
    throw std::invalid_argument("g_skew tuples must have equal length");
  if (r.empty()) throw std::invalid_argument("g_skew tuples must be nonempty");
  const std::size_t m = r.size();
  for (std::size_t i = 0; i < m; ++i) {
    std::int64_t rn = (i + 1 < m) ? r[i + 1] : 0;
    std::int64_t sn = (i + 1 < m) ? s[i + 1] : 0;
    if (r[i] < rn || s[i] < sn || r[i] < 0 || s[i] < 0 || r[i] < s[i])
      return Laurent();
  }
  std::int64_t exp = 0;
  Laurent prod(1);
  for (std::size_t i = 0; i < m; ++i) {
    std::int64_t sn = (i + 1 < m) ? s[i + 1] : 0;
    exp = checked_add(exp, checked_mul(s[i], r[i] - s[i]));
    prod = prod * qbinom(r[i] - sn, r[i] - s[i], -1);
  }
  return Laurent::q(exp) * prod;
}

Laurent hall_g(const Partition& lambda, const Partition& mu) {
  if (!lambda.contains(mu)) return Laurent();
  Partition lc = lambda.conjugate(), mc = mu.conjugate();
  std::int64_t len = std::max<std::int64_t>({lc.length(), mc.length(), 1});
  std::vector<std::int64_t> r, s;
  for (std::int64_t i = 0; i < len; ++i) {
    r.push_back(lc.part(i));
    s.push_back(mc.part(i));
  }
  return g_skew(r, s);
}

namespace {

// Visit all chains n >= n_1 >= ... >= n_m >= 0.
void for_each_chain(std::int64_t n, int m,
                    const std::function<void(const std::vector<std::int64_t>&)>& fn) {
  std::vector<std::int64_t> tup((std::size_t)m);
  std::function<void(int, std::int64_t)> rec = [&](int i, std::int64_t bound) {
    if (i == m) {
      fn(tup);
      return;
    }
    for (std::int64_t v = 0; v <= bound; ++v) {
      tup[(std::size_t)i] = v;
      rec(i + 1, v);
    }
  };
  rec(0, n);
  }

// (q;q)_n / ((q;q)_{n-n_1} ... (q;q)_{n_m}) as a telescoping product of
// Gaussian binomials; stays in the polynomial ring.
Laurent chain_multinomial(std::int64_t n, const std::vector<std::int64_t>& tup) {
  Laurent r(1);
  std::int64_t prev = n;
  for (auto v : tup) {
    r = r * qbinom(prev, v, 1);
    prev = v;
  }
  return r;
}

}  // namespace

Laurent ag_multisum(int m, std::int64_t n) {
  if (m < 1 || n < 0) throw std::invalid_argument("ag_multisum needs m >= 1, n >= 0");
  Laurent total;
  for_each_chain(n, m, [&](const std::vector<std::int64_t>& tup) {
    std::int64_t sq = 0, lin = 0;
    for (auto v : tup) {
      sq = checked_add(sq, checked_mul(v, v));
      lin = checked_add(lin, v);
    }
    total += chain_multinomial(n, tup) * Laurent::monomial(1, sq, 2 * lin);
  });
  for (const auto& [e, c] : total.terms())
    if (e.et % 2 != 0)
      throw std::logic_error("ag_multisum produced an odd t-power");
  return total;
}

Fraction br_multisum(int m, std::int64_t n, int sign) {
  if (m < 1 || n < 0) throw std::invalid_argument("br_multisum needs m >= 1, n >= 0");
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  // Br_n(q, sign*t): denominator chain gains (-sign*t*q; q)_{n_m}; every term
  // is put over the full (-sign*t*q; q)_n.
  Laurent tq = Laurent::monomial(-sign, 1, 1);  // base of the t-Pochhammer
  Laurent num;
  for_each_chain(n, m, [&](const std::vector<std::int64_t>& tup) {
    std::int64_t sq = 0, lin = 0;
    for (auto v : tup) {
      sq = checked_add(sq, checked_mul(v, v));
      lin = checked_add(lin, v);
    }
    std::int64_t nm = tup.back();
    Laurent term = chain_multinomial(n, tup) * Laurent::monomial(1, sq, 2 * lin);
    // (sign)^{2 sum n_i} = 1, so only the t-Pochhammer sees the sign.
    for (std::int64_t k = nm; k < n; ++k)
      term = term * (Laurent(1) - tq * Laurent::q(k));
    num += term;
  });
  std::vector<PochFactor> den;
  if (n > 0) den.emplace_back(tq, 1, n);
  return Fraction(std::move(num), std::move(den));
}

Laurent singlesum(const SumFamily& fam, std::int64_t n) {
  if (n < 0) throw std::invalid_argument("singlesum needs n >= 0");
  // sum_r (-1)^r q^{...} / ((q;q)_{n-r}(q;q)_{n+r}), multiplied by (q;q)_n
  // (AG) resp. (q;q)_n (-q;q)_n (Br; the bare Bressoud value has the
  // denominator (-q;q)_n, so that factor is cleared to stay polynomial).
  // Rewrite the summand via [2n over n-r]: the prefactor over (q;q)_{2n}
  // leaves an exact division by prod_{k=n+1}^{2n} (1-q^k) for AG and by
  // (q;q^2)_n for Br.
  Laurent total;
  for (std::int64_t r = -n; r <= n; ++r) {
    std::int64_t e = checked_mul((std::int64_t)(fam.m + 1), checked_mul(r, r));
    if (fam.kind == SumFamily::AG) e = checked_add(e, r * (r - 1) / 2);
    Laurent term = Laurent::q(e) * qbinom(2 * n, n - r, 1);
    if (r % 2 != 0) term = -term;
    total += term;
  }
  if (fam.kind == SumFamily::AG) {
    for (std::int64_t k = n + 1; k <= 2 * n; ++k)
      total = divide_by_one_minus(total, Laurent::q(k));
  } else {
    for (std::int64_t k = 0; k < n; ++k)
      total = divide_by_one_minus(total, Laurent::q(2 * k + 1));
  }
  return total;
}

Laurent q_truncate(const Laurent& p, std::int64_t N) {
  Laurent r;
  for (const auto& [e, c] : p.terms()) {
    if (e.et != 0) throw std::invalid_argument("q_truncate needs a pure-q Laurent");
    if (e.eq >= 0 && e.eq <= N) r.add_term(e.eq, 0, c);
  }
  return r;
}

Laurent q_mul_trunc(const Laurent& a, const Laurent& b, std::int64_t N) {
  Laurent r;
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) {
      std::int64_t e = checked_add(ea.eq, eb.eq);
      if (e <= N) r.add_term(e, 0, ca * cb);
    }
  return r;
}

Laurent q_geom_divide(const Laurent& a, std::int64_t k, std::int64_t N) {
  Laurent geom;
  for (std::int64_t e = 0; e <= N; e += k) geom.add_term(e, 0, 1);
  return q_mul_trunc(a, geom, N);
}

QSeries infinite_sum(const SumFamily& fam, std::int64_t N) {
  if (N < 0) throw std::invalid_argument("truncation order must be >= 0");
  // Sum over n_1 >= ... >= n_m >= 0; the minimum q-degree of a summand is
  // sum n_i^2, which cuts the domain at sum n_i^2 <= N.
  Laurent total;
  std::vector<std::int64_t> tup((std::size_t)fam.m);
  std::function<void(int, std::int64_t, std::int64_t)> rec =
      [&](int i, std::int64_t bound, std::int64_t sq) {
        if (i == fam.m) {
          Laurent term = Laurent::q(sq);
          for (int j = 0; j + 1 < fam.m; ++j) {
            std::int64_t gap = tup[(std::size_t)j] - tup[(std::size_t)j + 1];
            for (std::int64_t k = 1; k <= gap; ++k)
              term = q_geom_divide(term, k, N);
          }
          std::int64_t last = tup[(std::size_t)(fam.m - 1)];
          std::int64_t step = (fam.kind == SumFamily::AG) ? 1 : 2;
          for (std::int64_t k = 1; k <= last; ++k)
            term = q_geom_divide(term, step * k, N);
          total += term;
          return;
        }
        for (std::int64_t v = 0; v <= bound; ++v) {
          std::int64_t nsq = sq + v * v;
          if (nsq > N) break;
          tup[(std::size_t)i] = v;
          rec(i + 1, v, nsq);
        }
      };
  rec(0, N, 0);  // n_1 is unbounded; the degree cut bounds it
  return QSeries{N, q_truncate(total, N)};
}

QSeries product_side(const SumFamily& fam, std::int64_t N) {
  if (N < 0) throw std::invalid_argument("truncation order must be >= 0");
  const std::int64_t mod = fam.modulus();
  std::vector<std::int64_t> heads;
  if (fam.kind == SumFamily::AG)
    heads = {fam.m + 1, fam.m + 2, (std::int64_t)mod};
  else
    heads = {fam.m + 1, fam.m + 1, (std::int64_t)mod};
  Laurent r(1);
  for (auto h : heads)
    for (std::int64_t e = h; e <= N; e += mod)
      r = q_mul_trunc(r, Laurent(1) - Laurent::q(e), N);
  for (std::int64_t k = 1; k <= N; ++k) r = q_geom_divide(r, k, N);
  return QSeries{N, r};
}

}  // namespace qzeta
