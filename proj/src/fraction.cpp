#include "qzeta/fraction.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace qzeta {

namespace {

using MonoKey = std::tuple<std::int64_t, std::int64_t, Int>;  // (et, eq, coeff)

MonoKey mono_key(const Laurent& mono) {
  const auto& [e, c] = *mono.terms().begin();
  return {e.et, e.eq, c};
}

Laurent mono_from_key(const MonoKey& k) {
  return Laurent::monomial(std::get<2>(k), std::get<1>(k), std::get<0>(k));
}

// Denominator as a multiset of binomial monomials m, one per factor (1 - m).
std::map<MonoKey, std::int64_t> flatten(const std::vector<PochFactor>& den) {
  std::map<MonoKey, std::int64_t> out;
  for (const auto& f : den)
    for (const auto& m : f.binomials()) ++out[mono_key(m)];
  return out;
}

std::vector<PochFactor> factors_from_multiset(
    const std::map<MonoKey, std::int64_t>& ms) {
  std::vector<PochFactor> out;
  for (const auto& [k, cnt] : ms)
    for (std::int64_t i = 0; i < cnt; ++i)
      out.emplace_back(mono_from_key(k), 1, 1);
  return out;
}

}  // namespace

PochFactor::PochFactor(Laurent b, std::int64_t s, std::int64_t l)
    : base(std::move(b)), step(s), len(l) {
  if (!base.is_monomial())
    throw std::invalid_argument("Pochhammer base must be a monomial");
  if (step == 0) throw std::invalid_argument("Pochhammer step must be nonzero");
  if (len < 0) throw std::invalid_argument("Pochhammer length must be >= 0");
}

std::vector<Laurent> PochFactor::binomials() const {
  std::vector<Laurent> out;
  for (std::int64_t k = 0; k < len; ++k)
    out.push_back(base * Laurent::q(checked_mul(step, k)));
  return out;
}

bool operator==(const PochFactor& a, const PochFactor& b) {
  return mono_key(a.base) == mono_key(b.base) && a.step == b.step && a.len == b.len;
}

bool operator<(const PochFactor& a, const PochFactor& b) {
  return std::make_tuple(mono_key(a.base), a.step, a.len) <
         std::make_tuple(mono_key(b.base), b.step, b.len);
}

Fraction::Fraction(Laurent num, std::vector<PochFactor> den)
    : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void Fraction::normalize() {
  std::erase_if(den_, [](const PochFactor& f) { return f.len == 0; });
  std::sort(den_.begin(), den_.end(), [](const PochFactor& a, const PochFactor& b) {
    return std::make_tuple(mono_key(a.base), a.step, a.len) <
           std::make_tuple(mono_key(b.base), b.step, b.len);
  });
}

Laurent Fraction::den_expanded() const {
  Laurent d(1);
  for (const auto& f : den_) d = d * f.expand();
  return d;
}

Fraction operator*(const Fraction& a, const Fraction& b) {
  std::vector<PochFactor> den = a.den_;
  den.insert(den.end(), b.den_.begin(), b.den_.end());
  return Fraction(a.num_ * b.num_, std::move(den));
}

Fraction operator+(const Fraction& a, const Fraction& b) {
  auto da = flatten(a.den_), db = flatten(b.den_);
  std::map<MonoKey, std::int64_t> lcm = da;
  for (const auto& [k, cnt] : db) {
    auto& v = lcm[k];
    v = std::max(v, cnt);
  }
  auto scale = [&lcm](const Laurent& num,
                      const std::map<MonoKey, std::int64_t>& own) {
    Laurent r = num;
    for (const auto& [k, cnt] : lcm) {
      std::int64_t have = own.count(k) ? own.at(k) : 0;
      for (std::int64_t i = have; i < cnt; ++i)
        r = r * (Laurent(1) - mono_from_key(k));
    }
    return r;
  };
  return Fraction(scale(a.num_, da) + scale(b.num_, db),
                  factors_from_multiset(lcm));
}

Fraction operator-(const Fraction& a, const Fraction& b) {
  return a + Fraction(-b.num_, b.den_);
}

bool operator==(const Fraction& a, const Fraction& b) {
  return a.num_ * b.den_expanded() == b.num_ * a.den_expanded();
}

Fraction Fraction::substitute(Var var, const Laurent& image) const {
  std::vector<PochFactor> den;
  for (const auto& f : den_) {
    Laurent base = f.base.substitute(var, image);
    std::int64_t step = f.step;
    if (var == Var::Q) step = checked_mul(step, image.terms().begin()->first.eq);
    den.emplace_back(std::move(base), step, f.len);
  }
  return Fraction(num_.substitute(var, image), std::move(den));
}

TSeries Fraction::t_series(std::int64_t order) const {
  TSeries s(order);
  for (const auto& [e, c] : num_.terms()) {
    if (e.et < 0)
      throw std::domain_error("t_series needs a numerator with t-degrees >= 0");
    if (e.et > order) continue;
    Laurent cur = s.coeff(e.et);
    cur.add_term(e.eq, 0, c);
    s.set_coeff(e.et, std::move(cur));
  }
  for (const auto& f : den_) {
    for (const auto& m : f.binomials()) {
      const auto& [me, mc] = *m.terms().begin();
      if (me.et <= 0)
        throw std::domain_error(
            "t_series denominator factor must have positive t-degree");
      TSeries geom(order);
      Int ck(1);
      for (std::int64_t k = 0; checked_mul(k, me.et) <= order; ++k) {
        Laurent cur = geom.coeff(k * me.et);
        cur.add_term(checked_mul(k, me.eq), 0, ck);
        geom.set_coeff(k * me.et, std::move(cur));
        ck *= mc;
      }
      s = s * geom;
    }
  }
  return s;
}

Laurent Fraction::to_laurent_exact() const {
  Laurent p = num_;
  for (const auto& f : den_)
    for (const auto& m : f.binomials()) p = divide_by_one_minus(p, m);
  return p;
}

}  // namespace qzeta
