#include "qzeta/laurent.hpp"

#include <mutex>
#include <sstream>
#include <utility>

namespace qzeta {

Laurent Laurent::monomial(Int c, std::int64_t eq, std::int64_t et) {
  Laurent r;
  r.add_term(eq, et, c);
  return r;
}

bool Laurent::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == ExpPair{0, 0} &&
         terms_.begin()->second == 1;
}

Int Laurent::coeff(std::int64_t eq, std::int64_t et) const {
  auto it = terms_.find(ExpPair{et, eq});
  return it == terms_.end() ? Int(0) : it->second;
}

bool Laurent::is_pure_q() const {
  for (const auto& [e, c] : terms_)
    if (e.et != 0) return false;
  return true;
}

std::int64_t Laurent::min_t_degree() const {
  if (is_zero()) throw std::domain_error("degree of zero polynomial");
  return terms_.begin()->first.et;
}

std::int64_t Laurent::max_t_degree() const {
  if (is_zero()) throw std::domain_error("degree of zero polynomial");
  return terms_.rbegin()->first.et;
}

std::int64_t Laurent::min_q_degree() const {
  if (is_zero()) throw std::domain_error("degree of zero polynomial");
  std::int64_t m = terms_.begin()->first.eq;
  for (const auto& [e, c] : terms_) m = std::min(m, e.eq);
  return m;
}

std::int64_t Laurent::max_q_degree() const {
  if (is_zero()) throw std::domain_error("degree of zero polynomial");
  std::int64_t m = terms_.begin()->first.eq;
  for (const auto& [e, c] : terms_) m = std::max(m, e.eq);
  return m;
}

Laurent Laurent::t_coefficient(std::int64_t k) const {
  Laurent r;
  auto lo = terms_.lower_bound(ExpPair{k, INT64_MIN});
  for (auto it = lo; it != terms_.end() && it->first.et == k; ++it)
    r.add_term(it->first.eq, 0, it->second);
  return r;
}

void Laurent::add_term(std::int64_t eq, std::int64_t et, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(ExpPair{et, eq}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Laurent Laurent::operator-() const {
  Laurent r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.eq, e.et, c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.eq, e.et, -c);
  return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent r;
  if (a.is_zero() || b.is_zero()) return r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      r.add_term(checked_add(ea.eq, eb.eq), checked_add(ea.et, eb.et), ca * cb);
  return r;
}

Laurent Laurent::pow(std::int64_t k) const {
  if (k < 0) throw std::domain_error("Laurent::pow requires k >= 0");
  Laurent acc(1), base = *this;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return acc;
}

Laurent Laurent::substitute(Var var, const Laurent& image) const {
  if (image.term_count() != 1)
    throw std::invalid_argument("substitution image must be a monomial");
  const auto& [ie, ic] = *image.terms_.begin();
  if (ic != 1 && ic != -1)
    throw std::invalid_argument("substitution image coefficient must be +1 or -1");
  if (var == Var::Q && (ie.et != 0 || ie.eq == 0))
    throw std::invalid_argument(
        "q-substitution image must be a pure q-monomial with nonzero exponent");
  const bool flip = (ic == -1);
  Laurent r;
  for (const auto& [e, c] : terms_) {
    std::int64_t eq, et, exp_of_var;
    if (var == Var::Q) {
      exp_of_var = e.eq;
      eq = checked_mul(e.eq, ie.eq);
      et = e.et;
    } else {
      exp_of_var = e.et;
      eq = checked_add(e.eq, checked_mul(e.et, ie.eq));
      et = checked_mul(e.et, ie.et);
    }
    Int nc = c;
    if (flip && (exp_of_var % 2 != 0)) nc = -nc;
    r.add_term(eq, et, nc);
  }
  return r;
}

Rat Laurent::eval(const Rat& qv, const Rat& tv) const {
  Rat acc(0);
  for (const auto& [e, c] : terms_)
    acc += Rat(c) * rat_pow(qv, e.eq) * rat_pow(tv, e.et);
  return acc;
}

std::string Laurent::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Int a = c;
    if (first) {
      if (a < 0) { os << "-"; a = -a; }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool need_star = false;
    if (a != 1 || (e.eq == 0 && e.et == 0)) {
      os << a.get_str();
      need_star = true;
    }
    if (e.eq != 0) {
      if (need_star) os << "*";
      os << "q";
      if (e.eq != 1) os << "^" << e.eq;
      need_star = true;
    }
    if (e.et != 0) {
      if (need_star) os << "*";
      os << "t";
      if (e.et != 1) os << "^" << e.et;
    }
  }
  return os.str();
}

Laurent poch(const Laurent& base, std::int64_t step, std::int64_t n) {
  if (n < 0) throw std::domain_error("poch requires n >= 0");
  if (!base.is_monomial())
    throw std::invalid_argument("poch base must be a monomial");
  if (step == 0) throw std::invalid_argument("poch step must be nonzero");
  Laurent r(1);
  for (std::int64_t k = 0; k < n; ++k)
    r = r * (Laurent(1) - base * Laurent::q(checked_mul(step, k)));
  return r;
}

namespace {

// Pascal recurrence in base q; other bases are exponent rescalings.
const Laurent& qbinom_base(std::int64_t n, std::int64_t k) {
  static std::map<std::pair<std::int64_t, std::int64_t>, Laurent> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(n, k);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  // iterative fill keeps the recursion depth flat
  for (std::int64_t i = 0; i <= n; ++i) {
    for (std::int64_t j = 0; j <= std::min(i, k); ++j) {
      auto kij = std::make_pair(i, j);
      if (cache.count(kij)) continue;
      Laurent v;
      if (j == 0 || j == i) {
        v = Laurent(1);
      } else {
        v = cache.at({i - 1, j - 1}) +
            Laurent::q(j) * cache.at({i - 1, j});
      }
      cache.emplace(kij, std::move(v));
    }
  }
  return cache.at(key);
}

}  // namespace

Laurent qbinom(std::int64_t n, std::int64_t k, std::int64_t base_exp) {
  if (base_exp == 0) throw std::invalid_argument("qbinom base exponent must be nonzero");
  if (k < 0 || n < 0 || k > n) return Laurent();
  Laurent v = qbinom_base(n, k);
  if (base_exp == 1) return v;
  return v.substitute(Var::Q, Laurent::q(base_exp));
}

Laurent divide_by_one_minus(const Laurent& p, const Laurent& mono) {
  if (!mono.is_monomial())
    throw std::invalid_argument("divisor must be 1 - monomial");
  const auto& [me, mc] = *mono.terms().begin();
  if (me.eq == 0 && me.et == 0)
    throw std::invalid_argument("divisor monomial must be nonconstant");
  if (p.is_zero()) return p;

  // Total term order: graded by phi(e) = me.eq*eq + me.et*et (so the divisor
  // monomial has positive grade), ties broken by (et, eq).
  auto key = [&me](const ExpPair& e) {
    __int128 phi = (__int128)me.eq * e.eq + (__int128)me.et * e.et;
    return std::make_tuple(phi, e.et, e.eq);
  };

  auto top = p.terms().begin()->first;
  for (const auto& [e, c] : p.terms())
    if (key(e) > key(top)) top = e;
  const auto top_key = key(top);

  Laurent quotient;
  Laurent rem = p;
  while (!rem.is_zero()) {
    auto tau = rem.terms().begin()->first;
    for (const auto& [e, c] : rem.terms())
      if (key(e) < key(tau)) tau = e;
    ExpPair shifted{checked_add(tau.et, me.et), checked_add(tau.eq, me.eq)};
    if (key(shifted) > top_key)
      throw std::domain_error("inexact division by 1 - monomial");
    Int c = rem.coeff(tau.eq, tau.et);
    quotient.add_term(tau.eq, tau.et, c);
    rem.add_term(tau.eq, tau.et, -c);
    rem.add_term(shifted.eq, shifted.et, c * mc);
  }
  return quotient;
}

Laurent divide_by_poch(Laurent p, const Laurent& base, std::int64_t step,
                       std::int64_t len) {
  for (std::int64_t k = 0; k < len; ++k)
    p = divide_by_one_minus(p, base * Laurent::q(checked_mul(step, k)));
  return p;
}

Rat rat_pow(const Rat& c, std::int64_t e) {
  if (e == 0) return Rat(1);
  bool inv = e < 0;
  if (inv && c == 0) throw std::domain_error("0 to a negative power");
  std::uint64_t k = inv ? -(std::uint64_t)e : (std::uint64_t)e;
  Rat acc(1), b = c;
  while (k > 0) {
    if (k & 1) acc *= b;
    k >>= 1;
    if (k > 0) b *= b;
  }
  if (inv) acc = 1 / acc;
  return acc;
}

}  // namespace qzeta
