#include "qzeta/oracle.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <set>
#include <stdexcept>

namespace qzeta {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

long long gauss_binom_count(int n, int k, int p) {
  // number of k-dim subspaces of F_p^n, clamped to LLONG_MAX on overflow
  unsigned __int128 num = 1, den = 1;
  const unsigned __int128 cap = (unsigned __int128)LLONG_MAX;
  for (int i = 0; i < k; ++i) {
    unsigned __int128 pn = 1, pk = 1;
    for (int j = 0; j < n - i; ++j) {
      pn *= (unsigned)p;
      if (pn > cap * 2) return LLONG_MAX;
    }
    for (int j = 0; j < k - i; ++j) pk *= (unsigned)p;
    num *= (pn - 1);
    den *= (pk - 1);
    if (num / den > cap) return LLONG_MAX;
  }
  return (long long)(num / den);
}

}  // namespace

FieldSpec FieldSpec::prime(int p) {
  if (!is_prime(p)) throw std::invalid_argument("FieldSpec: p must be prime");
  return FieldSpec{p, 1, 0, 0};
}

FieldSpec FieldSpec::quadratic(int p) {
  if (!is_prime(p)) throw std::invalid_argument("FieldSpec: p must be prime");
  for (int c1 = 0; c1 < p; ++c1)
    for (int c0 = 0; c0 < p; ++c0) {
      bool has_root = false;
      for (int x = 0; x < p && !has_root; ++x)
        has_root = fp_norm((long long)x * x + (long long)c1 * x + c0, p) == 0;
      if (!has_root) return FieldSpec{p, 2, c1, c0};
    }
  throw std::logic_error("no irreducible quadratic found");  // impossible
}

long long FieldSpec::extension_size() const {
  long long s = 1;
  for (int i = 0; i < deg; ++i) s *= p;
  return s;
}

void EnumGuard::tick(long long cost) const {
  used += cost;
  if (used > limit)
    throw ResourceError("enumeration guard exceeded (" + std::to_string(used) +
                            " candidates, limit " + std::to_string(limit) + ")",
                        used);
}

void EnumGuard::require(long long projected) const {
  if (projected > limit - used)
    throw ResourceError("projected candidate count " +
                            std::to_string(projected) + " exceeds guard limit " +
                            std::to_string(limit),
                        projected);
}

void ModuleSpec::validate() const {
  for (const auto& op : ops) {
    if ((int)op.size() != dim)
      throw std::invalid_argument("operator row count mismatch");
    for (const auto& row : op)
      if ((int)row.size() != dim)
        throw std::invalid_argument("operator column count mismatch");
  }
  for (std::size_t i = 0; i < ops.size(); ++i)
    for (std::size_t j = i + 1; j < ops.size(); ++j)
      if (!fp_equal(fp_mul(ops[i], ops[j], p), fp_mul(ops[j], ops[i], p)))
        throw std::invalid_argument("module operators must commute");
}

Subspace ModuleSpec::full() const {
  return Subspace{dim, fp_identity(dim)};
}

ModuleSpec module_for_partition(const Partition& lambda, int p) {
  ModuleSpec m;
  m.p = p;
  m.dim = (int)lambda.size();
  FpMat u = fp_zero(m.dim, m.dim);
  int base = 0;
  for (auto part : lambda.parts()) {
    for (int i = 0; i + 1 < part; ++i)
      u[(std::size_t)(base + i + 1)][(std::size_t)(base + i)] = 1;  // pi * pi^i
    base += (int)part;
  }
  m.ops.push_back(std::move(u));
  m.labels = {"u"};
  m.validate();
  return m;
}

namespace {

// Shift operator u on a sum of `blocks` nilpotent blocks of size `size`.
FpMat shift_blocks(int blocks, int size) {
  int d = blocks * size;
  FpMat u = FpMat((std::size_t)d, FpVec((std::size_t)d, 0));
  for (int b = 0; b < blocks; ++b)
    for (int i = 0; i + 1 < size; ++i)
      u[(std::size_t)(b * size + i + 1)][(std::size_t)(b * size + i)] = 1;
  return u;
}

}  // namespace

ConductorModule conductor_module(const OrderFamily& fam, std::int64_t n,
                                 const FieldSpec& field) {
  if (n < 0) throw std::invalid_argument("conductor_module needs n >= 0");
  const int p = field.p;
  const int m = fam.m;
  ConductorModule cm;
  cm.module.p = p;

  switch (fam.kind) {
    case Family::Ramified: {
      // A = F_q[u^2]/(u^{2m}) inside B = F_q[u]/(u^{2m}), acting on B^n
      if (field.deg != 1)
        throw std::invalid_argument("ramified oracle uses a deg-1 field");
      int d = 2 * m * (int)n;
      FpMat u = shift_blocks((int)n, 2 * m);
      cm.module.dim = d;
      cm.module.ops = {fp_mul(u, u, p)};
      cm.module.labels = {"u^2"};
      cm.b_ops = {u};
      break;
    }
    case Family::Split: {
      // A = diagonal F_q[u]/(u^m) inside B = (F_q[u]/(u^m))^2, on B^n
      if (field.deg != 1)
        throw std::invalid_argument("split oracle uses a deg-1 field");
      int d = 2 * m * (int)n;
      FpMat u = shift_blocks(2 * (int)n, m);
      FpMat p1 = fp_zero(d, d);
      for (int i = 0; i < m * (int)n; ++i) p1[(std::size_t)i][(std::size_t)i] = 1;
      cm.module.dim = d;
      cm.module.ops = {u};
      cm.module.labels = {"u"};
      cm.b_ops = {u, p1};
      break;
    }
    case Family::Inert: {
      // A = F_q[u]/(u^m) inside B = F_{q^2}[u]/(u^m), on B^n; each
      // F_{q^2}-slot is an F_q-plane with basis (1, w), w^2 = -c1 w - c0.
      if (field.deg != 2)
        throw std::invalid_argument("inert oracle needs a quadratic extension");
      int d = 2 * m * (int)n;
      FpMat u = fp_zero(d, d), om = fp_zero(d, d);
      auto idx = [&](int copy, int g, int c) { return copy * 2 * m + 2 * g + c; };
      for (int copy = 0; copy < (int)n; ++copy)
        for (int g = 0; g < m; ++g) {
          if (g + 1 < m) {
            u[(std::size_t)idx(copy, g + 1, 0)][(std::size_t)idx(copy, g, 0)] = 1;
            u[(std::size_t)idx(copy, g + 1, 1)][(std::size_t)idx(copy, g, 1)] = 1;
          }
          om[(std::size_t)idx(copy, g, 1)][(std::size_t)idx(copy, g, 0)] = 1;
          om[(std::size_t)idx(copy, g, 0)][(std::size_t)idx(copy, g, 1)] =
              (unsigned char)fp_norm(-field.mod_c0, p);
          om[(std::size_t)idx(copy, g, 1)][(std::size_t)idx(copy, g, 1)] =
              (unsigned char)fp_norm(-field.mod_c1, p);
        }
      cm.module.dim = d;
      cm.module.ops = {u};
      cm.module.labels = {"u"};
      cm.b_ops = {u, om};
      break;
    }
  }
  cm.module.validate();
  return cm;
}

std::vector<Subspace> enumerate_submodules(const ModuleSpec& mod,
                                           const EnumGuard& guard) {
  mod.validate();
  const int p = mod.p;
  std::set<Subspace> seen;
  std::vector<Subspace> stack;
  seen.insert(mod.zero());
  stack.push_back(mod.zero());

  while (!stack.empty()) {
    Subspace w = std::move(stack.back());
    stack.pop_back();
    Subspace pre = op_preimage(w, mod.ops, p);

    // complement basis of w inside its preimage
    FpMat comp;
    for (const auto& r : pre.rows) {
      FpVec v = r;
      if (!fp_reduce(v, w.rows, p)) comp.push_back(std::move(v));
    }
    fp_rref(comp, p);
    const int dq = (int)comp.size();
    if (dq == 0) continue;

    // one representative per line of pre/w: first nonzero coefficient = 1
    std::vector<int> coef((std::size_t)dq, 0);
    std::function<void(int, bool)> walk = [&](int i, bool started) {
      if (i == dq) {
        if (!started) return;
        FpVec v((std::size_t)w.ambient, 0);
        for (int j = 0; j < dq; ++j) {
          if (coef[(std::size_t)j] == 0) continue;
          for (int l = 0; l < w.ambient; ++l)
            v[(std::size_t)l] = (unsigned char)((v[(std::size_t)l] +
                                                 coef[(std::size_t)j] *
                                                     comp[(std::size_t)j][(std::size_t)l]) %
                                                p);
        }
        FpMat rows = w.rows;
        rows.push_back(std::move(v));
        Subspace next = span_of(std::move(rows), w.ambient, p);
        guard.tick();
        if (seen.insert(next).second) stack.push_back(std::move(next));
        return;
      }
      if (!started) {
        coef[(std::size_t)i] = 0;
        walk(i + 1, false);
        coef[(std::size_t)i] = 1;  // leading coefficient normalized
        walk(i + 1, true);
      } else {
        for (int c = 0; c < p; ++c) {
          coef[(std::size_t)i] = c;
          walk(i + 1, true);
        }
      }
      coef[(std::size_t)i] = 0;
    };
    walk(0, false);
  }
  return {seen.begin(), seen.end()};
}

std::vector<Subspace> enumerate_all_subspaces(int p, int dim,
                                              const EnumGuard& guard) {
  long long projected = 0;
  for (int k = 0; k <= dim; ++k) projected += gauss_binom_count(dim, k, p);
  guard.require(projected);

  std::vector<Subspace> out;
  out.push_back(Subspace{dim, {}});
  guard.tick();

  std::vector<int> pivots;
  FpMat rows;
  std::vector<std::pair<int, int>> free_pos;
  std::function<void(int)> fill_free = [&](int fi) {
    if (fi == (int)free_pos.size()) {
      guard.tick();
      out.push_back(Subspace{dim, rows});
      return;
    }
    auto [r, c] = free_pos[(std::size_t)fi];
    for (int v = 0; v < p; ++v) {
      rows[(std::size_t)r][(std::size_t)c] = (unsigned char)v;
      fill_free(fi + 1);
    }
    rows[(std::size_t)r][(std::size_t)c] = 0;
  };
  // choose pivot columns, then run an odometer over the free entries
  // (entries right of a pivot, outside later pivot columns)
  std::function<void(int, int)> choose = [&](int from, int want) {
    if (want == 0) {
      rows.assign(pivots.size(), FpVec((std::size_t)dim, 0));
      free_pos.clear();
      for (std::size_t i = 0; i < pivots.size(); ++i) {
        rows[i][(std::size_t)pivots[i]] = 1;
        for (int c = pivots[i] + 1; c < dim; ++c)
          if (std::find(pivots.begin(), pivots.end(), c) == pivots.end())
            free_pos.emplace_back((int)i, c);
      }
      fill_free(0);
      return;
    }
    for (int c = from; c + want <= dim; ++c) {
      pivots.push_back(c);
      choose(c + 1, want - 1);
      pivots.pop_back();
    }
  };
  for (int k = 1; k <= dim; ++k) choose(0, k);
  std::sort(out.begin(), out.end());
  return out;
}

Partition module_type(const Subspace& w, const ModuleSpec& mod,
                      std::size_t gen_index) {
  const FpMat& op = mod.ops.at(gen_index);
  Subspace img = apply_to_subspace(op, w, mod.p);
  if (!w.contains(img, mod.p))
    throw std::invalid_argument("module_type: subspace is not invariant");
  std::vector<std::int64_t> conj;
  Subspace cur = w;
  while (cur.dim() > 0) {
    Subspace next = apply_to_subspace(op, cur, mod.p);
    if (next.dim() == cur.dim())
      throw std::invalid_argument("module_type: generator must act nilpotently");
    conj.push_back(cur.dim() - next.dim());
    cur = std::move(next);
  }
  return Partition(std::move(conj)).conjugate();
}

ModuleSpec quotient_module(const ModuleSpec& mod, const Subspace& w) {
  const int p = mod.p;
  std::vector<bool> is_pivot((std::size_t)mod.dim, false);
  for (const auto& row : w.rows) {
    std::size_t lead = 0;
    while (lead < row.size() && row[lead] == 0) ++lead;
    is_pivot[lead] = true;
  }
  std::vector<int> coords;  // non-pivot columns carry the quotient
  for (int j = 0; j < mod.dim; ++j)
    if (!is_pivot[(std::size_t)j]) coords.push_back(j);

  ModuleSpec q;
  q.p = p;
  q.dim = (int)coords.size();
  q.labels = mod.labels;
  for (const auto& op : mod.ops) {
    FpMat qop = fp_zero(q.dim, q.dim);
    for (int jc = 0; jc < q.dim; ++jc) {
      FpVec e((std::size_t)mod.dim, 0);
      e[(std::size_t)coords[(std::size_t)jc]] = 1;
      FpVec img = fp_apply(op, e, p);
      fp_reduce(img, w.rows, p);
      for (int ic = 0; ic < q.dim; ++ic)
        qop[(std::size_t)ic][(std::size_t)jc] = img[(std::size_t)coords[(std::size_t)ic]];
    }
    q.ops.push_back(std::move(qop));
  }
  return q;
}

long long hall_count_oracle(const Partition& lambda, const Partition& mu,
                            const FieldSpec& field, const EnumGuard& guard) {
  if (field.deg != 1)
    throw std::invalid_argument("hall_count_oracle uses a deg-1 field");
  ModuleSpec mod = module_for_partition(lambda, field.p);
  long long count = 0;
  for (const auto& w : enumerate_submodules(mod, guard))
    if (module_type(w, mod, 0) == mu) ++count;
  return count;
}

std::map<std::pair<Partition, Partition>, long long> hall_refined_oracle(
    const Partition& lambda, const FieldSpec& field, const EnumGuard& guard) {
  if (field.deg != 1)
    throw std::invalid_argument("hall_refined_oracle uses a deg-1 field");
  ModuleSpec mod = module_for_partition(lambda, field.p);
  std::map<std::pair<Partition, Partition>, long long> out;
  for (const auto& w : enumerate_submodules(mod, guard)) {
    Partition type = module_type(w, mod, 0);
    ModuleSpec quo = quotient_module(mod, w);
    Partition cotype = module_type(quo.full(), quo, 0);
    ++out[{type, cotype}];
  }
  return out;
}

long long moebius_oracle(const ModuleSpec& mod, const Subspace& w,
                         const EnumGuard& guard) {
  const int p = mod.p;
  std::vector<Subspace> interval;
  for (const auto& x : enumerate_submodules(mod, guard))
    if (x.contains(w, p)) interval.push_back(x);
  // interval is sorted with dimension as the leading key
  std::map<Subspace, long long> mu;
  for (const auto& x : interval) {
    long long acc = 0;
    for (const auto& z : interval)
      if (x.contains(z, p) && !(z == x)) acc += mu.at(z);
    mu[x] = (x == w) ? 1 : -acc;
  }
  return mu.at(mod.full());
}

std::vector<long long> saturation_zeta_oracle(const OrderFamily& fam,
                                              std::int64_t n,
                                              const FieldSpec& field,
                                              const EnumGuard& guard) {
  ConductorModule cm = conductor_module(fam, n, field);
  const int p = field.p;
  std::vector<long long> coeffs((std::size_t)cm.module.dim + 1, 0);
  for (const auto& w : enumerate_submodules(cm.module, guard)) {
    Subspace cl = op_closure(w, cm.b_ops, p);
    if (cl.dim() == cm.module.dim) ++coeffs[(std::size_t)(cm.module.dim - w.dim())];
  }
  return coeffs;
}

long long saturating_subspace_count_oracle(const FieldSpec& field,
                                           std::int64_t n, std::int64_t r,
                                           const EnumGuard& guard) {
  if (field.deg != 2)
    throw std::invalid_argument("saturating count needs a quadratic extension");
  const int p = field.p;
  const int d = 2 * (int)n;
  FpMat om = fp_zero(d, d);
  for (int i = 0; i < (int)n; ++i) {
    om[(std::size_t)(2 * i + 1)][(std::size_t)(2 * i)] = 1;
    om[(std::size_t)(2 * i)][(std::size_t)(2 * i + 1)] =
        (unsigned char)fp_norm(-field.mod_c0, p);
    om[(std::size_t)(2 * i + 1)][(std::size_t)(2 * i + 1)] =
        (unsigned char)fp_norm(-field.mod_c1, p);
  }
  long long count = 0;
  for (const auto& w : enumerate_all_subspaces(p, d, guard)) {
    Subspace img = apply_to_subspace(om, w, p);
    Subspace closure = subspace_sum(w, img, p);
    Subspace interior = subspace_intersect(w, img, p);
    if (closure.dim() % 2 != 0 || interior.dim() % 2 != 0)
      throw std::logic_error("closure/interior must be extension subspaces");
    if (closure.dim() / 2 + interior.dim() / 2 != w.dim())
      throw std::logic_error("dimension identity violated");
    if (closure.dim() == d && (std::int64_t)(d - w.dim()) == r) ++count;
  }
  return count;
}

std::vector<long long> quot_zeta_oracle_inert_m1(const FieldSpec& field,
                                                 std::int64_t n,
                                                 std::int64_t K,
                                                 const EnumGuard& guard) {
  if (field.deg != 2)
    throw std::invalid_argument("quot oracle needs a quadratic extension");
  if (n < 0 || K < 0) throw std::invalid_argument("bad n or K");
  const int p = field.p;
  // one copy of R / T^K ~R has basis 1, (T, Tw), ..., (T^{K-1}, T^{K-1} w)
  const int per = K > 0 ? (int)(2 * K - 1) : 0;
  const int d = per * (int)n;
  auto idx = [&](int copy, std::int64_t g, int c) {
    return copy * per + (int)(2 * g - 1 + c);
  };
  FpMat x = fp_zero(d, d), y = fp_zero(d, d);
  for (int copy = 0; copy < (int)n; ++copy) {
    if (K > 1) {
      x[(std::size_t)idx(copy, 1, 0)][(std::size_t)(copy * per)] = 1;  // T*1
      y[(std::size_t)idx(copy, 1, 1)][(std::size_t)(copy * per)] = 1;  // Tw*1
    }
    for (std::int64_t g = 1; g + 1 < K; ++g) {
      x[(std::size_t)idx(copy, g + 1, 0)][(std::size_t)idx(copy, g, 0)] = 1;
      x[(std::size_t)idx(copy, g + 1, 1)][(std::size_t)idx(copy, g, 1)] = 1;
      y[(std::size_t)idx(copy, g + 1, 1)][(std::size_t)idx(copy, g, 0)] = 1;
      // Tw * T^g w = T^{g+1} w^2 = -c0 T^{g+1} - c1 T^{g+1} w
      y[(std::size_t)idx(copy, g + 1, 0)][(std::size_t)idx(copy, g, 1)] =
          (unsigned char)fp_norm(-field.mod_c0, p);
      y[(std::size_t)idx(copy, g + 1, 1)][(std::size_t)idx(copy, g, 1)] =
          (unsigned char)fp_norm(-field.mod_c1, p);
    }
  }
  ModuleSpec mod;
  mod.p = p;
  mod.dim = d;
  mod.ops = {std::move(x), std::move(y)};
  mod.labels = {"T", "Tw"};
  mod.validate();

  std::vector<long long> coeffs((std::size_t)K + 1, 0);
  for (const auto& w : enumerate_submodules(mod, guard)) {
    int codim = d - w.dim();
    if (codim <= K) ++coeffs[(std::size_t)codim];
  }
  return coeffs;
}

}  // namespace qzeta
