#include "qzeta/fp_linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace qzeta {

int fp_norm(long long x, int p) {
  int r = (int)(x % p);
  return r < 0 ? r + p : r;
}

int fp_inv(int a, int p) {
  a = fp_norm(a, p);
  if (a == 0) throw std::domain_error("inverse of 0 in F_p");
  int r = 1, b = a;
  for (int e = p - 2; e > 0; e >>= 1) {  // Fermat
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return r;
}

FpMat fp_identity(int d) {
  FpMat m((std::size_t)d, FpVec((std::size_t)d, 0));
  for (int i = 0; i < d; ++i) m[(std::size_t)i][(std::size_t)i] = 1;
  return m;
}

FpMat fp_zero(int rows, int cols) {
  return FpMat((std::size_t)rows, FpVec((std::size_t)cols, 0));
}

FpMat fp_mul(const FpMat& a, const FpMat& b, int p) {
  const std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
  FpMat r(n, FpVec(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (a[i][j] == 0) continue;
      int aij = a[i][j];
      for (std::size_t l = 0; l < m; ++l)
        r[i][l] = (unsigned char)((r[i][l] + aij * b[j][l]) % p);
    }
  return r;
}

FpVec fp_apply(const FpMat& m, const FpVec& v, int p) {
  FpVec r(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    int acc = 0;
    for (std::size_t j = 0; j < v.size(); ++j) acc += m[i][j] * v[j];
    r[i] = (unsigned char)(acc % p);
  }
  return r;
}

bool fp_equal(const FpMat& a, const FpMat& b) { return a == b; }

void fp_rref(FpMat& rows, int p) {
  const std::size_t ncols = rows.empty() ? 0 : rows[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    int inv = fp_inv(rows[rank][col], p);
    for (auto& x : rows[rank]) x = (unsigned char)(x * inv % p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      int f = rows[i][col];
      for (std::size_t j = 0; j < ncols; ++j)
        rows[i][j] = (unsigned char)(fp_norm(rows[i][j] - f * rows[rank][j], p));
    }
    ++rank;
  }
  rows.resize(rank);
}

bool fp_reduce(FpVec& v, const FpMat& rref_rows, int p) {
  for (const auto& row : rref_rows) {
    std::size_t lead = 0;
    while (lead < row.size() && row[lead] == 0) ++lead;
    if (lead == row.size()) continue;
    if (v[lead] == 0) continue;
    int f = v[lead];
    for (std::size_t j = 0; j < v.size(); ++j)
      v[j] = (unsigned char)fp_norm(v[j] - f * row[j], p);
  }
  return std::all_of(v.begin(), v.end(), [](unsigned char x) { return x == 0; });
}

FpMat fp_kernel(const FpMat& m, int cols, int p) {
  FpMat a = m;
  fp_rref(a, p);
  std::vector<int> pivot_col;
  std::vector<bool> is_pivot((std::size_t)cols, false);
  for (const auto& row : a) {
    std::size_t lead = 0;
    while (lead < row.size() && row[lead] == 0) ++lead;
    pivot_col.push_back((int)lead);
    is_pivot[lead] = true;
  }
  FpMat basis;
  for (int j = 0; j < cols; ++j) {
    if (is_pivot[(std::size_t)j]) continue;
    FpVec v((std::size_t)cols, 0);
    v[(std::size_t)j] = 1;
    for (std::size_t i = 0; i < a.size(); ++i)
      v[(std::size_t)pivot_col[i]] =
          (unsigned char)fp_norm(-(int)a[i][(std::size_t)j], p);
    basis.push_back(std::move(v));
  }
  fp_rref(basis, p);
  return basis;
}

bool Subspace::contains(const FpVec& v, int p) const {
  FpVec w = v;
  return fp_reduce(w, rows, p);
}

bool Subspace::contains(const Subspace& other, int p) const {
  for (const auto& r : other.rows)
    if (!contains(r, p)) return false;
  return true;
}

Subspace span_of(FpMat vectors, int ambient, int p) {
  fp_rref(vectors, p);
  return Subspace{ambient, std::move(vectors)};
}

Subspace subspace_sum(const Subspace& a, const Subspace& b, int p) {
  FpMat rows = a.rows;
  rows.insert(rows.end(), b.rows.begin(), b.rows.end());
  return span_of(std::move(rows), a.ambient, p);
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b, int p) {
  // v = x^T a.rows lies in b iff reducing it against b leaves zero; the
  // residue is linear in x, so the intersection is a kernel in x-space.
  FpMat residues;  // one column per a-basis vector
  std::vector<FpVec> reduced;
  for (const auto& r : a.rows) {
    FpVec v = r;
    fp_reduce(v, b.rows, p);
    reduced.push_back(std::move(v));
  }
  const int ka = (int)a.rows.size();
  const int d = a.ambient;
  FpMat constraint((std::size_t)d, FpVec((std::size_t)ka, 0));
  for (int j = 0; j < ka; ++j)
    for (int i = 0; i < d; ++i)
      constraint[(std::size_t)i][(std::size_t)j] = reduced[(std::size_t)j][(std::size_t)i];
  FpMat xs = fp_kernel(constraint, ka, p);
  FpMat rows;
  for (const auto& x : xs) {
    FpVec v((std::size_t)d, 0);
    for (int j = 0; j < ka; ++j) {
      if (x[(std::size_t)j] == 0) continue;
      for (int i = 0; i < d; ++i)
        v[(std::size_t)i] = (unsigned char)((v[(std::size_t)i] +
                                             x[(std::size_t)j] * a.rows[(std::size_t)j][(std::size_t)i]) %
                                            p);
    }
    rows.push_back(std::move(v));
  }
  return span_of(std::move(rows), d, p);
}

Subspace apply_to_subspace(const FpMat& op, const Subspace& w, int p) {
  FpMat rows;
  for (const auto& r : w.rows) rows.push_back(fp_apply(op, r, p));
  return span_of(std::move(rows), w.ambient, p);
}

Subspace op_closure(const Subspace& w, const std::vector<FpMat>& ops, int p) {
  Subspace cur = w;
  while (true) {
    FpMat rows = cur.rows;
    for (const auto& op : ops)
      for (const auto& r : cur.rows) rows.push_back(fp_apply(op, r, p));
    Subspace next = span_of(std::move(rows), cur.ambient, p);
    if (next.dim() == cur.dim()) return cur;
    cur = std::move(next);
  }
}

Subspace op_preimage(const Subspace& w, const std::vector<FpMat>& ops, int p) {
  const int d = w.ambient;
  FpMat constraint;
  for (const auto& op : ops) {
    // rows: residue coordinates of op * e_i modulo w
    FpMat cols;
    for (int i = 0; i < d; ++i) {
      FpVec e((std::size_t)d, 0);
      e[(std::size_t)i] = 1;
      FpVec img = fp_apply(op, e, p);
      fp_reduce(img, w.rows, p);
      cols.push_back(std::move(img));
    }
    for (int r = 0; r < d; ++r) {
      FpVec row((std::size_t)d, 0);
      bool nonzero = false;
      for (int i = 0; i < d; ++i) {
        row[(std::size_t)i] = cols[(std::size_t)i][(std::size_t)r];
        nonzero |= row[(std::size_t)i] != 0;
      }
      if (nonzero) constraint.push_back(std::move(row));
    }
  }
  if (constraint.empty()) {
    FpMat all = fp_identity(d);
    return span_of(std::move(all), d, p);
  }
  return Subspace{d, fp_kernel(constraint, d, p)};
}

}  // namespace qzeta
