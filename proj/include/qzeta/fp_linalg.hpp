#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace qzeta {

// Dense linear algebra over a prime field F_p, sized for enumeration
// oracles (dimensions up to ~12, p in {2,3,5,...}).

using FpVec = std::vector<unsigned char>;
using FpMat = std::vector<FpVec>;  // row-major

int fp_norm(long long x, int p);
int fp_inv(int a, int p);

FpMat fp_identity(int d);
FpMat fp_zero(int rows, int cols);
FpMat fp_mul(const FpMat& a, const FpMat& b, int p);
FpVec fp_apply(const FpMat& m, const FpVec& v, int p);  // column action m*v
bool fp_equal(const FpMat& a, const FpMat& b);

/// In-place reduced row echelon form; zero rows removed.  The result is the
/// canonical basis of the row space.
void fp_rref(FpMat& rows, int p);

/// Reduce v against canonical RREF rows (in place).  True if v lands in
/// the row space.
bool fp_reduce(FpVec& v, const FpMat& rref_rows, int p);

/// Canonical RREF basis of the kernel {v : m v = 0} (v has m's column count).
FpMat fp_kernel(const FpMat& m, int cols, int p);

/// A subspace of F_p^ambient in canonical reduced-echelon form.  Two
/// subspaces are equal iff their echelon bases are identical, so ordering
/// and hashing work on the raw rows.
struct Subspace {
  int ambient = 0;
  FpMat rows;

  int dim() const { return (int)rows.size(); }
  bool contains(const FpVec& v, int p) const;
  bool contains(const Subspace& other, int p) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;
  friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
    if (auto c = a.ambient <=> b.ambient; c != 0) return c;
    if (auto c = a.rows.size() <=> b.rows.size(); c != 0) return c;
    return a.rows <=> b.rows;
  }
};

Subspace span_of(FpMat vectors, int ambient, int p);
Subspace subspace_sum(const Subspace& a, const Subspace& b, int p);
Subspace subspace_intersect(const Subspace& a, const Subspace& b, int p);
Subspace apply_to_subspace(const FpMat& op, const Subspace& w, int p);
/// Smallest subspace containing w invariant under all ops.
Subspace op_closure(const Subspace& w, const std::vector<FpMat>& ops, int p);
/// {v : op v in w for all ops}.
Subspace op_preimage(const Subspace& w, const std::vector<FpMat>& ops, int p);

}  // namespace qzeta
