#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qzeta/fp_linalg.hpp"
#include "qzeta/laurent.hpp"
#include "qzeta/partition.hpp"
#include "qzeta/zeta.hpp"

namespace qzeta {

/// A small prime field F_p, optionally with a fixed quadratic extension
/// F_{p^2} = F_p[x]/(x^2 + c1 x + c0).  The modulus is the
/// lexicographically first irreducible quadratic, so runs are reproducible.
struct FieldSpec {
  int p = 2;
  int deg = 1;
  int mod_c1 = 0;
  int mod_c0 = 0;

  static FieldSpec prime(int p);
  static FieldSpec quadratic(int p);
  long long extension_size() const;
};

/// Resource guard for enumerations; counts candidates examined.
struct EnumGuard {
  long long limit = 10'000'000;
  mutable long long used = 0;

  void tick(long long cost = 1) const;
  /// Reject up front when a projected candidate count exceeds the limit.
  void require(long long projected) const;
};

/// A finite F_p-vector space with commuting operator actions: a concrete
/// finite module over a quotient ring, presented for enumeration.
struct ModuleSpec {
  int p = 2;
  int dim = 0;
  std::vector<FpMat> ops;
  std::vector<std::string> labels;

  void validate() const;  // square shapes, pairwise commuting
  Subspace full() const;
  Subspace zero() const { return Subspace{dim, {}}; }
};

/// M_V(lambda) over F_p: one nilpotent shift block per part.
ModuleSpec module_for_partition(const Partition& lambda, int p);

/// The conductor-quotient pair A <= B acting on B^n: `module` carries the
/// A-generators (used for submodule enumeration), `b_ops` the B-generators
/// (used for the saturation check).
struct ConductorModule {
  ModuleSpec module;
  std::vector<FpMat> b_ops;
};
ConductorModule conductor_module(const OrderFamily& fam, std::int64_t n,
                                 const FieldSpec& field);

/// All operator-invariant subspaces, each exactly once, in canonical order.
/// Walks the submodule lattice upward through one-dimensional covers
/// (vectors whose images under every operator already lie in the current
/// submodule), so only genuine submodules are ever materialized.
std::vector<Subspace> enumerate_submodules(const ModuleSpec& mod,
                                           const EnumGuard& guard);

/// Every subspace of F_p^dim by direct echelon enumeration (pivot column
/// sets, then free entries).  Cross-check companion to the lattice walk.
std::vector<Subspace> enumerate_all_subspaces(int p, int dim,
                                              const EnumGuard& guard);

/// Type of the invariant subspace w under the chosen generator: the
/// partition whose conjugate lists dim(u^{i-1} w) - dim(u^i w).
Partition module_type(const Subspace& w, const ModuleSpec& mod,
                      std::size_t gen_index);

/// Quotient module mod/w with the induced operators.
ModuleSpec quotient_module(const ModuleSpec& mod, const Subspace& w);

/// Number of submodules of M_V(lambda) of type mu over F_p (deg-1 field).
long long hall_count_oracle(const Partition& lambda, const Partition& mu,
                            const FieldSpec& field, const EnumGuard& guard);

/// Counts keyed by (type, cotype) pairs — the refined Hall count.
std::map<std::pair<Partition, Partition>, long long> hall_refined_oracle(
    const Partition& lambda, const FieldSpec& field, const EnumGuard& guard);

/// Moebius function mu(w, M) of the submodule poset, by the defining
/// recursion mu(x,x) = 1, sum_{x <= z <= y} mu(x,z) = 0.
long long moebius_oracle(const ModuleSpec& mod, const Subspace& w,
                         const EnumGuard& guard);

/// Saturation zeta coefficients: entry j counts A-submodules W of B^n with
/// B.W = B^n and index q^j.
std::vector<long long> saturation_zeta_oracle(const OrderFamily& fam,
                                              std::int64_t n,
                                              const FieldSpec& field,
                                              const EnumGuard& guard);

/// Number of r-codimensional F_p-subspaces W of (F_{p^2})^n with
/// F_{p^2} . W full.  Also asserts dim closure + dim interior = dim W
/// on every enumerated subspace.
long long saturating_subspace_count_oracle(const FieldSpec& field,
                                           std::int64_t n, std::int64_t r,
                                           const EnumGuard& guard);

/// Lattice zeta coefficients of R^n for the inert m=1 order, read off the
/// finite quotient R^n / T^K ~R^n: entry j (j <= K) counts submodules of
/// index q^j.  An index-q^j submodule contains m^j R^n, so level K captures
/// every coefficient up to t^K; re-run at K+1 to cross-check.
std::vector<long long> quot_zeta_oracle_inert_m1(const FieldSpec& field,
                                                 std::int64_t n,
                                                 std::int64_t K,
                                                 const EnumGuard& guard);

}  // namespace qzeta
