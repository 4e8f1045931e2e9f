#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "wonderk/laurent.hpp"
#include "wonderk/report.hpp"
#include "wonderk/support_expansion.hpp"
#include "wonderk/weyl_group.hpp"

namespace wonderk {

/// Full structure-constant tables are computed up to this group order;
/// single expansions and products up to kSpotProductLimit.
inline constexpr std::size_t kTableLimit = 12;
inline constexpr std::size_t kSpotProductLimit = 24;

/// The monomial p_v = prod_{v^{-1} alpha_i < 0} e^{omega_i}.
LaurentPoly p_v(const WeylGroup &W, ElemId v);

/// f_v^I = sum over x in W_I^l(v) of x^{-1} v^{-1} p_v.  Requires v in W^I.
LaurentPoly steinberg_f(const WeylGroup &W, ElemId v, Subset I);

/// The unique I with v in C^I.
inline Subset cell_of(const WeylGroup &W, ElemId v) { return W.right_descents(v); }

struct SteinbergElement {
  ElemId v;
  Subset I;         // v in C^I
  LaurentPoly poly; // f_v = f_v^{Delta \ I}
};

/// f_v for every v in W, in canonical order (so basis[v].v == v).
std::vector<SteinbergElement> modified_basis(const WeylGroup &W);

/// The square system M[u][v] = u(f_v) together with d * M^{-1}, computed
/// once by fraction-free Gauss-Jordan elimination.  Expansion of g is then
/// a_v = (sum_u adj[v][u] u(g)) / d with the final division asserted exact.
class SteinbergSystem {
public:
  explicit SteinbergSystem(WeylGroupPtr W);

  const WeylGroup &group() const { return *W_; }
  const WeylGroupPtr &group_ptr() const { return W_; }
  int rank() const { return W_->rank(); }
  const std::vector<SteinbergElement> &basis() const { return basis_; }
  const LaurentPoly &basis_poly(ElemId v) const { return basis_[v].poly; }

  /// d = +-det M (the sign depends on pivoting).  Lazily computed; gated by
  /// kTableLimit.
  const LaurentPoly &determinant() const;
  /// det M != 0.  Exact below kTableLimit, otherwise by evaluating M at a
  /// random point modulo a 61-bit prime (a nonzero value is a proof).
  bool determinant_nonzero() const;
  LaurentPoly matrix_entry(ElemId u, ElemId v) const;

  /// Coordinates of g in {f_v} over R(T)^W, indexed by ElemId.  Each
  /// coordinate is checked to be W-invariant and the result to recombine to g.
  /// Above kTableLimit the adjugate is not formed; SupportExpansion is used.
  std::vector<LaurentPoly> expand(const LaurentPoly &g) const;
  LaurentPoly combine(const std::vector<LaurentPoly> &coords) const;

  /// a^w_{v,v'} for all w (f_v f_v' = sum_w a^w f_w), memoized.  Throws
  /// InvariantViolation("SupportViolation") if a coordinate outside
  /// the cells C^J, J within I(v) | I(v'), is nonzero.
  const std::vector<LaurentPoly> &structure_constants(ElemId v, ElemId v2) const;

  /// Throws ValidationError("RankBoundExceeded") unless |W| <= limit.
  void require_order(std::size_t limit, const char *what) const;

private:
  void eliminate() const;

  WeylGroupPtr W_;
  std::vector<SteinbergElement> basis_;

  mutable std::once_flag eliminated_;
  mutable LaurentPoly det_;
  mutable std::vector<std::vector<LaurentPoly>> adj_; // adj_[v][u]

  mutable std::mutex support_mutex_;
  mutable std::unique_ptr<SupportExpansion> support_;

  mutable std::mutex cache_mutex_;
  mutable std::map<std::pair<ElemId, ElemId>, std::vector<LaurentPoly>> constants_;
};

using SteinbergSystemPtr = std::shared_ptr<const SteinbergSystem>;

/// Shared per-type instance (elimination is done at most once per type).
SteinbergSystemPtr steinberg_system(const CartanLabel &label,
                                    int rank_bound = kDefaultRankBound);

/// Identities (1) and (2) of the Steinberg-basis comparison: f_v^{D\I} as a
/// sum of f_{vx}^{empty}, and f_v^{D\J} as a sum of f_{vx'}^{D\I} for J a
/// proper subset of I.
Report verify_steinberg_identities(const SteinbergSystem &S);

/// Direct-sum decomposition of R(T)^{W_{D\I}} into the spans R(T)_J of
/// {f_v : v in C^J}, J within I: support of expansions, partition counts,
/// and directness against the proper-subset part.
Report verify_direct_sum(const SteinbergSystem &S);

} // namespace wonderk
