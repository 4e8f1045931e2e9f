#pragma once

#include <map>
#include <vector>

#include "wonderk/fan.hpp"
#include "wonderk/report.hpp"
#include "wonderk/steinberg.hpp"

namespace wonderk {

// Two-block polynomials f(u, v) live in Z[L] (x) Z[L]; u is the first block.

/// prod_{alpha in I} (1 - e^{-alpha}) placed in one block of a `blocks`-block ring.
LaurentPoly lambda_product(const RootSystem &rs, Subset I, int blocks = 1,
                           Block block = Block::First);

/// A family (f_sigma) of two-block polynomials indexed by the maximal cones of
/// a subdivision F_+ of the positive chamber.
struct PiecewiseClass {
  Fan fan_plus;
  std::map<std::size_t, LaurentPoly> values; // maximal cone index -> f_sigma
};

/// The single-cone family of the wonderful compactification.
PiecewiseClass wonderful_class(int rank, const LaurentPoly &f);

/// Simple roots alpha_i (0-based) such that the cone has a facet inside the
/// wall alpha_i = 0.
std::vector<int> wall_roots(const Fan &fan, std::size_t sigma);

/// (i) (1, s_alpha) f_sigma == f_sigma mod (1 - e^{-(alpha, 0)}) on every wall
/// facet, and (ii) f_sigma == f_sigma' mod (1 - e^{-(chi, 0)}) across every
/// interior facet.  Throws ValidationError("MissingCone").
bool membership_check(const WeylGroup &W, const PiecewiseClass &pc);

struct FixedPointValue {
  std::size_t sigma;
  ElemId u, v;
  LaurentPoly value; // (u, v) f_sigma
};
struct FixedPointExpansion {
  std::vector<FixedPointValue> values; // ordered by (sigma, u, v)
  Report report;                       // the translated congruences
};
/// f_{sigma,u,v} for all (sigma, u, v).  Throws ValidationError("NotMember").
FixedPointExpansion fixed_point_expansion(const WeylGroup &W, const PiecewiseClass &pc);

/// Coordinates q_v (two-block, invariant in v) of
///   f = sum_v lambda_{I(v)}(u) q_v (1 (x) f_v),   I(v) = cell of v.
struct WonderfulDecomposition {
  std::vector<LaurentPoly> coords; // indexed by v

  /// Subsets I whose component is nonzero, ascending.
  std::vector<Subset> support(const WeylGroup &W) const;
  bool operator==(const WonderfulDecomposition &) const = default;
};

/// Throws ValidationError("NotInSubring") when a coordinate is not divisible
/// by lambda_I(u).
WonderfulDecomposition wonderful_decompose(const SteinbergSystem &S, const LaurentPoly &f);
LaurentPoly assemble(const SteinbergSystem &S, const WonderfulDecomposition &d);

/// The free generator lambda_{I(v)}(u) (x) f_v and its decomposition.
LaurentPoly wonderful_generator(const SteinbergSystem &S, ElemId v);
WonderfulDecomposition generator_decomposition(const SteinbergSystem &S, ElemId v);

/// Multiply then redecompose; the support of the result is checked against
/// the unions I | I' of contributing components (InvariantViolation
/// "SupportViolation").
WonderfulDecomposition multiply_wonderful(const SteinbergSystem &S,
                                          const WonderfulDecomposition &a,
                                          const WonderfulDecomposition &b);

/// Product of two generators from the structure constants: the coordinate at
/// w in C^J is lambda_{I & I'} lambda_{(I | I') \ J}(u) (x) a^w_{v,v'}.
WonderfulDecomposition generator_product_formula(const SteinbergSystem &S, ElemId v,
                                                 ElemId v2);

// ---- general regular compactifications ----------------------------------
// Elements of (K_T(T-bar) (x) R(T)) are LaurentPoly values of rank d + r:
// exponents are (X_1..X_d, lambda_1..lambda_r) with d = rays of the full fan.

LaurentPoly regular_element(const Fan &full, const LaurentPoly &sr, const LaurentPoly &weights);
/// Diagonal action: X_j -> X_{w(j)}, e^lambda -> e^{w(lambda)}.
LaurentPoly act_regular(const WFan &F, ElemId w, const LaurentPoly &e);

struct RegularComponent {
  std::size_t cone; // index in F_+
  /// E_tau = sum_m (X_tau X^m) (x) b_m with b_m invariant under W_tau.
  std::vector<std::pair<Exponent, LaurentPoly>> terms;
};
struct RegularDecomposition {
  std::vector<RegularComponent> components; // nonzero only, by cone index
};

/// Throws ValidationError("NotInvariant") unless the element is diag(W)-invariant.
RegularDecomposition regular_decompose(const WFan &F, const LaurentPoly &e);
/// Sum over tau in F_+ of the W-orbit of E_tau.
LaurentPoly recombine(const WFan &F, const RegularDecomposition &d);
/// F_tau: components at cones having tau as a face, recombined.  Throws
/// ValidationError("ConeNotInFan").
LaurentPoly filtration(const WFan &F, const RegularDecomposition &d, const ConeRays &tau);

} // namespace wonderk
