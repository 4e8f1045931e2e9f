#pragma once

#include <vector>

#include "wonderk/equivariant.hpp"
#include "wonderk/report.hpp"
#include "wonderk/steinberg.hpp"

namespace wonderk {

/// Element of K(G/B) = R(T)/J: integer coordinates over {fbar_v}, indexed by v.
using KGBElement = std::vector<Integer>;

/// Element of K(X): K(G/B) coordinates over {gamma_v}, indexed by v.
struct KXElement {
  std::vector<KGBElement> coords;
  bool operator==(const KXElement &) const = default;
};

KGBElement kgb_basis(const WeylGroup &W, ElemId v);
KGBElement kgb_zero(const WeylGroup &W);
KGBElement kgb_add(const KGBElement &a, const KGBElement &b);
KGBElement kgb_scale(const KGBElement &a, const Integer &c);
bool kgb_is_zero(const KGBElement &a);

/// phi(g) = sum_v eps(a_v) fbar_v where g = sum_v a_v f_v.
KGBElement characteristic_map(const SteinbergSystem &S, const LaurentPoly &g);
/// The lift sum_v a_v f_v in R(T).
LaurentPoly kgb_lift(const SteinbergSystem &S, const KGBElement &a);
/// phi(lift(a) lift(b)), through the augmented structure constants.
KGBElement kgb_multiply(const SteinbergSystem &S, const KGBElement &a, const KGBElement &b);
/// phi(prod_{alpha in I} (1 - e^{-alpha})).
KGBElement lambda_class_image(const SteinbergSystem &S, Subset I);

KXElement kx_basis(const WeylGroup &W, ElemId v);
KXElement kx_zero(const WeylGroup &W);
/// gamma_v gamma_v' = sum_J sum_{w in C^J} lbar_{I & I'} lbar_{(I | I') \ J} abar^w gamma_w.
KXElement kx_basis_product(const SteinbergSystem &S, ElemId v, ElemId v2);
KXElement kx_multiply(const SteinbergSystem &S, const KXElement &x, const KXElement &y);

/// (phi on u) (x) (eps on v) applied to the coordinates of an equivariant class.
KXElement pushdown(const SteinbergSystem &S, const WonderfulDecomposition &d);

struct KXTable {
  std::vector<std::vector<KXElement>> products; // [v][v2]
  Report report; // unit, symmetry, associativity
};
/// Full table; gated by kTableLimit.  Associativity on all triples when
/// |W| <= 6, else on a fixed sample.
KXTable kx_table(const SteinbergSystem &S);

} // namespace wonderk
