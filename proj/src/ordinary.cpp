#include "wonderk/ordinary.hpp"

#include <algorithm>
#include <random>

#include "wonderk/error.hpp"

namespace wonderk {

KGBElement kgb_zero(const WeylGroup &W) { return KGBElement(W.size(), 0); }

KGBElement kgb_basis(const WeylGroup &W, ElemId v) {
  KGBElement e = kgb_zero(W);
  e[v] = 1;
  return e;
}

KGBElement kgb_add(const KGBElement &a, const KGBElement &b) {
  KGBElement out = a;
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] += b[i];
  return out;
}

KGBElement kgb_scale(const KGBElement &a, const Integer &c) {
  KGBElement out = a;
  for (auto &x : out)
    x *= c;
  return out;
}

bool kgb_is_zero(const KGBElement &a) {
  return std::all_of(a.begin(), a.end(), [](const Integer &x) { return x == 0; });
}

KGBElement characteristic_map(const SteinbergSystem &S, const LaurentPoly &g) {
  const auto coords = S.expand(g);
  KGBElement out;
  out.reserve(coords.size());
  for (const auto &a : coords)
    out.push_back(augmentation(a));
  return out;
}

LaurentPoly kgb_lift(const SteinbergSystem &S, const KGBElement &a) {
  LaurentPoly out(S.rank(), 1);
  for (ElemId v = 0; v < a.size(); ++v)
    if (a[v] != 0)
      out += S.basis_poly(v) * a[v];
  return out;
}

KGBElement kgb_multiply(const SteinbergSystem &S, const KGBElement &a, const KGBElement &b) {
  // phi(f_v f_v') = sum_w eps(a^w_{v,v'}) fbar_w, so the product of the lifts
  // is expanded through the memoized structure constants.
  const WeylGroup &W = S.group();
  KGBElement out = kgb_zero(W);
  for (ElemId v = 0; v < a.size(); ++v) {
    if (a[v] == 0)
      continue;
    for (ElemId v2 = 0; v2 < b.size(); ++v2) {
      if (b[v2] == 0)
        continue;
      const Integer c = a[v] * b[v2];
      const auto &sc = S.structure_constants(std::min(v, v2), std::max(v, v2));
      for (ElemId w = 0; w < W.size(); ++w)
        if (!sc[w].is_zero())
          out[w] += c * augmentation(sc[w]);
    }
  }
  return out;
}

KGBElement lambda_class_image(const SteinbergSystem &S, Subset I) {
  return characteristic_map(S, lambda_product(S.group().root_system(), I));
}

KXElement kx_zero(const WeylGroup &W) {
  return KXElement{std::vector<KGBElement>(W.size(), kgb_zero(W))};
}

KXElement kx_basis(const WeylGroup &W, ElemId v) {
  KXElement x = kx_zero(W);
  x.coords[v] = kgb_basis(W, 0);
  return x;
}

KXElement kx_basis_product(const SteinbergSystem &S, ElemId v, ElemId v2) {
  const WeylGroup &W = S.group();
  const Subset I = cell_of(W, v), I2 = cell_of(W, v2);
  const auto &a = S.structure_constants(v, v2);
  const KGBElement shared = lambda_class_image(S, I & I2);
  KXElement out = kx_zero(W);
  for (ElemId w = 0; w < W.size(); ++w) {
    const Integer abar = augmentation(a[w]);
    if (abar == 0)
      continue;
    const Subset J = cell_of(W, w);
    out.coords[w] = kgb_scale(
        kgb_multiply(S, shared, lambda_class_image(S, (I | I2) & ~J)), abar);
  }
  return out;
}

KXElement kx_multiply(const SteinbergSystem &S, const KXElement &x, const KXElement &y) {
  const WeylGroup &W = S.group();
  KXElement out = kx_zero(W);
  for (ElemId v = 0; v < W.size(); ++v) {
    if (kgb_is_zero(x.coords[v]))
      continue;
    for (ElemId v2 = 0; v2 < W.size(); ++v2) {
      if (kgb_is_zero(y.coords[v2]))
        continue;
      const KGBElement c = kgb_multiply(S, x.coords[v], y.coords[v2]);
      if (kgb_is_zero(c))
        continue;
      const KXElement p = kx_basis_product(S, v, v2);
      for (ElemId w = 0; w < W.size(); ++w)
        if (!kgb_is_zero(p.coords[w]))
          out.coords[w] = kgb_add(out.coords[w], kgb_multiply(S, c, p.coords[w]));
    }
  }
  return out;
}

KXElement pushdown(const SteinbergSystem &S, const WonderfulDecomposition &d) {
  const WeylGroup &W = S.group();
  KXElement out = kx_zero(W);
  for (ElemId w = 0; w < d.coords.size(); ++w)
    if (!d.coords[w].is_zero())
      out.coords[w] = characteristic_map(S, collapse_block(d.coords[w], Block::First));
  return out;
}

KXTable kx_table(const SteinbergSystem &S) {
  S.require_order(kTableLimit, "ktable");
  const WeylGroup &W = S.group();
  const std::size_t n = W.size();
  KXTable t;
  t.report.suite = "ktable";
  t.report.type = W.root_system().label().to_string();
  t.products.assign(n, std::vector<KXElement>(n));
  for (ElemId v = 0; v < n; ++v)
    for (ElemId v2 = 0; v2 < n; ++v2)
      t.products[v][v2] = kx_basis_product(S, v, v2);

  for (ElemId v = 0; v < n; ++v)
    t.report.add("unit", "v=" + W.name(v), t.products[0][v] == kx_basis(W, v));
  for (ElemId v = 0; v < n; ++v)
    for (ElemId v2 = v + 1; v2 < n; ++v2)
      t.report.add("symmetry", "v=" + W.name(v) + ",v'=" + W.name(v2),
                   t.products[v][v2] == t.products[v2][v]);

  auto assoc = [&](ElemId a, ElemId b, ElemId c) {
    const KXElement left = kx_multiply(S, t.products[a][b], kx_basis(W, c));
    const KXElement right = kx_multiply(S, kx_basis(W, a), t.products[b][c]);
    t.report.add("associativity", W.name(a) + "," + W.name(b) + "," + W.name(c),
                 left == right);
  };
  if (n <= 6) {
    for (ElemId a = 0; a < n; ++a)
      for (ElemId b = 0; b < n; ++b)
        for (ElemId c = 0; c < n; ++c)
          assoc(a, b, c);
  } else {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<ElemId> pick(0, n - 1);
    for (int k = 0; k < 40; ++k)
      assoc(pick(rng), pick(rng), pick(rng));
  }
  return t;
}

} // namespace wonderk
