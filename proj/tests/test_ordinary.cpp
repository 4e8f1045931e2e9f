#include <doctest.h>

#include <random>

#include "wonderk/error.hpp"
#include "wonderk/ordinary.hpp"

using namespace wonderk;

namespace {

LaurentPoly mono(int r, IntVector e, long c = 1) { return LaurentPoly::monomial(r, 1, e, c); }

KGBElement kgb(std::initializer_list<long> xs) {
  KGBElement out;
  for (long x : xs)
    out.emplace_back(x);
  return out;
}

LaurentPoly random_poly(int r, std::mt19937 &rng, int terms = 3) {
  std::uniform_int_distribution<int> ex(-2, 2), co(-3, 3);
  std::vector<Term> t;
  for (int k = 0; k < terms; ++k) {
    Exponent e(static_cast<std::size_t>(r));
    for (auto &x : e)
      x = ex(rng);
    t.push_back({e, co(rng)});
  }
  return LaurentPoly::from_terms(r, 1, std::move(t));
}

LaurentPoly symmetrize(const WeylGroup &W, const LaurentPoly &g) {
  LaurentPoly out(g.rank(), 1);
  for (ElemId w = 0; w < W.size(); ++w)
    out += weyl_act(W, w, g, Block::First);
  return out;
}

} // namespace

TEST_CASE("characteristic map and K(G/B) in type A1") {
  auto S = steinberg_system(CartanLabel::parse("A1"));
  const auto &W = S->group();
  CHECK(characteristic_map(*S, LaurentPoly::constant(1, 1, 1)) == kgb({1, 0}));
  CHECK(characteristic_map(*S, mono(1, {-1})) == kgb({0, 1}));
  CHECK(characteristic_map(*S, mono(1, {1}) + mono(1, {-1})) == kgb({2, 0}));
  const auto fs = kgb_basis(W, 1);
  CHECK(kgb_multiply(*S, fs, fs) == kgb({-1, 2}));
  const auto h = kgb({1, -1});
  CHECK(kgb_is_zero(kgb_multiply(*S, h, h)));
  CHECK(lambda_class_image(*S, 0) == kgb({1, 0}));
  CHECK(lambda_class_image(*S, 1) == kgb({2, -2}));
}

TEST_CASE("characteristic map is a ring homomorphism") {
  std::mt19937 rng(31);
  for (const char *t : {"A1", "A2", "B2"}) {
    auto S = steinberg_system(CartanLabel::parse(t));
    const auto &W = S->group();
    const int r = W.rank();
    for (int trial = 0; trial < 8; ++trial) {
      auto g = random_poly(r, rng), h = random_poly(r, rng);
      CHECK(characteristic_map(*S, g * h) ==
            kgb_multiply(*S, characteristic_map(*S, g), characteristic_map(*S, h)));
      auto c = symmetrize(W, random_poly(r, rng, 1));
      CHECK(characteristic_map(*S, c) == kgb_scale(kgb_basis(W, 0), augmentation(c)));
    }
    // any lift works: perturb f_v by (c - eps(c)) f_w
    for (ElemId v = 0; v < W.size(); ++v)
      for (ElemId v2 = 0; v2 < W.size(); ++v2) {
        auto c = symmetrize(W, random_poly(r, rng, 1));
        auto j = c - LaurentPoly::constant(r, 1, augmentation(c));
        const ElemId w = static_cast<ElemId>(rng() % W.size());
        auto lift = S->basis_poly(v) + j * S->basis_poly(w);
        CHECK(characteristic_map(*S, lift * S->basis_poly(v2)) ==
              kgb_multiply(*S, kgb_basis(W, v), kgb_basis(W, v2)));
        CHECK(kgb_lift(*S, kgb_basis(W, v)) == S->basis_poly(v));
      }
  }
}

TEST_CASE("lambda classes are nilpotent") {
  for (const char *t : {"A1", "A2", "B2"}) {
    auto S = steinberg_system(CartanLabel::parse(t));
    const auto &W = S->group();
    const std::size_t bound = W.root_system().positive_roots().size() + 1;
    for (Subset I = 1; I <= full_subset(W.rank()); ++I) {
      const auto x = lambda_class_image(*S, I);
      CHECK_FALSE(kgb_is_zero(x));
      auto p = x;
      std::size_t k = 1;
      while (!kgb_is_zero(p) && k <= bound) {
        p = kgb_multiply(*S, p, x);
        ++k;
      }
      CHECK(kgb_is_zero(p));
    }
  }
}

TEST_CASE("K(X) products") {
  auto S = steinberg_system(CartanLabel::parse("A1"));
  const auto &W = S->group();
  const auto gs = kx_basis(W, 1);
  auto sq = kx_multiply(*S, gs, gs);
  CHECK(kgb_is_zero(sq.coords[0]));
  CHECK(sq.coords[1] == kgb({4, -4}));
  CHECK(kx_multiply(*S, sq, gs) == kx_zero(W));
  CHECK(kx_multiply(*S, kx_basis(W, 0), gs) == gs);

  auto table = kx_table(*S);
  CHECK(table.report.all_pass());
  CHECK(table.products[1][1] == sq);

  auto S2 = steinberg_system(CartanLabel::parse("A2"));
  auto t2 = kx_table(*S2);
  std::size_t assoc = 0;
  for (const auto &c : t2.report.checks)
    assoc += c.check == "associativity";
  CHECK(assoc == 216);
  CHECK(t2.report.all_pass());
  CHECK(t2.products.size() * t2.products.size() == 36);

  CHECK_THROWS_AS(kx_table(*steinberg_system(CartanLabel::parse("A3"))), ValidationError);
}

TEST_CASE("pushdown of equivariant products") {
  for (const char *t : {"A1", "A2"}) {
    auto S = steinberg_system(CartanLabel::parse(t));
    const auto &W = S->group();
    for (ElemId v = 0; v < W.size(); ++v) {
      CHECK(pushdown(*S, generator_decomposition(*S, v)) == kx_basis(W, v));
      for (ElemId v2 = 0; v2 < W.size(); ++v2) {
        auto eq = multiply_wonderful(*S, generator_decomposition(*S, v),
                                     generator_decomposition(*S, v2));
        CHECK(pushdown(*S, eq) == kx_basis_product(*S, v, v2));
      }
    }
  }
}
