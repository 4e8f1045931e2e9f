#include <doctest.h>

#include <random>
#include <set>

#include "wonderk/equivariant.hpp"
#include "wonderk/error.hpp"

using namespace wonderk;

namespace {

LaurentPoly one(int r) { return LaurentPoly::constant(r, 1, 1); }
LaurentPoly mono(int r, IntVector e, long c = 1) { return LaurentPoly::monomial(r, 1, e, c); }

// Lemma-style membership by explicit division: (1, s_i) f - f must be a
// multiple of (1 - e^{-alpha_i}) (x) 1 for every simple root.
bool member_by_division(const WeylGroup &W, const LaurentPoly &f) {
  const auto &rs = W.root_system();
  for (int i = 0; i < W.rank(); ++i) {
    auto h = weyl_act(W, W.generator(i), f, Block::Second) - f;
    if (!h.divide_exact(tensor(one_minus_exp(W.rank(), 1, rs.simple_root(i)), one(W.rank()))))
      return false;
  }
  return true;
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

WonderfulDecomposition random_decomposition(const SteinbergSystem &S, std::mt19937 &rng) {
  const auto &W = S.group();
  const int r = W.rank();
  WonderfulDecomposition d;
  for (ElemId v = 0; v < W.size(); ++v)
    d.coords.push_back(tensor(random_poly(r, rng, 2), symmetrize(W, random_poly(r, rng, 1))));
  return d;
}

} // namespace

TEST_CASE("membership: hand cases") {
  auto S = steinberg_system(CartanLabel::parse("A1"));
  const auto &W = S->group();
  const auto alpha_u = tensor(one_minus_exp(1, 1, IntVector{2}), one(1));
  const auto em = tensor(one(1), mono(1, {-1}));
  CHECK_FALSE(membership_check(W, wonderful_class(1, em)));
  CHECK(membership_check(W, wonderful_class(1, alpha_u * em)));
  CHECK(membership_check(W, wonderful_class(1, LaurentPoly::constant(1, 2, 5))));
  auto inv = tensor(mono(1, {1}) + mono(1, {-1}), mono(1, {2}) + mono(1, {-2}));
  CHECK(membership_check(W, wonderful_class(1, inv)));
  PiecewiseClass empty{positive_chamber(1), {}};
  CHECK_THROWS_AS(membership_check(W, empty), ValidationError);

  for (const char *t : {"A1", "A2", "B2"}) {
    auto St = steinberg_system(CartanLabel::parse(t));
    CHECK(wall_roots(positive_chamber(St->rank()), positive_chamber(St->rank()).cones().size() - 1)
              .size() == static_cast<std::size_t>(St->rank()));
  }
}

TEST_CASE("fixed-point expansion") {
  auto S = steinberg_system(CartanLabel::parse("A1"));
  const auto &W = S->group();
  auto fp = fixed_point_expansion(W, wonderful_class(1, LaurentPoly::constant(1, 2, 1)));
  CHECK(fp.values.size() == 4);
  for (const auto &x : fp.values)
    CHECK(x.value == LaurentPoly::constant(1, 2, 1));
  CHECK(fp.report.all_pass());

  const auto lam = one_minus_exp(1, 1, IntVector{2});
  auto fp2 = fixed_point_expansion(W, wonderful_class(1, tensor(lam, one(1))));
  for (const auto &x : fp2.values)
    CHECK(x.value == tensor(weyl_act(W, x.u, lam, Block::First), one(1)));
  CHECK(fp2.report.all_pass());
  CHECK_THROWS_AS(fixed_point_expansion(W, wonderful_class(1, tensor(one(1), mono(1, {-1})))),
                  ValidationError);

  // subdivided B2 chamber: five-ray family from an SR element
  auto W2 = make_weyl_group(CartanLabel::parse("B2"));
  Fan fan = subdivided_positive_fan(2, {{1, 0}, {1, 1}, {0, 1}}, {{0, 1}, {1, 2}, {0}, {1}, {2}});
  std::mt19937 rng(5);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Term> t;
    for (int k = 0; k < 4; ++k)
      t.push_back({Exponent{static_cast<int>(rng() % 5) - 2, static_cast<int>(rng() % 5) - 2,
                            static_cast<int>(rng() % 5) - 2},
                   static_cast<long>(rng() % 7) - 3});
    auto e = LaurentPoly::from_terms(3, 1, std::move(t));
    auto c = symmetrize(*W2, random_poly(2, rng, 1));
    PiecewiseClass pc{fan, {}};
    for (std::size_t m : fan.maximal_cones())
      pc.values[m] = tensor(restrict_to_fixed_point(W2->root_system(), fan, m, e), c);
    CHECK(membership_check(*W2, pc));
    auto fp3 = fixed_point_expansion(*W2, pc);
    CHECK(fp3.values.size() == 2 * 8 * 8);
    CHECK(fp3.report.all_pass());
    auto broken = pc;
    broken.values.begin()->second += tensor(mono(2, {1, 0}), one(2));
    CHECK_FALSE(membership_check(*W2, broken));
  }
}

TEST_CASE("wonderful decomposition: hand cases") {
  auto S = steinberg_system(CartanLabel::parse("A1"));
  const auto &W = S->group();
  const auto lam = one_minus_exp(1, 1, IntVector{2});
  auto d1 = wonderful_decompose(*S, LaurentPoly::constant(1, 2, 1));
  CHECK(d1.coords[0] == LaurentPoly::constant(1, 2, 1));
  CHECK(d1.coords[1].is_zero());
  CHECK(d1.support(W) == std::vector<Subset>{0});

  auto d2 = wonderful_decompose(*S, tensor(lam, mono(1, {-1})));
  CHECK(d2.coords[0].is_zero());
  CHECK(d2.coords[1] == LaurentPoly::constant(1, 2, 1));
  CHECK(d2.support(W) == std::vector<Subset>{1});

  try {
    wonderful_decompose(*S, tensor(one(1), mono(1, {-1})));
    CHECK(false);
  } catch (const ValidationError &e) {
    CHECK(e.code() == "NotInSubring");
  }

  // [(1 - e^{-alpha(u)}) (x) f_s]^2
  auto sq = multiply_wonderful(*S, d2, d2);
  CHECK(sq.coords[0] == -tensor(lam * lam, one(1)));
  CHECK(sq.coords[1] == tensor(lam, mono(1, {1}) + mono(1, {-1})));
  CHECK(assemble(*S, sq) == tensor(lam * lam, mono(1, {-2})));
  CHECK(multiply_wonderful(*S, d2, d1) == d2);
}

TEST_CASE("rank theorem and round trips") {
  std::mt19937 rng(17);
  for (const char *t : {"A1", "A2", "B2", "G2"}) {
    auto S = steinberg_system(CartanLabel::parse(t));
    const auto &W = S->group();
    std::size_t count = 0;
    for (Subset I = 0; I <= full_subset(W.rank()); ++I)
      count += c_sets(W)[I].size();
    CHECK(count == W.size());
    for (ElemId v = 0; v < W.size(); ++v) {
      auto g = wonderful_generator(*S, v);
      CHECK(member_by_division(W, g));
      CHECK(wonderful_decompose(*S, g) == generator_decomposition(*S, v));
    }
  }
  for (const char *t : {"A1", "A2", "B2"}) {
    auto S = steinberg_system(CartanLabel::parse(t));
    const auto &W = S->group();
    for (int trial = 0; trial < 4; ++trial) {
      auto d = random_decomposition(*S, rng);
      auto f = assemble(*S, d);
      CHECK(member_by_division(W, f));
      CHECK(membership_check(W, wonderful_class(W.rank(), f)));
      CHECK(wonderful_decompose(*S, f) == d);
      IntVector lambda(static_cast<std::size_t>(W.rank()), 0);
      lambda[trial % W.rank()] = 1 + trial;
      auto bad = f + tensor(one(W.rank()), mono(W.rank(), lambda));
      CHECK_FALSE(member_by_division(W, bad));
      CHECK_FALSE(membership_check(W, wonderful_class(W.rank(), bad)));
      CHECK_THROWS_AS(wonderful_decompose(*S, bad), ValidationError);
    }
    // R(T) (x) R(G) sits inside at I = empty
    auto g = tensor(random_poly(W.rank(), rng), symmetrize(W, random_poly(W.rank(), rng, 1)));
    CHECK(membership_check(W, wonderful_class(W.rank(), g)));
    for (Subset I : wonderful_decompose(*S, g).support(W))
      CHECK(I == 0);
  }
}

TEST_CASE("generator products: formula against multiplication") {
  for (const char *t : {"A1", "A2"}) {
    auto S = steinberg_system(CartanLabel::parse(t));
    const auto &W = S->group();
    for (ElemId v = 0; v < W.size(); ++v)
      for (ElemId v2 = 0; v2 < W.size(); ++v2) {
        auto formula = generator_product_formula(*S, v, v2);
        auto direct = multiply_wonderful(*S, generator_decomposition(*S, v),
                                         generator_decomposition(*S, v2));
        CHECK(formula == direct);
        CHECK(assemble(*S, formula) ==
              wonderful_generator(*S, v) * wonderful_generator(*S, v2));
        for (Subset J : direct.support(W))
          CHECK(is_subset(J, cell_of(W, v) | cell_of(W, v2)));
      }
  }
}

TEST_CASE("regular decomposition") {
  auto W1 = make_weyl_group(CartanLabel::parse("A1"));
  WFan F1 = chamber_fan(W1);
  auto x0 = LaurentPoly::monomial(2, 1, IntVector{1, 0});
  auto x1 = LaurentPoly::monomial(2, 1, IntVector{0, 1});
  auto e = regular_element(F1.full, one(2) - x0, mono(1, {1})) +
           regular_element(F1.full, one(2) - x1, mono(1, {-1}));
  auto dec = regular_decompose(F1, e);
  REQUIRE(dec.components.size() == 1);
  CHECK(F1.plus.cone(dec.components[0].cone) == ConeRays{0});
  REQUIRE(dec.components[0].terms.size() == 1);
  CHECK(dec.components[0].terms[0].first == Exponent{0, 0});
  CHECK(dec.components[0].terms[0].second == mono(1, {1}));
  CHECK(recombine(F1, dec) == e);
  CHECK_THROWS_AS(regular_decompose(F1, regular_element(F1.full, one(2) - x0, one(1))),
                  ValidationError);

  auto unit = regular_decompose(F1, regular_element(F1.full, one(2), one(1)));
  REQUIRE(unit.components.size() == 1);
  CHECK(unit.components[0].cone == 0);

  std::mt19937 rng(23);
  for (const char *t : {"A1", "A2", "B2"}) {
    auto W = make_weyl_group(CartanLabel::parse(t));
    WFan F = chamber_fan(W);
    const int d = static_cast<int>(F.full.num_rays());
    auto random_invariant = [&] {
      auto raw = regular_element(F.full, random_poly(d, rng, 2), random_poly(W->rank(), rng, 1));
      LaurentPoly s(raw.rank(), 1);
      for (ElemId w = 0; w < W->size(); ++w)
        s += act_regular(F, w, raw);
      return s;
    };
    for (int trial = 0; trial < 5; ++trial) {
      auto x = random_invariant();
      auto dx = regular_decompose(F, x);
      auto back = recombine(F, dx);
      // recombination is the Stanley-Reisner normal form of x
      CHECK(regular_decompose(F, back).components.size() == dx.components.size());
      CHECK(recombine(F, regular_decompose(F, back)) == back);
      CHECK(filtration(F, dx, {}) == back);
      CHECK(regular_decompose(F, x - back).components.empty());

      auto y = random_invariant();
      auto dy = regular_decompose(F, y);
      for (std::size_t a = 0; a < F.plus.cones().size(); ++a)
        for (std::size_t b = 0; b < F.plus.cones().size(); ++b) {
          auto fa = filtration(F, dx, F.plus.cone(a));
          auto fb = filtration(F, dy, F.plus.cone(b));
          auto prod = regular_decompose(F, fa * fb);
          auto j = F.plus.join(a, b);
          for (const auto &comp : prod.components) {
            REQUIRE(j.has_value());
            CHECK(F.plus.is_face(*j, comp.cone));
          }
        }
    }
    CHECK_THROWS_AS(filtration(F, regular_decompose(F, random_invariant()), {0, 0, 0, 0}),
                    ValidationError);
  }
  // only the top component at a maximal cone
  auto W2 = make_weyl_group(CartanLabel::parse("A2"));
  WFan F2 = chamber_fan(W2);
  const std::size_t top = F2.plus.cones().size() - 1;
  auto comp_top = x_tau(F2.full, F2.plus_to_full[top]);
  auto raw = regular_element(F2.full, comp_top + one(6), one(2));
  LaurentPoly s(raw.rank(), 1);
  for (ElemId w = 0; w < W2->size(); ++w)
    s += act_regular(F2, w, raw);
  auto ds = regular_decompose(F2, s);
  auto ftop = filtration(F2, ds, F2.plus.cone(top));
  auto dtop = regular_decompose(F2, ftop);
  REQUIRE(dtop.components.size() == 1);
  CHECK(dtop.components[0].cone == top);
}

TEST_CASE("C_tau products in the A2 chamber fan") {
  auto W = make_weyl_group(CartanLabel::parse("A2"));
  WFan F = chamber_fan(W);
  const int r = 2;
  for (std::size_t a = 0; a < F.plus.cones().size(); ++a)
    for (std::size_t b = 0; b < F.plus.cones().size(); ++b) {
      auto orbit = [&](std::size_t c) {
        auto raw = regular_element(F.full, x_tau(F.full, F.plus_to_full[c]), one(r));
        LaurentPoly s(raw.rank(), 1);
        std::set<std::size_t> seen;
        for (ElemId w = 0; w < W->size(); ++w)
          if (seen.insert(F.act_on_cone(w, F.plus_to_full[c])).second)
            s += act_regular(F, w, raw);
        return s;
      };
      auto prod = regular_decompose(F, orbit(a) * orbit(b));
      auto j = F.plus.join(a, b);
      if (!j) {
        CHECK(prod.components.empty());
      } else {
        for (const auto &comp : prod.components)
          CHECK(F.plus.is_face(*j, comp.cone));
        CHECK_FALSE(prod.components.empty());
      }
    }
}
