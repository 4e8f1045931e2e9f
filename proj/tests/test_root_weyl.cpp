#include <doctest.h>

#include <map>
#include <set>

#include "wonderk/error.hpp"
#include "wonderk/weyl_group.hpp"

using namespace wonderk;

namespace {

// Generator matrices straight from the Cartan matrix and a naive closure,
// independent of the library's BFS and word bookkeeping.
std::set<std::vector<std::int64_t>> brute_force_group(const IntMatrix &a) {
  const std::size_t r = a.rows();
  std::vector<IntMatrix> gens;
  for (std::size_t i = 0; i < r; ++i) {
    IntMatrix s = IntMatrix::identity(r);
    for (std::size_t k = 0; k < r; ++k)
      s(k, i) -= a(k, i);
    gens.push_back(s);
  }
  std::set<std::vector<std::int64_t>> seen{IntMatrix::identity(r).data()};
  std::vector<IntMatrix> frontier{IntMatrix::identity(r)};
  while (!frontier.empty()) {
    std::vector<IntMatrix> next;
    for (const auto &m : frontier)
      for (const auto &g : gens) {
        IntMatrix p = g * m;
        if (seen.insert(p.data()).second)
          next.push_back(p);
      }
    frontier = std::move(next);
  }
  return seen;
}

std::set<std::string> names(const WeylGroup &W, const std::vector<ElemId> &ids) {
  std::set<std::string> out;
  for (ElemId w : ids)
    out.insert(W.name(w));
  return out;
}

const char *kSmallTypes[] = {"A1", "A2", "B2", "G2", "A3", "B3", "C3"};

} // namespace

TEST_CASE("root systems") {
  auto a1 = build_root_system(CartanLabel::parse("A1"));
  CHECK(a1.positive_roots().size() == 1);
  CHECK(a1.simple_root(0) == IntVector{2});

  auto a2 = build_root_system(CartanLabel::parse("A2"));
  std::set<IntVector> coords;
  for (const auto &r : a2.positive_roots())
    coords.insert(r.simple_coords);
  CHECK(coords == std::set<IntVector>{{1, 0}, {0, 1}, {1, 1}});

  CHECK(build_root_system(CartanLabel::parse("G2")).positive_roots().size() == 6);
  CHECK(build_root_system(CartanLabel::parse("B2")).positive_roots().size() == 4);
  CHECK(build_root_system(CartanLabel::parse("F4")).positive_roots().size() == 24);
  CHECK(build_root_system(CartanLabel::parse("E8")).positive_roots().size() == 120);
  for (const char *t : {"A4", "B4", "C4", "D4", "E6", "E7"}) {
    auto label = CartanLabel::parse(t);
    CHECK(build_root_system(label).positive_roots().size() ==
          expected_positive_root_count(label));
  }
}

TEST_CASE("invalid Cartan labels") {
  for (const char *bad : {"E5", "F3", "G3", "B1", "D2", "X2", "A0", "A", "A1x"}) {
    try {
      CartanLabel::parse(bad);
      FAIL("accepted " << bad);
    } catch (const ValidationError &e) {
      CHECK(e.code() == "InvalidCartanLabel");
    }
  }
}

TEST_CASE("Weyl group enumeration matches brute-force closure") {
  for (const char *t : kSmallTypes) {
    auto W = make_weyl_group(CartanLabel::parse(t));
    auto oracle = brute_force_group(W->root_system().cartan_matrix());
    CHECK(W->size() == oracle.size());
    std::set<std::vector<std::int64_t>> mine;
    for (ElemId w = 0; w < W->size(); ++w)
      mine.insert(W->element(w).matrix.data());
    CHECK(mine == oracle);
  }
  CHECK(make_weyl_group(CartanLabel::parse("A1"))->size() == 2);
  CHECK(make_weyl_group(CartanLabel::parse("A2"))->size() == 6);
  CHECK(make_weyl_group(CartanLabel::parse("G2"))->size() == 12);
}

TEST_CASE("word length equals inversion count; canonical order") {
  for (const char *t : kSmallTypes) {
    auto W = make_weyl_group(CartanLabel::parse(t));
    CHECK(W->identity() == 0);
    CHECK(W->element(0).word.empty());
    for (ElemId w = 0; w < W->size(); ++w) {
      CHECK(W->length(w) == W->inversion_count(w));
      CHECK(W->multiply(w, W->inverse(w)) == W->identity());
      CHECK(W->parse(W->name(w)) == w);
      if (w > 0) {
        const auto &a = W->element(w - 1).word;
        const auto &b = W->element(w).word;
        CHECK((a.size() < b.size() || (a.size() == b.size() && a < b)));
      }
    }
    CHECK(W->length(W->longest()) == W->root_system().positive_roots().size());
  }
}

TEST_CASE("rank bound") {
  try {
    make_weyl_group(CartanLabel::parse("E6"));
    FAIL("no gate");
  } catch (const ValidationError &e) {
    CHECK(e.code() == "RankBoundExceeded");
  }
  CHECK(make_weyl_group(CartanLabel::parse("F4"))->size() == 1152);
}

TEST_CASE("minimal coset representatives") {
  auto W1 = make_weyl_group(CartanLabel::parse("A1"));
  CHECK(names(*W1, minimal_coset_reps(*W1, 1)) == std::set<std::string>{"1"});
  CHECK(minimal_coset_reps(*W1, 0).size() == 2);

  auto W = make_weyl_group(CartanLabel::parse("A2"));
  CHECK(names(*W, minimal_coset_reps(*W, 0b10)) ==
        std::set<std::string>{"1", "s1", "s2.s1"});

  for (const char *t : kSmallTypes) {
    auto G = make_weyl_group(CartanLabel::parse(t));
    const Subset full = full_subset(G->rank());
    CHECK(minimal_coset_reps(*G, full).size() == 1);
    CHECK(minimal_coset_reps(*G, 0).size() == G->size());
    for (Subset I = 0; I <= full; ++I) {
      CHECK(minimal_coset_reps(*G, I).size() * G->parabolic(I).size() == G->size());
      // oracle: w(Phi_I^+) inside Phi^+
      for (ElemId w : minimal_coset_reps(*G, I))
        for (int i : subset_indices(I))
          CHECK(G->root_system().root_sign(G->act(w, G->root_system().simple_root(i - 1))) ==
                1);
    }
  }
}

TEST_CASE("C-sets partition W") {
  auto W1 = make_weyl_group(CartanLabel::parse("A1"));
  auto c1 = c_sets(*W1);
  CHECK(names(*W1, c1[0]) == std::set<std::string>{"1"});
  CHECK(names(*W1, c1[1]) == std::set<std::string>{"s"});

  auto W = make_weyl_group(CartanLabel::parse("A2"));
  auto c = c_sets(*W);
  CHECK(names(*W, c[0]) == std::set<std::string>{"1"});
  CHECK(names(*W, c[0b01]) == std::set<std::string>{"s1", "s2.s1"});
  CHECK(names(*W, c[0b10]) == std::set<std::string>{"s2", "s1.s2"});
  CHECK(c[0b11] == std::vector<ElemId>{W->longest()});

  for (const char *t : kSmallTypes) {
    auto G = make_weyl_group(CartanLabel::parse(t));
    auto cells = c_sets(*G);
    const Subset full = full_subset(G->rank());
    std::size_t total = 0;
    for (Subset I = 0; I <= full; ++I) {
      total += cells[I].size();
      // (1.3) literally: W^{D\I} minus the union over proper J of W^{D\J}
      std::set<ElemId> literal;
      for (ElemId w : minimal_coset_reps(*G, full & ~I)) {
        bool in_smaller = false;
        for (Subset J = 0; J <= full; ++J)
          if (is_subset(J, I) && J != I) {
            auto reps = minimal_coset_reps(*G, full & ~J);
            in_smaller |= std::find(reps.begin(), reps.end(), w) != reps.end();
          }
        if (!in_smaller)
          literal.insert(w);
      }
      CHECK(std::set<ElemId>(cells[I].begin(), cells[I].end()) == literal);
      std::size_t below = 0;
      for (Subset J = 0; J <= full; ++J)
        if (is_subset(J, I))
          below += cells[J].size();
      CHECK(below == minimal_coset_reps(*G, full & ~I).size());
    }
    CHECK(total == G->size());
  }
}

TEST_CASE("p_v and stabilizers") {
  auto W1 = make_weyl_group(CartanLabel::parse("A1"));
  CHECK(p_weight(*W1, 0) == IntVector{0});
  CHECK(p_weight(*W1, 1) == IntVector{1});
  auto st = stabilizer_and_reps(*W1, 0, 0);
  CHECK(st.stabilizer == std::vector<ElemId>{0});
  CHECK(st.reps == std::vector<ElemId>{0});

  auto W = make_weyl_group(CartanLabel::parse("A2"));
  const ElemId s1 = W->parse("s1"), s2 = W->parse("s2");
  CHECK(p_weight(*W, s1) == IntVector{1, 0});
  CHECK(steinberg_weight(*W, s1) == IntVector{-1, 1});
  auto st2 = stabilizer_and_reps(*W, s1, 0b10);
  CHECK(st2.stabilizer == std::vector<ElemId>{0});
  CHECK(st2.reps == std::vector<ElemId>{0, s2});
  auto st3 = stabilizer_and_reps(*W, 0, 0b11);
  CHECK(st3.stabilizer.size() == 6);
  CHECK(st3.reps == std::vector<ElemId>{0});
  CHECK_THROWS_AS(stabilizer_and_reps(*W, s1, 0b01), ValidationError);

  // every x in W_I factors uniquely as u x' with lengths adding
  for (const char *t : kSmallTypes) {
    auto G = make_weyl_group(CartanLabel::parse(t));
    const Subset full = full_subset(G->rank());
    for (Subset I = 0; I <= full; ++I)
      for (ElemId v : minimal_coset_reps(*G, I)) {
        auto data = stabilizer_and_reps(*G, v, I);
        std::multiset<ElemId> products;
        for (ElemId u : data.stabilizer)
          for (ElemId x : data.reps) {
            const ElemId ux = G->multiply(u, x);
            CHECK(G->length(ux) == G->length(u) + G->length(x));
            products.insert(ux);
          }
        auto par = G->parabolic(I);
        CHECK(products == std::multiset<ElemId>(par.begin(), par.end()));
      }
  }
}

TEST_CASE("coweight action preserves the root/coweight pairing") {
  for (const char *t : kSmallTypes) {
    auto G = make_weyl_group(CartanLabel::parse(t));
    const auto &rs = G->root_system();
    const int r = G->rank();
    std::map<IntVector, IntVector> coords_of;
    for (const auto &b : rs.positive_roots()) {
      coords_of[b.weight] = b.simple_coords;
      IntVector nw = b.weight, nc = b.simple_coords;
      for (auto &x : nw)
        x = -x;
      for (auto &x : nc)
        x = -x;
      coords_of[nw] = nc;
    }
    for (ElemId w = 0; w < G->size(); ++w)
      for (const auto &[weight, beta] : coords_of)
        for (int j = 0; j < r; ++j) {
          IntVector mu(static_cast<std::size_t>(r), 0);
          mu[j] = 1;
          const IntVector wbeta = coords_of.at(G->act(w, weight));
          const IntVector wmu = G->coweight_matrix(w) * std::span<const std::int64_t>(mu);
          CHECK(dot(wbeta, wmu) == beta[j]);
        }
  }
}
