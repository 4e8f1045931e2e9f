#include "wonderk/verify.hpp"

#include <random>
#include <set>

#include "wonderk/deadline.hpp"
#include "wonderk/equivariant.hpp"
#include "wonderk/error.hpp"
#include "wonderk/ordinary.hpp"

namespace wonderk {

namespace {

LaurentPoly random_poly(int rank, std::mt19937 &rng, int terms, int spread = 2) {
  std::uniform_int_distribution<int> ex(-spread, spread), co(-3, 3);
  std::vector<Term> t;
  for (int k = 0; k < terms; ++k) {
    Exponent e(static_cast<std::size_t>(rank));
    for (auto &x : e)
      x = ex(rng);
    t.push_back({e, co(rng)});
  }
  return LaurentPoly::from_terms(rank, 1, std::move(t));
}

LaurentPoly symmetrize(const WeylGroup &W, const LaurentPoly &g) {
  LaurentPoly out(g.rank(), 1);
  for (ElemId w = 0; w < W.size(); ++w)
    out += weyl_act(W, w, g, Block::First);
  return out;
}

IntVector random_nonzero(int rank, std::mt19937 &rng) {
  std::uniform_int_distribution<int> ex(-3, 3);
  IntVector v(static_cast<std::size_t>(rank), 0);
  while (std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; }))
    for (auto &x : v)
      x = ex(rng);
  return v;
}

std::string pair_name(const WeylGroup &W, ElemId v, ElemId v2) {
  return "v=" + W.name(v) + ",v'=" + W.name(v2);
}

Report suite_prop18(const SteinbergSystem &S) {
  Report r = verify_steinberg_identities(S);
  r.add("determinant-nonzero", "", S.determinant_nonzero());
  return r;
}

Report suite_rank(const SteinbergSystem &S) {
  const WeylGroup &W = S.group();
  Report r;
  std::size_t count = 0;
  for (const auto &cell : c_sets(W))
    count += cell.size();
  r.add("generator-count", "|W|=" + std::to_string(W.size()), count == W.size(),
        "generators=" + std::to_string(count));
  r.add("determinant-nonzero", "", S.determinant_nonzero());
  for (ElemId v = 0; v < W.size(); ++v) {
    check_deadline("rank suite v=" + W.name(v));
    const auto d = wonderful_decompose(S, wonderful_generator(S, v));
    r.add("unique-expansion", "v=" + W.name(v), d == generator_decomposition(S, v));
  }
  return r;
}

Report suite_structure_constants(const SteinbergSystem &S) {
  S.require_order(kTableLimit, "structure-constant table");
  const WeylGroup &W = S.group();
  Report r;
  for (ElemId v = 0; v < W.size(); ++v)
    for (ElemId v2 = v; v2 < W.size(); ++v2) {
      check_deadline("structure constants " + pair_name(W, v, v2));
      try {
        const auto &a = S.structure_constants(v, v2);
        bool invariant = true, support = true;
        std::string bad;
        for (ElemId w = 0; w < W.size(); ++w) {
          if (a[w].is_zero())
            continue;
          if (!is_w_invariant(W, a[w])) {
            invariant = false;
            bad += " noninvariant at w=" + W.name(w);
          }
          if (!is_subset(cell_of(W, w), cell_of(W, v) | cell_of(W, v2))) {
            support = false;
            bad += " outside support at w=" + W.name(w);
          }
        }
        r.add("w-invariance", pair_name(W, v, v2), invariant, bad);
        r.add("support", pair_name(W, v, v2), support, bad);
      } catch (const InvariantViolation &e) {
        r.add("support", pair_name(W, v, v2), false, e.what());
      }
    }
  return r;
}

Report suite_membership(const SteinbergSystem &S, const SuiteOptions &opt) {
  const WeylGroup &W = S.group();
  const int rank = W.rank();
  std::mt19937 rng(opt.seed);
  Report r;
  const LaurentPoly one = LaurentPoly::constant(rank, 1, 1);
  for (int k = 0; k < opt.samples; ++k) {
    check_deadline("membership sample " + std::to_string(k));
    WonderfulDecomposition d;
    for (ElemId v = 0; v < W.size(); ++v)
      d.coords.push_back(rng() % 3 == 0 ? LaurentPoly(rank, 2)
                                        : tensor(random_poly(rank, rng, 2),
                                                 symmetrize(W, random_poly(rank, rng, 1))));
    const LaurentPoly f = assemble(S, d);
    const std::string inst = "sample " + std::to_string(k);
    r.add("member-accepted", inst, membership_check(W, wonderful_class(rank, f)));

    const IntVector lambda = random_nonzero(rank, rng);
    const LaurentPoly bad = f + tensor(one, LaurentPoly::monomial(rank, 1, lambda));
    bool rejected = !membership_check(W, wonderful_class(rank, bad));
    try {
      wonderful_decompose(S, bad);
      rejected = false;
    } catch (const ValidationError &e) {
      rejected = rejected && e.code() == "NotInSubring";
    }
    r.add("non-member-rejected", inst + ",lambda=" + to_string(lambda), rejected);
  }
  // R(T) (x) R(G) lies in the ring (the I = empty part)
  for (int k = 0; k < 5; ++k) {
    const LaurentPoly g =
        tensor(random_poly(rank, rng, 3), symmetrize(W, random_poly(rank, rng, 1)));
    bool ok = membership_check(W, wonderful_class(rank, g));
    for (Subset I : wonderful_decompose(S, g).support(W))
      ok = ok && I == 0;
    r.add("module-over-RT-RG", "sample " + std::to_string(k), ok);
  }
  const auto fp = fixed_point_expansion(W, wonderful_class(rank, wonderful_generator(S, W.longest())));
  r.add("fixed-point-count", "", fp.values.size() == W.size() * W.size());
  r.add("fixed-point-congruences", "", fp.report.all_pass());
  return r;
}

Report suite_two_path(const SteinbergSystem &S, const SuiteOptions &opt) {
  const WeylGroup &W = S.group();
  Report r;
  for (const auto &[v, v2] : product_pairs(W, opt.seed)) {
    check_deadline("two-path product " + pair_name(W, v, v2));
    const auto formula = generator_product_formula(S, v, v2);
    const auto direct =
        multiply_wonderful(S, generator_decomposition(S, v), generator_decomposition(S, v2));
    r.add("formula-equals-product", pair_name(W, v, v2), formula == direct);
  }
  return r;
}

Report suite_pushdown(const SteinbergSystem &S, const SuiteOptions &opt) {
  const WeylGroup &W = S.group();
  Report r;
  for (const auto &[v, v2] : product_pairs(W, opt.seed)) {
    check_deadline("pushdown " + pair_name(W, v, v2));
    const auto eq =
        multiply_wonderful(S, generator_decomposition(S, v), generator_decomposition(S, v2));
    r.add("pushdown-equals-kx", pair_name(W, v, v2),
          pushdown(S, eq) == kx_basis_product(S, v, v2));
  }
  return r;
}

void toric_checks(Report &r, const std::string &label, const RootSystem &rs, const Fan &fan,
                  const SuiteOptions &opt, std::mt19937 &rng) {
  const int d = static_cast<int>(fan.num_rays());
  const auto maximal = fan.maximal_cones();
  for (int k = 0; k < opt.samples; ++k) {
    check_deadline("toric " + label + " sample " + std::to_string(k));
    const LaurentPoly e = random_poly(d, rng, 6);
    const std::string inst = label + " sample " + std::to_string(k);
    const auto parts = c_tau_decompose(fan, e);
    LaurentPoly sum(d, 1);
    bool in_pieces = true;
    for (const auto &[c, p] : parts) {
      sum += p;
      in_pieces = in_pieces && in_c_tau(fan, c, p);
    }
    bool same_points = true;
    std::map<std::size_t, LaurentPoly> family;
    for (std::size_t m : maximal) {
      family[m] = restrict_to_fixed_point(rs, fan, m, e);
      same_points = same_points && family[m] == restrict_to_fixed_point(rs, fan, m, sum);
    }
    r.add("decomposition-round-trip", inst,
          in_pieces && same_points && sr_normal_form(fan, sum) == sum);
    r.add("localization-accepts", inst, localization_check(rs, fan, family));
    if (maximal.size() > 1) {
      auto broken = family;
      broken[maximal[k % maximal.size()]] +=
          LaurentPoly::monomial(rs.rank(), 1, random_nonzero(rs.rank(), rng));
      r.add("localization-rejects", inst, !localization_check(rs, fan, broken));
    }
  }
}

Report suite_toric(const SteinbergSystem &S, const SuiteOptions &opt) {
  const WeylGroup &W = S.group();
  const RootSystem &rs = W.root_system();
  std::mt19937 rng(opt.seed);
  Report r;
  const WFan F = chamber_fan(S.group_ptr());
  toric_checks(r, "chamber fan", rs, F.full, opt, rng);
  if (opt.user_fan)
    toric_checks(r, "user fan", rs, *opt.user_fan, opt, rng);

  // regular decomposition of diag(W)-invariant elements on the chamber fan
  const int d = static_cast<int>(F.full.num_rays());
  for (int k = 0; k < 5; ++k) {
    check_deadline("regular decomposition sample " + std::to_string(k));
    const LaurentPoly raw =
        regular_element(F.full, random_poly(d, rng, 2), random_poly(rs.rank(), rng, 1));
    LaurentPoly x(raw.rank(), 1);
    for (ElemId w = 0; w < W.size(); ++w)
      x += act_regular(F, w, raw);
    const auto dec = regular_decompose(F, x);
    const LaurentPoly back = recombine(F, dec);
    r.add("regular-round-trip", "sample " + std::to_string(k),
          regular_decompose(F, x - back).components.empty() &&
              recombine(F, regular_decompose(F, back)) == back);
  }
  return r;
}

} // namespace

const std::vector<std::string> &suite_names() {
  static const std::vector<std::string> names{"prop1.8",  "lemma1.9",         "membership",
                                              "two-path-product", "pushdown", "toric-decomp",
                                              "rank",     "structure-constants"};
  return names;
}

std::vector<std::string> default_suites(const WeylGroup &W) {
  std::vector<std::string> out;
  for (const auto &name : suite_names())
    if (name != "structure-constants" || W.size() <= kTableLimit)
      out.push_back(name);
  return out;
}

std::vector<std::pair<ElemId, ElemId>> product_pairs(const WeylGroup &W, std::uint32_t seed) {
  std::vector<std::pair<ElemId, ElemId>> out;
  if (W.size() <= 6) {
    for (ElemId v = 0; v < W.size(); ++v)
      for (ElemId v2 = 0; v2 < W.size(); ++v2)
        out.emplace_back(v, v2);
    return out;
  }
  std::mt19937 rng(seed);
  std::uniform_int_distribution<ElemId> pick(0, W.size() - 1);
  for (int k = 0; k < 10; ++k)
    out.emplace_back(pick(rng), pick(rng));
  return out;
}

Report run_suite(const std::string &name, const SteinbergSystem &S, const SuiteOptions &options) {
  Report r;
  if (name == "prop1.8")
    r = suite_prop18(S);
  else if (name == "lemma1.9")
    r = verify_direct_sum(S);
  else if (name == "membership")
    r = suite_membership(S, options);
  else if (name == "two-path-product")
    r = suite_two_path(S, options);
  else if (name == "pushdown")
    r = suite_pushdown(S, options);
  else if (name == "toric-decomp")
    r = suite_toric(S, options);
  else if (name == "rank")
    r = suite_rank(S);
  else if (name == "structure-constants")
    r = suite_structure_constants(S);
  else
    throw ValidationError("UnknownSuite", "unknown suite '" + name + "'");
  r.suite = name;
  r.type = S.group().root_system().label().to_string();
  return r;
}

} // namespace wonderk
