#include "wonderk/equivariant.hpp"

#include <algorithm>
#include <set>

#include "wonderk/error.hpp"

namespace wonderk {

LaurentPoly lambda_product(const RootSystem &rs, Subset I, int blocks, Block block) {
  LaurentPoly out = LaurentPoly::constant(rs.rank(), blocks, 1);
  for (int i : subset_indices(I))
    out *= one_minus_exp(rs.rank(), blocks, rs.simple_root(i - 1), block);
  return out;
}

PiecewiseClass wonderful_class(int rank, const LaurentPoly &f) {
  PiecewiseClass pc{positive_chamber(rank), {}};
  pc.values.emplace(pc.fan_plus.maximal_cones().front(), f);
  return pc;
}

std::vector<int> wall_roots(const Fan &fan, std::size_t sigma) {
  const auto &rays = fan.cone(sigma);
  std::vector<int> out;
  for (int i = 0; i < fan.dim(); ++i) {
    std::size_t on_wall = 0;
    for (std::size_t j : rays)
      on_wall += fan.rays()[j][i] == 0;
    if (on_wall + 1 >= rays.size())
      out.push_back(i);
  }
  return out;
}

namespace {

void require_complete(const PiecewiseClass &pc) {
  for (std::size_t m : pc.fan_plus.maximal_cones()) {
    auto it = pc.values.find(m);
    if (it == pc.values.end())
      throw ValidationError("MissingCone",
                            "no value for maximal cone " + pc.fan_plus.cone_name(m));
    if (it->second.blocks() != 2)
      throw ValidationError("BlockMismatch", "piecewise values must be two-block");
  }
}

} // namespace

bool membership_check(const WeylGroup &W, const PiecewiseClass &pc) {
  require_complete(pc);
  const auto &rs = W.root_system();
  for (std::size_t m : pc.fan_plus.maximal_cones()) {
    const LaurentPoly &f = pc.values.at(m);
    for (int i : wall_roots(pc.fan_plus, m))
      if (!congruent_mod_character(weyl_act(W, W.generator(i), f, Block::Second), f,
                                   rs.simple_root(i), Block::First))
        return false;
  }
  for (const auto &[s, s2] : adjacent_pairs(pc.fan_plus)) {
    const IntVector chi = facet_character(rs, pc.fan_plus, s, s2);
    if (!congruent_mod_character(pc.values.at(s), pc.values.at(s2), chi, Block::First))
      return false;
  }
  return true;
}

FixedPointExpansion fixed_point_expansion(const WeylGroup &W, const PiecewiseClass &pc) {
  if (!membership_check(W, pc))
    throw ValidationError("NotMember", "family fails the membership congruences");
  const auto &rs = W.root_system();
  const std::size_t n = W.size();
  FixedPointExpansion out;
  out.report.suite = "fixed-points";
  out.report.type = rs.label().to_string();
  const auto maximal = pc.fan_plus.maximal_cones();
  std::map<std::size_t, std::size_t> offset;
  for (std::size_t m : maximal) {
    offset[m] = out.values.size();
    for (ElemId u = 0; u < n; ++u)
      for (ElemId v = 0; v < n; ++v)
        out.values.push_back({m, u, v, weyl_act_pair(W, u, v, pc.values.at(m))});
  }
  auto at = [&](std::size_t m, ElemId u, ElemId v) -> const LaurentPoly & {
    return out.values[offset[m] + u * n + v].value;
  };
  for (std::size_t m : maximal)
    for (int i : wall_roots(pc.fan_plus, m))
      for (ElemId u = 0; u < n; ++u) {
        const IntVector chi = W.act(u, rs.simple_root(i));
        for (ElemId v = 0; v < n; ++v) {
          const ElemId vs = W.times_generator(v, i);
          out.report.add("wall-congruence",
                         pc.fan_plus.cone_name(m) + ",u=" + W.name(u) + ",v=" + W.name(v) +
                             ",alpha=" + std::to_string(i + 1),
                         congruent_mod_character(at(m, u, vs), at(m, u, v), chi, Block::First));
        }
      }
  for (const auto &[s, s2] : adjacent_pairs(pc.fan_plus)) {
    const IntVector chi0 = facet_character(rs, pc.fan_plus, s, s2);
    for (ElemId u = 0; u < n; ++u) {
      const IntVector chi = W.act(u, chi0);
      for (ElemId v = 0; v < n; ++v)
        out.report.add("facet-congruence",
                       pc.fan_plus.cone_name(s) + "|" + pc.fan_plus.cone_name(s2) +
                           ",u=" + W.name(u) + ",v=" + W.name(v),
                       congruent_mod_character(at(s, u, v), at(s2, u, v), chi, Block::First));
    }
  }
  return out;
}

std::vector<Subset> WonderfulDecomposition::support(const WeylGroup &W) const {
  std::set<Subset> out;
  for (ElemId v = 0; v < coords.size(); ++v)
    if (!coords[v].is_zero())
      out.insert(cell_of(W, v));
  return {out.begin(), out.end()};
}

WonderfulDecomposition wonderful_decompose(const SteinbergSystem &S, const LaurentPoly &f) {
  const WeylGroup &W = S.group();
  const int r = W.rank();
  if (f.rank() != r || f.blocks() != 2)
    throw ValidationError("BlockMismatch", "expected a two-block polynomial of rank " +
                                               std::to_string(r));
  std::vector<std::vector<Term>> parts(W.size());
  for (const auto &[mu, g] : split_by_first_block(f)) {
    const auto a = S.expand(g);
    for (ElemId v = 0; v < W.size(); ++v)
      for (const auto &t : a[v].terms()) {
        Exponent e = mu;
        e.insert(e.end(), t.exp.begin(), t.exp.end());
        parts[v].push_back({std::move(e), t.coef});
      }
  }
  WonderfulDecomposition out;
  for (ElemId v = 0; v < W.size(); ++v) {
    LaurentPoly g = LaurentPoly::from_terms(r, 2, std::move(parts[v]));
    const Subset I = cell_of(W, v);
    auto q = g.divide_exact(lambda_product(W.root_system(), I, 2, Block::First));
    if (!q)
      throw ValidationError("NotInSubring", "coordinate at v=" + W.name(v) +
                                                " is not divisible by lambda_" +
                                                subset_to_string(I) + "(u)");
    out.coords.push_back(std::move(*q));
  }
  return out;
}

LaurentPoly assemble(const SteinbergSystem &S, const WonderfulDecomposition &d) {
  const WeylGroup &W = S.group();
  const int r = W.rank();
  const LaurentPoly one = LaurentPoly::constant(r, 1, 1);
  LaurentPoly out(r, 2);
  for (ElemId v = 0; v < d.coords.size(); ++v)
    if (!d.coords[v].is_zero())
      out += lambda_product(W.root_system(), cell_of(W, v), 2, Block::First) * d.coords[v] *
             tensor(one, S.basis_poly(v));
  return out;
}

LaurentPoly wonderful_generator(const SteinbergSystem &S, ElemId v) {
  const WeylGroup &W = S.group();
  return tensor(lambda_product(W.root_system(), cell_of(W, v)), S.basis_poly(v));
}

WonderfulDecomposition generator_decomposition(const SteinbergSystem &S, ElemId v) {
  const int r = S.rank();
  WonderfulDecomposition d{std::vector<LaurentPoly>(S.group().size(), LaurentPoly(r, 2))};
  d.coords[v] = LaurentPoly::constant(r, 2, 1);
  return d;
}

WonderfulDecomposition multiply_wonderful(const SteinbergSystem &S,
                                          const WonderfulDecomposition &a,
                                          const WonderfulDecomposition &b) {
  const WeylGroup &W = S.group();
  auto out = wonderful_decompose(S, assemble(S, a) * assemble(S, b));
  std::set<Subset> unions;
  for (Subset I : a.support(W))
    for (Subset I2 : b.support(W))
      unions.insert(I | I2);
  for (Subset J : out.support(W))
    if (std::none_of(unions.begin(), unions.end(), [&](Subset U) { return is_subset(J, U); }))
      throw InvariantViolation("SupportViolation",
                               "product has a component at " + subset_to_string(J));
  return out;
}

WonderfulDecomposition generator_product_formula(const SteinbergSystem &S, ElemId v,
                                                 ElemId v2) {
  const WeylGroup &W = S.group();
  const auto &rs = W.root_system();
  const int r = W.rank();
  const Subset I = cell_of(W, v), I2 = cell_of(W, v2);
  const auto &a = S.structure_constants(v, v2);
  WonderfulDecomposition out{std::vector<LaurentPoly>(W.size(), LaurentPoly(r, 2))};
  for (ElemId w = 0; w < W.size(); ++w) {
    if (a[w].is_zero())
      continue;
    const Subset J = cell_of(W, w);
    out.coords[w] =
        tensor(lambda_product(rs, I & I2) * lambda_product(rs, (I | I2) & ~J), a[w]);
  }
  return out;
}

LaurentPoly regular_element(const Fan &full, const LaurentPoly &sr, const LaurentPoly &weights) {
  const int d = static_cast<int>(full.num_rays());
  if (sr.width() != d && !sr.is_zero())
    throw ValidationError("BlockMismatch", "SR factor has the wrong number of variables");
  std::vector<Term> out;
  for (const auto &x : sr.terms())
    for (const auto &y : weights.terms()) {
      Exponent e = x.exp;
      e.insert(e.end(), y.exp.begin(), y.exp.end());
      out.push_back({std::move(e), x.coef * y.coef});
    }
  return LaurentPoly::from_terms(d + weights.rank(), 1, std::move(out));
}

LaurentPoly act_regular(const WFan &F, ElemId w, const LaurentPoly &e) {
  const std::size_t d = F.full.num_rays();
  const std::size_t r = static_cast<std::size_t>(F.W->rank());
  if (e.width() != static_cast<int>(d + r))
    throw ValidationError("BlockMismatch", "element has the wrong number of variables");
  std::vector<Term> out;
  out.reserve(e.size());
  for (const auto &t : e.terms()) {
    Exponent image(d + r, 0);
    for (std::size_t j = 0; j < d; ++j)
      image[F.ray_action[w][j]] = t.exp[j];
    const IntVector lambda(t.exp.begin() + static_cast<std::ptrdiff_t>(d), t.exp.end());
    const IntVector moved = F.W->act(w, lambda);
    for (std::size_t i = 0; i < r; ++i)
      image[d + i] = static_cast<std::int32_t>(moved[i]);
    out.push_back({std::move(image), t.coef});
  }
  return LaurentPoly::from_terms(e.rank(), 1, std::move(out));
}

RegularDecomposition regular_decompose(const WFan &F, const LaurentPoly &e) {
  const WeylGroup &W = *F.W;
  const int d = static_cast<int>(F.full.num_rays());
  const int r = W.rank();
  if (e.width() != d + r)
    throw ValidationError("BlockMismatch", "element has the wrong number of variables");
  for (int i = 0; i < r; ++i)
    if (act_regular(F, W.generator(i), e) != e)
      throw ValidationError("NotInvariant", "element is not diag(W)-invariant");

  std::map<Exponent, std::vector<Term>> by_weight;
  for (const auto &t : e.terms())
    by_weight[Exponent(t.exp.begin() + d, t.exp.end())].push_back(
        {Exponent(t.exp.begin(), t.exp.begin() + d), t.coef});

  std::map<std::size_t, std::size_t> plus_of;
  for (std::size_t c = 0; c < F.plus_to_full.size(); ++c)
    plus_of[F.plus_to_full[c]] = c;

  std::map<std::size_t, std::map<Exponent, std::vector<Term>>> buckets;
  for (auto &[lambda, terms] : by_weight) {
    auto sr = LaurentPoly::from_terms(d, 1, std::move(terms));
    for (const auto &[c, part] : c_tau_decompose(F.full, sr)) {
      auto it = plus_of.find(c);
      if (it == plus_of.end())
        continue;
      auto q = part.divide_exact(x_tau(F.full, c));
      if (!q)
        throw InvariantViolation("NotInCTau", "component is not a multiple of X_tau");
      for (const auto &t : q->terms())
        buckets[it->second][t.exp].push_back({lambda, t.coef});
    }
  }
  RegularDecomposition out;
  for (auto &[cone, by_m] : buckets) {
    RegularComponent comp{cone, {}};
    const auto stab = cone_stabilizer(F, F.plus.cone(cone)).setwise;
    for (auto &[m, terms] : by_m) {
      auto b = LaurentPoly::from_terms(r, 1, std::move(terms));
      if (b.is_zero())
        continue;
      if (!is_invariant(W, b, stab, Block::First))
        throw InvariantViolation("NotStabilizerInvariant",
                                 "coefficient not invariant under W_tau at " +
                                     F.plus.cone_name(cone));
      comp.terms.emplace_back(m, std::move(b));
    }
    if (!comp.terms.empty())
      out.components.push_back(std::move(comp));
  }
  return out;
}

namespace {

LaurentPoly component_element(const WFan &F, const RegularComponent &comp) {
  const int d = static_cast<int>(F.full.num_rays());
  const std::size_t full_index = F.plus_to_full[comp.cone];
  const LaurentPoly xt = x_tau(F.full, full_index);
  LaurentPoly out(d + F.W->rank(), 1);
  for (const auto &[m, b] : comp.terms)
    out += regular_element(F.full, xt * LaurentPoly::monomial(d, 1, m), b);
  return out;
}

LaurentPoly orbit_sum(const WFan &F, const RegularComponent &comp) {
  const LaurentPoly e = component_element(F, comp);
  std::set<std::size_t> seen;
  LaurentPoly out(e.rank(), 1);
  for (ElemId w = 0; w < F.W->size(); ++w)
    if (seen.insert(F.act_on_cone(w, F.plus_to_full[comp.cone])).second)
      out += act_regular(F, w, e);
  return out;
}

} // namespace

LaurentPoly recombine(const WFan &F, const RegularDecomposition &d) {
  LaurentPoly out(static_cast<int>(F.full.num_rays()) + F.W->rank(), 1);
  for (const auto &comp : d.components)
    out += orbit_sum(F, comp);
  return out;
}

LaurentPoly filtration(const WFan &F, const RegularDecomposition &d, const ConeRays &tau) {
  auto t = F.plus.find_cone(tau);
  if (!t)
    throw ValidationError("ConeNotInFan", "cone is not in F_+");
  LaurentPoly out(static_cast<int>(F.full.num_rays()) + F.W->rank(), 1);
  for (const auto &comp : d.components)
    if (F.plus.is_face(*t, comp.cone))
      out += orbit_sum(F, comp);
  return out;
}

} // namespace wonderk
