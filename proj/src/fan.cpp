#include "wonderk/fan.hpp"

#include <algorithm>
#include <set>

#include <gmpxx.h>

#include "wonderk/error.hpp"

namespace wonderk {

namespace {

bool cone_order(const ConeRays &a, const ConeRays &b) {
  if (a.size() != b.size())
    return a.size() < b.size();
  return a < b;
}

std::vector<ConeRays> all_faces(const ConeRays &cone) {
  std::vector<ConeRays> faces;
  const std::size_t n = cone.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    ConeRays f;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1)
        f.push_back(cone[i]);
    faces.push_back(std::move(f));
  }
  return faces;
}

bool is_sorted_subset(const ConeRays &a, const ConeRays &b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

} // namespace

Fan::Fan(int dim, std::vector<IntVector> rays, const std::vector<ConeRays> &cones)
    : dim_(dim), rays_(std::move(rays)) {
  std::set<ConeRays, decltype(&cone_order)> all(&cone_order);
  all.insert(ConeRays{});
  for (ConeRays c : cones) {
    std::sort(c.begin(), c.end());
    for (std::size_t j : c)
      if (j >= rays_.size())
        throw ValidationError("InvalidFan", "ray index " + std::to_string(j) + " out of range");
    for (auto &f : all_faces(c))
      all.insert(std::move(f));
  }
  cones_.assign(all.begin(), all.end());
  for (std::size_t i = 0; i < cones_.size(); ++i)
    index_[cones_[i]] = i;
}

std::optional<std::size_t> Fan::find_cone(const ConeRays &rays) const {
  ConeRays sorted = rays;
  std::sort(sorted.begin(), sorted.end());
  auto it = index_.find(sorted);
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Fan::find_ray(const IntVector &ray) const {
  auto it = std::find(rays_.begin(), rays_.end(), ray);
  if (it == rays_.end())
    return std::nullopt;
  return static_cast<std::size_t>(it - rays_.begin());
}

std::vector<std::size_t> Fan::maximal_cones() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cones_.size(); ++i)
    if (static_cast<int>(cones_[i].size()) == dim_)
      out.push_back(i);
  return out;
}

bool Fan::is_face(std::size_t tau, std::size_t sigma) const {
  return is_sorted_subset(cones_[tau], cones_[sigma]);
}

std::optional<std::size_t> Fan::join(std::size_t tau, std::size_t sigma) const {
  ConeRays u;
  std::set_union(cones_[tau].begin(), cones_[tau].end(), cones_[sigma].begin(),
                 cones_[sigma].end(), std::back_inserter(u));
  return find_cone(u);
}

std::string Fan::cone_name(std::size_t index) const {
  std::string s = "{";
  for (std::size_t k = 0; k < cones_[index].size(); ++k) {
    if (k)
      s += ",";
    s += std::to_string(cones_[index][k]);
  }
  return s + "}";
}

std::size_t WFan::act_on_cone(ElemId w, std::size_t cone) const {
  ConeRays image;
  for (std::size_t j : full.cone(cone))
    image.push_back(ray_action[w][j]);
  auto idx = full.find_cone(image);
  if (!idx)
    throw InvariantViolation("NotWStable", "W maps a cone outside the fan");
  return *idx;
}

std::size_t WFan::orbit_representative(std::size_t cone) const {
  for (ElemId w = 0; w < W->size(); ++w) {
    const std::size_t image = act_on_cone(w, cone);
    auto it = std::find(plus_to_full.begin(), plus_to_full.end(), image);
    if (it != plus_to_full.end())
      return static_cast<std::size_t>(it - plus_to_full.begin());
  }
  throw InvariantViolation("NotFundamentalDomain", "cone has no representative in F_+");
}

Fan positive_chamber(int rank) {
  std::vector<IntVector> rays;
  ConeRays top;
  for (int i = 0; i < rank; ++i) {
    IntVector e(static_cast<std::size_t>(rank), 0);
    e[i] = 1;
    rays.push_back(e);
    top.push_back(static_cast<std::size_t>(i));
  }
  return Fan(rank, rays, {top});
}

WFan make_wfan(WeylGroupPtr W, Fan plus) {
  WFan F;
  F.W = W;
  std::vector<IntVector> rays = plus.rays();
  for (ElemId w = 0; w < W->size(); ++w)
    for (const auto &ray : plus.rays()) {
      IntVector image = W->coweight_matrix(w) * std::span<const std::int64_t>(ray);
      if (std::find(rays.begin(), rays.end(), image) == rays.end())
        rays.push_back(image);
    }
  std::vector<ConeRays> cones;
  F.ray_action.assign(W->size(), std::vector<std::size_t>(rays.size()));
  for (ElemId w = 0; w < W->size(); ++w)
    for (std::size_t j = 0; j < rays.size(); ++j) {
      IntVector image = W->coweight_matrix(w) * std::span<const std::int64_t>(rays[j]);
      auto it = std::find(rays.begin(), rays.end(), image);
      if (it == rays.end())
        throw InvariantViolation("NotWStable", "ray orbit not closed");
      F.ray_action[w][j] = static_cast<std::size_t>(it - rays.begin());
    }
  for (ElemId w = 0; w < W->size(); ++w)
    for (const auto &c : plus.cones()) {
      ConeRays image;
      for (std::size_t j : c)
        image.push_back(F.ray_action[w][j]);
      cones.push_back(image);
    }
  F.full = Fan(plus.dim(), rays, cones);
  for (const auto &c : plus.cones())
    F.plus_to_full.push_back(*F.full.find_cone(c));
  F.plus = std::move(plus);
  return F;
}

WFan chamber_fan(WeylGroupPtr W) {
  const int r = W->rank();
  return make_wfan(std::move(W), positive_chamber(r));
}

Fan subdivided_positive_fan(int rank, const std::vector<IntVector> &rays,
                            const std::vector<ConeRays> &cones) {
  const auto r = static_cast<std::size_t>(rank);
  for (const auto &ray : rays) {
    if (ray.size() != r)
      throw ValidationError("InvalidFan", "ray " + to_string(ray) + " has the wrong length");
    if (std::any_of(ray.begin(), ray.end(), [](std::int64_t x) { return x < 0; }) ||
        gcd_of(ray) == 0)
      throw ValidationError("SupportMismatch",
                            "ray " + to_string(ray) + " is not in the positive chamber");
    if (gcd_of(ray) != 1)
      throw ValidationError("NotSmooth", "ray " + to_string(ray) + " is not primitive");
  }
  std::set<ConeRays> listed;
  for (ConeRays c : cones) {
    std::sort(c.begin(), c.end());
    if (std::adjacent_find(c.begin(), c.end()) != c.end() || c.size() > r)
      throw ValidationError("InvalidFan", "malformed cone");
    for (std::size_t j : c)
      if (j >= rays.size())
        throw ValidationError("InvalidFan", "ray index " + std::to_string(j) + " out of range");
    if (!c.empty())
      listed.insert(c);
  }
  for (const auto &c : listed)
    for (const auto &f : all_faces(c))
      if (!f.empty() && !listed.count(f))
        throw ValidationError("NotFaceClosed", "face of a listed cone is missing");

  Fan fan(rank, rays, std::vector<ConeRays>(listed.begin(), listed.end()));
  for (const auto &c : fan.cones()) {
    std::vector<IntVector> cols;
    for (std::size_t j : c)
      cols.push_back(rays[j]);
    if (!c.empty() && maximal_minor_gcd(cols) != 1)
      throw ValidationError("NotSmooth", "cone " + fan.cone_name(*fan.find_cone(c)) +
                                             " is not generated by part of a lattice basis");
  }
  const auto maximal = fan.maximal_cones();
  for (std::size_t i = 1; i < fan.cones().size(); ++i) {
    bool covered = false;
    for (std::size_t m : maximal)
      covered |= fan.is_face(i, m);
    if (!covered)
      throw ValidationError("SupportMismatch",
                            "cone " + fan.cone_name(i) + " is not a face of a full cone");
  }
  if (maximal.empty())
    throw ValidationError("SupportMismatch", "no full-dimensional cones");

  // Facets: on the chamber boundary exactly one full cone, inside exactly
  // two, lying on opposite sides.
  for (std::size_t i = 0; i < fan.cones().size(); ++i) {
    const auto &facet = fan.cone(i);
    if (facet.size() + 1 != r)
      continue;
    std::vector<std::size_t> owners;
    for (std::size_t m : maximal)
      if (fan.is_face(i, m))
        owners.push_back(m);
    bool boundary = false;
    for (std::size_t k = 0; k < r; ++k)
      boundary |= std::all_of(facet.begin(), facet.end(),
                              [&](std::size_t j) { return rays[j][k] == 0; });
    const std::size_t expected = boundary ? 1 : 2;
    if (owners.size() != expected)
      throw ValidationError("SupportMismatch", "facet " + fan.cone_name(i) + " lies in " +
                                                   std::to_string(owners.size()) +
                                                   " full cones");
    if (!boundary) {
      std::vector<IntVector> span;
      for (std::size_t j : facet)
        span.push_back(rays[j]);
      const IntVector chi = primitive_orthogonal(span);
      std::int64_t sides[2];
      for (int k = 0; k < 2; ++k)
        for (std::size_t j : fan.cone(owners[k]))
          if (!std::binary_search(facet.begin(), facet.end(), j))
            sides[k] = dot(chi, rays[j]);
      if ((sides[0] > 0) == (sides[1] > 0))
        throw ValidationError("SupportMismatch",
                              "cones meeting at facet " + fan.cone_name(i) + " overlap");
    }
  }
  // Volumes of the slices {x in sigma : sum x <= 1} must add up to that of
  // the standard simplex.
  mpq_class total = 0;
  for (std::size_t m : maximal) {
    IntMatrix mat(r, r);
    Integer heights = 1;
    for (std::size_t k = 0; k < r; ++k) {
      std::int64_t h = 0;
      for (std::size_t i = 0; i < r; ++i) {
        mat(i, k) = rays[fan.cone(m)[k]][i];
        h += rays[fan.cone(m)[k]][i];
      }
      heights *= h;
    }
    total += mpq_class(abs(determinant(mat)), heights);
  }
  total.canonicalize();
  if (total != 1)
    throw ValidationError("SupportMismatch", "cones do not cover the positive chamber exactly");
  return fan;
}

ConeStabilizer cone_stabilizer(const WFan &F, const ConeRays &cone) {
  auto idx = F.full.find_cone(cone);
  if (!idx)
    throw ValidationError("ConeNotInFan", "cone is not in the fan");
  ConeStabilizer out;
  out.pointwise = true;
  for (ElemId w = 0; w < F.W->size(); ++w)
    if (F.act_on_cone(w, *idx) == *idx) {
      out.setwise.push_back(w);
      for (std::size_t j : F.full.cone(*idx))
        out.pointwise &= F.ray_action[w][j] == j;
    }
  return out;
}

namespace {

// prod_{j in tau} (X_j^{a_j} - 1), expanded.
void add_cone_piece(std::vector<Term> &out, const ConeRays &tau, const Exponent &a,
                    const Integer &c) {
  const std::size_t n = tau.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    Exponent e(a.size(), 0);
    int missing = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1)
        e[tau[i]] = a[tau[i]];
      else
        ++missing;
    }
    out.push_back({std::move(e), missing % 2 ? Integer(-c) : c});
  }
}

} // namespace

std::map<std::size_t, LaurentPoly> c_tau_decompose(const Fan &fan, const LaurentPoly &e) {
  const int d = static_cast<int>(fan.num_rays());
  if (!e.is_zero() && (e.width() != d))
    throw ValidationError("BlockMismatch", "SR element has the wrong number of variables");
  std::map<std::size_t, std::vector<Term>> pieces;
  for (const auto &t : e.terms())
    for (std::size_t c = 0; c < fan.cones().size(); ++c) {
      const auto &tau = fan.cone(c);
      // monomial X^a = sum over T in supp(a) of prod_{j in T}(X_j^{a_j} - 1);
      // only the subsets that are cones survive.
      if (std::all_of(tau.begin(), tau.end(), [&](std::size_t j) { return t.exp[j] != 0; }))
        add_cone_piece(pieces[c], tau, t.exp, t.coef);
    }
  std::map<std::size_t, LaurentPoly> out;
  for (auto &[c, terms] : pieces) {
    auto p = LaurentPoly::from_terms(d, 1, std::move(terms));
    if (!p.is_zero())
      out.emplace(c, std::move(p));
  }
  return out;
}

LaurentPoly sr_normal_form(const Fan &fan, const LaurentPoly &e) {
  LaurentPoly out(static_cast<int>(fan.num_rays()), 1);
  for (const auto &[c, p] : c_tau_decompose(fan, e))
    out += p;
  return out;
}

bool in_c_tau(const Fan &fan, std::size_t tau, const LaurentPoly &p) {
  const auto &rays = fan.cone(tau);
  for (const auto &t : p.terms())
    for (std::size_t j = 0; j < t.exp.size(); ++j)
      if (t.exp[j] != 0 && !std::binary_search(rays.begin(), rays.end(), j))
        return false;
  auto parts = c_tau_decompose(fan, p);
  return parts.empty() || (parts.size() == 1 && parts.begin()->first == tau);
}

LaurentPoly x_tau(const Fan &fan, std::size_t tau) {
  const int d = static_cast<int>(fan.num_rays());
  LaurentPoly out = LaurentPoly::constant(d, 1, 1);
  for (std::size_t j : fan.cone(tau)) {
    Exponent e(static_cast<std::size_t>(d), 0);
    e[j] = 1;
    out *= LaurentPoly::constant(d, 1, 1) - LaurentPoly::monomial(d, 1, e);
  }
  return out;
}

LaurentPoly act_on_sr(const WFan &F, ElemId w, const LaurentPoly &e) {
  std::vector<Term> out;
  for (const auto &t : e.terms()) {
    Exponent image(t.exp.size(), 0);
    for (std::size_t j = 0; j < t.exp.size(); ++j)
      image[F.ray_action[w][j]] = t.exp[j];
    out.push_back({std::move(image), t.coef});
  }
  return LaurentPoly::from_terms(e.rank(), e.blocks(), std::move(out));
}

namespace {

// Dual basis (weight coordinates) of the rays of a maximal cone.
std::vector<IntVector> dual_characters(const RootSystem &rs, const Fan &fan, std::size_t sigma) {
  std::vector<IntVector> cols;
  for (std::size_t j : fan.cone(sigma))
    cols.push_back(fan.rays()[j]);
  auto inv = unimodular_inverse(IntMatrix::from_columns(cols));
  if (!inv)
    throw ValidationError("NotSmooth", "maximal cone is not unimodular");
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < cols.size(); ++i)
    out.push_back(rs.root_lattice_to_weight(inv->row(i)));
  return out;
}

} // namespace

LaurentPoly restrict_to_fixed_point(const RootSystem &rs, const Fan &fan, std::size_t sigma,
                                    const LaurentPoly &e) {
  const int r = rs.rank();
  const auto chars = dual_characters(rs, fan, sigma);
  const auto &rays = fan.cone(sigma);
  std::vector<Term> out;
  for (const auto &t : e.terms()) {
    IntVector weight(static_cast<std::size_t>(r), 0);
    for (std::size_t k = 0; k < rays.size(); ++k)
      for (int i = 0; i < r; ++i)
        weight[i] += t.exp[rays[k]] * chars[k][i];
    out.push_back({to_exponent(weight), t.coef});
  }
  return LaurentPoly::from_terms(r, 1, std::move(out));
}

IntVector facet_character(const RootSystem &rs, const Fan &fan, std::size_t sigma,
                          std::size_t sigma2) {
  const auto &a = fan.cone(sigma);
  const auto &b = fan.cone(sigma2);
  ConeRays common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  if (common.size() + 1 != a.size())
    throw ValidationError("NotAdjacent", "cones do not share a facet");
  IntVector chi;
  if (common.empty()) {
    chi = IntVector{1};
  } else {
    std::vector<IntVector> span;
    for (std::size_t j : common)
      span.push_back(fan.rays()[j]);
    chi = primitive_orthogonal(span);
  }
  for (std::size_t j : a)
    if (!std::binary_search(common.begin(), common.end(), j) && dot(chi, fan.rays()[j]) < 0)
      for (auto &x : chi)
        x = -x;
  return rs.root_lattice_to_weight(chi);
}

std::vector<std::pair<std::size_t, std::size_t>> adjacent_pairs(const Fan &fan) {
  const auto maximal = fan.maximal_cones();
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < maximal.size(); ++i)
    for (std::size_t k = i + 1; k < maximal.size(); ++k) {
      const auto &a = fan.cone(maximal[i]);
      const auto &b = fan.cone(maximal[k]);
      ConeRays common;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                            std::back_inserter(common));
      if (common.size() + 1 == a.size())
        out.emplace_back(maximal[i], maximal[k]);
    }
  return out;
}

bool localization_check(const RootSystem &rs, const Fan &fan,
                        const std::map<std::size_t, LaurentPoly> &family) {
  for (std::size_t m : fan.maximal_cones())
    if (!family.count(m))
      throw ValidationError("MissingCone", "no value for maximal cone " + fan.cone_name(m));
  for (const auto &[s, s2] : adjacent_pairs(fan)) {
    const IntVector chi = facet_character(rs, fan, s, s2);
    if (!congruent_mod_character(family.at(s), family.at(s2), chi))
      return false;
  }
  return true;
}

} // namespace wonderk
