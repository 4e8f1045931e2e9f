#include "wonderk/serialize.hpp"

#include "wonderk/error.hpp"

namespace wonderk {

namespace {

Json int_vector_json(const IntVector &v) {
  Json a = Json::array();
  for (auto x : v)
    a.push_back(x);
  return a;
}

Json matrix_json(const IntMatrix &m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    rows.push_back(int_vector_json(m.row(i)));
  return rows;
}

[[noreturn]] void malformed(const std::string &what) {
  throw ValidationError("MalformedJson", what);
}

} // namespace

Json to_json(const LaurentPoly &p) {
  Json terms = Json::array();
  for (const auto &t : p.terms()) {
    Json exp = Json::array();
    for (auto x : t.exp)
      exp.push_back(x);
    terms.push_back(Json{{"exp", std::move(exp)}, {"coef", t.coef.get_str()}});
  }
  return Json{{"terms", std::move(terms)}};
}

LaurentPoly laurent_from_json(const Json &j, int rank, int blocks) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    malformed("polynomial must be an object with a \"terms\" array");
  std::vector<Term> terms;
  for (const auto &t : j["terms"]) {
    if (!t.is_object() || !t.contains("exp") || !t.contains("coef") || !t["exp"].is_array())
      malformed("term must have \"exp\" and \"coef\"");
    Exponent e;
    for (const auto &x : t["exp"]) {
      if (!x.is_number_integer())
        malformed("exponents must be integers");
      e.push_back(x.get<std::int32_t>());
    }
    if (static_cast<int>(e.size()) != rank * blocks)
      malformed("exponent length " + std::to_string(e.size()) + ", expected " +
                std::to_string(rank * blocks));
    Integer c;
    if (t["coef"].is_string()) {
      if (c.set_str(t["coef"].get<std::string>(), 10) != 0)
        malformed("coefficient is not a decimal integer");
    } else if (t["coef"].is_number_integer()) {
      c = Integer(std::to_string(t["coef"].get<std::int64_t>()));
    } else {
      malformed("coefficient must be a decimal string");
    }
    terms.push_back({std::move(e), std::move(c)});
  }
  return LaurentPoly::from_terms(rank, blocks, std::move(terms));
}

Json subset_json(Subset I) {
  Json a = Json::array();
  for (int i : subset_indices(I))
    a.push_back(i);
  return a;
}

Json roots_json(const RootSystem &rs) {
  Json simple = Json::array();
  for (int i = 0; i < rs.rank(); ++i)
    simple.push_back(int_vector_json(rs.simple_root(i)));
  Json positive = Json::array();
  for (const auto &r : rs.positive_roots())
    positive.push_back(Json{{"simple_coords", int_vector_json(r.simple_coords)},
                            {"weight", int_vector_json(r.weight)}});
  return Json{{"type", rs.label().to_string()},
              {"rank", rs.rank()},
              {"cartan_matrix", matrix_json(rs.cartan_matrix())},
              {"simple_roots", std::move(simple)},
              {"positive_roots", std::move(positive)}};
}

Json weyl_json(const WeylGroup &W) {
  Json elems = Json::array();
  for (ElemId w = 0; w < W.size(); ++w)
    elems.push_back(Json{{"name", W.name(w)},
                         {"length", W.length(w)},
                         {"descents", subset_json(W.right_descents(w))},
                         {"matrix", matrix_json(W.element(w).matrix)}});
  return Json{{"type", W.root_system().label().to_string()},
              {"order", W.size()},
              {"longest", W.name(W.longest())},
              {"elements", std::move(elems)}};
}

Json csets_json(const WeylGroup &W) {
  const auto cells = c_sets(W);
  Json parts = Json::array();
  Json reps = Json::array();
  for (Subset I = 0; I < cells.size(); ++I) {
    Json names = Json::array();
    for (ElemId v : cells[I])
      names.push_back(W.name(v));
    parts.push_back(Json{{"I", subset_json(I)}, {"elements", std::move(names)}});
    Json rnames = Json::array();
    for (ElemId v : minimal_coset_reps(W, I))
      rnames.push_back(W.name(v));
    reps.push_back(Json{{"I", subset_json(I)}, {"elements", std::move(rnames)}});
  }
  return Json{{"type", W.root_system().label().to_string()},
              {"csets", std::move(parts)},
              {"minimal_coset_reps", std::move(reps)}};
}

Json steinberg_json(const SteinbergSystem &S) {
  const WeylGroup &W = S.group();
  Json basis = Json::array();
  for (const auto &b : S.basis())
    basis.push_back(Json{{"v", W.name(b.v)}, {"I", subset_json(b.I)}, {"f", to_json(b.poly)}});
  Json out{{"type", W.root_system().label().to_string()}, {"basis", std::move(basis)}};
  if (W.size() <= kTableLimit)
    out["determinant"] = to_json(S.determinant());
  else
    out["determinant"] = nullptr;
  return out;
}

Json ctable_json(const SteinbergSystem &S) {
  S.require_order(kTableLimit, "ctable");
  const WeylGroup &W = S.group();
  Json basis = Json::array();
  for (ElemId v = 0; v < W.size(); ++v)
    basis.push_back(Json{{"v", W.name(v)}, {"I", subset_json(cell_of(W, v))}});
  Json products = Json::object();
  for (ElemId v = 0; v < W.size(); ++v)
    for (ElemId v2 = 0; v2 < W.size(); ++v2) {
      const auto &a = S.structure_constants(v, v2);
      Json entries = Json::array();
      for (ElemId w = 0; w < W.size(); ++w)
        if (!a[w].is_zero())
          entries.push_back(Json{{"w", W.name(w)}, {"coef", to_json(a[w])}});
      products[W.name(v) + "|" + W.name(v2)] = std::move(entries);
    }
  return Json{{"type", W.root_system().label().to_string()},
              {"basis", std::move(basis)},
              {"products", std::move(products)}};
}

Json kgb_json(const WeylGroup &W, const KGBElement &a) {
  Json out = Json::object();
  for (ElemId v = 0; v < a.size(); ++v)
    out[W.name(v)] = a[v].fits_slong_p() ? Json(a[v].get_si()) : Json(a[v].get_str());
  return out;
}

Json kx_json(const WeylGroup &W, const KXElement &x) {
  Json entries = Json::array();
  for (ElemId w = 0; w < x.coords.size(); ++w)
    if (!kgb_is_zero(x.coords[w]))
      entries.push_back(Json{{"w", W.name(w)}, {"coef", kgb_json(W, x.coords[w])}});
  return entries;
}

Json ktable_json(const SteinbergSystem &S, const KXTable &t) {
  const WeylGroup &W = S.group();
  Json products = Json::object();
  for (ElemId v = 0; v < W.size(); ++v)
    for (ElemId v2 = 0; v2 < W.size(); ++v2)
      products[W.name(v) + "|" + W.name(v2)] = kx_json(W, t.products[v][v2]);
  return Json{{"type", W.root_system().label().to_string()},
              {"kgb_rank", W.size()},
              {"kx_rank", W.size() * W.size()},
              {"products", std::move(products)},
              {"checks", Json{{"count", t.report.checks.size()},
                              {"failures", t.report.failures()}}}};
}

Json decomposition_json(const WeylGroup &W, const WonderfulDecomposition &d) {
  Json comps = Json::array();
  for (Subset I : d.support(W)) {
    Json coords = Json::array();
    for (ElemId v = 0; v < d.coords.size(); ++v)
      if (cell_of(W, v) == I && !d.coords[v].is_zero())
        coords.push_back(Json{{"v", W.name(v)}, {"coef", to_json(d.coords[v])}});
    comps.push_back(Json{{"I", subset_json(I)}, {"coords", std::move(coords)}});
  }
  return Json{{"components", std::move(comps)}};
}

WonderfulDecomposition decomposition_from_json(const WeylGroup &W, const Json &j) {
  if (!j.is_object() || !j.contains("components") || !j["components"].is_array())
    malformed("decomposition must have a \"components\" array");
  const int r = W.rank();
  WonderfulDecomposition d{std::vector<LaurentPoly>(W.size(), LaurentPoly(r, 2))};
  for (const auto &c : j["components"]) {
    if (!c.contains("coords") || !c["coords"].is_array())
      malformed("component must have \"coords\"");
    for (const auto &e : c["coords"]) {
      if (!e.contains("v") || !e["v"].is_string() || !e.contains("coef"))
        malformed("coordinate must have \"v\" and \"coef\"");
      const ElemId v = W.parse(e["v"].get<std::string>());
      d.coords[v] += laurent_from_json(e["coef"], r, 2);
    }
  }
  return d;
}

Json fan_json(const Fan &fan) {
  Json rays = Json::array();
  for (const auto &ray : fan.rays())
    rays.push_back(int_vector_json(ray));
  Json cones = Json::array();
  for (std::size_t c = 1; c < fan.cones().size(); ++c) {
    Json idx = Json::array();
    for (std::size_t j : fan.cone(c))
      idx.push_back(j);
    cones.push_back(std::move(idx));
  }
  return Json{{"rays", std::move(rays)}, {"cones", std::move(cones)}};
}

Fan fan_from_json(const Json &j, int rank) {
  if (!j.is_object() || !j.contains("rays") || !j.contains("cones") || !j["rays"].is_array() ||
      !j["cones"].is_array())
    malformed("fan must have \"rays\" and \"cones\" arrays");
  std::vector<IntVector> rays;
  for (const auto &ray : j["rays"]) {
    if (!ray.is_array())
      malformed("ray must be an integer array");
    IntVector v;
    for (const auto &x : ray) {
      if (!x.is_number_integer())
        malformed("ray entries must be integers");
      v.push_back(x.get<std::int64_t>());
    }
    rays.push_back(std::move(v));
  }
  std::vector<ConeRays> cones;
  for (const auto &cone : j["cones"]) {
    if (!cone.is_array())
      malformed("cone must be an array of ray indices");
    ConeRays c;
    for (const auto &x : cone) {
      if (!x.is_number_integer() || x.get<std::int64_t>() < 0)
        malformed("cone entries must be ray indices");
      c.push_back(x.get<std::size_t>());
    }
    cones.push_back(std::move(c));
  }
  return subdivided_positive_fan(rank, rays, cones);
}

Json report_json(const Report &r) {
  Json results = Json::array();
  for (const auto &c : r.checks) {
    Json e{{"check", c.check}, {"instance", c.instance}, {"pass", c.pass}};
    if (!c.detail.empty())
      e["detail"] = c.detail;
    results.push_back(std::move(e));
  }
  return Json{{"suite", r.suite},
              {"type", r.type},
              {"pass", r.all_pass()},
              {"checks", r.checks.size()},
              {"failures", r.failures()},
              {"results", std::move(results)}};
}

} // namespace wonderk
