#include <optional>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wonderk/error.hpp"
#include "wonderk/serialize.hpp"
#include "wonderk/verify.hpp"

namespace py = pybind11;
using namespace wonderk;

namespace {

py::object to_py(const Json &j) { return py::module_::import("json").attr("loads")(j.dump()); }

Json from_py(const py::object &o) {
  return Json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

KGBElement kgb_from_json(const WeylGroup &W, const Json &j) {
  if (!j.is_object())
    throw ValidationError("MalformedJson", "K(G/B) element must map names to integers");
  KGBElement a = kgb_zero(W);
  for (const auto &[name, c] : j.items()) {
    Integer x;
    if (c.is_number_integer())
      x = Integer(std::to_string(c.get<std::int64_t>()));
    else if (!c.is_string() || x.set_str(c.get<std::string>(), 10) != 0)
      throw ValidationError("MalformedJson", "coefficient of " + name + " is not an integer");
    a[W.parse(name)] += x;
  }
  return a;
}

KXElement kx_from_json(const WeylGroup &W, const Json &j) {
  if (!j.is_array())
    throw ValidationError("MalformedJson", "K(X) element must be a list of {w, coef}");
  KXElement x = kx_zero(W);
  for (const auto &e : j) {
    if (!e.contains("w") || !e["w"].is_string() || !e.contains("coef"))
      throw ValidationError("MalformedJson", "K(X) entry must have \"w\" and \"coef\"");
    const ElemId w = W.parse(e["w"].get<std::string>());
    x.coords[w] = kgb_add(x.coords[w], kgb_from_json(W, e["coef"]));
  }
  return x;
}

class System {
public:
  System(const std::string &type, int max_rank)
      : label_(CartanLabel::parse(type)), max_rank_(max_rank),
        W_(make_weyl_group(label_, max_rank)) {}

  const WeylGroup &group() const { return *W_; }

  const SteinbergSystem &steinberg() {
    if (!S_)
      S_ = steinberg_system(label_, max_rank_);
    return *S_;
  }

  std::string type() const { return label_.to_string(); }
  std::size_t order() const { return W_->size(); }
  int rank() const { return W_->rank(); }

private:
  CartanLabel label_;
  int max_rank_;
  WeylGroupPtr W_;
  SteinbergSystemPtr S_;
};

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Equivariant and ordinary K-rings of wonderful compactifications";

  static py::exception<Error> base(m, "Error", PyExc_RuntimeError);
  static py::exception<ValidationError> validation(m, "ValidationError", base.ptr());
  static py::exception<InvariantViolation> invariant(m, "InvariantViolation", base.ptr());
  static py::exception<TimeoutError> timeout(m, "TimeoutError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    auto raise = [](PyObject *cls, const Error &e) {
      py::object exc = py::reinterpret_borrow<py::object>(cls)(e.what());
      exc.attr("code") = e.code();
      PyErr_SetObject(cls, exc.ptr());
    };
    try {
      if (p)
        std::rethrow_exception(p);
    } catch (const ValidationError &e) {
      raise(validation.ptr(), e);
    } catch (const InvariantViolation &e) {
      raise(invariant.ptr(), e);
    } catch (const TimeoutError &e) {
      raise(timeout.ptr(), e);
    } catch (const Error &e) {
      raise(base.ptr(), e);
    } catch (const Json::exception &e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.attr("DEFAULT_MAX_RANK") = kDefaultRankBound;
  m.def("suite_names", &suite_names);

  py::class_<System>(m, "System")
      .def(py::init<const std::string &, int>(), py::arg("type"),
           py::arg("max_rank") = kDefaultRankBound)
      .def_property_readonly("type", &System::type)
      .def_property_readonly("order", &System::order)
      .def_property_readonly("rank", &System::rank)
      .def("elements",
           [](const System &s) {
             std::vector<std::string> out;
             for (ElemId w = 0; w < s.group().size(); ++w)
               out.push_back(s.group().name(w));
             return out;
           })
      .def("roots", [](const System &s) { return to_py(roots_json(s.group().root_system())); })
      .def("weyl", [](const System &s) { return to_py(weyl_json(s.group())); })
      .def("csets", [](const System &s) { return to_py(csets_json(s.group())); })
      .def("steinberg", [](System &s) { return to_py(steinberg_json(s.steinberg())); })
      .def("ctable", [](System &s) { return to_py(ctable_json(s.steinberg())); })
      .def("ktable",
           [](System &s) {
             const auto &S = s.steinberg();
             return to_py(ktable_json(S, kx_table(S)));
           })
      .def(
          "verify",
          [](System &s, std::optional<std::vector<std::string>> suites, int samples,
             std::uint32_t seed, std::optional<py::object> fan) {
            SuiteOptions opt;
            opt.samples = samples;
            opt.seed = seed;
            if (fan)
              opt.user_fan = fan_from_json(from_py(*fan), s.rank());
            py::list out;
            for (const auto &name : suites ? *suites : default_suites(s.group()))
              out.append(to_py(report_json(run_suite(name, s.steinberg(), opt))));
            return out;
          },
          py::arg("suites") = py::none(), py::arg("samples") = 100, py::arg("seed") = 1,
          py::arg("fan") = py::none())
      .def("is_member",
           [](System &s, const py::object &f) {
             const int r = s.rank();
             return membership_check(s.group(), wonderful_class(r, laurent_from_json(from_py(f), r, 2)));
           })
      .def("decompose",
           [](System &s, const py::object &f) {
             const int r = s.rank();
             const auto d = wonderful_decompose(s.steinberg(), laurent_from_json(from_py(f), r, 2));
             return to_py(decomposition_json(s.group(), d));
           })
      .def("assemble",
           [](System &s, const py::object &d) {
             return to_py(to_json(assemble(s.steinberg(), decomposition_from_json(s.group(), from_py(d)))));
           })
      .def("generator",
           [](System &s, const std::string &v) {
             return to_py(to_json(wonderful_generator(s.steinberg(), s.group().parse(v))));
           })
      .def("kgb_multiply",
           [](System &s, const py::object &a, const py::object &b) {
             const auto &W = s.group();
             return to_py(kgb_json(W, kgb_multiply(s.steinberg(), kgb_from_json(W, from_py(a)),
                                                   kgb_from_json(W, from_py(b)))));
           })
      .def("kx_multiply",
           [](System &s, const py::object &x, const py::object &y) {
             const auto &W = s.group();
             return to_py(kx_json(W, kx_multiply(s.steinberg(), kx_from_json(W, from_py(x)),
                                                 kx_from_json(W, from_py(y)))));
           })
      .def("pushdown", [](System &s, const py::object &d) {
        const auto &W = s.group();
        return to_py(kx_json(W, pushdown(s.steinberg(), decomposition_from_json(W, from_py(d)))));
      });
}
