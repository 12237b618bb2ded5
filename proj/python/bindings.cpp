#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hdts/axioms.hpp"
#include "hdts/builders.hpp"
#include "hdts/cats.hpp"
#include "hdts/closure.hpp"
#include "hdts/homotopy.hpp"
#include "hdts/io.hpp"
#include "hdts/reflect.hpp"
#include "hdts/search.hpp"

namespace py = pybind11;
using namespace hdts;

namespace {

py::tuple named(const Tsys& x, const Transition& t) {
  py::list word;
  for (int a : t.word) word.append(x.action_name(a));
  return py::make_tuple(x.state_name(t.source), py::tuple(word),
                        x.state_name(t.target));
}

Tsys from_lists(const std::vector<std::string>& states,
                const std::vector<std::pair<std::string, std::string>>& actions,
                const std::vector<std::tuple<std::string, std::vector<std::string>,
                                             std::string>>& transitions) {
  TsysData d;
  d.states = states;
  d.actions = actions;
  for (const auto& [s, w, t] : transitions) d.transitions.push_back({s, w, t});
  return Tsys(d);
}

}  // namespace

PYBIND11_MODULE(_hdts, m) {
  m.doc() = "Finite higher-dimensional transition systems";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<InvalidSystem>(m, "InvalidSystem", base.ptr());
  py::register_exception<InvalidMap>(m, "InvalidMap", base.ptr());
  py::register_exception<SizeLimitExceeded>(m, "SizeLimitExceeded", base.ptr());
  py::register_exception<PreconditionFailed>(m, "PreconditionFailed", base.ptr());
  py::register_exception<MalformedCone>(m, "MalformedCone", base.ptr());
  py::register_exception<ArityMismatch>(m, "ArityMismatch", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<UnresolvedReference>(m, "UnresolvedReference", base.ptr());

  py::class_<Tsys>(m, "Tsys")
      .def(py::init(&from_lists), py::arg("states"), py::arg("actions"),
           py::arg("transitions"))
      .def_property_readonly("states", &Tsys::state_names)
      .def_property_readonly("actions", [](const Tsys& x) {
        std::vector<std::pair<std::string, std::string>> out;
        for (std::size_t a = 0; a < x.num_actions(); ++a)
          out.emplace_back(x.action_name(int(a)), x.label(int(a)));
        return out;
      })
      .def_property_readonly("transitions", [](const Tsys& x) {
        py::list out;
        for (const auto& t : x.transitions()) out.append(named(x, t));
        return out;
      })
      .def("num_states", &Tsys::num_states)
      .def("num_actions", &Tsys::num_actions)
      .def("num_transitions", &Tsys::num_transitions)
      .def("__eq__", [](const Tsys& a, const Tsys& b) { return a == b; })
      .def("__str__", &serialize_tsys)
      .def("__repr__", [](const Tsys& x) {
        return "<Tsys " + std::to_string(x.num_states()) + " states, " +
               std::to_string(x.num_actions()) + " actions, " +
               std::to_string(x.num_transitions()) + " transitions>";
      });

  py::class_<TsMap>(m, "TsMap")
      .def_property_readonly("domain", &TsMap::domain)
      .def_property_readonly("codomain", &TsMap::codomain)
      .def_property_readonly("states", [](const TsMap& f) {
        py::dict d;
        for (std::size_t s = 0; s < f.domain().num_states(); ++s)
          d[py::str(f.domain().state_name(int(s)))] =
              f.codomain().state_name(f.state(int(s)));
        return d;
      })
      .def_property_readonly("actions", [](const TsMap& f) {
        py::dict d;
        for (std::size_t a = 0; a < f.domain().num_actions(); ++a)
          d[py::str(f.domain().action_name(int(a)))] =
              f.codomain().action_name(f.action(int(a)));
        return d;
      })
      .def("__eq__", [](const TsMap& a, const TsMap& b) { return a == b; })
      .def("__matmul__", [](const TsMap& g, const TsMap& f) { return compose(g, f); });

  m.def("parse", [](const std::string& s) { return parse_tsys(s); });
  m.def("serialize", &serialize_tsys);
  m.def("classify", [](const Tsys& x) {
    return py::module_::import("json").attr("loads")(report_json(x, classify(x)));
  });
  m.def("is_weak", &is_weak);
  m.def("is_cubical", &is_cubical);
  m.def("is_regular", &is_regular);
  m.def("is_combinatorially_fibrant", &is_combinatorially_fibrant);

  m.def("cube", &cube, py::arg("labels"));
  m.def("pure_transition", &pure_transition);
  m.def("boundary", &boundary);
  m.def("double_transition", &double_transition);
  m.def("bare_action", &bare_action);
  m.def("zx", &zx);
  m.def("generator", &generator, py::arg("name"), py::arg("labels"));
  m.def("example", &example, py::arg("name"), py::arg("params") = std::vector<std::string>{});

  m.def("saturate", &saturate);
  m.def("coproduct", [](const std::vector<Tsys>& parts) { return coproduct(parts).object; });
  m.def("product", [](const Tsys& a, const Tsys& b) { return product(a, b).object; });
  m.def("pushout", [](const TsMap& f, const TsMap& g, const std::string& mode) {
    Pushout p = pushout(f, g, mode == "rts" ? PushoutMode::Rts : PushoutMode::Cts);
    return py::make_tuple(p.object, p.leg_b, p.leg_c);
  }, py::arg("f"), py::arg("g"), py::arg("mode") = "cts");

  m.def("reflect", [](const std::string& kind, const Tsys& x) {
    Reflection r = reflect(parse_reflector_kind(kind), x);
    return py::make_tuple(r.object, r.unit);
  });
  m.def("coreflect", [](const std::string& kind, const Tsys& x) {
    Coreflection c = kind == "cub"   ? cubification(x)
                     : kind == "cts" ? cts_coreflection(x)
                                     : intermediate_saturation(x);
    return py::make_tuple(c.object, c.counit);
  });
  m.def("cyl", [](const Tsys& x) {
    Cylinder c = cyl(x);
    return py::make_tuple(c.object, c.gamma0, c.gamma1, c.sigma);
  });
  m.def("cocyl", [](const Tsys& x) {
    PathObject p = cocyl(x);
    return py::make_tuple(p.object, p.eval0, p.eval1);
  });
  m.def("is_weq", [](const TsMap& f, const std::string& s) {
    return is_weq(f, parse_structure(s));
  });
  m.def("are_homotopic", &are_homotopic);

  m.def("hom_count", [](const Tsys& a, const Tsys& x) { return hom_count(a, x); });
  m.def("homs", [](const Tsys& a, const Tsys& x) { return hom_search(a, x); });
  m.def("is_isomorphic", [](const Tsys& a, const Tsys& b) { return is_isomorphic(a, b); });
}
