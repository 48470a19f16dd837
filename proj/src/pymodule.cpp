#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "specker/engine.hpp"
#include "specker/order.hpp"
#include "specker/spectra.hpp"

namespace py = pybind11;
using namespace specker;

namespace {

// python str/int/list structures -> JSON, for value and element input
Json py_to_json(py::handle obj) {
  if (py::isinstance<py::str>(obj)) return obj.cast<std::string>();
  if (py::isinstance<py::bool_>(obj)) return obj.cast<bool>();
  if (py::isinstance<py::int_>(obj)) return obj.cast<long long>();
  if (py::isinstance<py::list>(obj) || py::isinstance<py::tuple>(obj)) {
    Json arr = Json::array();
    for (py::handle item : obj) arr.push_back(py_to_json(item));
    return arr;
  }
  if (py::isinstance<py::dict>(obj)) {
    Json out = Json::object();
    for (auto item : obj.cast<py::dict>())
      out[item.first.cast<std::string>()] = py_to_json(item.second);
    return out;
  }
  fail(Errc::parse_error, "cannot interpret python object as a JSON value");
}

SpeckerElem elem_from_py(const SpeckerAlgebra& s, py::handle values) {
  return element_from_json(s, Json{{"pointwise", py_to_json(values)}});
}

py::list values_to_py(const SpeckerElem& e) {
  py::list out;
  for (const RingElem& v : e.values())
    out.append(value_to_json(e.parent().ring(), v).dump());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Boolean powers of commutative rings";
  m.attr("__version__") = "0.1.0";

  py::register_exception<Error>(m, "SpeckerError");

  py::class_<Ring>(m, "Ring")
      .def_static("integers", &Ring::integers)
      .def_static("rationals", &Ring::rationals)
      .def_static("modular",
                  [](long long n) { return Ring::modular(Int(n)); })
      .def_static("product", &Ring::product)
      .def("name", &Ring::name)
      .def("is_domain", &Ring::is_domain)
      .def("is_indecomposable", &Ring::is_indecomposable)
      .def("is_weak_baer", &Ring::is_weak_baer)
      .def("idempotent_count",
           [](const Ring& r) { return r.idempotents().size(); })
      .def("idempotents",
           [](const Ring& r) {
             py::list out;
             for (const RingElem& e : r.idempotents())
               out.append(value_to_json(r, e).dump());
             return out;
           })
      .def("__eq__", [](const Ring& a, const Ring& b) { return a == b; })
      .def("__repr__", [](const Ring& r) { return "<Ring " + r.name() + ">"; });

  py::class_<SpeckerElem>(m, "Element")
      .def("values", &values_to_py)
      .def("add", &SpeckerElem::add)
      .def("sub", &SpeckerElem::sub)
      .def("mul", &SpeckerElem::mul)
      .def("neg", &SpeckerElem::negate)
      .def("scale",
           [](const SpeckerElem& e, py::handle r) {
             return e.scale(value_from_json(e.parent().ring(), py_to_json(r)));
           })
      .def("is_zero", &SpeckerElem::is_zero)
      .def("is_idempotent", [](const SpeckerElem& e) { return is_idempotent(e); })
      .def("is_faithful", [](const SpeckerElem& e) { return is_faithful(e); })
      .def("normalized",
           [](const SpeckerElem& e) {
             py::list out;
             OrthogonalForm form = from_pointwise(e);
             for (const OrthPart& p : form.parts())
               out.append(py::make_tuple(
                   value_to_json(e.parent().ring(), p.coeff).dump(),
                   p.idem.atom_list()));
             return out;
           })
      .def("__eq__",
           [](const SpeckerElem& a, const SpeckerElem& b) { return a == b; })
      .def("__repr__", [](const SpeckerElem& e) {
        return "<Element " + element_to_json(e).dump() + ">";
      });

  py::class_<SpeckerAlgebra>(m, "Algebra")
      .def(py::init([](const Ring& r, int atoms) {
             return SpeckerAlgebra(r, BoolAlgebra(atoms));
           }),
           py::arg("ring"), py::arg("atoms"))
      .def("ring", &SpeckerAlgebra::ring)
      .def("atoms",
           [](const SpeckerAlgebra& s) { return s.algebra().atoms(); })
      .def("zero", &SpeckerAlgebra::zero)
      .def("one", &SpeckerAlgebra::one)
      .def("element", &elem_from_py, py::arg("values"))
      .def("constant",
           [](const SpeckerAlgebra& s, py::handle v) {
             return s.constant(value_from_json(s.ring(), py_to_json(v)));
           })
      .def("idempotent_atoms",
           [](const SpeckerAlgebra& s) {
             return idempotent_algebra(s).algebra.atoms();
           })
      .def("annihilator",
           [](const SpeckerAlgebra& s, const SpeckerElem& e) {
             (void)s;
             return annihilator(e);
           })
      .def("min_spectrum_atoms",
           [](const SpeckerAlgebra& s) {
             std::vector<int> out;
             for (const MinimalPrime& p : min_spectrum(s))
               out.push_back(p.atom());
             return out;
           })
      .def("baer_flags",
           [](const SpeckerAlgebra& s) {
             BaerReport r = baer_report(s);
             return py::make_tuple(r.weak_baer, r.id_complete, r.baer);
           })
      .def("join",
           [](const SpeckerAlgebra& s, const SpeckerElem& f,
              const SpeckerElem& g) { return OrderedContext(s).join(f, g); })
      .def("meet",
           [](const SpeckerAlgebra& s, const SpeckerElem& f,
              const SpeckerElem& g) { return OrderedContext(s).meet(f, g); })
      .def("abs",
           [](const SpeckerAlgebra& s, const SpeckerElem& f) {
             return OrderedContext(s).abs(f);
           })
      .def("leq",
           [](const SpeckerAlgebra& s, const SpeckerElem& f,
              const SpeckerElem& g) { return OrderedContext(s).leq(f, g); })
      .def("__repr__", [](const SpeckerAlgebra& s) {
        return "<Algebra " + s.ring().name() + "[" +
               std::to_string(s.algebra().atoms()) + " atoms]>";
      });

  m.def("equivalence_holds",
        [](const Ring& r, const std::vector<int>& sizes) {
          EquivalenceReport rep = equivalence_report(r, sizes);
          return py::make_tuple(rep.equivalence, rep.ring_indecomposable,
                                rep.consistent);
        },
        py::arg("ring"), py::arg("sizes"));

  m.def("run_request", [](const std::string& text) {
    return render_response(run_request_text(text).response);
  });
}
