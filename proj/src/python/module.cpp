#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hyperjac/cantor.hpp"
#include "hyperjac/chordlaw.hpp"
#include "hyperjac/io.hpp"
#include "hyperjac/selftest.hpp"

namespace py = pybind11;
using namespace hyperjac;

namespace {

std::shared_ptr<HyperellipticCurve> curve_from_parts(const std::string& field_token, int genus,
                                                     const std::vector<std::string>& coeffs) {
    Field f = parse_field_token(field_token);
    std::vector<FieldElement> c;
    c.reserve(coeffs.size());
    for (const auto& t : coeffs) c.push_back(parse_field_element(f, t));
    return std::make_shared<HyperellipticCurve>(f, c, genus);
}

std::vector<std::string> poly_strings(const Polynomial& p) {
    std::vector<std::string> out;
    if (p.is_zero()) {
        out.push_back("0");
        return out;
    }
    for (int i = p.degree(); i >= 0; --i)
        out.push_back(p.coeff(static_cast<std::size_t>(i)).str());
    return out;
}

Integer integer_from_object(const py::object& n) {
    return Integer(py::str(n).cast<std::string>());
}

}  // namespace

PYBIND11_MODULE(_hyperjac, m) {
    m.doc() = "Exact divisor class arithmetic on odd-degree hyperelliptic curves";
    m.attr("__version__") = "0.1.0";

    py::register_exception<Error>(m, "Error");

    py::class_<HyperellipticCurve, std::shared_ptr<HyperellipticCurve>>(m, "Curve")
        .def(py::init(&curve_from_parts), py::arg("field"), py::arg("genus"), py::arg("coeffs"),
             "Curve y^2 = p(x) from a field token ('rational' or a prime), the genus, and\n"
             "the coefficients a0..a_{2g+1} as decimal strings, leading first.")
        .def_static("from_text",
                    [](const std::string& text) {
                        return std::const_pointer_cast<HyperellipticCurve>(parse_curve_text(text));
                    })
        .def_property_readonly("genus", &HyperellipticCurve::genus)
        .def_property_readonly("field",
                               [](const HyperellipticCurve& c) { return c.field().str(); })
        .def("divisor",
             [](std::shared_ptr<HyperellipticCurve> self, const std::string& text) {
                 return parse_divisor(self, text);
             },
             "Parse 'identity', 'points:(x,y),...' or 'mumford:[A...],[B...]'.")
        .def("identity",
             [](std::shared_ptr<HyperellipticCurve> self) {
                 return MumfordDivisor::identity(self);
             })
        .def("__str__", &HyperellipticCurve::str)
        .def("__repr__", &HyperellipticCurve::str)
        .def("__eq__", [](const HyperellipticCurve& a, const HyperellipticCurve& b) {
            return a == b;
        });

    py::class_<MumfordDivisor>(m, "Divisor")
        .def_property_readonly("weight", &MumfordDivisor::weight)
        .def_property_readonly("a",
                               [](const MumfordDivisor& d) { return poly_strings(d.a_poly()); })
        .def_property_readonly("b",
                               [](const MumfordDivisor& d) { return poly_strings(d.b_poly()); })
        .def("is_identity", &MumfordDivisor::is_identity)
        .def("negate", &MumfordDivisor::negate)
        .def("points",
             [](const MumfordDivisor& d) -> py::object {
                 auto pts = points_from_mumford(d);
                 if (!pts) return py::none();
                 py::list out;
                 for (const auto& p : pts->points())
                     out.append(py::make_tuple(p.x().str(), p.y().str()));
                 return out;
             },
             "Point multiset when A splits over the base field, else None.")
        .def("__eq__",
             [](const MumfordDivisor& a, const MumfordDivisor& b) { return a == b; })
        .def("__str__", [](const MumfordDivisor& d) { return format_divisor(d); })
        .def("__repr__", [](const MumfordDivisor& d) { return d.str(); });

    m.def("add",
          [](const MumfordDivisor& a, const MumfordDivisor& b) {
              AddOutcome out = add(a, b);
              return py::make_tuple(out.result, to_string(out.path));
          },
          "Add two divisors; returns (result, path).");
    m.def("cantor_add",
          [](const MumfordDivisor& a, const MumfordDivisor& b) { return cantor_add(a, b); },
          "Reference compose-and-reduce addition.");
    m.def("double", &double_divisor, "add(d, d) through the tangent contact data.");
    m.def("smul",
          [](const py::object& n, const MumfordDivisor& d) {
              return scalar_mul(integer_from_object(n), d);
          },
          "n-fold sum; n may be any python integer.");
    m.def("selftest_report",
          [](std::shared_ptr<HyperellipticCurve> curve, std::size_t trials, std::uint64_t seed) {
              SelftestReport rep = run_selftest(curve, trials, seed);
              return py::make_tuple(rep.all_passed(), format_report(rep, curve, trials, seed));
          },
          py::arg("curve"), py::arg("trials") = 200, py::arg("seed") = 1,
          "Run the randomized invariant suites; returns (passed, report_text).");
}
