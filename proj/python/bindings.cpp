#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "catsum/engine.hpp"
#include "catsum/expr.hpp"
#include "catsum/meander.hpp"
#include "catsum/series.hpp"
#include "catsum/stars.hpp"
#include "catsum/table.hpp"

namespace py = pybind11;
using namespace catsum;

namespace {

py::object fraction(const Rational& q) {
    static py::object Fraction = py::module_::import("fractions").attr("Fraction");
    return Fraction(py::int_(py::str(q.get_num().get_str())), py::int_(py::str(q.get_den().get_str())));
}

py::dict pi_dict(const PiPoly& p) {
    py::dict d;
    for (auto& [k, c] : p.terms()) d[py::int_(k)] = fraction(c);
    return d;
}

py::list series_list(const TruncatedSeries& s) {
    py::list out;
    for (auto& c : s.coeffs()) out.append(fraction(c));
    return out;
}

DecoratedTree decorated_from(const std::string& json_text) { return parse_decorated_text(json_text); }

}  // namespace

PYBIND11_MODULE(_catsum, m) {
    m.doc() = "Exact Catalan sums over trees";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded");

    py::class_<PiPoly>(m, "PiPoly")
        .def_property_readonly("coeffs", &pi_dict, "{d: coefficient of pi^-d}")
        .def("__float__", &PiPoly::to_double)
        .def("__str__", &PiPoly::pretty)
        .def("__repr__", [](const PiPoly& p) { return "PiPoly(" + p.pretty() + ")"; })
        .def("__eq__", [](const PiPoly& a, const PiPoly& b) { return a == b; })
        .def("canonical", &PiPoly::canonical)
        .def("decimal", &PiPoly::decimal, py::arg("digits") = 12);

    py::class_<AlgebraElt>(m, "AlgebraElt")
        .def("__str__", [](const AlgebraElt& a) { return a.str(); })
        .def("__repr__", [](const AlgebraElt& a) { return "AlgebraElt(" + a.str() + ")"; })
        .def("__eq__", [](const AlgebraElt& a, const AlgebraElt& b) { return a == b; })
        .def("str", &AlgebraElt::str, py::arg("sqrt_t") = false)
        .def("degree", &AlgebraElt::degree)
        .def("has_s", &AlgebraElt::has_s)
        .def("value", &eval_quarter, "Evaluate at t = 1/4")
        .def("series", [](const AlgebraElt& a, int order) { return series_list(series_expand(a, order)); },
             py::arg("order"));

    py::class_<Engine>(m, "Engine")
        .def(py::init<>())
        .def("sum", [](Engine& e, const std::string& tree) { return e.reduce(parse_plain(tree)); }, py::arg("tree"))
        .def("sum_decorated", [](Engine& e, const std::string& js) { return e.reduce(decorated_from(js)); },
             py::arg("json"))
        .def_property_readonly("memo_size", &Engine::memo_size);

    m.def("parse_algebra", &parse_algebra, py::arg("text"), py::arg("sqrt_t") = false);
    m.def("parse_pipoly", &parse_pipoly, py::arg("text"));

    m.def(
        "oracle", [](const std::string& tree, int order) {
            return series_list(brute_force_edge(parse_plain(tree), order, oracle_budget_from_env()));
        },
        py::arg("tree"), py::arg("order"));
    m.def(
        "oracle_decorated", [](const std::string& js, int order) {
            return series_list(brute_force_decorated(decorated_from(js), order, oracle_budget_from_env()));
        },
        py::arg("json"), py::arg("order"));

    m.def("meander_probability", [](const std::string& text) { return probability(parse_meander(text)); },
          py::arg("text"));
    m.def("meander_count", [](int k) { return all_meanders(k).size(); }, py::arg("k"));

    m.def("star_eval", py::overload_cast<long>(&star_eval), py::arg("s"));
    m.def("star_3f2_partial", [](long s, long terms) { return fraction(star_3f2_partial(s, terms)); }, py::arg("s"),
          py::arg("terms"));

    m.def(
        "table", [](int max_vertices) {
            py::list out;
            for (auto& c : check_table(max_vertices)) out.append(py::str(c.to_json().dump()));
            return out;
        },
        py::arg("max_vertices") = 7, "JSON rows of the reference-table check");
}
