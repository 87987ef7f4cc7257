#include "subtrop/condition.hpp"
#include "subtrop/decide.hpp"
#include "subtrop/error.hpp"
#include "subtrop/oracle.hpp"
#include "subtrop/parser.hpp"
#include "subtrop/serialize.hpp"
#include "subtrop/witness.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace subtrop;

namespace {

py::object to_py(const BigInt& x) { return py::int_(py::str(x.get_str())); }

py::object to_py(const BigRational& q) {
    return py::module_::import("fractions").attr("Fraction")(py::str(q.to_string()));
}

template <class T>
py::list to_py_list(const std::vector<T>& xs) {
    py::list out;
    for (const auto& x : xs) out.append(to_py(x));
    return out;
}

BigRational rational_from_py(const py::handle& obj) { return BigRational::parse(py::str(obj).cast<std::string>()); }

ExponentSolution exponents_from_py(const std::vector<py::object>& n) {
    ExponentSolution out;
    for (const auto& x : n) out.n.emplace_back(py::str(x).cast<std::string>(), 10);
    return out;
}

py::list signs_of(const SignedSystem& sys) {
    py::list rows;
    for (std::size_t i = 0; i < sys.num_rows(); ++i) {
        py::list row;
        for (std::size_t j = 0; j < sys.num_monomials(); ++j) row.append(sys.sign(i, j));
        rows.append(row);
    }
    return rows;
}

py::list exponents_of(const SignedSystem& sys) {
    py::list rows;
    for (std::size_t j = 0; j < sys.num_monomials(); ++j) {
        py::list row;
        for (Exponent x : sys.monomial(j)) row.append(x);
        rows.append(row);
    }
    return rows;
}

py::list coefficients_of(const SignedSystem& sys) {
    py::list rows;
    for (std::size_t i = 0; i < sys.num_rows(); ++i) {
        py::list row;
        for (std::size_t j = 0; j < sys.num_monomials(); ++j) {
            if (sys.is_parametric()) row.append(sys.parametric().names(i, j));
            else row.append(to_py(sys.concrete().values(i, j)));
        }
        rows.append(row);
    }
    return rows;
}

py::object from_json(const Json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

py::dict decide_py(const SignedSystem& sys, bool shrink) {
    const Decision d = decide(sys, {shrink});
    py::dict out;
    out["status"] = d.status == Status::Sat ? "sat" : "unsat";
    out["condition_satisfiable"] = d.condition_satisfiable;
    out["n"] = d.n ? py::object(to_py_list(d.n->n)) : py::object(py::none());
    out["zero_row"] = d.zero_row ? py::object(py::int_(*d.zero_row)) : py::object(py::none());
    return out;
}

py::dict witness_py(const SignedSystem& sys, const std::vector<py::object>& n) {
    const SymbolicWitness w = symbolic_t(sys, exponents_from_py(n));
    py::list terms;
    for (const auto& term : w.terms) terms.append(py::make_tuple(term.numerator, term.denominator));
    py::dict out;
    out["terms"] = terms;
    out["n"] = to_py_list(w.n.n);
    out["text"] = to_text(w);
    return out;
}

py::dict verify_py(const SignedSystem& sys, const std::vector<py::object>& n, const py::object& r,
                   std::optional<std::size_t> max_bits) {
    const ExponentSolution sol = exponents_from_py(n);
    const BigRational radius =
        r.is_none() ? evaluate_t(symbolic_t(sys, sol), sys.concrete()) : rational_from_py(r);
    const VerificationReport report = verify_witness(sys, sol, radius, {max_bits});
    py::dict out;
    out["t"] = to_py(report.t_value);
    out["r"] = to_py(report.r_value);
    out["point"] = to_py_list(report.point);
    out["values"] = to_py_list(report.values);
    out["ok"] = report.ok;
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Parametric positive solutions of signed polynomial systems";

    py::register_exception<Error>(m, "SubtropError", PyExc_ValueError);

    py::class_<SignedSystem>(m, "System")
        .def_static("parse", [](const std::string& text) { return parse_system(text); }, py::arg("text"))
        .def("to_text", [](const SignedSystem& s) { return print_system(s); })
        .def_property_readonly("signs", &signs_of)
        .def_property_readonly("exponents", &exponents_of)
        .def_property_readonly("coefficients", &coefficients_of)
        .def_property_readonly("var_names", &SignedSystem::var_names)
        .def_property_readonly("row_names", &SignedSystem::row_names)
        .def_property_readonly("is_parametric", &SignedSystem::is_parametric)
        .def("zero_rows", &SignedSystem::zero_rows)
        .def("row_supports",
             [](const SignedSystem& s, std::size_t i) {
                 const Supports sup = row_supports(s, i);
                 return py::make_tuple(sup.positive, sup.negative);
             })
        .def("instantiate",
             [](const SignedSystem& s, const py::dict& values) {
                 CoefficientBinding binding;
                 for (const auto& [key, value] : values)
                     binding.emplace(py::str(key).cast<std::string>(), rational_from_py(value));
                 return s.instantiate(binding);
             })
        .def("__eq__", [](const SignedSystem& a, const SignedSystem& b) { return a == b; })
        .def("__repr__", [](const SignedSystem& s) { return print_system(s); });

    m.def("parse_system", [](const std::string& text) { return parse_system(text); }, py::arg("text"));
    m.def("print_system", &print_system, py::arg("system"));
    m.def("build_cnf", [](const SignedSystem& s) { return from_json(to_json(build_cnf(s))); }, py::arg("system"));
    m.def("explain", [](const SignedSystem& s) { return to_debug_text(build_cnf(s)); }, py::arg("system"));
    m.def("decide", &decide_py, py::arg("system"), py::arg("shrink") = false);
    m.def("symbolic_t", &witness_py, py::arg("system"), py::arg("n"));
    m.def(
        "evaluate_t",
        [](const SignedSystem& s, const std::vector<py::object>& n) {
            return to_py(evaluate_t(symbolic_t(s, exponents_from_py(n)), s.concrete()));
        },
        py::arg("system"), py::arg("n"));
    m.def("uniform_bound", [](const SignedSystem& s) { return to_py(uniform_bound(s)); }, py::arg("system"));
    m.def(
        "evaluate_system_at",
        [](const SignedSystem& s, const std::vector<py::object>& point) {
            std::vector<BigRational> xs;
            for (const auto& x : point) xs.push_back(rational_from_py(x));
            return to_py_list(evaluate_system_at(s, xs));
        },
        py::arg("system"), py::arg("point"));
    m.def("verify_witness", &verify_py, py::arg("system"), py::arg("n"), py::arg("r") = py::none(),
          py::arg("max_bits") = py::none());
    m.def(
        "exhaustive_decide",
        [](const SignedSystem& s) {
            return oracle::exhaustive_decide(build_cnf(s)) == oracle::Verdict::Sat ? "sat" : "unsat";
        },
        py::arg("system"));
    m.def(
        "grid_search",
        [](const SignedSystem& s, std::int64_t radius) -> py::object {
            const auto found = oracle::grid_search(build_cnf(s), {radius});
            if (!found) return py::none();
            return to_py_list(found->n);
        },
        py::arg("system"), py::arg("radius"));

#ifdef VERSION_INFO
    m.attr("__version__") = VERSION_INFO;
#else
    m.attr("__version__") = "dev";
#endif
}
