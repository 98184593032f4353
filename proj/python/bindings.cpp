#include "spherex/classify.hpp"
#include "spherex/errors.hpp"
#include "spherex/iso_checks.hpp"
#include "spherex/paper_checks.hpp"
#include "spherex/tables.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/complex.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace spherex;

namespace {

// tables and reports cross the boundary as JSON text; the package decodes them
std::string dump(const nlohmann::json& j) { return j.dump(); }

GroupPtr group(const std::string& spec) { return MatGroup::build(FamilySpec::parse(spec)); }

}  // namespace

PYBIND11_MODULE(_spherex, m) {
    m.doc() = "spherex core";

    auto base = py::register_exception<Error>(m, "SpherexError");
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<SpecError>(m, "SpecError", base.ptr());
    py::register_exception<ResourceError>(m, "ResourceError", base.ptr());
    py::register_exception<SpinError>(m, "SpinError", base.ptr());
    py::register_exception<IrrationalXi>(m, "IrrationalXi", base.ptr());
    py::register_exception<DivisionByZero>(m, "DivisionByZero", base.ptr());

    py::class_<Cyc>(m, "Cyc")
        .def(py::init([](long long n) { return Cyc(n); }))
        .def_static("zeta", &Cyc::zeta, py::arg("n"), py::arg("e") = 1)
        .def_static("parse", &Cyc::parse)
        .def_property_readonly("conductor", &Cyc::conductor)
        .def("conj", &Cyc::conj)
        .def("inverse", &Cyc::inverse)
        .def("to_complex", &Cyc::to_complex)
        .def("rational", [](const Cyc& c) -> std::optional<std::string> {
            auto q = c.rational_value();
            if (!q) return std::nullopt;
            return q->str();
        })
        .def("__add__", [](const Cyc& a, const Cyc& b) { return a + b; })
        .def("__sub__", [](const Cyc& a, const Cyc& b) { return a - b; })
        .def("__mul__", [](const Cyc& a, const Cyc& b) { return a * b; })
        .def("__truediv__", [](const Cyc& a, const Cyc& b) { return a / b; })
        .def("__neg__", [](const Cyc& a) { return -a; })
        .def("__eq__", [](const Cyc& a, const Cyc& b) { return a == b; })
        .def("__hash__", &Cyc::hash)
        .def("__str__", &Cyc::str)
        .def("__repr__", [](const Cyc& c) { return "Cyc('" + c.str() + "')"; });

    m.def("group_info", [](const std::string& spec) { return dump(group(spec)->descriptor()); });
    m.def("character_table", [](const std::string& spec) { return dump(character_table(*irrep_catalog(group(spec))).to_json()); });
    m.def(
        "invariant_table",
        [](const std::string& spec, std::optional<std::string> spin) { return dump(invariant_table(InvariantContext(group(spec), spin)).to_json()); },
        py::arg("spec"), py::arg("spin_character") = py::none());
    m.def(
        "classify",
        [](const std::string& spec, std::optional<std::string> spin) { return dump(classification_report(InvariantContext(group(spec), spin)).to_json()); },
        py::arg("spec"), py::arg("spin_character") = py::none());
    m.def(
        "conjecture_scan",
        [](long long k, long long r, unsigned threads) {
            py::gil_scoped_release nogil;
            return dump(conjecture_scan(k, r, threads).to_json());
        },
        py::arg("k_max"), py::arg("r_max"), py::arg("threads") = 0);
    m.def("iso_checks", [] {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& c : all_iso_checks()) a.push_back({{"check", c.name}, {"ok", c.result.ok()}, {"detail", c.result.detail}});
        return dump(a);
    });
    m.def("verify_paper", [] {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& c : verify_paper()) a.push_back({{"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        return dump(a);
    });
    m.def("xi_closed_form_bd", [](long long q, long long t) { return xi_closed_form_bd(q, t).str(); });
    m.def("xi_closed_form_d", [](long long k, long long r, long long t, long long s) { return xi_closed_form_d(k, r, t, s).str(); });
    m.def("telescoping_identity_check", &telescoping_identity_check);
}
