#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hankel_dual/catalog.hpp"
#include "hankel_dual/config.hpp"
#include "hankel_dual/errors.hpp"
#include "hankel_dual/hankel.hpp"
#include "hankel_dual/specfun.hpp"
#include "hankel_dual/verify.hpp"

namespace py = pybind11;
using namespace hdual;

namespace {

catalog::ParamPoint to_point(const catalog::IntegralEntry& e, const std::map<std::string, double>& values) {
    catalog::ParamPoint p;
    for (const auto& name : e.parameters) {
        auto it = values.find(name);
        if (it == values.end()) throw ParameterError("missing parameter '" + name + "' for " + e.id);
        p.set(name, it->second);
    }
    if (values.size() != e.parameters.size()) throw ParameterError("unknown parameter for " + e.id);
    return p;
}

py::dict row_dict(const verify::VerificationRow& r) {
    py::dict d;
    d["id"] = r.entry_id;
    d["group"] = r.group;
    d["point"] = r.point.to_string();
    d["lhs"] = r.lhs.value;
    d["abs_err"] = r.lhs.abs_err;
    d["rhs"] = r.rhs;
    d["rel_err"] = r.rel_err;
    d["tol"] = r.tol;
    d["status"] = verify::to_string(r.status);
    d["reason"] = r.reason;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Dual Bessel-integral catalog and verification harness";

    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<ParameterError>(m, "ParameterError", base.ptr());
    py::register_exception<UnknownIdError>(m, "UnknownIdError", base.ptr());
    py::register_exception<ConstraintError>(m, "ConstraintError", base.ptr());
    py::register_exception<UsageError>(m, "UsageError", base.ptr());

    m.attr("SCHEMA_VERSION") = verify::kSchemaVersion;

    m.def("bessel_j", [](double nu, double x) { return specfun::bessel_j(nu, x).value; });
    m.def("bessel_y", [](double nu, double x) { return specfun::bessel_y(nu, x).value; });
    m.def("bessel_i", [](double nu, double x) { return specfun::bessel_i(nu, x).value; });
    m.def("bessel_k", [](double nu, double x) { return specfun::bessel_k(nu, x).value; });
    m.def("struve_h", [](double nu, double x) { return specfun::struve_h(nu, x).value; });
    m.def("gamma", [](double x) { return specfun::gamma_fn(x).value; });
    m.def("bessel_zero", &specfun::bessel_zero, py::arg("nu"), py::arg("k"));
    m.def("heron_area", &catalog::heron_area);

    m.def("entry_ids", [] {
        std::vector<std::string> ids;
        for (const auto& e : catalog::all_entries()) ids.push_back(e.id);
        return ids;
    });
    m.def("seed_ids", [] {
        std::vector<std::string> ids;
        for (const auto& s : catalog::all_failures()) ids.push_back(s.id);
        return ids;
    });
    m.def("metadata_json", &catalog::metadata_json, py::arg("indent") = 2);

    m.def(
        "verify_entry",
        [](const std::string& id, const std::map<std::string, double>& point, std::optional<double> tol) {
            const auto& e = catalog::entry_by_id(id);
            py::gil_scoped_release release;
            auto row = verify::verify_entry(e, to_point(e, point), tol);
            py::gil_scoped_acquire acquire;
            return row_dict(row);
        },
        py::arg("id"), py::arg("point"), py::arg("tol") = py::none());

    m.def(
        "check_seed",
        [](const std::string& id) {
            const auto v = hankel::check_condition(catalog::failure_by_id(id).seed);
            py::dict d;
            d["admissible"] = v.admissible;
            d["zero_exponent"] = v.zero_exponent;
            d["inf_exponent"] = v.inf_exponent;
            d["failing_endpoint"] = v.failing_endpoint ? py::object(py::str(hankel::to_string(*v.failing_endpoint)))
                                                       : py::object(py::none());
            return d;
        },
        py::arg("id"));

    m.def(
        "run",
        [](const std::string& config_text, unsigned jobs) {
            auto fc = cli::parse_config(config_text);
            fc.run.jobs = fc.jobs.value_or(jobs);
            std::string out;
            {
                py::gil_scoped_release release;
                out = verify::to_json(verify::run_all(fc.run), false);
            }
            return out;
        },
        py::arg("config") = "", py::arg("jobs") = 1,
        "Run the harness with a configuration in the file grammar; returns the JSON report.");
}
