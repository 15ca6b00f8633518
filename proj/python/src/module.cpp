#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zetakit/arith.hpp"
#include "zetakit/errors.hpp"
#include "zetakit/identities.hpp"
#include "zetakit/special.hpp"
#include "zetakit/verify.hpp"
#include "zetakit/zero_cache.hpp"
#include "zetakit/zeta.hpp"

namespace py = pybind11;
namespace zk = zetakit;

PYBIND11_MODULE(_zetakit, m) {
    m.doc() = "Bindings for the zetakit C++ core";

    auto error = py::register_exception<zk::Error>(m, "Error", PyExc_RuntimeError);
    auto domain = py::register_exception<zk::DomainError>(m, "DomainError", error.ptr());
    py::register_exception<zk::OverflowError>(m, "OverflowError", domain.ptr());
    py::register_exception<zk::RangeError>(m, "RangeError", error.ptr());
    py::register_exception<zk::RegimeError>(m, "RegimeError", error.ptr());
    py::register_exception<zk::UndefinedPointError>(m, "UndefinedPointError", error.ptr());
    py::register_exception<zk::PoleError>(m, "PoleError", error.ptr());
    py::register_exception<zk::ConditioningError>(m, "ConditioningError", error.ptr());
    py::register_exception<zk::IoError>(m, "IoError", error.ptr());

    // arith
    py::enum_<zk::arith::BetaClass>(m, "BetaClass")
        .value("square", zk::arith::BetaClass::square)
        .value("twice_square", zk::arith::BetaClass::twice_square)
        .value("other", zk::arith::BetaClass::other);
    py::class_<zk::arith::BetaValue>(m, "BetaValue")
        .def_readonly("n", &zk::arith::BetaValue::n)
        .def_readonly("value", &zk::arith::BetaValue::value)
        .def_readonly("classification", &zk::arith::BetaValue::classification);

    m.def("factorize", [](zk::arith::Natural n) {
        std::vector<std::pair<zk::arith::Natural, unsigned>> out;
        for (const auto& pp : zk::arith::factorize(n).factors) out.emplace_back(pp.prime, pp.exponent);
        return out;
    }, py::arg("n"));
    m.def("big_omega", &zk::arith::big_omega, py::arg("n"));
    m.def("liouville", &zk::arith::liouville, py::arg("n"));
    m.def("divisors", &zk::arith::divisors, py::arg("n"));
    m.def("is_prime", &zk::arith::is_prime, py::arg("n"));
    m.def("beta_divisor_sum", py::overload_cast<zk::arith::Natural>(&zk::arith::beta_divisor_sum),
          py::arg("n"));
    m.def("beta_closed_form", &zk::arith::beta_closed_form, py::arg("n"));

    // special
    m.def("gamma", &zk::special::c_gamma, py::arg("z"));
    m.def("log_gamma", &zk::special::c_log_gamma, py::arg("z"));

    // zeta
    py::enum_<zk::zeta::Regime>(m, "Regime")
        .value("dirichlet", zk::zeta::Regime::dirichlet)
        .value("eta", zk::zeta::Regime::eta)
        .value("functional", zk::zeta::Regime::functional);
    py::class_<zk::zeta::EvalResult>(m, "EvalResult")
        .def_readonly("value", &zk::zeta::EvalResult::value)
        .def_readonly("terms_used", &zk::zeta::EvalResult::terms_used)
        .def_readonly("est_error", &zk::zeta::EvalResult::est_error)
        .def_readonly("regime", &zk::zeta::EvalResult::regime);
    py::class_<zk::zeta::ZeroRecord>(m, "ZeroRecord")
        .def_readonly("index", &zk::zeta::ZeroRecord::index)
        .def_readonly("t", &zk::zeta::ZeroRecord::t)
        .def_readonly("residual", &zk::zeta::ZeroRecord::residual);

    const double tol = zk::zeta::kDefaultTolerance;
    m.def("zeta", &zk::zeta::zeta, py::arg("s"), py::arg("tol") = tol);
    m.def("zeta_dirichlet", &zk::zeta::zeta_dirichlet, py::arg("s"), py::arg("tol") = tol);
    m.def("zeta_eta", &zk::zeta::zeta_eta, py::arg("s"), py::arg("tol") = tol);
    m.def("zeta_functional", &zk::zeta::zeta_functional, py::arg("s"), py::arg("tol") = tol);
    m.def("euler_product", &zk::zeta::euler_product, py::arg("s"), py::arg("prime_limit"));
    m.def("riemann_siegel_theta", &zk::zeta::riemann_siegel_theta, py::arg("t"));
    m.def("hardy_z", &zk::zeta::hardy_z, py::arg("t"), py::arg("tol") = tol);
    m.def("find_zeros", &zk::zeta::find_zeros, py::arg("t_min"), py::arg("t_max"),
          py::arg("step") = 0.1, py::arg("tol") = tol, py::arg("jobs") = 0u,
          py::call_guard<py::gil_scoped_release>());
    m.def("read_zero_cache", [](const std::string& p) { return zk::zeta::read_zero_cache(p); },
          py::arg("path"));

    // identities
    namespace id = zk::identities;
    py::class_<id::SeriesPartial>(m, "SeriesPartial")
        .def_readonly("value", &id::SeriesPartial::value)
        .def_readonly("n_terms", &id::SeriesPartial::n_terms)
        .def_readonly("accelerated", &id::SeriesPartial::accelerated)
        .def_readonly("est_error", &id::SeriesPartial::est_error);
    py::class_<id::LinearCoeffs>(m, "LinearCoeffs")
        .def_readonly("sigma", &id::LinearCoeffs::sigma)
        .def_readonly("t", &id::LinearCoeffs::t)
        .def_readonly("p", &id::LinearCoeffs::p)
        .def_readonly("q", &id::LinearCoeffs::q)
        .def_readonly("r", &id::LinearCoeffs::r)
        .def_readonly("s_coef", &id::LinearCoeffs::s_coef)
        .def_readonly("det", &id::LinearCoeffs::det);
    py::class_<id::SwapReport>(m, "SwapReport")
        .def_readonly("sigma", &id::SwapReport::sigma)
        .def_readonly("t", &id::SwapReport::t)
        .def_readonly("truncation", &id::SwapReport::truncation)
        .def_readonly("lhs", &id::SwapReport::lhs)
        .def_readonly("rhs", &id::SwapReport::rhs)
        .def_readonly("gap", &id::SwapReport::gap)
        .def_readonly("matched_rhs", &id::SwapReport::matched_rhs)
        .def_readonly("matched_gap", &id::SwapReport::matched_gap);
    py::class_<id::ABValues>(m, "ABValues")
        .def_readonly("A", &id::ABValues::A)
        .def_readonly("B", &id::ABValues::B)
        .def_readonly("n_terms", &id::ABValues::n_terms)
        .def_readonly("est_error", &id::ABValues::est_error);
    py::class_<id::ProbeReport>(m, "ProbeReport")
        .def_readonly("sigma", &id::ProbeReport::sigma)
        .def_readonly("t", &id::ProbeReport::t)
        .def_readonly("n_terms", &id::ProbeReport::n_terms)
        .def_readonly("residual_31", &id::ProbeReport::residual_31)
        .def_readonly("residual_32", &id::ProbeReport::residual_32)
        .def_property_readonly("residual_33", [](const id::ProbeReport& r) {
            std::vector<std::pair<double, double>> out;
            for (const auto& p : r.residual_33) out.emplace_back(p.phi, p.residual);
            return out;
        })
        .def_property_readonly("f1_samples", [](const id::ProbeReport& r) {
            std::vector<std::pair<zk::arith::Natural, double>> out;
            for (const auto& p : r.f1_samples) out.emplace_back(p.m, p.value);
            return out;
        })
        .def_property_readonly("f2_samples", [](const id::ProbeReport& r) {
            std::vector<std::pair<zk::arith::Natural, double>> out;
            for (const auto& p : r.f2_samples) out.emplace_back(p.m, p.value);
            return out;
        })
        .def_readonly("A", &id::ProbeReport::A)
        .def_readonly("B", &id::ProbeReport::B)
        .def_readonly("zeta2s", &id::ProbeReport::zeta2s)
        .def_readonly("coeffs", &id::ProbeReport::coeffs)
        .def_readonly("notes", &id::ProbeReport::notes);

    m.def("mrzf", &id::mrzf, py::arg("a"), py::arg("b"), py::arg("t"), py::arg("sigma"));
    m.def("eta_partial_cos", &id::eta_partial_cos, py::arg("sigma"), py::arg("t"),
          py::arg("n_terms"), py::arg("accelerate") = true);
    m.def("eta_partial_sin", &id::eta_partial_sin, py::arg("sigma"), py::arg("t"),
          py::arg("n_terms"), py::arg("accelerate") = true);
    m.def("f1", &id::f1, py::arg("m"), py::arg("sigma"), py::arg("t"), py::arg("n_terms"),
          py::arg("accelerate") = true);
    m.def("f2", &id::f2, py::arg("m"), py::arg("sigma"), py::arg("t"), py::arg("n_terms"),
          py::arg("accelerate") = true);
    m.def("swap_discrepancy", &id::swap_discrepancy, py::arg("t"), py::arg("sigma"),
          py::arg("truncations"), py::arg("jobs") = 0u, py::call_guard<py::gil_scoped_release>());
    m.def("ab_values", &id::ab_values, py::arg("sigma"), py::arg("t"), py::arg("tol") = 1e-10);
    m.def("linear_coeffs", &id::linear_coeffs, py::arg("sigma"), py::arg("t"));
    m.def("amgm_margin", &id::amgm_margin, py::arg("sigma"), py::arg("t"));
    m.def("probe_zero", &id::probe_zero, py::arg("sigma"), py::arg("t"), py::arg("n_terms") = 2000,
          py::arg("phi_samples") = id::default_phi_samples(),
          py::arg("m_samples") = id::default_m_samples(), py::arg("tol") = 1e-10);

    // verify
    m.def("verify", [](const std::string& suite, unsigned jobs) {
        const auto parsed = zk::verify::parse_suite(suite);
        if (!parsed) throw py::value_error("unknown suite: " + suite);
        std::vector<py::dict> out;
        py::gil_scoped_release release;
        const auto checks = zk::verify::run_suite(*parsed, {jobs});
        py::gil_scoped_acquire acquire;
        for (const auto& c : checks) {
            py::dict d;
            d["suite"] = c.suite;
            d["name"] = c.name;
            d["passed"] = c.passed;
            d["measured"] = c.measured;
            d["threshold"] = c.threshold;
            d["detail"] = c.detail;
            out.push_back(d);
        }
        return out;
    }, py::arg("suite"), py::arg("jobs") = 0u);
}
