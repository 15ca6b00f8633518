#include "zetakit/report.hpp"

namespace zetakit::report {

Json to_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json to_json(const zeta::EvalResult& r) {
    return Json{{"value", to_json(r.value)},
                {"terms_used", r.terms_used},
                {"est_error", r.est_error},
                {"regime", std::string(zeta::to_string(r.regime))}};
}

Json to_json(const zeta::ZeroRecord& r) {
    return Json{{"index", r.index}, {"t", r.t}, {"residual", r.residual}};
}

Json to_json(const arith::BetaValue& b) {
    return Json{{"n", b.n},
                {"value", b.value},
                {"classification", std::string(arith::to_string(b.classification))}};
}

Json to_json(const identities::LinearCoeffs& c) {
    return Json{{"sigma", c.sigma}, {"t", c.t},           {"p", c.p},
                {"q", c.q},         {"r", c.r},           {"s_coef", c.s_coef},
                {"det", c.det}};
}

Json to_json(const identities::SystemResiduals& r) {
    return Json{{"residual1", r.residual1},
                {"residual2", r.residual2},
                {"inverse_norm", r.inverse_norm},
                {"solution_bound", r.solution_bound}};
}

Json to_json(const identities::SwapReport& r) {
    return Json{{"sigma", r.sigma},
                {"t", r.t},
                {"truncation", r.truncation},
                {"lhs", r.lhs},
                {"rhs", r.rhs},
                {"gap", r.gap},
                {"matched_rhs", r.matched_rhs},
                {"matched_gap", r.matched_gap}};
}

Json to_json(const identities::ProbeReport& r) {
    Json phases = Json::array();
    for (const auto& p : r.residual_33) phases.push_back({{"phi", p.phi}, {"residual", p.residual}});
    auto samples = [](const std::vector<identities::ScaledSample>& list) {
        Json out = Json::array();
        for (const auto& s : list) out.push_back({{"m", s.m}, {"value", s.value}});
        return out;
    };
    Json j{{"sigma", r.sigma},
           {"t", r.t},
           {"n_terms", r.n_terms},
           {"residual_31", r.residual_31},
           {"residual_32", r.residual_32},
           {"residual_33", phases},
           {"f1_samples", samples(r.f1_samples)},
           {"f2_samples", samples(r.f2_samples)},
           {"A", nullptr},
           {"B", nullptr},
           {"zeta2s", nullptr},
           {"coeffs", nullptr},
           {"system_residuals", nullptr}};
    if (r.A) j["A"] = *r.A;
    if (r.B) j["B"] = *r.B;
    if (r.zeta2s) j["zeta2s"] = to_json(*r.zeta2s);
    if (r.coeffs) j["coeffs"] = to_json(*r.coeffs);
    if (r.system_residuals) j["system_residuals"] = to_json(*r.system_residuals);
    j["notes"] = r.notes;
    return j;
}

}  // namespace zetakit::report
