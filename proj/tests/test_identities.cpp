#include "doctest.h"

#include <cmath>
#include <numbers>

#include "zetakit/arith.hpp"
#include "zetakit/errors.hpp"
#include "zetakit/identities.hpp"
#include "zetakit/zeta.hpp"

using namespace zetakit;
using namespace zetakit::identities;
using std::numbers::pi;

namespace {

constexpr double kFirstZero = 14.134725141734693;

double term(double k, double t, double sigma, bool sine) {
    const double angle = t * std::log(k);
    return (sine ? std::sin(angle) : std::cos(angle)) / std::pow(k, sigma);
}

// Plain summation of (-1)^(n+1) trig(t ln n) / n^sigma, largest terms last.
double raw_alternating(double sigma, double t, long n, bool sine) {
    double sum = 0.0;
    for (long k = n; k >= 1; --k) sum += (k % 2 ? 1.0 : -1.0) * term(double(k), t, sigma, sine);
    return sum;
}

}  // namespace

TEST_CASE("mrzf: direct formula") {
    CHECK(mrzf(1, 1, 3.7, 0.6) == 0.0);
    const double expected = -std::sin(std::log(2.0)) / std::pow(2.0, 0.75);
    CHECK(std::abs(mrzf(2, 1, 1.0, 0.75) - expected) < 1e-15);
    CHECK(std::abs(mrzf(1, 2, 1.0, 0.75) - expected) < 1e-15);
    CHECK(std::abs(expected + 0.379928648) < 1e-9);
    // Omega(6) = 2 keeps the sign; b = 3 is odd.
    CHECK(std::abs(mrzf(6, 3, 2.0, 1.2) - std::sin(2.0 * std::log(18.0)) / std::pow(18.0, 1.2)) <
          1e-15);
    CHECK_THROWS_AS(mrzf(0, 1, 1.0, 1.0), DomainError);
}

TEST_CASE("eta partial sums") {
    CHECK(std::abs(eta_partial_cos(2.0, 0.0, 2000, true).value - pi * pi / 12) < 1e-14);
    CHECK(eta_partial_sin(2.0, 0.0, 2000, true).value == 0.0);
    CHECK(eta_partial_sin(0.7, 0.0, 500, false).value == 0.0);

    const double raw = eta_partial_cos(2.0, 1.0, 100'000, false).value;
    const double fast = eta_partial_cos(2.0, 1.0, 2000, true).value;
    CHECK(std::abs(raw - fast) < 1e-6);
    CHECK(std::abs(raw - raw_alternating(2.0, 1.0, 100'000, false)) < 1e-13);

    // Alternating-series bound: the raw error is below the first omitted term.
    const auto p = eta_partial_sin(0.8, 5.0, 1000, false);
    CHECK(p.est_error == doctest::Approx(std::pow(1001.0, -0.8)));
    CHECK(std::abs(p.value - eta_partial_sin(0.8, 5.0, 2000, true).value) < p.est_error);

    CHECK(std::abs(eta_partial_cos(0.5, kFirstZero, 2000, true).value) < 1e-4);
    CHECK(std::abs(eta_partial_sin(0.5, kFirstZero, 2000, true).value) < 1e-4);
    CHECK_THROWS_AS(eta_partial_cos(2.0, 1.0, 5000, true), DomainError);
}

TEST_CASE("accelerated parts reproduce the eta function") {
    // eta(s) = sum (-1)^(n+1) n^-sigma (cos(t ln n) - j sin(t ln n)).
    for (double sigma : {0.3, 0.5, 0.9}) {
        for (double t : {2.0, 9.5, 31.0}) {
            const Complex s(sigma, t);
            const Complex eta = zeta::zeta_eta(s, 1e-12).value * (1.0 - std::pow(2.0, 1.0 - s));
            const double c = eta_partial_cos(sigma, t, 2000, true).value;
            const double si = eta_partial_sin(sigma, t, 2000, true).value;
            CHECK(std::abs(Complex(c, -si) - eta) < 1e-10);
        }
    }
}

TEST_CASE("rotation and scaling reductions") {
    const double sigma = 0.65, t = 7.3;
    const auto sin_part = eta_partial_sin(sigma, t, 1500, true).value;
    const auto cos_part = eta_partial_cos(sigma, t, 1500, true).value;
    CHECK(std::abs(rotated_partial(sigma, t, 0.0, 1500, true).value - sin_part) < 1e-15);
    CHECK(std::abs(rotated_partial(sigma, t, pi / 2, 1500, true).value - cos_part) < 1e-12);
    CHECK(std::abs(f1(1, sigma, t, 1500).value - sin_part) < 1e-15);
    CHECK(std::abs(f2(1, sigma, t, 1500).value - cos_part) < 1e-15);

    // f1(m) = sum (-1)^(n+1) sin(t ln(mn)) / (mn)^sigma, summed longhand.
    double longhand = 0.0;
    for (long n = 400; n >= 1; --n) longhand += (n % 2 ? 1.0 : -1.0) * term(3.0 * n, t, sigma, true);
    CHECK(std::abs(f1(3, sigma, t, 400, false).value - longhand) < 1e-13);
    for (Natural m : default_m_samples()) {
        CHECK(std::abs(f1(m, 0.5, kFirstZero, 2000).value) < 1e-4);
        CHECK(std::abs(f2(m, 0.5, kFirstZero, 2000).value) < 1e-4);
    }
}

TEST_CASE("default samples") {
    CHECK(default_phi_samples() == std::vector<double>{0.0, pi / 6, pi / 4, pi / 3, pi / 2});
    CHECK(default_m_samples() == std::vector<Natural>{1, 2, 3, 4, 5, 6, 8, 9, 10, 12});
}

TEST_CASE("double sums") {
    CHECK(double_sum_lhs(1, 1, 2.0, 1.5) == 0.0);
    CHECK(double_sum_rhs(1, 2.0, 1.5) == 0.0);
    // Single row m = 1 is the raw sine series.
    CHECK(std::abs(double_sum_lhs(1, 300, 2.0, 1.5) - raw_alternating(1.5, 2.0, 300, true)) <
          1e-14);
    CHECK(double_sum_lhs(40, 70, 3.3, 0.7) == double_sum_lhs_by_columns(40, 70, 3.3, 0.7));
    for (Natural n = 1; n <= 300; ++n) {
        const double expected = arith::beta_closed_form(n).value * term(double(n), 1.7, 0.9, true);
        REQUIRE(std::abs(divisor_diagonal_sum(n, 1.7, 0.9) - expected) < 1e-14);
    }
}

TEST_CASE("swap discrepancy") {
    const auto zero_t = swap_discrepancy(0.0, 2.0, {50});
    CHECK(zero_t[0].lhs == 0.0);
    CHECK(zero_t[0].rhs == 0.0);
    CHECK(zero_t[0].gap == 0.0);

    const auto reports = swap_discrepancy(1.0, 2.0, {50, 100, 200, 400});
    REQUIRE(reports.size() == 4);
    for (const auto& r : reports) CHECK(r.matched_gap == 0.0);
    CHECK(reports.back().gap < 1e-4);

    const auto serial = swap_discrepancy(14.13, 0.6, {50, 100}, 1);
    const auto threaded = swap_discrepancy(14.13, 0.6, {50, 100}, 3);
    CHECK(serial[1].gap == threaded[1].gap);
    CHECK_THROWS_AS(swap_discrepancy(1.0, 2.0, {100, 50}), DomainError);
}

TEST_CASE("beta series") {
    const auto sine = beta_series(0.8, 0.0, 500, TrigKind::sine);
    CHECK(sine.total == 0.0);
    const auto cosine = beta_series(1.0, 0.0, 1000, TrigKind::cosine);
    double partial = 0.0;
    for (long n = 1000; n >= 1; --n) partial += 1.0 / (double(n) * n);
    CHECK(std::abs(cosine.square_part - partial) < 1e-14);
    CHECK(std::abs(cosine.twice_square_part - partial) < 1e-14);
    CHECK(std::abs(cosine.total) < 1e-14);
    CHECK_THROWS_AS(beta_series(0.5, 1.0, 10, TrigKind::sine), RegimeError);

    // Weighted sum over k <= X: squares minus twice twice-squares.
    const double sigma = 0.7, t = 4.0;
    const Natural X = 5000;
    double oracle = 0.0;
    for (Natural n = 1; n * n <= X; ++n) oracle += term(double(n * n), t, sigma, false);
    for (Natural n = 1; 2 * n * n <= X; ++n) oracle -= 2.0 * term(double(2 * n * n), t, sigma, false);
    CHECK(std::abs(beta_weighted_sum(sigma, t, X, TrigKind::cosine) - oracle) < 1e-13);
}

TEST_CASE("A/B values") {
    // t = 0: A = 0 and B = zeta(2 sigma).
    const auto ab = ab_values(0.75, 0.0, 1e-12);
    CHECK(ab.A == 0.0);
    CHECK(std::abs(ab.B - zeta::zeta(1.5, 1e-12).value.real()) < 1e-10);
    for (double sigma : {0.6, 0.75, 0.9}) {
        for (double t : {1.0, 14.1347, 25.0}) {
            const auto v = ab_values(sigma, t, 1e-12);
            const Complex z = zeta::zeta(Complex(2 * sigma, 2 * t), 1e-12).value;
            CHECK(std::abs(Complex(v.B, -v.A) - z) < 1e-9);
        }
    }
    CHECK_THROWS_AS(ab_values(0.5, 3.0, 1e-10), RegimeError);
}

TEST_CASE("linear coefficients and the margin") {
    const auto k0 = linear_coeffs(0.7, 0.0);
    CHECK(k0.q == 0.0);
    CHECK(k0.r == 0.0);
    CHECK(k0.p == doctest::Approx(1.0 - std::pow(2.0, 0.3)).epsilon(1e-15));
    CHECK(k0.s_coef == k0.p);

    const auto k = linear_coeffs(0.75, 14.134725);
    CHECK(std::abs(k.p - (1.0 - std::pow(2.0, 0.25) * std::cos(14.134725 * std::log(2.0)))) < 1e-15);
    CHECK(k.det > 0.0);
    CHECK(k.r == -k.q);
    CHECK(std::abs(k.det - amgm_margin(0.75, 14.134725)) < 1e-14);

    CHECK(std::abs(amgm_margin(0.75, 0.0) - 0.0357993) < 1e-7);
    CHECK(std::abs(amgm_margin(0.75, pi / (2 * std::log(2.0))) - (1.0 + std::sqrt(2.0))) < 1e-14);
    CHECK_THROWS_AS(linear_coeffs(1.0, 1.0), DomainError);
    CHECK_THROWS_AS(amgm_margin(0.5, 1.0), DomainError);
}

TEST_CASE("2x2 residuals") {
    const auto k = linear_coeffs(0.8, 3.0);
    const auto zero = solve_2x2(k, 0.0, 0.0);
    CHECK(zero.residual1 == 0.0);
    CHECK(zero.residual2 == 0.0);

    LinearCoeffs identity;
    identity.p = 1.0;
    identity.s_coef = 1.0;
    const auto r = solve_2x2(identity, 3.0, -2.0);
    CHECK(r.residual1 == 3.0);
    CHECK(r.residual2 == 2.0);
    CHECK(r.inverse_norm == doctest::Approx(1.0));

    LinearCoeffs singular;
    singular.p = 1.0;
    singular.q = 1.0;
    singular.r = 1.0;
    singular.s_coef = 1.0;
    CHECK(std::isinf(solve_2x2(singular, 1.0, 1.0).inverse_norm));
}

TEST_CASE("determinant scan") {
    const auto scan = scan_determinant(0.51, 0.99, 0.02, 0.0, 20.0, 0.05, 2);
    CHECK(scan.structure_exact);
    CHECK(scan.max_identity_gap < 1e-12);
    CHECK(scan.min_det > 0.0);
    CHECK(scan.points == 25 * 401);
}

TEST_CASE("probe at the first zero") {
    const auto r = probe_zero(0.5, kFirstZero, 2000, default_phi_samples(), default_m_samples());
    CHECK(std::abs(r.residual_31) < 1e-4);
    CHECK(std::abs(r.residual_32) < 1e-4);
    CHECK(r.residual_33.size() == 5);
    CHECK(r.f1_samples.size() == 10);
    CHECK_FALSE(r.A.has_value());
    CHECK_FALSE(r.notes.empty());
    REQUIRE(r.zeta2s.has_value());
}

TEST_CASE("probe off the critical line") {
    const auto r = probe_zero(0.75, kFirstZero, 2000, default_phi_samples(), default_m_samples());
    CHECK(std::abs(r.residual_31) + std::abs(r.residual_32) > 0.01);
    REQUIRE(r.coeffs.has_value());
    CHECK(r.coeffs->det > 0.0);
    REQUIRE(r.zeta2s.has_value());
    CHECK(std::abs(*r.zeta2s) > 1e-3);
    REQUIRE(r.A.has_value());
    CHECK(std::abs(Complex(*r.B, -*r.A) - *r.zeta2s) < 1e-8);
}

TEST_CASE("probe negative control and preconditions") {
    const auto r = probe_zero(0.5, 10.0, 2000, default_phi_samples(), default_m_samples());
    CHECK(std::abs(r.residual_31) > 0.01);
    CHECK_THROWS_AS(probe_zero(1.5, 10.0, 2000, {}, {}), DomainError);
    CHECK_THROWS_AS(probe_zero(0.5, 0.0, 2000, {}, {}), DomainError);
}
