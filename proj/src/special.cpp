#include "zetakit/special.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "zetakit/errors.hpp"

namespace zetakit::special {

namespace {

// Lanczos coefficients for g = 7, n = 9 (Godfrey's set, as published in
// Numerical Recipes and most open-source gamma implementations).
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

constexpr double kPoleTolerance = 1e-12;

// Lanczos series A(z) for the shifted argument z - 1.
Complex lanczos_series(Complex shifted) {
    Complex x = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i) {
        x += kLanczos[i] / (shifted + static_cast<double>(i));
    }
    return x;
}

void check_pole(Complex z) {
    const double nearest = std::round(z.real());
    if (nearest <= 0.0 && std::abs(z - Complex(nearest, 0.0)) < kPoleTolerance) {
        const auto k = static_cast<std::int64_t>(nearest);
        throw PoleError("gamma: pole at non-positive integer " + std::to_string(k), k);
    }
}

}  // namespace

Complex c_exp(Complex z) {
    if (z.real() > 709.0) throw RangeError("c_exp: real part too large");
    return std::exp(z);
}

Complex c_log(Complex z) {
    if (z == Complex(0.0, 0.0)) throw DomainError("c_log: logarithm of zero");
    return std::log(z);
}

Complex c_sin(Complex z) {
    const double x = z.real();
    const double y = z.imag();
    if (std::abs(y) > 700.0) throw RangeError("c_sin: |im(z)| > 700 overflows sinh/cosh");
    return {std::sin(x) * std::cosh(y), std::cos(x) * std::sinh(y)};
}

Complex c_cos(Complex z) {
    const double x = z.real();
    const double y = z.imag();
    if (std::abs(y) > 700.0) throw RangeError("c_cos: |im(z)| > 700 overflows sinh/cosh");
    return {std::cos(x) * std::cosh(y), -std::sin(x) * std::sinh(y)};
}

Complex c_expm1(Complex w) {
    const double a = w.real();
    const double b = w.imag();
    const double half_sin = std::sin(0.5 * b);
    // exp(a)(cos b + j sin b) - 1 = expm1(a) cos b + (cos b - 1) + j exp(a) sin b
    const double re = std::expm1(a) * std::cos(b) - 2.0 * half_sin * half_sin;
    const double im = std::exp(a) * std::sin(b);
    return {re, im};
}

Complex c_gamma(Complex z) {
    check_pole(z);
    if (z.real() < 0.5) {
        // Reflection: Gamma(z) Gamma(1 - z) = pi / sin(pi z)
        const Complex s = c_sin(std::numbers::pi * z);
        return std::numbers::pi / (s * c_gamma(1.0 - z));
    }
    const Complex shifted = z - 1.0;
    const Complex t = shifted + kLanczosG + 0.5;
    const Complex log_value = 0.5 * std::log(2.0 * std::numbers::pi) +
                              (shifted + 0.5) * std::log(t) - t +
                              std::log(lanczos_series(shifted));
    return c_exp(log_value);
}

Complex c_log_gamma(Complex z) {
    if (!(z.real() > 0.0)) {
        throw DomainError("c_log_gamma: requires re(z) > 0; reflect first");
    }
    const Complex shifted = z - 1.0;
    const Complex t = shifted + kLanczosG + 0.5;
    // Every piece is analytic in the right half-plane, so the sum tracks the
    // continuous branch rather than log(gamma(z)).
    return 0.5 * std::log(2.0 * std::numbers::pi) + (shifted + 0.5) * std::log(t) - t +
           std::log(lanczos_series(shifted));
}

}  // namespace zetakit::special
