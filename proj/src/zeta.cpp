#include "zetakit/zeta.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "zetakit/acceleration.hpp"
#include "zetakit/arith.hpp"
#include "zetakit/errors.hpp"
#include "zetakit/parallel.hpp"

namespace zetakit::zeta {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kLn2 = std::numbers::ln2;
constexpr double kPi = std::numbers::pi;

// B_{2k} / (2k)! for k = 1..15.
const std::array<double, 15>& bernoulli_coefficients() {
    static const std::array<double, 15> table = [] {
        constexpr std::array<std::pair<double, double>, 15> b = {{
            {1.0, 6.0},
            {-1.0, 30.0},
            {1.0, 42.0},
            {-1.0, 30.0},
            {5.0, 66.0},
            {-691.0, 2730.0},
            {7.0, 6.0},
            {-3617.0, 510.0},
            {43867.0, 798.0},
            {-174611.0, 330.0},
            {854513.0, 138.0},
            {-236364091.0, 2730.0},
            {8553103.0, 6.0},
            {-23749461029.0, 870.0},
            {8615841276005.0, 14322.0},
        }};
        std::array<double, 15> out{};
        double factorial = 1.0;
        for (std::size_t k = 1; k <= b.size(); ++k) {
            factorial *= static_cast<double>(2 * k - 1) * static_cast<double>(2 * k);
            out[k - 1] = b[k - 1].first / b[k - 1].second / factorial;
        }
        return out;
    }();
    return table;
}

void check_tolerance(double tol, const char* op) {
    if (!(tol >= kMinTolerance) || !std::isfinite(tol)) {
        throw DomainError(std::string(op) + ": tolerance must be finite and >= 1e-12");
    }
}

// 1 - 2^(1-s), accurate near s = 1.
Complex eta_prefactor_denominator(Complex s) { return -special::c_expm1((1.0 - s) * kLn2); }

double log_inverse_gamma_magnitude(Complex s) { return -special::c_log_gamma(s).real(); }

}  // namespace

std::string_view to_string(Regime r) {
    switch (r) {
        case Regime::dirichlet: return "dirichlet";
        case Regime::eta: return "eta";
        case Regime::functional: return "functional";
    }
    return "dirichlet";
}

std::uint64_t dirichlet_cutoff(Complex s) {
    return static_cast<std::uint64_t>(std::ceil(std::abs(s))) + 32;
}

TailSum dirichlet_tail(Complex s, std::uint64_t first_index, double tol) {
    if (!(s.real() > 1.0)) throw RegimeError("dirichlet_tail: requires re(s) > 1");
    if (first_index < 1) throw DomainError("dirichlet_tail: first index must be >= 1");
    const double n = static_cast<double>(first_index);
    const double log_n = std::log(n);
    const Complex n_pow_minus_s = std::exp(-s * log_n);

    TailSum tail;
    tail.value = n * n_pow_minus_s / (s - 1.0) + 0.5 * n_pow_minus_s;
    const auto& coeff = bernoulli_coefficients();
    Complex rising = s;  // (s)_{2k-1}
    double n_power = 1.0 / n;  // N^(1-2k)
    double last = std::numeric_limits<double>::infinity();
    for (std::size_t k = 1; k <= coeff.size(); ++k) {
        const Complex term = coeff[k - 1] * rising * n_pow_minus_s * n_power;
        const double magnitude = std::abs(term);
        if (magnitude > last) break;  // asymptotic series started to diverge
        tail.value += term;
        tail.correction_terms = static_cast<unsigned>(k);
        last = magnitude;
        if (magnitude < 1e-3 * tol) break;
        const double kk = static_cast<double>(k);
        rising *= (s + 2.0 * kk - 1.0) * (s + 2.0 * kk);
        n_power /= n * n;
    }
    tail.est_error = last;
    return tail;
}

EvalResult zeta_dirichlet(Complex s, double tol) {
    check_tolerance(tol, "zeta_dirichlet");
    if (s.real() < 1.0 + kDirichletMargin) {
        throw RegimeError("zeta_dirichlet: requires re(s) >= 1 + 1e-3; use the eta regime");
    }
    const std::uint64_t cutoff = dirichlet_cutoff(s);
    Complex partial = 0.0;
    for (std::uint64_t n = 1; n < cutoff; ++n) {
        partial += std::exp(-s * std::log(static_cast<double>(n)));
    }
    const TailSum tail = dirichlet_tail(s, cutoff, tol);
    EvalResult r;
    r.value = partial + tail.value;
    r.terms_used = cutoff - 1 + tail.correction_terms;
    r.est_error = tail.est_error + kEps * static_cast<double>(cutoff) * std::abs(r.value);
    r.regime = Regime::dirichlet;
    return r;
}

double eta_remainder_estimate(Complex s, int n_terms) {
    const double t = std::abs(s.imag());
    const double log_bound = std::log(3.0 * (1.0 + 2.0 * t)) + 0.5 * kPi * t +
                             log_inverse_gamma_magnitude(s) -
                             n_terms * std::log(accel::kDecayBase);
    return std::exp(std::min(log_bound, 700.0)) + kEps * n_terms;
}

EvalResult eta_accelerated(Complex s, int n_terms) {
    if (!(s.real() > 0.0)) throw RegimeError("eta_accelerated: requires re(s) > 0");
    EvalResult r;
    r.value = accel::accelerate_alternating(
        [&](int k) { return std::exp(-s * std::log(static_cast<double>(k + 1))); }, n_terms);
    r.terms_used = static_cast<std::uint64_t>(n_terms);
    r.est_error = eta_remainder_estimate(s, n_terms);
    r.regime = Regime::eta;
    return r;
}

EvalResult zeta_eta(Complex s, double tol) {
    check_tolerance(tol, "zeta_eta");
    if (!(s.real() > 0.0)) throw RegimeError("zeta_eta: requires re(s) > 0");
    if (std::abs(s - 1.0) < kUndefinedRadius) {
        throw PoleError("zeta: pole at s = 1 (not defined at s = 0, 1)", 1);
    }
    const double k = std::round(s.imag() * kLn2 / (2.0 * kPi));
    if (k != 0.0) {
        const Complex prefactor_zero(1.0, 2.0 * kPi * k / kLn2);
        if (std::abs(s - prefactor_zero) < kPrefactorZeroRadius) {
            throw ConditioningError(
                "zeta_eta: s is within 1e-6 of a zero of 1 - 2^(1-s); use a shifted evaluation");
        }
    }
    const Complex denom = eta_prefactor_denominator(s);
    const double t = std::abs(s.imag());
    // Digits lost to the growth of the remainder bound with |t|, on top of the request.
    const double digits = -std::log10(tol * std::abs(denom)) +
                          std::log10(3.0 * (1.0 + 2.0 * t)) +
                          (0.5 * kPi * t + log_inverse_gamma_magnitude(s)) / std::numbers::ln10 +
                          1.0;
    const int n = accel::terms_for_digits(digits);
    EvalResult eta = eta_accelerated(s, n);
    eta.value /= denom;
    eta.est_error /= std::abs(denom);
    return eta;
}

Complex functional_factor(Complex s) {
    const Complex sine = special::c_sin(0.5 * kPi * s);
    const Complex one_minus_s = 1.0 - s;
    if (one_minus_s.real() > 0.0) {
        const Complex log_part =
            s * kLn2 + (s - 1.0) * std::log(kPi) + special::c_log_gamma(one_minus_s);
        return special::c_exp(log_part) * sine;
    }
    return special::c_exp(s * kLn2 + (s - 1.0) * std::log(kPi)) * sine *
           special::c_gamma(one_minus_s);
}

EvalResult zeta_functional(Complex s, double tol) {
    check_tolerance(tol, "zeta_functional");
    if (s.real() > 0.0) throw RegimeError("zeta_functional: requires re(s) <= 0");
    if (std::abs(s) < kUndefinedRadius) {
        throw UndefinedPointError("zeta: not defined at s = 0");
    }
    const double even = 2.0 * std::round(0.5 * s.real());
    if (even <= -2.0 && std::abs(s - Complex(even, 0.0)) < kTrivialZeroRadius) {
        return {Complex(0.0, 0.0), 0, 0.0, Regime::functional};
    }
    const Complex factor = functional_factor(s);
    const double scale = std::max(1.0, std::abs(factor));
    const double inner_tol = std::max(kMinTolerance, tol / scale);
    const Complex reflected = 1.0 - s;
    const EvalResult inner = reflected.real() >= 1.0 + kDirichletMargin
                                 ? zeta_dirichlet(reflected, inner_tol)
                                 : zeta_eta(reflected, inner_tol);
    EvalResult r;
    r.value = factor * inner.value;
    r.terms_used = inner.terms_used;
    r.est_error = std::abs(factor) * inner.est_error + 16.0 * kEps * std::abs(r.value);
    r.regime = Regime::functional;
    return r;
}

EvalResult zeta(Complex s, double tol) {
    if (std::abs(s) < kUndefinedRadius) throw UndefinedPointError("zeta: not defined at s = 0");
    if (std::abs(s - 1.0) < kUndefinedRadius) {
        throw UndefinedPointError("zeta: not defined at s = 1 (pole)");
    }
    if (s.real() >= 1.0 + kDirichletMargin) return zeta_dirichlet(s, tol);
    if (s.real() > 0.0) return zeta_eta(s, tol);
    return zeta_functional(s, tol);
}

Complex euler_product(Complex s, std::uint64_t prime_limit) {
    if (!(s.real() > 1.0)) {
        throw RegimeError("euler_product: the product converges only for re(s) > 1");
    }
    if (prime_limit < 2) throw DomainError("euler_product: prime_limit must be >= 2");
    Complex product = 1.0;
    for (const auto p : arith::primes_up_to(prime_limit)) {
        product /= 1.0 - std::exp(-s * std::log(static_cast<double>(p)));
    }
    return product;
}

double riemann_siegel_theta(double t) {
    return special::c_log_gamma(Complex(0.25, 0.5 * t)).imag() - 0.5 * t * std::log(kPi);
}

double hardy_z(double t, double tol) {
    if (!(t >= 0.0)) throw DomainError("hardy_z: requires t >= 0");
    const EvalResult z = zeta(Complex(0.5, t), tol);
    const Complex rotated = std::polar(1.0, riemann_siegel_theta(t)) * z.value;
    if (std::abs(rotated.imag()) > 10.0 * tol) {
        throw ConditioningError("hardy_z: rotated value has imaginary residue " +
                                std::to_string(rotated.imag()) + " above 10 * tol");
    }
    return rotated.real();
}

std::vector<ZeroRecord> find_zeros(double t_min, double t_max, double step, double tol,
                                   unsigned jobs) {
    if (!(t_min >= 0.0) || !(t_min < t_max) || !std::isfinite(t_max)) {
        throw DomainError("find_zeros: requires 0 <= t_min < t_max");
    }
    if (!(step > 0.0) || step > 0.5) throw DomainError("find_zeros: requires 0 < step <= 0.5");
    check_tolerance(tol, "find_zeros");

    const auto intervals = static_cast<std::size_t>(std::ceil((t_max - t_min) / step - 1e-9));
    std::vector<double> grid(intervals + 1);
    for (std::size_t k = 0; k < intervals; ++k) grid[k] = t_min + static_cast<double>(k) * step;
    grid[intervals] = t_max;

    std::vector<double> values(grid.size());
    parallel_for(grid.size(), jobs, [&](std::size_t k) { values[k] = hardy_z(grid[k], tol); });

    struct Bracket {
        double lo;
        double hi;
        double f_lo;
    };
    std::vector<Bracket> brackets;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        if (values[k] == 0.0) {
            brackets.push_back({grid[k], grid[k], 0.0});
        } else if (k + 1 < grid.size() && values[k + 1] != 0.0 &&
                   std::signbit(values[k]) != std::signbit(values[k + 1])) {
            brackets.push_back({grid[k], grid[k + 1], values[k]});
        }
    }

    std::vector<ZeroRecord> zeros(brackets.size());
    parallel_for(brackets.size(), jobs, [&](std::size_t i) {
        auto [lo, hi, f_lo] = brackets[i];
        while (hi - lo >= kZeroBracketWidth) {
            const double mid = lo + 0.5 * (hi - lo);
            if (mid <= lo || mid >= hi) break;
            const double f_mid = hardy_z(mid, tol);
            if (f_mid == 0.0) {
                lo = hi = mid;
                break;
            }
            if (std::signbit(f_mid) == std::signbit(f_lo)) {
                lo = mid;
                f_lo = f_mid;
            } else {
                hi = mid;
            }
        }
        const double t = lo + 0.5 * (hi - lo);
        const double residual = std::abs(zeta(Complex(0.5, t), tol).value);
        if (!(residual < kMaxZeroResidual)) {
            throw ConditioningError("find_zeros: sign change near t = " + std::to_string(t) +
                                    " has residual " + std::to_string(residual));
        }
        zeros[i] = {i + 1, t, residual};
    });
    return zeros;
}

}  // namespace zetakit::zeta
