#include "zetakit/identities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "zetakit/acceleration.hpp"
#include "zetakit/errors.hpp"
#include "zetakit/exact_sum.hpp"
#include "zetakit/parallel.hpp"
#include "zetakit/zeta.hpp"

namespace zetakit::identities {

namespace {

constexpr double kLn2 = std::numbers::ln2;
constexpr Natural kSieveLimit = 10'000'000;

void require_positive_sigma(double sigma, const char* op) {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
        throw DomainError(std::string(op) + ": requires sigma > 0");
    }
}

void require_terms(std::uint64_t n_terms, const char* op) {
    if (n_terms < 1) throw DomainError(std::string(op) + ": requires n_terms >= 1");
}

void require_open_unit_half(double sigma, const char* op) {
    if (!(sigma > 0.5 && sigma < 1.0)) {
        throw DomainError(std::string(op) + ": requires sigma in (1/2, 1)");
    }
}

double trig(TrigKind kind, double x) { return kind == TrigKind::sine ? std::sin(x) : std::cos(x); }

// trig(t ln k) / k^sigma; the single expression shared by every route so that
// equal index sets give bit-identical summands.
double weighted_term(double k, double t, double sigma, TrigKind kind) {
    return trig(kind, t * std::log(k)) / std::pow(k, sigma);
}

// mrzf with a precomputed Liouville sign for a.
double mrzf_signed(Natural a, Natural b, int liouville_a, double t, double sigma) {
    const double ab = static_cast<double>(arith::checked_mul(a, b));
    const double sign_b = (b % 2 == 1) ? 1.0 : -1.0;
    return sign_b * weighted_term(ab, t, sigma, TrigKind::sine) * liouville_a;
}

// sum_{n >= 1} (-1)^(n+1) summand(n), truncated or accelerated. `scale` bounds
// |summand(n)| / n^-sigma and feeds the error estimates.
template <class Summand>
SeriesPartial alternating_partial(Summand&& summand, double sigma, double t, double scale,
                                  std::uint64_t n_terms, bool accelerate) {
    SeriesPartial out;
    out.n_terms = n_terms;
    out.accelerated = accelerate;
    if (accelerate) {
        if (n_terms > static_cast<std::uint64_t>(accel::kMaxAcceleratedTerms)) {
            throw DomainError("accelerated partial sums use at most " +
                              std::to_string(accel::kMaxAcceleratedTerms) + " terms");
        }
        const int n = static_cast<int>(n_terms);
        out.value = accel::accelerate_alternating(
            [&](int k) { return summand(static_cast<Natural>(k) + 1); }, n);
        out.est_error = scale * zeta::eta_remainder_estimate(Complex(sigma, t), n);
        return out;
    }
    ExactSum sum;
    for (Natural n = 1; n <= n_terms; ++n) {
        const double a = summand(n);
        sum.add(n % 2 == 1 ? a : -a);
    }
    out.value = sum.value();
    out.est_error = scale * std::pow(static_cast<double>(n_terms + 1), -sigma);
    return out;
}

template <class Visit>
void for_each_divisor(const arith::Factorization& f, Visit&& visit) {
    std::vector<Natural> divs{1};
    for (const auto& [p, e] : f.factors) {
        const std::size_t base = divs.size();
        Natural power = 1;
        for (unsigned i = 1; i <= e; ++i) {
            power *= p;
            for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * power);
        }
    }
    for (Natural m : divs) visit(m);
}

// Liouville signs for 1..limit.
std::vector<int> liouville_table(const arith::SmallestFactorSieve& sieve, Natural limit) {
    std::vector<int> table(limit + 1, 1);
    for (Natural n = 1; n <= limit; ++n) table[n] = sieve.liouville(n);
    return table;
}

// Divisor-diagonal sum over n <= N, optionally keeping only pairs with both factors <= cap.
double diagonal_sum(Natural N, Natural cap, double t, double sigma) {
    ExactSum sum;
    if (N <= kSieveLimit) {
        const arith::SmallestFactorSieve sieve(std::max<Natural>(N, 1));
        const auto lambda = liouville_table(sieve, std::min(N, cap));
        for (Natural n = 1; n <= N; ++n) {
            for_each_divisor(sieve.factorize(n), [&](Natural m) {
                const Natural l = n / m;
                if (m <= cap && l <= cap) sum.add(mrzf_signed(m, l, lambda[m], t, sigma));
            });
        }
        return sum.value();
    }
    for (Natural n = 1; n <= N; ++n) {
        for_each_divisor(arith::factorize(n), [&](Natural m) {
            const Natural l = n / m;
            if (m <= cap && l <= cap) sum.add(mrzf(m, l, t, sigma));
        });
    }
    return sum.value();
}

}  // namespace

std::vector<double> default_phi_samples() {
    constexpr double pi = std::numbers::pi;
    return {0.0, pi / 6.0, pi / 4.0, pi / 3.0, pi / 2.0};
}

std::vector<Natural> default_m_samples() { return {1, 2, 3, 4, 5, 6, 8, 9, 10, 12}; }

double mrzf(Natural a, Natural b, double t, double sigma) {
    if (a == 0 || b == 0) throw DomainError("mrzf: requires a, b >= 1");
    return mrzf_signed(a, b, arith::liouville(a), t, sigma);
}

SeriesPartial eta_partial_cos(double sigma, double t, std::uint64_t n_terms, bool accelerate) {
    require_positive_sigma(sigma, "eta_partial_cos");
    require_terms(n_terms, "eta_partial_cos");
    return alternating_partial(
        [&](Natural n) { return weighted_term(static_cast<double>(n), t, sigma, TrigKind::cosine); },
        sigma, t, 1.0, n_terms, accelerate);
}

SeriesPartial eta_partial_sin(double sigma, double t, std::uint64_t n_terms, bool accelerate) {
    require_positive_sigma(sigma, "eta_partial_sin");
    require_terms(n_terms, "eta_partial_sin");
    return alternating_partial(
        [&](Natural n) { return weighted_term(static_cast<double>(n), t, sigma, TrigKind::sine); },
        sigma, t, 1.0, n_terms, accelerate);
}

SeriesPartial rotated_partial(double sigma, double t, double phi, std::uint64_t n_terms,
                              bool accelerate) {
    require_positive_sigma(sigma, "rotated_partial");
    require_terms(n_terms, "rotated_partial");
    return alternating_partial(
        [&](Natural n) {
            const double x = static_cast<double>(n);
            return std::sin(t * std::log(x) + phi) / std::pow(x, sigma);
        },
        sigma, t, 1.0, n_terms, accelerate);
}

SeriesPartial f1(Natural m, double sigma, double t, std::uint64_t n_terms, bool accelerate) {
    if (m == 0) throw DomainError("f1: requires m >= 1");
    require_positive_sigma(sigma, "f1");
    require_terms(n_terms, "f1");
    return alternating_partial(
        [&](Natural n) {
            return weighted_term(static_cast<double>(arith::checked_mul(m, n)), t, sigma,
                                 TrigKind::sine);
        },
        sigma, t, std::pow(static_cast<double>(m), -sigma), n_terms, accelerate);
}

SeriesPartial f2(Natural m, double sigma, double t, std::uint64_t n_terms, bool accelerate) {
    if (m == 0) throw DomainError("f2: requires m >= 1");
    require_positive_sigma(sigma, "f2");
    require_terms(n_terms, "f2");
    return alternating_partial(
        [&](Natural n) {
            return weighted_term(static_cast<double>(arith::checked_mul(m, n)), t, sigma,
                                 TrigKind::cosine);
        },
        sigma, t, std::pow(static_cast<double>(m), -sigma), n_terms, accelerate);
}

double double_sum_lhs(Natural M, Natural L, double t, double sigma) {
    if (M < 1 || L < 1) throw DomainError("double_sum_lhs: requires M, L >= 1");
    ExactSum sum;
    for (Natural m = 1; m <= M; ++m) {
        const int lambda = arith::liouville(m);
        for (Natural l = 1; l <= L; ++l) sum.add(mrzf_signed(m, l, lambda, t, sigma));
    }
    return sum.value();
}

double double_sum_lhs_by_columns(Natural M, Natural L, double t, double sigma) {
    if (M < 1 || L < 1) throw DomainError("double_sum_lhs_by_columns: requires M, L >= 1");
    std::vector<int> lambda(M + 1);
    for (Natural m = 1; m <= M; ++m) lambda[m] = arith::liouville(m);
    ExactSum sum;
    for (Natural l = 1; l <= L; ++l) {
        for (Natural m = 1; m <= M; ++m) sum.add(mrzf_signed(m, l, lambda[m], t, sigma));
    }
    return sum.value();
}

double divisor_diagonal_sum(Natural n, double t, double sigma) {
    if (n < 1) throw DomainError("divisor_diagonal_sum: requires n >= 1");
    ExactSum sum;
    for (Natural m : arith::divisors(n)) sum.add(mrzf(m, n / m, t, sigma));
    return sum.value();
}

double double_sum_rhs(Natural N, double t, double sigma) {
    if (N < 1) throw DomainError("double_sum_rhs: requires N >= 1");
    return diagonal_sum(N, N, t, sigma);
}

double double_sum_rhs_matched(Natural T, double t, double sigma) {
    if (T < 1) throw DomainError("double_sum_rhs_matched: requires T >= 1");
    return diagonal_sum(arith::checked_mul(T, T), T, t, sigma);
}

std::vector<SwapReport> swap_discrepancy(double t, double sigma,
                                         const std::vector<Natural>& truncations,
                                         unsigned jobs) {
    if (truncations.empty()) throw DomainError("swap_discrepancy: truncation list is empty");
    for (std::size_t i = 0; i < truncations.size(); ++i) {
        if (truncations[i] < 1 || (i > 0 && truncations[i] <= truncations[i - 1])) {
            throw DomainError("swap_discrepancy: truncations must be positive and increasing");
        }
    }
    std::vector<SwapReport> reports(truncations.size());
    parallel_for(truncations.size(), jobs, [&](std::size_t i) {
        const Natural T = truncations[i];
        SwapReport& r = reports[i];
        r.sigma = sigma;
        r.t = t;
        r.truncation = T;
        r.lhs = double_sum_lhs(T, T, t, sigma);
        r.rhs = double_sum_rhs(arith::checked_mul(T, T), t, sigma);
        r.gap = std::abs(r.lhs - r.rhs);
        r.matched_rhs = double_sum_rhs_matched(T, t, sigma);
        r.matched_gap = std::abs(r.lhs - r.matched_rhs);
    });
    return reports;
}

BetaSeries beta_series(double sigma, double t, Natural N, TrigKind kind) {
    if (!(sigma > 0.5)) {
        throw RegimeError("beta_series: requires sigma > 1/2 for absolute convergence");
    }
    if (N < 1) throw DomainError("beta_series: requires N >= 1");
    ExactSum square;
    ExactSum twice;
    for (Natural n = 1; n <= N; ++n) {
        const Natural sq = arith::checked_mul(n, n);
        square.add(weighted_term(static_cast<double>(sq), t, sigma, kind));
        twice.add(2.0 * weighted_term(static_cast<double>(arith::checked_mul(2, sq)), t, sigma,
                                      kind));
    }
    BetaSeries out;
    out.square_part = square.value();
    out.twice_square_part = twice.value();
    out.total = out.square_part - out.twice_square_part;
    return out;
}

double beta_weighted_sum(double sigma, double t, Natural X, TrigKind kind) {
    require_positive_sigma(sigma, "beta_weighted_sum");
    if (X < 1) throw DomainError("beta_weighted_sum: requires X >= 1");
    ExactSum sum;
    auto add_term = [&](Natural k, const arith::Factorization& f) {
        const int beta = arith::beta_divisor_sum(f);
        if (beta != 0) {
            sum.add(static_cast<double>(beta) *
                    weighted_term(static_cast<double>(k), t, sigma, kind));
        }
    };
    if (X <= kSieveLimit) {
        const arith::SmallestFactorSieve sieve(X);
        for (Natural k = 1; k <= X; ++k) add_term(k, sieve.factorize(k));
    } else {
        for (Natural k = 1; k <= X; ++k) add_term(k, arith::factorize(k));
    }
    return sum.value();
}

ABValues ab_values(double sigma, double t, double tol) {
    if (!(sigma > 0.5)) {
        throw RegimeError("ab_values: requires sigma > 1/2 (2 sigma <= 1 diverges)");
    }
    const Complex w(2.0 * sigma, 2.0 * t);
    const Natural cutoff = zeta::dirichlet_cutoff(w);
    ExactSum a_sum;
    ExactSum b_sum;
    for (Natural n = 1; n < cutoff; ++n) {
        const double sq = static_cast<double>(arith::checked_mul(n, n));
        a_sum.add(weighted_term(sq, t, sigma, TrigKind::sine));
        b_sum.add(weighted_term(sq, t, sigma, TrigKind::cosine));
    }
    // sum_{n >= N} n^-w = B_tail - j A_tail
    const zeta::TailSum tail = zeta::dirichlet_tail(w, cutoff, tol);
    ABValues out;
    out.A = a_sum.value() - tail.value.imag();
    out.B = b_sum.value() + tail.value.real();
    out.n_terms = cutoff - 1 + tail.correction_terms;
    out.est_error = tail.est_error;
    return out;
}

LinearCoeffs linear_coeffs(double sigma, double t) {
    require_open_unit_half(sigma, "linear_coeffs");
    const double c = std::pow(2.0, 1.0 - sigma);
    const double angle = t * kLn2;
    LinearCoeffs k;
    k.sigma = sigma;
    k.t = t;
    k.p = 1.0 - c * std::cos(angle);
    k.q = -c * std::sin(angle);
    k.r = -k.q;
    k.s_coef = k.p;
    k.det = k.p * k.s_coef - k.q * k.r;
    return k;
}

double amgm_margin(double sigma, double t) {
    require_open_unit_half(sigma, "amgm_margin");
    return (1.0 + std::pow(2.0, 2.0 - 2.0 * sigma)) -
           std::pow(2.0, 2.0 - sigma) * std::cos(t * kLn2);
}

SystemResiduals solve_2x2(const LinearCoeffs& c, double A, double B) {
    SystemResiduals out;
    out.residual1 = std::abs(c.p * A + c.q * B);
    out.residual2 = std::abs(c.r * A + c.s_coef * B);
    const double det = c.p * c.s_coef - c.q * c.r;
    const double frob2 = c.p * c.p + c.q * c.q + c.r * c.r + c.s_coef * c.s_coef;
    const double spread = std::sqrt(std::max(0.0, frob2 * frob2 - 4.0 * det * det));
    const double sigma_max = std::sqrt(0.5 * (frob2 + spread));
    out.inverse_norm =
        det == 0.0 ? std::numeric_limits<double>::infinity() : sigma_max / std::abs(det);
    out.solution_bound = out.inverse_norm * std::hypot(out.residual1, out.residual2);
    return out;
}

DeterminantScan scan_determinant(double sigma_lo, double sigma_hi, double sigma_step,
                                 double t_lo, double t_hi, double t_step, unsigned jobs) {
    if (!(sigma_step > 0.0) || !(t_step > 0.0) || sigma_hi < sigma_lo || t_hi < t_lo) {
        throw DomainError("scan_determinant: invalid grid");
    }
    const auto n_sigma = static_cast<std::size_t>(std::llround((sigma_hi - sigma_lo) / sigma_step)) + 1;
    const auto n_t = static_cast<std::size_t>(std::llround((t_hi - t_lo) / t_step)) + 1;

    std::vector<DeterminantScan> rows(n_sigma);
    parallel_for(n_sigma, jobs, [&](std::size_t i) {
        const double sigma = sigma_lo + static_cast<double>(i) * sigma_step;
        DeterminantScan row;
        row.min_det = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < n_t; ++j) {
            const double t = t_lo + static_cast<double>(j) * t_step;
            const LinearCoeffs c = linear_coeffs(sigma, t);
            const double squares = c.p * c.p + c.q * c.q;
            const double margin = amgm_margin(sigma, t);
            row.max_identity_gap = std::max(
                {row.max_identity_gap, std::abs(c.det - squares), std::abs(c.det - margin)});
            row.structure_exact = row.structure_exact && c.r == -c.q && c.s_coef == c.p;
            if (c.det < row.min_det) {
                row.min_det = c.det;
                row.argmin_sigma = sigma;
                row.argmin_t = t;
            }
        }
        row.points = n_t;
        rows[i] = row;
    });

    DeterminantScan out;
    out.min_det = std::numeric_limits<double>::infinity();
    for (const auto& row : rows) {
        if (row.min_det < out.min_det) {
            out.min_det = row.min_det;
            out.argmin_sigma = row.argmin_sigma;
            out.argmin_t = row.argmin_t;
        }
        out.max_identity_gap = std::max(out.max_identity_gap, row.max_identity_gap);
        out.structure_exact = out.structure_exact && row.structure_exact;
        out.points += row.points;
    }
    return out;
}

ProbeReport probe_zero(double sigma, double t, std::uint64_t n_terms,
                       const std::vector<double>& phi_samples,
                       const std::vector<Natural>& m_samples, double tol) {
    if (!(sigma > 0.0 && sigma < 1.0)) throw DomainError("probe_zero: requires sigma in (0, 1)");
    if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("probe_zero: requires t > 0");
    require_terms(n_terms, "probe_zero");

    ProbeReport r;
    r.sigma = sigma;
    r.t = t;
    r.n_terms = n_terms;
    r.residual_31 = eta_partial_cos(sigma, t, n_terms, true).value;
    r.residual_32 = eta_partial_sin(sigma, t, n_terms, true).value;
    for (double phi : phi_samples) {
        r.residual_33.push_back({phi, rotated_partial(sigma, t, phi, n_terms, true).value});
    }
    for (Natural m : m_samples) {
        r.f1_samples.push_back({m, f1(m, sigma, t, n_terms, true).value});
        r.f2_samples.push_back({m, f2(m, sigma, t, n_terms, true).value});
    }

    try {
        r.zeta2s = zeta::zeta(Complex(2.0 * sigma, 2.0 * t), tol).value;
    } catch (const Error& e) {
        r.notes.push_back(std::string("zeta(2s) not evaluated: ") + e.what());
    }

    if (sigma > 0.5) {
        const ABValues ab = ab_values(sigma, t, tol);
        r.A = ab.A;
        r.B = ab.B;
        r.coeffs = linear_coeffs(sigma, t);
        r.system_residuals = solve_2x2(*r.coeffs, ab.A, ab.B);
    } else {
        r.notes.emplace_back(
            "sigma <= 1/2: the A/B series need 2 sigma > 1; A, B, coeffs and system residuals "
            "suppressed");
    }
    return r;
}

}  // namespace zetakit::identities
