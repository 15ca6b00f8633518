#pragma once

// Numerical realizations of the series identities built on the alternating
// zeta series: cosine/sine parts of eta(sigma + jt), their phase rotations,
// the m-scaled families f1/f2, the two-index summand mrzf and its row/column
// versus divisor-diagonal summation orders, the beta-weighted square series,
// the A/B linear system with its coefficient quadruple, and the zeta(2s)
// decomposition.
//
// Nothing here asserts that a quantity vanishes. probe_zero reports what the
// evaluation gives and callers decide what to check.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zetakit/arith.hpp"
#include "zetakit/special.hpp"

namespace zetakit::identities {

using arith::Natural;

enum class TrigKind { sine, cosine };

struct SeriesPartial {
    double value = 0.0;
    std::uint64_t n_terms = 0;
    bool accelerated = false;
    double est_error = 0.0;
};

struct LinearCoeffs {
    double sigma = 0.0;
    double t = 0.0;
    double p = 0.0;
    double q = 0.0;
    double r = 0.0;
    double s_coef = 0.0;
    double det = 0.0;
};

struct SystemResiduals {
    double residual1 = 0.0;      // |pA + qB|
    double residual2 = 0.0;      // |rA + s B|
    double inverse_norm = 0.0;   // spectral norm of the inverse matrix; inf when singular
    double solution_bound = 0.0; // |(A, B)| <= inverse_norm * |(residual1, residual2)|
};

struct SwapReport {
    double sigma = 0.0;
    double t = 0.0;
    std::uint64_t truncation = 0;
    double lhs = 0.0;          // rectangle m, l <= T
    double rhs = 0.0;          // divisor diagonals n <= T^2
    double gap = 0.0;          // |lhs - rhs|
    double matched_rhs = 0.0;  // divisor diagonals restricted to m, n/m <= T
    double matched_gap = 0.0;  // |lhs - matched_rhs|
};

struct BetaSeries {
    double square_part = 0.0;
    double twice_square_part = 0.0;
    double total = 0.0;
};

struct ABValues {
    double A = 0.0;
    double B = 0.0;
    std::uint64_t n_terms = 0;
    double est_error = 0.0;
};

struct PhaseSample {
    double phi = 0.0;
    double residual = 0.0;
};

struct ScaledSample {
    Natural m = 0;
    double value = 0.0;
};

struct ProbeReport {
    double sigma = 0.0;
    double t = 0.0;
    std::uint64_t n_terms = 0;
    double residual_31 = 0.0;  // cosine part of the eta series
    double residual_32 = 0.0;  // sine part
    std::vector<PhaseSample> residual_33;
    std::vector<ScaledSample> f1_samples;
    std::vector<ScaledSample> f2_samples;
    // Present only for sigma > 1/2.
    std::optional<double> A;
    std::optional<double> B;
    std::optional<Complex> zeta2s;
    std::optional<LinearCoeffs> coeffs;
    std::optional<SystemResiduals> system_residuals;
    std::vector<std::string> notes;
};

std::vector<double> default_phi_samples();
std::vector<Natural> default_m_samples();

/// (-1)^(b+1) sin(t ln(ab)) / (ab)^sigma * (-1)^Omega(a)
double mrzf(Natural a, Natural b, double t, double sigma);

SeriesPartial eta_partial_cos(double sigma, double t, std::uint64_t n_terms, bool accelerate);
SeriesPartial eta_partial_sin(double sigma, double t, std::uint64_t n_terms, bool accelerate);

/// sum (-1)^(n+1) sin(t ln n + phi) / n^sigma from the combined summand.
SeriesPartial rotated_partial(double sigma, double t, double phi, std::uint64_t n_terms,
                              bool accelerate);

/// sum_n (-1)^(n+1) sin(t ln(mn)) / (mn)^sigma
SeriesPartial f1(Natural m, double sigma, double t, std::uint64_t n_terms, bool accelerate = true);
/// sum_n (-1)^(n+1) cos(t ln(mn)) / (mn)^sigma
SeriesPartial f2(Natural m, double sigma, double t, std::uint64_t n_terms, bool accelerate = true);

/// Rows first: sum_{m <= M} sum_{l <= L} mrzf(m, l).
double double_sum_lhs(Natural M, Natural L, double t, double sigma);
/// Columns first over the same rectangle.
double double_sum_lhs_by_columns(Natural M, Natural L, double t, double sigma);
/// sum_{m | n} mrzf(m, n/m)
double divisor_diagonal_sum(Natural n, double t, double sigma);
/// sum_{n <= N} sum_{m | n} mrzf(m, n/m)
double double_sum_rhs(Natural N, double t, double sigma);
/// Divisor diagonals n <= T^2 keeping only pairs with m <= T and n/m <= T.
double double_sum_rhs_matched(Natural T, double t, double sigma);

/// One report per truncation; truncations must be nonempty and strictly increasing.
std::vector<SwapReport> swap_discrepancy(double t, double sigma,
                                         const std::vector<Natural>& truncations,
                                         unsigned jobs = 0);

/// Square and twice-square sub-series truncated at n <= N; sigma > 1/2.
BetaSeries beta_series(double sigma, double t, Natural N, TrigKind kind);

/// sum_{k <= X} beta(k) trig(t ln k) / k^sigma, with beta from the divisor sum.
double beta_weighted_sum(double sigma, double t, Natural X, TrigKind kind);

/// A = sum sin(t ln n^2) / n^(2 sigma), B = sum cos(t ln n^2) / n^(2 sigma); sigma > 1/2.
ABValues ab_values(double sigma, double t, double tol);

/// sigma in (1/2, 1).
LinearCoeffs linear_coeffs(double sigma, double t);

/// (1 + 2^(2 - 2 sigma)) - 2^(2 - sigma) cos(t ln 2); sigma in (1/2, 1).
double amgm_margin(double sigma, double t);

SystemResiduals solve_2x2(const LinearCoeffs& coeffs, double A, double B);

/// Smallest determinant over a (sigma, t) grid plus the worst pointwise disagreement
/// between det, p^2 + q^2 and amgm_margin.
struct DeterminantScan {
    double min_det = 0.0;
    double argmin_sigma = 0.0;
    double argmin_t = 0.0;
    double max_identity_gap = 0.0;
    bool structure_exact = true;  // r == -q and s_coef == p at every point
    std::uint64_t points = 0;
};
DeterminantScan scan_determinant(double sigma_lo, double sigma_hi, double sigma_step,
                                 double t_lo, double t_hi, double t_step, unsigned jobs = 0);

/// sigma in (0, 1), t > 0.
ProbeReport probe_zero(double sigma, double t, std::uint64_t n_terms,
                       const std::vector<double>& phi_samples,
                       const std::vector<Natural>& m_samples, double tol = 1e-10);

}  // namespace zetakit::identities
