#pragma once

// Riemann zeta evaluation in three regimes:
//   dirichlet   re(s) > 1:   sum n^-s, partial sum plus Euler-Maclaurin tail
//   eta         re(s) > 0:   alternating series, CVZ-accelerated, / (1 - 2^(1-s))
//   functional  re(s) <= 0:  2^s pi^(s-1) sin(pi s / 2) Gamma(1-s) zeta(1-s)
// plus Euler partial products, the Hardy Z function and a critical-line zero scanner.
//
// est_error fields are empirical tail/remainder estimates, not proven bounds.

#include <cstdint>
#include <string_view>
#include <vector>

#include "zetakit/special.hpp"

namespace zetakit::zeta {

enum class Regime { dirichlet, eta, functional };

std::string_view to_string(Regime r);

struct EvalResult {
    Complex value;
    std::uint64_t terms_used = 0;
    double est_error = 0.0;
    Regime regime = Regime::dirichlet;
};

struct ZeroRecord {
    std::uint64_t index = 0;  // 1-based, ordered by t
    double t = 0.0;
    double residual = 0.0;  // |zeta(1/2 + jt)|
};

inline constexpr double kDefaultTolerance = 1e-8;
inline constexpr double kMinTolerance = 1e-12;
/// The Dirichlet regime starts at re(s) = 1 + kDirichletMargin.
inline constexpr double kDirichletMargin = 1e-3;
/// Distance from s = 0 or s = 1 treated as the undefined point itself.
inline constexpr double kUndefinedRadius = 1e-8;
/// Distance from 1 + 2 pi i k / ln 2 (k != 0) refused by the eta regime.
inline constexpr double kPrefactorZeroRadius = 1e-6;
/// Snap radius for the trivial zeros -2, -4, ...
inline constexpr double kTrivialZeroRadius = 1e-12;
/// Bisection stops once the bracket is narrower than this.
inline constexpr double kZeroBracketWidth = 1e-10;
inline constexpr double kMaxZeroResidual = 1e-6;

/// Tail sum_{n >= N} n^-s by Euler-Maclaurin; requires re(s) > 1 - 2K style convergence,
/// in practice re(s) > 1 and N chosen from |s|. Used by the Dirichlet regime and ab_values.
struct TailSum {
    Complex value;
    unsigned correction_terms = 0;
    double est_error = 0.0;
};
TailSum dirichlet_tail(Complex s, std::uint64_t first_index, double tol);

/// First index N such that the Euler-Maclaurin tail from N converges quickly for this s.
std::uint64_t dirichlet_cutoff(Complex s);

EvalResult zeta_dirichlet(Complex s, double tol = kDefaultTolerance);
EvalResult zeta_eta(Complex s, double tol = kDefaultTolerance);
EvalResult zeta_functional(Complex s, double tol = kDefaultTolerance);
EvalResult zeta(Complex s, double tol = kDefaultTolerance);

/// Dirichlet eta function by CVZ acceleration with an explicit term count.
EvalResult eta_accelerated(Complex s, int n_terms);

/// Remainder estimate of an n-term CVZ sum of the eta series at s (re(s) > 0).
double eta_remainder_estimate(Complex s, int n_terms);

/// 2^s pi^(s-1) sin(pi s / 2) Gamma(1 - s): zeta(s) = factor(s) zeta(1 - s).
Complex functional_factor(Complex s);

/// Product over primes p <= prime_limit of 1 / (1 - p^-s); re(s) > 1.
Complex euler_product(Complex s, std::uint64_t prime_limit);

/// Riemann-Siegel theta: Im log Gamma(1/4 + jt/2) - (t/2) ln pi.
double riemann_siegel_theta(double t);

/// Z(t) = e^(j theta(t)) zeta(1/2 + jt), real for real t.
double hardy_z(double t, double tol = kDefaultTolerance);

/// Sign-change scan of hardy_z on [t_min, t_max] with the given step, bisected
/// to kZeroBracketWidth. Output is independent of `jobs` (0 = hardware threads).
/// Zeros closer together than `step` can be missed; this is not detected.
std::vector<ZeroRecord> find_zeros(double t_min, double t_max, double step,
                                   double tol = kDefaultTolerance, unsigned jobs = 0);

}  // namespace zetakit::zeta
