#include "zetakit/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <unordered_set>

#include "zetakit/arith.hpp"
#include "zetakit/errors.hpp"
#include "zetakit/identities.hpp"
#include "zetakit/parallel.hpp"
#include "zetakit/special.hpp"
#include "zetakit/zeta.hpp"

namespace zetakit::verify {

namespace {

using arith::Natural;

constexpr std::uint64_t kSeed = 20121127;

CheckResult exact_check(std::string suite, std::string name, std::uint64_t failures,
                        std::uint64_t checked, const std::string& what) {
    CheckResult r;
    r.suite = std::move(suite);
    r.name = std::move(name);
    r.passed = failures == 0 && checked > 0;
    r.measured = static_cast<double>(failures);
    r.threshold = 0.0;
    std::ostringstream d;
    d << failures << " mismatches in " << checked << " " << what;
    r.detail = d.str();
    return r;
}

CheckResult bound_check(std::string suite, std::string name, double measured, double threshold,
                        std::string detail) {
    CheckResult r;
    r.suite = std::move(suite);
    r.name = std::move(name);
    r.passed = measured < threshold;
    r.measured = measured;
    r.threshold = threshold;
    r.detail = std::move(detail);
    return r;
}

std::vector<Natural> odd_primes_up_to(Natural limit) {
    auto primes = arith::primes_up_to(limit);
    primes.erase(primes.begin());
    return primes;
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
    if (name == "arith") return Suite::arith;
    if (name == "zeta") return Suite::zeta;
    if (name == "identities") return Suite::identities;
    if (name == "all") return Suite::all;
    return std::nullopt;
}

std::string_view to_string(Suite s) {
    switch (s) {
        case Suite::arith: return "arith";
        case Suite::zeta: return "zeta";
        case Suite::identities: return "identities";
        case Suite::all: return "all";
    }
    return "all";
}

// ---------------------------------------------------------------- arith

CheckResult check_omega_coprime_additivity(unsigned jobs) {
    constexpr Natural kLimit = 10'000;
    constexpr Natural kSegment = 1'000'000;
    std::vector<unsigned> omega(kLimit + 1, 0);
    std::vector<std::vector<Natural>> distinct(kLimit + 1);
    for (Natural a = 1; a <= kLimit; ++a) {
        const auto f = arith::factorize(a);
        for (const auto& pp : f.factors) {
            omega[a] += pp.exponent;
            distinct[a].push_back(pp.prime);
        }
    }
    // Omega(ab) comes from a segmented sieve over [1, kLimit^2], never from factorize().
    const Natural top = kLimit * kLimit + 1;
    const std::size_t segments = (top - 1 + kSegment - 1) / kSegment;
    std::vector<std::uint64_t> checked(segments, 0);
    std::vector<std::uint64_t> failures(segments, 0);
    parallel_for(segments, jobs, [&](std::size_t s) {
        const Natural lo = 1 + s * kSegment;
        const Natural hi = std::min(top, lo + kSegment);
        const auto product_omega = arith::big_omega_segment(lo, hi);
        for (Natural a = 1; a <= kLimit; ++a) {
            const Natural b_lo = std::max<Natural>(1, (lo + a - 1) / a);
            const Natural b_hi = std::min(kLimit, (hi - 1) / a);
            for (Natural b = b_lo; b <= b_hi; ++b) {
                bool coprime = true;
                for (Natural p : distinct[a]) {
                    if (b % p == 0) {
                        coprime = false;
                        break;
                    }
                }
                if (!coprime) continue;
                ++checked[s];
                if (product_omega[a * b - lo] != omega[a] + omega[b]) ++failures[s];
            }
        }
    });
    std::uint64_t total = 0, bad = 0;
    for (std::size_t s = 0; s < segments; ++s) {
        total += checked[s];
        bad += failures[s];
    }
    return exact_check("arith", "omega_coprime_additivity", bad, total,
                       "coprime pairs a, b <= 10^4");
}

CheckResult check_beta_prime_powers() {
    std::uint64_t checked = 0, bad = 0;
    for (Natural p : odd_primes_up_to(100)) {
        for (unsigned k = 0; k <= 12; ++k) {
            const int expected = (k % 2 == 0) ? 1 : 0;
            std::vector<arith::PrimePower> f;
            if (k > 0) f.push_back({p, k});
            ++checked;
            if (arith::beta_from_exponents(f) != expected) ++bad;
            // Where p^k fits in 63 bits, the direct divisor sum must agree as well.
            try {
                const Natural n = arith::checked_pow(p, k);
                ++checked;
                if (arith::beta_divisor_sum(n) != expected) ++bad;
            } catch (const OverflowError&) {
            }
        }
    }
    return exact_check("arith", "beta_odd_prime_powers", bad, checked,
                       "values for odd p <= 100, k <= 12");
}

CheckResult check_beta_quasi_multiplicative() {
    std::uint64_t checked = 0, bad = 0;
    for (Natural p : odd_primes_up_to(500)) {
        for (unsigned a = 1; a <= 6; ++a) {
            const Natural pa = arith::checked_pow(p, a);
            const int beta_pa = arith::beta_divisor_sum(pa);
            for (Natural m = 1; m <= 500; m += 2) {
                if (m % p == 0) continue;
                ++checked;
                const int lhs = arith::beta_divisor_sum(arith::checked_mul(pa, m));
                if (lhs != beta_pa * arith::beta_divisor_sum(m)) ++bad;
            }
        }
    }
    return exact_check("arith", "beta_quasi_multiplicative", bad, checked,
                       "triples (p, a, m), odd p, m <= 500, p does not divide m, a <= 6");
}

CheckResult check_beta_odd_squares() {
    constexpr Natural kLimit = 100'000;
    std::unordered_set<Natural> squares;
    for (Natural k = 1; k * k <= kLimit; ++k) squares.insert(k * k);
    std::uint64_t checked = 0, bad = 0;
    for (Natural n = 1; n <= kLimit; n += 2) {
        ++checked;
        const int expected = squares.count(n) ? 1 : 0;
        if (arith::beta_divisor_sum(n) != expected) ++bad;
    }
    return exact_check("arith", "beta_odd_argument", bad, checked, "odd n <= 10^5");
}

CheckResult check_beta_oracle_equivalence() {
    constexpr Natural kLimit = 100'000;
    const arith::SmallestFactorSieve sieve(kLimit);
    std::uint64_t bad = 0;
    for (Natural n = 1; n <= kLimit; ++n) {
        if (arith::beta_divisor_sum(sieve.factorize(n)) != arith::beta_closed_form(n).value) ++bad;
    }
    return exact_check("arith", "beta_closed_form_equivalence", bad, kLimit, "n <= 10^5");
}

CheckResult check_liouville_multiplicative() {
    constexpr Natural kLimit = 10'000;
    std::uint64_t checked = 0, bad = 0;
    for (Natural a = 1; a <= kLimit; ++a) {
        const int la = arith::liouville(a);
        if (la != 1 && la != -1) ++bad;
        for (Natural b = 1; a * b <= kLimit; ++b) {
            ++checked;
            if (arith::liouville(a * b) != la * arith::liouville(b)) ++bad;
        }
    }
    return exact_check("arith", "liouville_complete_multiplicativity", bad, checked,
                       "pairs with ab <= 10^4");
}

// ---------------------------------------------------------------- zeta

CheckResult check_zeta_regression() {
    const double e2 = std::abs(zeta::zeta(Complex(2.0, 0.0), 1e-12).value - 1.6449340668);
    const double e4 = std::abs(zeta::zeta(Complex(4.0, 0.0), 1e-12).value - 1.0823232337);
    std::ostringstream d;
    d << "|zeta(2) - 1.6449340668| = " << e2 << ", |zeta(4) - 1.0823232337| = " << e4;
    return bound_check("zeta", "zeta_regression", std::max(e2, e4), 1e-9, d.str());
}

CheckResult check_trivial_zeros() {
    double worst = 0.0;
    for (int k = 1; k <= 5; ++k) {
        worst = std::max(worst, std::abs(zeta::zeta(Complex(-2.0 * k, 0.0)).value));
    }
    return bound_check("zeta", "trivial_zeros", worst, 1e-12,
                       "max |zeta(-2k)| for k = 1..5");
}

CheckResult check_regime_agreement() {
    std::mt19937_64 rng(kSeed);
    std::uniform_real_distribution<double> re(1.0 + zeta::kDirichletMargin, 1.002);
    std::uniform_real_distribution<double> im(-30.0, 30.0);
    double worst = -1.0;  // max of |difference| - allowance
    double worst_diff = 0.0;
    for (int i = 0; i < 50; ++i) {
        const Complex s(re(rng), im(rng));
        const auto d = zeta::zeta_dirichlet(s, 1e-12);
        const auto e = zeta::zeta_eta(s, 1e-12);
        const double diff = std::abs(d.value - e.value);
        const double allowance = 1e-8 + d.est_error + e.est_error;
        worst = std::max(worst, diff / allowance);
        worst_diff = std::max(worst_diff, diff);
    }
    std::ostringstream detail;
    detail << "50 points, re(s) in (1, 1.002]; max |dirichlet - eta| = " << worst_diff
           << "; measured = max ratio to allowance 1e-8 + est_error";
    return bound_check("zeta", "regime_agreement", worst, 1.0, detail.str());
}

CheckResult check_functional_round_trip() {
    std::mt19937_64 rng(kSeed + 1);
    std::uniform_real_distribution<double> re(0.05, 0.95);
    std::uniform_real_distribution<double> im(-30.0, 30.0);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const Complex s(re(rng), im(rng));
        const Complex lhs = zeta::zeta_eta(s, 1e-12).value;
        const Complex rhs = zeta::functional_factor(s) * zeta::zeta_eta(1.0 - s, 1e-12).value;
        worst = std::max(worst, std::abs(lhs - rhs) / std::abs(lhs));
    }
    return bound_check("zeta", "functional_equation_round_trip", worst, 1e-7,
                       "50 strip points, max relative disagreement");
}

CheckResult check_conjugate_symmetry() {
    std::mt19937_64 rng(kSeed + 2);
    std::uniform_real_distribution<double> re(-3.0, 4.0);
    std::uniform_real_distribution<double> im(0.5, 30.0);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const Complex s(re(rng), im(rng));
        const Complex a = zeta::zeta(std::conj(s)).value;
        const Complex b = std::conj(zeta::zeta(s).value);
        worst = std::max(worst, std::abs(a - b) / std::max(1.0, std::abs(b)));
    }
    return bound_check("zeta", "conjugate_symmetry", worst, 1e-10,
                       "50 points with re(s) in [-3, 4]; relative to max(1, |zeta|)");
}

CheckResult check_euler_product() {
    const Complex z2 = zeta::zeta(Complex(2.0, 0.0), 1e-12).value;
    double previous = std::numeric_limits<double>::infinity();
    bool decreasing = true;
    double last = 0.0;
    std::ostringstream d;
    for (Natural limit : {100, 1000, 10000, 100000}) {
        last = std::abs(zeta::euler_product(Complex(2.0, 0.0), limit) - z2);
        decreasing = decreasing && last < previous;
        previous = last;
        d << "P=" << limit << ": " << last << "; ";
    }
    d << (decreasing ? "decreasing" : "NOT decreasing");
    CheckResult r = bound_check("zeta", "euler_product_convergence", last, 1e-4, d.str());
    r.passed = r.passed && decreasing;
    return r;
}

CheckResult check_zero_location(unsigned jobs) {
    constexpr std::array<double, 3> expected = {14.1347, 21.0220, 25.0109};
    const auto zeros = zeta::find_zeros(0.0, 30.0, 0.1, zeta::kDefaultTolerance, jobs);
    double worst_t = zeros.size() == expected.size() ? 0.0 : 1.0;
    double worst_residual = 0.0;
    for (std::size_t i = 0; i < std::min(zeros.size(), expected.size()); ++i) {
        worst_t = std::max(worst_t, std::abs(zeros[i].t - expected[i]));
        worst_residual = std::max(worst_residual, zeros[i].residual);
    }
    std::ostringstream d;
    d << zeros.size() << " zeros in [0, 30]; max |t - table| = " << worst_t
      << ", max residual = " << worst_residual;
    CheckResult r = bound_check("zeta", "zero_location", worst_t, 1e-3, d.str());
    r.passed = r.passed && zeros.size() == 3 && worst_residual < zeta::kMaxZeroResidual;
    return r;
}

// ---------------------------------------------------------------- identities

CheckResult check_finite_rearrangement() {
    constexpr Natural kT = 60;
    constexpr std::array<std::pair<double, double>, 4> points = {
        {{1.0, 2.0}, {14.13, 0.6}, {0.0, 0.75}, {25.0, 0.5}}};
    double worst = 0.0;
    for (const auto& [t, sigma] : points) {
        const double rows = identities::double_sum_lhs(kT, kT, t, sigma);
        const double cols = identities::double_sum_lhs_by_columns(kT, kT, t, sigma);
        const double diag = identities::double_sum_rhs_matched(kT, t, sigma);
        worst = std::max({worst, std::abs(rows - cols), std::abs(rows - diag)});
    }
    return bound_check("identities", "finite_rearrangement", worst, 1e-12,
                       "rows vs columns vs divisor diagonals over [1, 60]^2");
}

CheckResult check_inner_sum_identity() {
    std::mt19937_64 rng(kSeed + 3);
    std::uniform_real_distribution<double> tdist(0.0, 50.0);
    std::uniform_real_distribution<double> sdist(0.5, 2.0);
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
        const double t = tdist(rng);
        const double sigma = sdist(rng);
        for (Natural n = 1; n <= 10'000; ++n) {
            const double lhs = identities::divisor_diagonal_sum(n, t, sigma);
            const double x = static_cast<double>(n);
            const double rhs =
                arith::beta_closed_form(n).value * std::sin(t * std::log(x)) / std::pow(x, sigma);
            worst = std::max(worst, std::abs(lhs - rhs));
        }
    }
    return bound_check("identities", "inner_sum_identity", worst, 1e-12,
                       "n <= 10^4 at 10 random (t, sigma)");
}

CheckResult check_rotation_identity() {
    auto phis = identities::default_phi_samples();
    phis.push_back(1.0);
    phis.push_back(-2.0);
    double worst = 0.0;
    for (double sigma : {0.5, 0.75, 2.0}) {
        for (double t : {1.0, 14.1347, 30.0}) {
            for (bool accelerate : {false, true}) {
                const std::uint64_t n = accelerate ? 200 : 2000;
                const double c = identities::eta_partial_cos(sigma, t, n, accelerate).value;
                const double s = identities::eta_partial_sin(sigma, t, n, accelerate).value;
                for (double phi : phis) {
                    const double direct =
                        identities::rotated_partial(sigma, t, phi, n, accelerate).value;
                    worst = std::max(worst,
                                     std::abs(direct - (std::sin(phi) * c + std::cos(phi) * s)));
                }
            }
        }
    }
    return bound_check("identities", "rotation_identity", worst, 1e-10,
                       "direct rotated sum vs sin(phi) cosine part + cos(phi) sine part");
}

CheckResult check_scaling_identity() {
    double worst = 0.0;
    for (double sigma : {0.5, 0.75}) {
        for (double t : {1.0, 14.1347}) {
            for (bool accelerate : {false, true}) {
                const std::uint64_t n = accelerate ? 200 : 2000;
                for (Natural m : identities::default_m_samples()) {
                    const double x = static_cast<double>(m);
                    const double scale = std::pow(x, -sigma);
                    const double phi = t * std::log(x);
                    const double a = identities::f1(m, sigma, t, n, accelerate).value;
                    const double b =
                        scale * identities::rotated_partial(sigma, t, phi, n, accelerate).value;
                    const double c = identities::f2(m, sigma, t, n, accelerate).value;
                    const double d = scale * identities::rotated_partial(
                                                 sigma, t, phi + 0.5 * std::numbers::pi, n,
                                                 accelerate)
                                                 .value;
                    worst = std::max({worst, std::abs(a - b), std::abs(c - d)});
                }
            }
        }
    }
    return bound_check("identities", "scaling_identity", worst, 1e-12,
                       "f1/f2(m) vs m^-sigma rotated_partial(phi = t ln m)");
}

CheckResult check_coefficient_structure(unsigned jobs) {
    const auto scan = identities::scan_determinant(0.51, 0.99, 0.01, 0.0, 50.0, 0.01, jobs);
    std::ostringstream d;
    d << scan.points << " grid points; min det = " << scan.min_det << " at (sigma, t) = ("
      << scan.argmin_sigma << ", " << scan.argmin_t << "); max |det - p^2 - q^2|, "
      << "|det - amgm_margin| = " << scan.max_identity_gap
      << "; r = -q, s = p exactly: " << (scan.structure_exact ? "yes" : "no");
    CheckResult r;
    r.suite = "identities";
    r.name = "coefficient_structure";
    r.passed = scan.structure_exact && scan.min_det > 0.0 && scan.max_identity_gap <= 1e-12;
    r.measured = scan.min_det;
    r.threshold = 0.0;
    r.detail = d.str();
    return r;
}

CheckResult check_zeta2s_decomposition() {
    double worst = 0.0;
    double worst_eta = 0.0;
    for (double sigma : {0.6, 0.75, 0.9}) {
        for (double t : {1.0, 14.1347, 25.0}) {
            const auto ab = identities::ab_values(sigma, t, 1e-12);
            const Complex decomposed(ab.B, -ab.A);
            const Complex w(2.0 * sigma, 2.0 * t);
            worst = std::max(worst, std::abs(decomposed - zeta::zeta(w, 1e-12).value));
            worst_eta = std::max(worst_eta, std::abs(decomposed - zeta::zeta_eta(w, 1e-12).value));
        }
    }
    std::ostringstream d;
    d << "max |(B - jA) - zeta(2s)| = " << worst << " (dispatcher), " << worst_eta
      << " (eta route)";
    return bound_check("identities", "zeta2s_decomposition", std::max(worst, worst_eta), 1e-7,
                       d.str());
}

CheckResult check_swap_absolute_regime(unsigned jobs) {
    const auto reports = identities::swap_discrepancy(1.0, 2.0, {50, 100, 200, 400}, jobs);
    bool matched_exact = true;
    std::ostringstream d;
    for (const auto& r : reports) {
        matched_exact = matched_exact && r.matched_gap == 0.0;
        d << "T=" << r.truncation << ": gap " << r.gap << ", matched " << r.matched_gap << "; ";
    }
    CheckResult r =
        bound_check("identities", "swap_absolute_regime", reports.back().gap, 1e-4, d.str());
    r.passed = r.passed && matched_exact;
    return r;
}

std::vector<CheckResult> run_suite(Suite suite, const Options& options) {
    std::vector<CheckResult> out;
    const bool all = suite == Suite::all;
    if (all || suite == Suite::arith) {
        out.push_back(check_omega_coprime_additivity(options.jobs));
        out.push_back(check_beta_prime_powers());
        out.push_back(check_beta_quasi_multiplicative());
        out.push_back(check_beta_odd_squares());
        out.push_back(check_beta_oracle_equivalence());
        out.push_back(check_liouville_multiplicative());
    }
    if (all || suite == Suite::zeta) {
        out.push_back(check_zeta_regression());
        out.push_back(check_trivial_zeros());
        out.push_back(check_regime_agreement());
        out.push_back(check_functional_round_trip());
        out.push_back(check_conjugate_symmetry());
        out.push_back(check_euler_product());
        out.push_back(check_zero_location(options.jobs));
    }
    if (all || suite == Suite::identities) {
        out.push_back(check_finite_rearrangement());
        out.push_back(check_inner_sum_identity());
        out.push_back(check_rotation_identity());
        out.push_back(check_scaling_identity());
        out.push_back(check_coefficient_structure(options.jobs));
        out.push_back(check_zeta2s_decomposition());
        out.push_back(check_swap_absolute_regime(options.jobs));
    }
    return out;
}

}  // namespace zetakit::verify
