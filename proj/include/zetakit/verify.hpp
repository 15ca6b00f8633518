#pragma once

// Property suites over the arith, zeta and identities modules. Each check
// reports pass/fail plus the measured quantity it compared against its
// threshold (a mismatch count for exact checks).

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace zetakit::verify {

enum class Suite { arith, zeta, identities, all };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view to_string(Suite s);

struct CheckResult {
    std::string suite;
    std::string name;
    bool passed = false;
    double measured = 0.0;
    double threshold = 0.0;
    std::string detail;
};

struct Options {
    unsigned jobs = 0;
};

std::vector<CheckResult> run_suite(Suite suite, const Options& options = {});

// Individual checks, exposed for the acceptance suite.
CheckResult check_omega_coprime_additivity(unsigned jobs);
CheckResult check_beta_prime_powers();
CheckResult check_beta_quasi_multiplicative();
CheckResult check_beta_odd_squares();
CheckResult check_beta_oracle_equivalence();
CheckResult check_liouville_multiplicative();

CheckResult check_zeta_regression();
CheckResult check_trivial_zeros();
CheckResult check_regime_agreement();
CheckResult check_functional_round_trip();
CheckResult check_conjugate_symmetry();
CheckResult check_euler_product();
CheckResult check_zero_location(unsigned jobs);

CheckResult check_finite_rearrangement();
CheckResult check_inner_sum_identity();
CheckResult check_rotation_identity();
CheckResult check_scaling_identity();
CheckResult check_coefficient_structure(unsigned jobs);
CheckResult check_zeta2s_decomposition();
CheckResult check_swap_absolute_regime(unsigned jobs);

}  // namespace zetakit::verify
