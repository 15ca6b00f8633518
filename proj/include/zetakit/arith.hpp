#pragma once

// Exact integer arithmetic functions on 64-bit naturals: factorization,
// big omega, the Liouville sign, divisor enumeration and the divisor-sum
// function beta(n) = sum_{m | n} (-1)^(n/m + 1) (-1)^Omega(m).
//
// Every function rejects n = 0 with DomainError and reports 64-bit overflow
// with OverflowError. All functions are pure and thread-safe.

#include <cstdint>
#include <string_view>
#include <vector>

namespace zetakit::arith {

using Natural = std::uint64_t;

/// Largest accepted argument, 2^63 - 1.
inline constexpr Natural kMaxNatural = (Natural{1} << 63) - 1;

struct PrimePower {
    Natural prime;
    unsigned exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime-power decomposition of n. Primes are strictly increasing; n = 1 has no factors.
struct Factorization {
    Natural n = 1;
    std::vector<PrimePower> factors;
};

enum class BetaClass { square, twice_square, other };

std::string_view to_string(BetaClass c);

struct BetaValue {
    Natural n;
    int value;  // 1, -2 or 0
    BetaClass classification;
};

// Checked primitives.
Natural checked_mul(Natural a, Natural b);
Natural checked_pow(Natural base, unsigned exponent);

/// floor(sqrt(n)), exact.
Natural isqrt(Natural n);
bool is_perfect_square(Natural n);

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(Natural n);

Factorization factorize(Natural n);
unsigned big_omega(Natural n);
int liouville(Natural n);
std::vector<Natural> divisors(Natural n);

/// beta(n) summed term by term over the divisors of n.
int beta_divisor_sum(Natural n);
int beta_divisor_sum(const Factorization& f);

/// beta of the number whose factorization is given, using only the exponents:
/// n/m is odd exactly when m carries the full power of 2. Works for prime
/// powers whose value does not fit in 64 bits.
int beta_from_exponents(const std::vector<PrimePower>& factors);

/// beta(n) from the square / twice-square classification.
BetaValue beta_closed_form(Natural n);

/// Smallest-prime-factor table for bulk work on [1, limit]. Immutable after construction.
class SmallestFactorSieve {
public:
    /// limit must be in [1, 10^7].
    explicit SmallestFactorSieve(Natural limit);

    Natural limit() const noexcept { return limit_; }
    Natural smallest_factor(Natural n) const;
    Factorization factorize(Natural n) const;
    unsigned big_omega(Natural n) const;
    int liouville(Natural n) const;

private:
    void check(Natural n) const;

    Natural limit_;
    std::vector<std::uint32_t> spf_;
};

/// Omega(n) for every n in [lo, hi), by a segmented sieve over prime powers.
/// Independent of factorize(); hi - lo <= 10^7.
std::vector<std::uint8_t> big_omega_segment(Natural lo, Natural hi);

/// All primes <= limit, increasing.
std::vector<Natural> primes_up_to(Natural limit);

}  // namespace zetakit::arith
