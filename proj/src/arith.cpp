#include "zetakit/arith.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "zetakit/errors.hpp"

namespace zetakit::arith {

namespace {

void require_natural(Natural n, const char* op) {
    if (n == 0) {
        throw DomainError(std::string(op) + ": argument must be a natural number (n >= 1)");
    }
    if (n > kMaxNatural) {
        throw OverflowError(std::string(op) + ": argument exceeds 2^63 - 1");
    }
}

__extension__ using Wide = unsigned __int128;

Natural mul_mod(Natural a, Natural b, Natural m) {
    return static_cast<Natural>(static_cast<Wide>(a) * b % m);
}

Natural pow_mod(Natural base, Natural exp, Natural m) {
    Natural result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

// (-1)^(n/m + 1) * (-1)^omega
int beta_term(Natural cofactor, unsigned omega) {
    const int sign_cofactor = (cofactor % 2 == 1) ? 1 : -1;
    const int sign_omega = (omega % 2 == 0) ? 1 : -1;
    return sign_cofactor * sign_omega;
}

}  // namespace

std::string_view to_string(BetaClass c) {
    switch (c) {
        case BetaClass::square: return "square";
        case BetaClass::twice_square: return "twice-square";
        case BetaClass::other: return "other";
    }
    return "other";
}

Natural checked_mul(Natural a, Natural b) {
    Natural out = 0;
    if (__builtin_mul_overflow(a, b, &out) || out > kMaxNatural) {
        throw OverflowError("integer product overflows 63 bits: " + std::to_string(a) + " * " +
                            std::to_string(b));
    }
    return out;
}

Natural checked_pow(Natural base, unsigned exponent) {
    Natural result = 1;
    for (unsigned i = 0; i < exponent; ++i) result = checked_mul(result, base);
    return result;
}

Natural isqrt(Natural n) {
    if (n < 2) return n;
    // Newton iteration from an upper bound; no floating point.
    Natural x = Natural{1} << ((64 - __builtin_clzll(n)) / 2 + 1);
    while (true) {
        const Natural y = (x + n / x) / 2;
        if (y >= x) return x;
        x = y;
    }
}

bool is_perfect_square(Natural n) {
    const Natural r = isqrt(n);
    return r * r == n;
}

bool is_prime(Natural n) {
    if (n < 2) return false;
    constexpr std::array<Natural, 12> small = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (Natural p : small) {
        if (n % p == 0) return n == p;
    }
    Natural d = n - 1;
    unsigned r = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++r;
    }
    // These witnesses are sufficient for every n < 3.3 * 10^24.
    for (Natural a : small) {
        Natural x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < r; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Factorization factorize(Natural n) {
    require_natural(n, "factorize");
    Factorization f;
    f.n = n;
    Natural rest = n;
    bool changed = false;
    auto strip = [&](Natural p) {
        unsigned e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        if (e > 0) {
            f.factors.push_back({p, e});
            changed = true;
        }
    };
    strip(2);
    strip(3);
    changed = true;
    for (Natural p = 5; p <= rest / p; p += 6) {
        // A prime cofactor ends the search early.
        if (changed && is_prime(rest)) break;
        changed = false;
        strip(p);
        strip(p + 2);
    }
    if (rest > 1) f.factors.push_back({rest, 1});
    return f;
}

unsigned big_omega(Natural n) {
    require_natural(n, "big_omega");
    unsigned total = 0;
    for (const auto& pp : factorize(n).factors) total += pp.exponent;
    return total;
}

int liouville(Natural n) {
    require_natural(n, "liouville");
    return big_omega(n) % 2 == 0 ? 1 : -1;
}

std::vector<Natural> divisors(Natural n) {
    require_natural(n, "divisors");
    std::vector<Natural> out{1};
    for (const auto& [p, e] : factorize(n).factors) {
        const std::size_t base = out.size();
        Natural power = 1;
        for (unsigned i = 1; i <= e; ++i) {
            power *= p;
            for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * power);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int beta_divisor_sum(const Factorization& f) {
    // Enumerate divisors together with Omega(divisor), which is the sum of the
    // chosen exponents, then add the signed terms one at a time.
    struct Entry {
        Natural divisor;
        unsigned omega;
    };
    std::vector<Entry> entries{{1, 0}};
    for (const auto& [p, e] : f.factors) {
        const std::size_t base = entries.size();
        Natural power = 1;
        for (unsigned i = 1; i <= e; ++i) {
            power *= p;
            for (std::size_t j = 0; j < base; ++j) {
                entries.push_back({entries[j].divisor * power, entries[j].omega + i});
            }
        }
    }
    int sum = 0;
    for (const auto& [m, omega] : entries) sum += beta_term(f.n / m, omega);
    return sum;
}

int beta_divisor_sum(Natural n) {
    require_natural(n, "beta_divisor_sum");
    return beta_divisor_sum(factorize(n));
}

int beta_from_exponents(const std::vector<PrimePower>& factors) {
    // Walk all exponent vectors; each divisor contributes
    // (-1)^(n/m + 1) (-1)^Omega(m), where n/m is even iff m lacks some factor of 2.
    unsigned two_exponent = 0;
    for (const auto& pp : factors) {
        if (pp.prime == 2) two_exponent = pp.exponent;
    }
    struct Entry {
        unsigned two_power;
        unsigned omega;
    };
    std::vector<Entry> entries{{0, 0}};
    for (const auto& [p, e] : factors) {
        const std::size_t base = entries.size();
        for (unsigned i = 1; i <= e; ++i) {
            for (std::size_t j = 0; j < base; ++j) {
                entries.push_back({entries[j].two_power + (p == 2 ? i : 0), entries[j].omega + i});
            }
        }
    }
    int sum = 0;
    for (const auto& [two_power, omega] : entries) {
        const bool cofactor_odd = two_power == two_exponent;
        sum += (cofactor_odd ? 1 : -1) * (omega % 2 == 0 ? 1 : -1);
    }
    return sum;
}

BetaValue beta_closed_form(Natural n) {
    require_natural(n, "beta_closed_form");
    if (is_perfect_square(n)) return {n, 1, BetaClass::square};
    if (n % 2 == 0 && is_perfect_square(n / 2)) return {n, -2, BetaClass::twice_square};
    return {n, 0, BetaClass::other};
}

SmallestFactorSieve::SmallestFactorSieve(Natural limit) : limit_(limit) {
    if (limit == 0 || limit > 10'000'000) {
        throw DomainError("SmallestFactorSieve: limit must be in [1, 10^7]");
    }
    spf_.assign(limit + 1, 0);
    for (Natural i = 2; i <= limit; ++i) {
        if (spf_[i] != 0) continue;
        spf_[i] = static_cast<std::uint32_t>(i);
        for (Natural j = i * i; j <= limit; j += i) {
            if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
        }
    }
}

void SmallestFactorSieve::check(Natural n) const {
    require_natural(n, "SmallestFactorSieve");
    if (n > limit_) {
        throw DomainError("SmallestFactorSieve: " + std::to_string(n) + " exceeds sieve limit " +
                          std::to_string(limit_));
    }
}

Natural SmallestFactorSieve::smallest_factor(Natural n) const {
    check(n);
    return n == 1 ? 1 : spf_[n];
}

Factorization SmallestFactorSieve::factorize(Natural n) const {
    check(n);
    Factorization f;
    f.n = n;
    while (n > 1) {
        const Natural p = spf_[n];
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.factors.push_back({p, e});
    }
    return f;
}

unsigned SmallestFactorSieve::big_omega(Natural n) const {
    check(n);
    unsigned total = 0;
    while (n > 1) {
        n /= spf_[n];
        ++total;
    }
    return total;
}

int SmallestFactorSieve::liouville(Natural n) const { return big_omega(n) % 2 == 0 ? 1 : -1; }

std::vector<std::uint8_t> big_omega_segment(Natural lo, Natural hi) {
    require_natural(lo, "big_omega_segment");
    if (hi < lo || hi - lo > 10'000'000 || hi - 1 > kMaxNatural) {
        throw DomainError("big_omega_segment: need lo <= hi and hi - lo <= 10^7");
    }
    const std::size_t size = hi - lo;
    std::vector<Natural> rest(size);
    std::vector<std::uint8_t> omega(size, 0);
    for (std::size_t i = 0; i < size; ++i) rest[i] = lo + i;
    if (size == 0) return omega;
    const Natural root = isqrt(hi - 1);
    for (const Natural p : primes_up_to(root)) {
        for (Natural m = (lo + p - 1) / p * p; m < hi; m += p) {
            const std::size_t i = m - lo;
            while (rest[i] % p == 0) {
                rest[i] /= p;
                ++omega[i];
            }
        }
    }
    // At most one prime factor above sqrt(hi) remains.
    for (std::size_t i = 0; i < size; ++i) {
        if (rest[i] > 1) ++omega[i];
    }
    return omega;
}

std::vector<Natural> primes_up_to(Natural limit) {
    std::vector<Natural> primes;
    if (limit < 2) return primes;
    std::vector<bool> composite(limit + 1, false);
    for (Natural i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (Natural j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return primes;
}

}  // namespace zetakit::arith
