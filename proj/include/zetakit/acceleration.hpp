#pragma once

// Cohen-Villegas-Zagier acceleration of alternating series
// sum_{k>=0} (-1)^k a_k, using the Chebyshev-based weights
//   d_k = n sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!),  w_k = 1 - d_k / d_n.
// The weights are computed in log space, so n up to kMaxAcceleratedTerms
// stays finite in double precision, and cached per n.

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace zetakit::accel {

inline constexpr int kMaxAcceleratedTerms = 2000;

/// (3 + sqrt 8): the relative error of an n-term sum decays like kDecayBase^-n.
inline constexpr double kDecayBase = 5.828427124746190;

/// Weights w_0 .. w_{n-1}; n in [1, kMaxAcceleratedTerms].
std::span<const double> cvz_weights(int n);

/// ceil(1.31 D), at least 1, capped at kMaxAcceleratedTerms.
int terms_for_digits(double digits);

/// Sum (-1)^k w_k a(k) for k in [0, n).
template <class Term>
auto accelerate_alternating(Term&& term, int n) {
    const auto w = cvz_weights(n);
    using Value = decltype(term(0));
    Value sum{};
    for (int k = 0; k < n; ++k) {
        const Value a = term(k);
        sum += (k % 2 == 0 ? w[k] : -w[k]) * a;
    }
    return sum;
}

}  // namespace zetakit::accel
