#include "zetakit/acceleration.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <string>

#include "zetakit/errors.hpp"

namespace zetakit::accel {

namespace {

std::vector<double> compute_weights(int n) {
    // log of the i-th summand of d_n; summand_0 = 1 and
    // summand_{i+1} / summand_i = 4 (n+i)(n-i) / ((2i+1)(2i+2)).
    std::vector<double> log_term(static_cast<std::size_t>(n) + 1);
    log_term[0] = 0.0;
    for (int i = 0; i < n; ++i) {
        const double ratio = 4.0 * (n + i) * static_cast<double>(n - i) /
                             ((2.0 * i + 1.0) * (2.0 * i + 2.0));
        log_term[i + 1] = log_term[i] + std::log(ratio);
    }
    const double peak = *std::max_element(log_term.begin(), log_term.end());
    std::vector<double> scaled(log_term.size());
    for (std::size_t i = 0; i < log_term.size(); ++i) scaled[i] = std::exp(log_term[i] - peak);

    // w_k = (d_n - d_k) / d_n, accumulated from the top so small weights keep precision.
    std::vector<double> tail(scaled.size() + 1, 0.0);
    for (std::size_t i = scaled.size(); i-- > 0;) tail[i] = tail[i + 1] + scaled[i];
    const double total = tail[0];
    std::vector<double> w(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) w[k] = tail[k + 1] / total;
    return w;
}

}  // namespace

std::span<const double> cvz_weights(int n) {
    if (n < 1 || n > kMaxAcceleratedTerms) {
        throw DomainError("cvz_weights: term count must be in [1, " +
                          std::to_string(kMaxAcceleratedTerms) + "]");
    }
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<const std::vector<double>>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<const std::vector<double>>(compute_weights(n));
    return {slot->data(), slot->size()};
}

int terms_for_digits(double digits) {
    if (!std::isfinite(digits)) return kMaxAcceleratedTerms;
    const double n = std::ceil(1.31 * digits);
    return static_cast<int>(std::clamp(n, 1.0, static_cast<double>(kMaxAcceleratedTerms)));
}

}  // namespace zetakit::accel
