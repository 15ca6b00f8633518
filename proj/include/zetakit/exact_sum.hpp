#pragma once

// Order-independent floating-point summation. Keeps the running sum as a
// list of non-overlapping partials (Shewchuk) and rounds once at the end,
// so summing the same multiset of doubles in any order returns the same bits.

#include <cmath>
#include <utility>
#include <vector>

namespace zetakit {

class ExactSum {
public:
    void add(double x) {
        std::size_t used = 0;
        for (std::size_t j = 0; j < partials_.size(); ++j) {
            double y = partials_[j];
            if (std::abs(x) < std::abs(y)) std::swap(x, y);
            const double hi = x + y;
            const double lo = y - (hi - x);
            if (lo != 0.0) partials_[used++] = lo;
            x = hi;
        }
        partials_.resize(used);
        partials_.push_back(x);
    }

    ExactSum& operator+=(double x) {
        add(x);
        return *this;
    }

    /// Correctly rounded value of the exact sum.
    double value() const {
        std::size_t n = partials_.size();
        if (n == 0) return 0.0;
        double hi = partials_[--n];
        double lo = 0.0;
        while (n > 0) {
            const double x = hi;
            const double y = partials_[--n];
            hi = x + y;
            lo = y - (hi - x);
            if (lo != 0.0) break;
        }
        // Round half to even across the remaining partials.
        if (n > 0 && ((lo < 0.0 && partials_[n - 1] < 0.0) || (lo > 0.0 && partials_[n - 1] > 0.0))) {
            const double y = lo * 2.0;
            const double x = hi + y;
            if (y == x - hi) hi = x;
        }
        return hi;
    }

private:
    std::vector<double> partials_;
};

}  // namespace zetakit
