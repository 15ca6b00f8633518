#pragma once

// Double-precision complex elementary and special functions.

#include <complex>

namespace zetakit {

using Complex = std::complex<double>;

}  // namespace zetakit

namespace zetakit::special {

/// exp(z). Throws RangeError when re(z) > 709.
Complex c_exp(Complex z);

/// Principal logarithm. Throws DomainError at z = 0.
Complex c_log(Complex z);

/// sin(x)cosh(y) + j cos(x)sinh(y). Throws RangeError when |im(z)| > 700.
Complex c_sin(Complex z);
Complex c_cos(Complex z);

/// exp(w) - 1 without cancellation for small |w|.
Complex c_expm1(Complex w);

/// Gamma function: Lanczos (g = 7, 9 terms) for re(z) >= 1/2, reflection below.
/// Throws PoleError (carrying the integer) within 1e-12 of 0, -1, -2, ...
Complex c_gamma(Complex z);

/// Principal-branch log gamma, continuous along vertical lines. Requires re(z) > 0.
Complex c_log_gamma(Complex z);

}  // namespace zetakit::special
