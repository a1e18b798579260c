#pragma once

namespace fracwave {

/// Euler Gamma function on the real line.
///
/// Lanczos rational approximation for x >= 0.5, the reflection identity
/// Gamma(x)Gamma(1-x) = pi/sin(pi x) below. Arguments within 1e-12 of a
/// non-positive integer raise PoleError.
double gamma_fn(double x);

/// log|Gamma(x)| for x > 0. Used where Gamma itself would overflow.
double log_gamma(double x);

/// 1/Gamma(x), defined everywhere: returns 0 at the poles of Gamma and
/// underflows to 0 for large x instead of raising.
double reciprocal_gamma(double x);

/// sin(pi x) with exact integer-argument zeros (range reduction before
/// the libm call, so large arguments keep full relative accuracy).
double sin_pi(double x);

}  // namespace fracwave
