#pragma once

#include "mockexact/real.hpp"

namespace mockexact {

/// e(t) = exp(2*pi*i*t). The argument is reduced mod 1 in exact rational
/// arithmetic before any floating-point conversion, so accuracy does not
/// depend on the size of the numerator.
Complex e_of(const Rat& t, mpfr_prec_t p);

/// I_{1/2}(x) = sqrt(2/(pi x)) * sinh(x), x > 0.
Real bessel_I_half(const Real& x);

/// I_{3/2}(x) = sqrt(2/(pi x)) * (cosh(x) - sinh(x)/x), x > 0. A series
/// branch guards against the cancellation in cosh(x) - sinh(x)/x for small x.
Real bessel_I_three_half(const Real& x);

namespace detail {
/// The two branches of bessel_I_three_half, exposed for cross-checking.
Real bessel_I32_closed(const Real& x);
Real bessel_I32_series(const Real& x);
}  // namespace detail

/// Working precision for a target value of magnitude ~ e^X:
/// ceil(X/ln 2) + 96 guard bits, and never below 64.
mpfr_prec_t precision_for_exponent(double X);

}  // namespace mockexact
