#include "mockexact/numeric.hpp"

#include <cmath>

namespace mockexact {

Complex e_of(const Rat& t, mpfr_prec_t p) {
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), t.get_num().get_mpz_t(), t.get_den().get_mpz_t());
    Rat u = t - Rat(fl);  // u in [0, 1)

    mpfr_prec_t pg = p + 32;
    Real angle = Real::pi(pg) * Real::of(u, pg) * 2;
    Complex out(p);
    mpfr_sin_cos(out.im.raw(), out.re.raw(), angle.raw(), MPFR_RNDN);
    return out;
}

Real bessel_I_half(const Real& x) {
    if (x.sgn() <= 0) throw DomainError("bessel_I_half: x must be positive");
    mpfr_prec_t pg = x.prec() + 16;
    Real xg = x.rounded(pg);
    Real r = sqrt(2 / (Real::pi(pg) * xg)) * sinh(xg);
    return r.rounded(x.prec());
}

namespace detail {

Real bessel_I32_closed(const Real& x) {
    mpfr_prec_t pg = x.prec() + 16;
    Real xg = x.rounded(pg);
    Real h = cosh(xg) - sinh(xg) / xg;
    return (sqrt(2 / (Real::pi(pg) * xg)) * h).rounded(x.prec());
}

Real bessel_I32_series(const Real& x) {
    // cosh(x) - sinh(x)/x = sum_{k>=1} 2k x^{2k}/(2k+1)!
    mpfr_prec_t pg = x.prec() + 16;
    Real xg = x.rounded(pg);
    Real x2 = xg * xg;
    Real term = x2 / 3;  // k = 1
    Real h = term;
    Real floor = abs(h) * Real::pow2(-long(pg) - 8, pg);
    for (long k = 1; k < 100000; ++k) {
        // t_{k+1}/t_k = (k+1) x^2 / (k (2k+2)(2k+3))
        term *= x2;
        term *= k + 1;
        term /= k * (2 * k + 2) * (2 * k + 3);
        h += term;
        if (abs(term) < floor) break;
    }
    return (sqrt(2 / (Real::pi(pg) * xg)) * h).rounded(x.prec());
}

}  // namespace detail

Real bessel_I_three_half(const Real& x) {
    if (x.sgn() <= 0) throw DomainError("bessel_I_three_half: x must be positive");
    if (x < Real::of(1L, x.prec())) return detail::bessel_I32_series(x);
    return detail::bessel_I32_closed(x);
}

mpfr_prec_t precision_for_exponent(double X) {
    double bits = X > 0 ? std::ceil(X / std::log(2.0)) : 0;
    mpfr_prec_t p = mpfr_prec_t(bits) + 96;
    return p < 64 ? 64 : p;
}

}  // namespace mockexact
