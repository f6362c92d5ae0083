#pragma once

#include "mockexact/tables.hpp"

namespace mockexact {

/// The rank-one lattice L(N) = Z with <x,y> = -2Nxy, q(x) = -Nx^2,
/// discriminant group Z/2NZ and signature (0,1). Weight is fixed at k = 1/2.
struct WeilLattice {
    long N;

    long disc_order() const { return 2 * N; }
    /// q(h/2N) = -h^2/4N as an exact rational mod 1 representative.
    Rat q_of(long h) const {
        Rat r(-Int(h) * h, Int(4) * N);
        r.canonicalize();
        return r;
    }
    /// <h/2N, h'/2N> = -h h'/2N.
    Rat pairing(long h, long hp) const {
        Rat r(-Int(h) * hp, Int(2) * N);
        r.canonicalize();
        return r;
    }
};

/// Element of SL_2(Z) carrying the metaplectic lift phi = +sqrt(c tau + d).
struct GammaElement {
    long long a, b, c, d;
};

/// Diagonal T-coefficient e(q(alpha)).
Complex rho_T(const WeilLattice& L, long h, mpfr_prec_t p);

/// S-coefficient i^{1/2}/sqrt(2N) * e(-<alpha, beta>).
Complex rho_S(const WeilLattice& L, long h, long hp, mpfr_prec_t p);

/// Shintani's formula for rho_{alpha beta}(g) with g.c > 0; exponent
/// arguments are assembled exactly (denominator divides 4Nc).
Complex rho_shintani(const WeilLattice& L, long h_alpha, long h_beta, const GammaElement& g,
                     mpfr_prec_t p);

/// Kloosterman sum for the Weil representation, weight k = 1/2:
/// S_{alpha,beta}(m,n,c) = e^{-pi i sgn(c)/4} sum_{d(c)*} conj(rho_{alpha beta})
/// e((ma+nd)/(2 Delta c)), Delta = -2N. Negative c via conjugation.
Complex S_weil(const WeilLattice& L, long h_alpha, long h_beta, long long m, long long n, long c,
               mpfr_prec_t p);

/// S_{r,eps}(u, D, c) = sum_{q||N} eps(q) S_{psi(q)u/2N, -r/2N}(u^2, D, c).
Complex S_r_eps(long N, const EpsCharacter& eps, long r, long u, long long D, long c,
                mpfr_prec_t p);

}  // namespace mockexact
