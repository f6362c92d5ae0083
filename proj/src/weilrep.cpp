#include "mockexact/weilrep.hpp"

#include <cassert>
#include <numeric>

#include "mockexact/numeric.hpp"

namespace mockexact {

namespace {

// i^{1/2} = e(1/8)
Complex eighth_root(mpfr_prec_t p) { return e_of(Rat(1, 8), p); }

Rat reduced(Int num, Int den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace

Complex rho_T(const WeilLattice& L, long h, mpfr_prec_t p) { return e_of(L.q_of(h), p); }

Complex rho_S(const WeilLattice& L, long h, long hp, mpfr_prec_t p) {
    mpfr_prec_t pg = p + 32;
    Complex v = eighth_root(pg) * e_of(-L.pairing(h, hp), pg);
    Real scale = 1 / sqrt(Real::of(L.disc_order(), pg));
    return (v * scale).rounded(p);
}

Complex rho_shintani(const WeilLattice& L, long h_alpha, long h_beta, const GammaElement& g,
                     mpfr_prec_t p) {
    if (g.c <= 0) throw DomainError("rho_shintani: c must be positive");
    assert(g.a * g.d - g.b * g.c == 1);
    mpfr_prec_t pg = p + 32;
    long twoN = L.disc_order();
    Complex acc(pg);
    // e((a q(alpha+r) - <beta, alpha+r> + d q(beta)) / c), alpha = h/2N:
    // numerator over 4Nc is -a(h+2Nr)^2 + 2 h'(h+2Nr) - d h'^2.
    for (long long r = 0; r < g.c; ++r) {
        Int t = Int(h_alpha) + Int(twoN) * r;
        Int num = -Int(g.a) * t * t + Int(2) * h_beta * t - Int(g.d) * h_beta * h_beta;
        acc += e_of(reduced(num, Int(2) * twoN * g.c), pg);
    }
    Complex pref = eighth_root(pg);
    Real scale = 1 / sqrt(Real::of(Int(twoN) * g.c, pg));
    return (acc * pref * scale).rounded(p);
}

Complex S_weil(const WeilLattice& L, long h_alpha, long h_beta, long long m, long long n, long c,
               mpfr_prec_t p) {
    if (c == 0) throw DomainError("S_weil: c must be nonzero");
    if (c < 0) return S_weil(L, h_alpha, h_beta, m, n, -c, p).conj();

    long fourN = 2 * L.disc_order();
    auto admissible = [&](long long x, long h) {
        return ((Int(x) - Int(h) * h) % fourN) == 0;
    };
    if (!admissible(m, h_alpha)) throw DomainError("S_weil: m not admissible for alpha");
    if (!admissible(n, h_beta)) throw DomainError("S_weil: n not admissible for beta");

    mpfr_prec_t pg = p + 32;
    Complex acc(pg);
    for (long d = 0; d < c; ++d) {
        if (std::gcd(d, c) != 1) continue;
        long a = (c == 1) ? 0 : long(invmod(uint64_t(d), uint64_t(c)));
        GammaElement g{a, (Int(a) * d - 1) % c == 0 ? (long long)((Int(a) * d - 1) / c).get_si()
                                                    : 0,
                       c, d};
        // 2 Delta c = -4Nc
        Int num = -(Int(m) * a + Int(n) * d);
        Complex term =
            rho_shintani(L, h_alpha, h_beta, g, pg).conj() * e_of(reduced(num, Int(fourN) * c), pg);
        acc += term;
    }
    // e^{-pi i k/2} with k = 1/2 is e(-1/8)
    Complex pref = e_of(Rat(-1, 8), pg);
    return (acc * pref).rounded(p);
}

Complex S_r_eps(long N, const EpsCharacter& eps, long r, long u, long long D, long c,
                mpfr_prec_t p) {
    WeilLattice L{N};
    long twoN = 2 * N;
    mpfr_prec_t pg = p + 16;
    Complex acc(pg);
    for (long q = 1; q <= N; ++q) {
        if (N % q != 0 || std::gcd(q, N / q) != 1) continue;
        long h_alpha = long((Int(psi_map(q, N)) * u) % twoN);
        long h_beta = ((-r) % twoN + twoN) % twoN;
        Complex s = S_weil(L, h_alpha, h_beta, (long long)u * u, D, c, pg);
        if (eps(q) > 0)
            acc += s;
        else
            acc += Complex(-s.re, -s.im);
    }
    return acc.rounded(p);
}

}  // namespace mockexact
