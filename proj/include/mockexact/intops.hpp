#pragma once

#include <cstdint>
#include <vector>

#include "mockexact/real.hpp"

namespace mockexact {

/// Primes below 10^6, sieved once.
const std::vector<uint32_t>& prime_table();

struct PrimePower {
    uint64_t p;
    int e;
};

/// Trial division against the prime table; m must have no prime factor
/// above 10^12 (every modulus in this project is far below that).
std::vector<PrimePower> factorize(uint64_t m);

int moebius(uint64_t n);
uint64_t euler_phi(uint64_t n);
/// omega_0: number of distinct odd primes dividing c.
int num_odd_prime_divisors(uint64_t c);

uint64_t powmod(uint64_t b, uint64_t e, uint64_t m);
/// Inverse of a modulo m (gcd(a, m) = 1); invmod(0, 1) = 0.
uint64_t invmod(uint64_t a, uint64_t m);

/// Full Kronecker symbol (a/n), extended to all integers n.
int kronecker(long long a, long long n);

/// Exact Gaussian integer, used for the unit values of chi5 and friends.
struct GaussInt {
    int re = 0;
    int im = 0;
};

/// Dirichlet character mod 5 with chi(2) = i; zero when 5 | b.
GaussInt chi5(long long b);

/// Exact Gaussian rational, used for the k_n constants and character values
/// in the sparse Kloosterman sums.
struct GaussRat {
    Rat re, im;

    GaussRat() : re(0), im(0) {}
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
    static GaussRat unit_i() { return GaussRat(Rat(0), Rat(1)); }

    friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
        return GaussRat(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    friend GaussRat operator*(const GaussRat& a, const GaussInt& b) {
        return a * GaussRat(Rat(b.re), Rat(b.im));
    }
    friend GaussRat operator*(const GaussRat& a, long s) {
        return GaussRat(a.re * s, a.im * s);
    }
    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re == b.re && a.im == b.im;
    }
    bool is_real() const { return im == 0; }
};

/// Dedekind sum s(d, c) as an exact rational, via the reciprocity
/// (Euclidean) recursion. Requires c >= 1 and gcd(d, c) = 1.
Rat dedekind_sum(long long d, long long c);

/// All residues x mod M with x^2 = d (mod M), sorted. Empty when unsolvable.
std::vector<uint64_t> sqrt_mod(const Int& d, uint64_t M);

/// Prime-power case: all x mod p^k with x^2 = a (mod p^k), sorted.
std::vector<uint64_t> sqrt_mod_prime_power(uint64_t a, uint64_t p, int k);

}  // namespace mockexact
