#include "mockexact/intops.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

namespace mockexact {

const std::vector<uint32_t>& prime_table() {
    static const std::vector<uint32_t> primes = [] {
        constexpr uint32_t limit = 1'000'000;
        std::vector<bool> composite(limit, false);
        std::vector<uint32_t> out;
        for (uint32_t i = 2; i < limit; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (uint64_t j = uint64_t(i) * i; j < limit; j += i) composite[j] = true;
        }
        return out;
    }();
    return primes;
}

std::vector<PrimePower> factorize(uint64_t m) {
    std::vector<PrimePower> out;
    for (uint32_t p : prime_table()) {
        if (uint64_t(p) * p > m) break;
        if (m % p == 0) {
            int e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            out.push_back({p, e});
        }
    }
    if (m > 1) out.push_back({m, 1});
    return out;
}

int moebius(uint64_t n) {
    int sign = 1;
    for (const auto& [p, e] : factorize(n)) {
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

uint64_t euler_phi(uint64_t n) {
    uint64_t r = n;
    for (const auto& [p, e] : factorize(n)) r -= r / p;
    return r;
}

int num_odd_prime_divisors(uint64_t c) {
    int k = 0;
    for (const auto& [p, e] : factorize(c))
        if (p != 2) ++k;
    return k;
}

uint64_t powmod(uint64_t b, uint64_t e, uint64_t m) {
    if (m == 1) return 0;
    unsigned __int128 r = 1, x = b % m;
    while (e) {
        if (e & 1) r = r * x % m;
        x = x * x % m;
        e >>= 1;
    }
    return uint64_t(r);
}

uint64_t invmod(uint64_t a, uint64_t m) {
    if (m == 1) return 0;
    int64_t t = 0, nt = 1;
    int64_t r = int64_t(m), nr = int64_t(a % m);
    while (nr != 0) {
        int64_t q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    if (r != 1) throw DomainError("invmod: arguments not coprime");
    return uint64_t(t < 0 ? t + int64_t(m) : t);
}

int kronecker(long long a, long long n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) result = -result;
    }
    if (n % 2 == 0) {
        if (a % 2 == 0) return 0;
        int am8 = int(a % 8);
        if (am8 < 0) am8 += 8;
        while (n % 2 == 0) {
            n /= 2;
            if (am8 == 3 || am8 == 5) result = -result;
        }
    }
    // Jacobi symbol for odd n > 0
    a %= n;
    if (a < 0) a += n;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            long long nm8 = n % 8;
            if (nm8 == 3 || nm8 == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

GaussInt chi5(long long b) {
    int r = int(b % 5);
    if (r < 0) r += 5;
    switch (r) {
        case 1: return {1, 0};
        case 2: return {0, 1};   // chi(2) = i
        case 3: return {0, -1};  // chi(3) = chi(2)^3
        case 4: return {-1, 0};  // chi(4) = chi(2)^2
        default: return {0, 0};
    }
}

Rat dedekind_sum(long long d, long long c) {
    if (c < 1) throw DomainError("dedekind_sum: c must be positive");
    long long p = d % c;
    if (p < 0) p += c;
    if (std::gcd(p == 0 ? c : p, c) != 1) throw DomainError("dedekind_sum: gcd(d,c) != 1");
    // s(p,q) = (p^2 + q^2 + 1)/(12pq) - 1/4 - s(q mod p, p), down the Euclid chain
    Rat s(0);
    long long q = c;
    int sign = 1;
    while (p != 0) {
        Rat term(p * p + q * q + 1, 12 * p * q);
        term.canonicalize();
        term -= Rat(1, 4);
        if (sign > 0)
            s += term;
        else
            s -= term;
        sign = -sign;
        long long r = q % p;
        q = p;
        p = r;
    }
    return s;
}

namespace {

uint64_t ipow(uint64_t p, int k) {
    uint64_t r = 1;
    while (k-- > 0) r *= p;
    return r;
}

uint64_t tonelli_shanks(uint64_t a, uint64_t p) {
    // p odd prime, a a quadratic residue mod p
    if (a == 0) return 0;
    if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);
    uint64_t q = p - 1;
    int s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    uint64_t z = 2;
    while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
    uint64_t m = s, c = powmod(z, q, p);
    uint64_t t = powmod(a, q, p), r = powmod(a, (q + 1) / 2, p);
    while (t != 1) {
        uint64_t i = 0, tt = t;
        while (tt != 1) {
            tt = (unsigned __int128)tt * tt % p;
            ++i;
        }
        uint64_t b = powmod(c, uint64_t(1) << (m - i - 1), p);
        m = i;
        c = (unsigned __int128)b * b % p;
        t = (unsigned __int128)t * c % p;
        r = (unsigned __int128)r * b % p;
    }
    return r;
}

std::vector<uint64_t> sorted_unique(std::vector<uint64_t> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

std::vector<uint64_t> sqrt_mod_prime_power(uint64_t a, uint64_t p, int k) {
    uint64_t pk = ipow(p, k);
    a %= pk;
    if (p == 2 && k == 1) return {a & 1};
    if (a == 0) {
        uint64_t step = ipow(p, (k + 1) / 2);
        std::vector<uint64_t> out;
        for (uint64_t x = 0; x < pk; x += step) out.push_back(x);
        return out;
    }
    int m = 0;
    uint64_t u = a;
    while (u % p == 0) {
        u /= p;
        ++m;
    }
    if (m > 0) {
        if (m & 1) return {};
        // x = p^{m/2} y with y^2 = u (mod p^{k-m}); lift y freely mod p^{k-m/2}
        auto sub = sqrt_mod_prime_power(u, p, k - m);
        if (sub.empty()) return {};
        uint64_t ph = ipow(p, m / 2);
        uint64_t pkm = ipow(p, k - m);
        std::vector<uint64_t> out;
        out.reserve(sub.size() * ph);
        for (uint64_t y : sub)
            for (uint64_t j = 0; j < ph; ++j) out.push_back(ph * (y + j * pkm) % pk);
        return sorted_unique(std::move(out));
    }
    if (p == 2) {
        if (k == 2) return a % 4 == 1 ? std::vector<uint64_t>{1, 3} : std::vector<uint64_t>{};
        if (a % 8 != 1) return {};
        // lift from y = 1 mod 8 one bit at a time
        uint64_t y = 1;
        for (int j = 3; j < k; ++j) {
            uint64_t mod = uint64_t(1) << (j + 1);
            if ((y * y - a) % mod != 0) y += uint64_t(1) << (j - 1);
        }
        uint64_t half = pk >> 1;
        return sorted_unique({y, pk - y, (y + half) % pk, (pk - y + half) % pk});
    }
    if (powmod(u, (p - 1) / 2, p) != 1) return {};
    uint64_t y = tonelli_shanks(u % p, p);
    uint64_t pj = p;
    for (int j = 1; j < k; ++j) {
        // Hensel: y <- y + t*p^j with t = (a - y^2)/p^j * (2y)^{-1} mod p
        uint64_t pj1 = pj * p;
        unsigned __int128 y2 = (unsigned __int128)y * y;
        uint64_t diff = uint64_t(((unsigned __int128)a + pj1 - y2 % pj1) % pj1);
        uint64_t t = (unsigned __int128)(diff / pj) % p * invmod(2 * y % p, p) % p;
        y = (y + (unsigned __int128)t * pj % pj1) % pj1;
        pj = pj1;
    }
    return sorted_unique({y, pk - y});
}

std::vector<uint64_t> sqrt_mod(const Int& d, uint64_t M) {
    if (M == 0) throw DomainError("sqrt_mod: modulus must be positive");
    uint64_t dd = mpz_fdiv_ui(d.get_mpz_t(), M);
    if (M == 1) return {0};
    std::vector<uint64_t> sols{0};
    uint64_t mod = 1;
    for (const auto& [p, e] : factorize(M)) {
        uint64_t pk = ipow(p, e);
        auto part = sqrt_mod_prime_power(dd % pk, p, e);
        if (part.empty()) return {};
        std::vector<uint64_t> next;
        next.reserve(sols.size() * part.size());
        uint64_t minv = invmod(mod % pk, pk);
        for (uint64_t x : sols)
            for (uint64_t y : part) {
                // CRT: z = x (mod `mod`), z = y (mod pk)
                uint64_t t = (unsigned __int128)((y + pk - x % pk) % pk) * minv % pk;
                next.push_back(x + mod * t);
            }
        sols = std::move(next);
        mod *= pk;
    }
    return sorted_unique(std::move(sols));
}

}  // namespace mockexact
