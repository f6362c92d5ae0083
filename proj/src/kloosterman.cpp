#include "mockexact/kloosterman.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "mockexact/numeric.hpp"

namespace mockexact {

Real classical_S(const Int& m, const Int& n, long c, mpfr_prec_t p) {
    if (c < 1) throw DomainError("classical_S: c must be positive");
    mpfr_prec_t pg = p + 32;
    Real acc(pg);
    for (long d = 0; d < c; ++d) {
        if (std::gcd(d, c) != 1) continue;
        long dbar = long(invmod(uint64_t(d), uint64_t(c)));
        Rat arg(m * dbar + n * d, Int(c));
        arg.canonicalize();
        acc += e_of(arg, pg).re;
    }
    return acc.rounded(p);
}

Real A_partition(long c, long long n, mpfr_prec_t p) {
    if (c < 1) throw DomainError("A_partition: c must be positive");
    mpfr_prec_t pg = p + 32;
    Real acc(pg);
    for (long d = 0; d < c; ++d) {
        if (std::gcd(d, c) != 1) continue;
        // e^{pi i s(d,c)} e(-dn/c) contributes its real part only
        Rat arg = dedekind_sum(d, c) / 2 - Rat(Int(d) * n, Int(c));
        arg.canonicalize();
        acc += e_of(arg, pg).re;
    }
    return acc.rounded(p);
}

Real A_partition_whiteman(long c, long long n, mpfr_prec_t p) {
    if (c < 1) throw DomainError("A_partition_whiteman: c must be positive");
    mpfr_prec_t pg = p + 32;
    Real acc(pg);
    auto sols = sqrt_mod(Int(1) - Int(24) * n, 24 * uint64_t(c));
    for (uint64_t b : sols) {
        if (b >= 6 * uint64_t(c)) continue;
        int ch = kronecker(12, (long long)b);
        if (ch == 0) continue;
        // cos(pi b/(6c)) = Re e(b/(12c))
        Rat arg((long)b, 12 * c);
        arg.canonicalize();
        Real t = e_of(arg, pg).re;
        if (ch > 0)
            acc += t;
        else
            acc -= t;
    }
    acc *= sqrt(Real::of(Rat(c, 3), pg));
    return acc.rounded(p);
}

Real A_star(long two_c, long long n, mpfr_prec_t p) {
    if (two_c < 2 || two_c % 2 != 0) throw DomainError("A_star: argument must be even positive");
    long c = two_c / 2;
    if (c % 2 == 1) {
        Real v = A_partition(two_c, n, p);
        return ((c + 1) / 2) % 2 == 0 ? v : -v;
    }
    Real v = A_partition(two_c, n - c / 2, p);
    return (c / 2) % 2 == 0 ? v : -v;
}

namespace {

std::atomic<double> g_reality_max{0.0};

void note_imag(const Real& im, mpfr_prec_t p) {
    double scaled = (abs(im) * Real::pow2(long(p), p)).to_double();
    double prev = g_reality_max.load();
    while (scaled > prev && !g_reality_max.compare_exchange_weak(prev, scaled)) {
    }
}

// Cached xi weight tables, keyed by (N, r) (the five (N,eps) pairs are
// disjoint in N, so N determines eps).
const std::vector<int>& xi_weights_cached(long N, const EpsCharacter& eps, long r) {
    static std::mutex mu;
    static std::map<std::pair<long, long>, std::vector<int>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(N, r);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, xi_weights(N, eps, r)).first;
    return it->second;
}

bool psi48_keep(uint64_t b) {
    uint64_t m = b % 48;
    return m == 2 || m == 14 || m == 34 || m == 46;
}

}  // namespace

double reality_monitor_max() { return g_reality_max.load(); }
void reality_monitor_reset() { g_reality_max.store(0.0); }

KloostermanValue A_theta(MockThetaId id, long long n, long c, int v, mpfr_prec_t p) {
    if (c < 1) throw DomainError("A_theta: c must be positive");
    ResolvedRow row = formula_spec(id, n);
    if (row.d_n <= 0) throw DomainError("A_theta: d_n <= 0 for this n");
    if (v < 1 || row.m % v != 0)
        throw DomainError("A_theta: the m argument must divide the row's pole order");

    long N = row.N;
    uint64_t Nc = uint64_t(N) * c;
    auto sols = sqrt_mod(Int(-row.d_n), 4 * Nc);
    mpfr_prec_t pg = p + 32;
    Real acc(pg);
    for (uint64_t b : sols) {
        if (b >= Nc) continue;
        if (row.psi_mod48_filter && !psi48_keep(b)) continue;
        GaussRat w = row.k_n * row_character(row.char_kind, (long long)b);
        if (!w.is_real())
            throw std::logic_error("A_theta: k_n * chi(b) not real (reality mechanism violated)");
        if (w.re == 0) continue;
        // sin(-pi v b/(Nc)) = -Im e(v b/(2Nc))
        Rat arg(Int(v) * b, Int(2) * Nc);
        arg.canonicalize();
        acc -= Real::of(w.re, pg) * e_of(arg, pg).im;
    }
    Rat pref(2 * c, N);
    pref.canonicalize();
    acc *= sqrt(Real::of(pref, pg));
    Complex val(p);
    val.re = acc.rounded(p);
    return {val, id, n, c, v, "sparse"};
}

KloostermanValue A_general_raw(const ResolvedRow& row, long c, int v, mpfr_prec_t p) {
    if (c < 1) throw DomainError("A_general_raw: c must be positive");
    if (row.d_n <= 0) throw DomainError("A_general_raw: d_n <= 0 for this n");
    long N = row.N;
    const auto& w = xi_weights_cached(N, *row.eps, row.r);
    uint64_t twoNc = 2 * uint64_t(N) * c;
    auto sols = sqrt_mod(Int(-row.d_n), 2 * twoNc);
    mpfr_prec_t pg = p + 32;
    Complex acc(pg);
    for (uint64_t b : sols) {
        if (b >= twoNc) continue;
        int wb = w[b % (2 * N)];
        if (wb == 0) continue;
        Rat arg(Int(v) * b, Int(twoNc));
        arg.canonicalize();
        acc += e_of(arg, pg) * long(wb);
    }
    Rat pref(c, 2 * N);
    pref.canonicalize();
    Complex val = (acc.rot90() * sqrt(Real::of(pref, pg))).rounded(p);
    note_imag(val.im, p);
    return {val, row.id, row.n, c, v, "general"};
}

KloostermanValue A_general(const ResolvedRow& row, long c, int v, mpfr_prec_t p) {
    KloostermanValue kv = A_general_raw(row, c, v, p);
    Real cn = Real::of(row.c_n, p + 8);
    kv.value = Complex(kv.value.re * cn, kv.value.im * cn).rounded(p);
    kv.variant = "general";
    return kv;
}

PartialSumTable partial_sums(MockThetaId id, long long n, long x_max, int m, mpfr_prec_t p,
                             int threads) {
    if (x_max < 1) throw DomainError("partial_sums: x_max must be >= 1");
    ResolvedRow row = formula_spec(id, n);
    if (row.d_n <= 0) throw DomainError("partial_sums: d_n <= 0 for this n");

    // Term values are independent; compute them (possibly) in parallel,
    // then accumulate strictly in ascending c.
    std::vector<Real> term(std::size_t(x_max) + 1, Real(p));
    auto worker = [&](long lo, long hi) {
        for (long c = lo; c < hi; ++c)
            term[c] = A_general_raw(row, c, m, p).value.re / c;
    };
    if (threads <= 1) {
        worker(1, x_max + 1);
    } else {
        std::vector<std::thread> pool;
        std::atomic<long> next{1};
        constexpr long chunk = 512;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (;;) {
                    long lo = next.fetch_add(chunk);
                    if (lo > x_max) return;
                    worker(lo, std::min(x_max, lo + chunk - 1) + 1);
                }
            });
        for (auto& th : pool) th.join();
    }

    PartialSumTable out;
    Real acc(p + 32), sup(p + 32);
    long next_cp = 1;
    for (long x = 1; x <= x_max; ++x) {
        acc += term[x];
        Real a = abs(acc);
        if (a > sup) sup = a;
        if (x == next_cp || x == x_max) {
            out.rows.push_back({x, acc.rounded(p), term[x], sup.rounded(p)});
            while (next_cp <= x) next_cp *= 2;
        }
    }
    return out;
}

}  // namespace mockexact
