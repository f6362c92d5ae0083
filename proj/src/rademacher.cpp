#include "mockexact/rademacher.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <deque>
#include <numeric>
#include <thread>

#include "mockexact/numeric.hpp"

namespace mockexact {

namespace {

long next_checkpoint(long c) { return std::max(c + 1, long(std::ceil(double(c) * 1.41421356))); }

double to_nearest(const Real& v, Int& rounded) {
    rounded = v.round_to_int();
    return abs(v - Real::of(rounded, v.prec())).to_double();
}

struct PathState {
    Real acc;
    std::deque<std::pair<Int, double>> history;  // (rounded, residual) at checkpoints

    explicit PathState(mpfr_prec_t p) : acc(p) {}
};

// One term pair (k-form, table-form contribution) of the alpha series at c.
struct TermPair {
    Real k, t;
    TermPair(mpfr_prec_t p) : k(p), t(p) {}
};

}  // namespace

EvaluationReport alpha_exact(MockThetaId id, long long n, const TruncationPolicy& policy,
                             AlphaPath path) {
    // chi0/chi1 are combinations of fifth-order evaluations.
    if (id == MockThetaId::chi0 || id == MockThetaId::chi1) {
        bool zero = id == MockThetaId::chi0;
        EvaluationReport a = alpha_exact(zero ? MockThetaId::F0 : MockThetaId::F1, n, policy, path);
        EvaluationReport b =
            alpha_exact(zero ? MockThetaId::phi0 : MockThetaId::phi1, n + (zero ? 0 : 1), policy, path);
        EvaluationReport out;
        // chi0(n) = 2 F0(n) - (-1)^n phi0(n); chi1(n) = 2 F1(n) + (-1)^{n+1} phi1(n+1):
        // either way the phi-part carries -1 for even n, +1 for odd n.
        int sign_b = (n % 2 == 0) ? -1 : 1;
        out.rounded_value = 2 * a.rounded_value + sign_b * b.rounded_value;
        out.residual = std::max(a.residual, b.residual);
        out.c_used = std::max(a.c_used, b.c_used);
        out.precision_used = std::max(a.precision_used, b.precision_used);
        return out;
    }

    ResolvedRow row = formula_spec(id, n);
    if (row.d_n <= 0)
        throw DomainError("alpha_exact: d_n <= 0 for " + to_string(id) +
                          "; the formula does not cover this n (use the oracle)");

    double d = double(row.d_n);
    mpfr_prec_t p = policy.precision_override
                        ? policy.precision_override
                        : precision_for_exponent(M_PI * std::sqrt(d) / double(row.N));
    mpfr_prec_t pg = p + 32;

    std::vector<int> vs;
    for (int v = 1; v <= row.m; ++v)
        if (row.m % v == 0) vs.push_back(v);

    bool want_k = path != AlphaPath::table_form;
    bool want_t = path != AlphaPath::k_form;

    Real sqrt_d = sqrt(Real::of(Int(row.d_n), pg));
    Real pi_g = Real::pi(pg);
    // prefactors 2 pi / d^{1/4} (k-form) and 2 pi c_n / d^{1/4} (table form)
    Real pref_k = 2 * pi_g / root4(Real::of(Int(row.d_n), pg));
    Real pref_t = pref_k * Real::of(row.c_n, pg);

    auto term_at = [&](long c) {
        TermPair tp(pg);
        for (int v : vs) {
            int mu = moebius(uint64_t(row.m / v));
            if (mu == 0) continue;
            Real bessel = bessel_I_half(pi_g * v * sqrt_d / (row.N * (long)c));
            Real common = sqrt(Real::of(long(v), pg)) * bessel / c;
            if (mu < 0) common = -common;
            if (want_k) tp.k += A_theta(id, n, c, v, pg).value.re * common;
            if (want_t) tp.t += A_general_raw(row, c, v, pg).value.re * common;
        }
        return tp;
    };

    PathState st_k(pg), st_t(pg);
    EvaluationReport report;
    report.precision_used = p;

    long c_done = 0;
    long checkpoint = std::max<long>(2, policy.c_start_checkpoint);
    while (c_done < policy.c_hard_max) {
        long lo = c_done + 1, hi = std::min(checkpoint, policy.c_hard_max);
        // evaluate terms lo..hi (parallel chunks, ordered reduction)
        std::vector<TermPair> terms;
        terms.reserve(hi - lo + 1);
        for (long c = lo; c <= hi; ++c) terms.emplace_back(pg);
        if (policy.threads <= 1) {
            for (long c = lo; c <= hi; ++c) terms[c - lo] = term_at(c);
        } else {
            std::atomic<long> next{lo};
            std::vector<std::thread> pool;
            for (int t = 0; t < policy.threads; ++t)
                pool.emplace_back([&] {
                    for (;;) {
                        long c = next.fetch_add(1);
                        if (c > hi) return;
                        terms[c - lo] = term_at(c);
                    }
                });
            for (auto& th : pool) th.join();
        }
        for (auto& tp : terms) {
            st_k.acc += tp.k;
            st_t.acc += tp.t;
        }
        c_done = hi;

        Int rk, rt;
        double resk = 0, rest = 0;
        Real vk = pref_k * st_k.acc, vt = pref_t * st_t.acc;
        if (want_k) resk = to_nearest(vk, rk);
        if (want_t) rest = to_nearest(vt, rt);
        report.checkpoints.push_back({c_done, (want_k ? vk : vt).to_double()});

        Int rounded = want_k ? rk : rt;
        double res = std::max(resk, rest);
        bool consistent = !(want_k && want_t) || rk == rt;
        st_k.history.emplace_back(rounded, consistent ? res : 1.0);
        if (int(st_k.history.size()) > policy.stability_window) st_k.history.pop_front();

        bool stable = int(st_k.history.size()) == policy.stability_window;
        for (const auto& [val, r] : st_k.history)
            stable = stable && val == st_k.history.front().first && r < policy.residual_bound;
        if (stable) {
            report.rounded_value = rounded;
            report.residual = res;
            report.c_used = c_done;
            return report;
        }
        checkpoint = next_checkpoint(checkpoint);
    }
    report.c_used = c_done;
    throw ConvergenceError("alpha_exact: series did not stabilize by c_hard_max for " +
                               to_string(id) + " at n=" + std::to_string(n),
                           report);
}

EvaluationReport partition_pn(long long n, const TruncationPolicy& policy) {
    if (n < 1) throw DomainError("partition_pn: n must be >= 1");
    double dn = 24.0 * double(n) - 1.0;
    double x = M_PI * std::sqrt(dn) / 6.0;
    mpfr_prec_t p =
        policy.precision_override ? policy.precision_override : precision_for_exponent(x);
    mpfr_prec_t pg = p + 32;

    double pref_d = 2 * M_PI / std::pow(dn, 0.75);
    // Crude absolutely-convergent tail: sum_{c>C} c^{-1/2} I_{3/2}(x/c)
    // with I_{3/2}(y) <= 0.37 sqrt(2/pi) y^{3/2} for y <= 1.
    long C = long(std::ceil(std::max(
        {x, 2.0, pref_d * 0.30 * std::pow(x, 1.5) * 2.0 / policy.residual_bound})));

    Real acc(pg);
    Real x_r = Real::pi(pg) * sqrt(Real::of(Int(24) * n - 1, pg)) / 6;
    for (long c = 1; c <= C; ++c)
        acc += A_partition_whiteman(c, n, pg) * bessel_I_three_half(x_r / c) / c;
    Real pref = 2 * Real::pi(pg) / (root4(Real::of(Int(24) * n - 1, pg)) * sqrt(sqrt(Real::of(Int(24) * n - 1, pg))));
    // (24n-1)^{3/4} = d^{1/4} * d^{1/2}
    Real value = 2 * Real::pi(pg) / (root4(Real::of(Int(24) * n - 1, pg)) *
                                     sqrt(Real::of(Int(24) * n - 1, pg))) *
                 acc;

    EvaluationReport report;
    report.precision_used = p;
    report.c_used = C;
    report.residual = to_nearest(value, report.rounded_value);
    report.checkpoints.push_back({C, value.to_double()});
    if (report.residual >= policy.residual_bound)
        throw ConvergenceError("partition_pn: residual above bound at n=" + std::to_string(n),
                               report);
    return report;
}

Poincare18Result poincare_const_18(int ell, int sign, long c_max, mpfr_prec_t p) {
    if (ell != 3 && ell != 6) throw DomainError("poincare_const_18: ell must be 3 or 6");
    if (sign != 1 && sign != -1) throw DomainError("poincare_const_18: sign must be +-1");
    if (c_max < 10) throw DomainError("poincare_const_18: c_max must be >= 10");

    long ellp = 18 / ell;
    mpfr_prec_t pg = p + 16;

    Poincare18Result out(p);
    // target: 2 zeta_3^{-sign} for ell=3, -zeta_3^{sign} for ell=6
    if (ell == 3) {
        out.target = (e_of(Rat(-sign, 3), pg) * 2L).rounded(p);
    } else {
        Complex t = e_of(Rat(sign, 3), pg);
        out.target = Complex(-t.re, -t.im).rounded(p);
    }

    // checkpoints in terms of the original c (multiples of ell)
    std::vector<long> cps;
    for (int j = 4; j >= 0; --j) {
        long cp = long(double(c_max) / std::pow(10.0, j * 0.5));
        cp = std::max(cp, ell);
        if (cps.empty() || cp > cps.back()) cps.push_back(cp);
    }
    cps.back() = c_max;

    // a_1(0) = (2 pi^2 / 9 ell) sum_{c'>=1} c'^{-2} T_{c'},
    // T_{c'} = sum_{d mod 18c', (d,18c')=1, d = sign*c' (ell')} e(-dbar/(ell c'))
    Real pref = 2 * Real::pi(pg) * Real::pi(pg) / (9 * ell);
    Complex acc(pg);
    std::size_t cp_idx = 0;
    long Cp = c_max / ell;
    for (long c2 = 1; c2 <= Cp; ++c2) {
        uint64_t mod = 18 * uint64_t(c2);
        long want = long(((long long)sign * c2) % ellp);
        if (want < 0) want += ellp;
        Complex t(pg);
        for (uint64_t dd = 0; dd < mod; ++dd) {
            if (long(dd % uint64_t(ellp)) != want) continue;
            if (std::gcd(dd, mod) != 1) continue;
            uint64_t dbar = invmod(dd, mod);
            Rat arg(-Int(dbar), Int(ell) * c2);
            arg.canonicalize();
            t += e_of(arg, pg);
        }
        acc += t * Real::of(Rat(1, c2 * c2), pg);
        while (cp_idx < cps.size() && ell * c2 >= cps[cp_idx]) {
            Complex val = acc * pref;
            Real err = (val - out.target).abs();
            out.trace.push_back({ell * c2, val.re.to_double(), val.im.to_double(),
                                 err.to_double()});
            ++cp_idx;
        }
    }
    out.approx = (acc * pref).rounded(p);
    return out;
}

CancellationReport cancellation_report(MockThetaId id, long long n, long x_max, int m,
                                       int threads) {
    if (x_max < 1000) throw DomainError("cancellation_report: x_max must be >= 1000");
    CancellationReport rep;
    rep.table = partial_sums(id, n, x_max, m, 128, threads);

    std::vector<double> lx, ly;
    for (const auto& row : rep.table.rows) {
        if (row.x < 100) continue;
        double sup = row.running_sup.to_double();
        if (sup > 1e-18) {
            lx.push_back(std::log(double(row.x)));
            ly.push_back(std::log(sup));
        }
    }
    if (lx.size() < 3) {
        rep.degenerate = true;
        return rep;
    }
    double n_ = double(lx.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        sx += lx[i];
        sy += ly[i];
        sxx += lx[i] * lx[i];
        sxy += lx[i] * ly[i];
        syy += ly[i] * ly[i];
    }
    double denom = n_ * sxx - sx * sx;
    rep.exponent = (n_ * sxy - sx * sy) / denom;
    double ss_res = syy - sy * sy / n_ - rep.exponent * (sxy - sx * sy / n_);
    double ss_tot = syy - sy * sy / n_;
    rep.r2 = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
    return rep;
}

}  // namespace mockexact
