#include "mockexact/qseries.hpp"

#include <map>
#include <mutex>

namespace mockexact {

PowerSeries PowerSeries::operator+(const PowerSeries& o) const {
    PowerSeries r(std::min(length(), o.length()));
    for (std::size_t i = 0; i < r.length(); ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
}

PowerSeries PowerSeries::operator-(const PowerSeries& o) const {
    PowerSeries r(std::min(length(), o.length()));
    for (std::size_t i = 0; i < r.length(); ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
}

PowerSeries PowerSeries::operator*(const PowerSeries& o) const {
    PowerSeries r(std::min(length(), o.length()));
    std::size_t L = r.length();
    for (std::size_t i = 0; i < L; ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; i + j < L; ++j) {
            if (o.c_[j] == 0) continue;
            mpz_addmul(r.c_[i + j].get_mpz_t(), c_[i].get_mpz_t(), o.c_[j].get_mpz_t());
        }
    }
    return r;
}

PowerSeries PowerSeries::inverse() const {
    if (c_[0] != 1 && c_[0] != -1)
        throw DomainError("PowerSeries::inverse: constant term must be a unit");
    std::size_t L = length();
    PowerSeries r(L);
    r.c_[0] = c_[0];  // 1/(+-1) = +-1
    for (std::size_t n = 1; n < L; ++n) {
        Int acc;
        for (std::size_t k = 1; k <= n; ++k)
            mpz_addmul(acc.get_mpz_t(), c_[k].get_mpz_t(), r.c_[n - k].get_mpz_t());
        r.c_[n] = -acc * c_[0];
    }
    return r;
}

PowerSeries PowerSeries::alternated() const {
    PowerSeries r(length());
    for (std::size_t i = 0; i < length(); ++i) r.c_[i] = (i % 2 == 0) ? c_[i] : -c_[i];
    return r;
}

void PowerSeries::mul_factor(long j, int sign) {
    long L = long(length());
    if (j < 1) throw DomainError("mul_factor: exponent must be >= 1");
    if (j >= L) return;
    for (long i = L - 1; i >= j; --i) {
        if (sign > 0)
            c_[i] += c_[i - j];
        else
            c_[i] -= c_[i - j];
    }
}

void PowerSeries::div_factor(long j, int sign) {
    long L = long(length());
    if (j < 1) throw DomainError("div_factor: exponent must be >= 1");
    if (j >= L) return;
    for (long i = j; i < L; ++i) {
        if (sign > 0)
            c_[i] -= c_[i - j];
        else
            c_[i] += c_[i - j];
    }
}

void PowerSeries::add_shifted(const PowerSeries& s, long shift, long scale) {
    long L = long(length());
    for (long i = 0; i + shift < L && i < long(s.length()); ++i) {
        if (scale == 1)
            c_[i + shift] += s.c_[i];
        else
            c_[i + shift] += scale * s.c_[i];
    }
}

PowerSeries pochhammer(long a_exp, int a_sign, long q_step, long n, std::size_t L) {
    if (q_step < 1) throw DomainError("pochhammer: q_step must be positive");
    PowerSeries r = PowerSeries::one(L);
    // (a; q^step)_n = prod_{m=0}^{n-1} (1 - a_sign q^{a_exp + m step})
    for (long m = 0; m < n; ++m) r.mul_factor(a_exp + m * q_step, -a_sign);
    return r;
}

namespace {

// Families whose Pochhammer factors grow one at a time: keep a running
// product and add q^{e(n)} * prod at each n.
struct Running {
    PowerSeries acc, prod;
    explicit Running(std::size_t L) : acc(L), prod(PowerSeries::one(L)) {}
};

PowerSeries gen_f(std::size_t L) {  // sum q^{n^2} / (-q;q)_n^2
    Running s(L);
    for (long n = 0; n * n < long(L); ++n) {
        if (n > 0) {
            s.prod.div_factor(n, +1);
            s.prod.div_factor(n, +1);
        }
        s.acc.add_shifted(s.prod, n * n);
    }
    return s.acc;
}

PowerSeries gen_phi(std::size_t L) {  // sum q^{n^2} / (-q^2;q^2)_n
    Running s(L);
    for (long n = 0; n * n < long(L); ++n) {
        if (n > 0) s.prod.div_factor(2 * n, +1);
        s.acc.add_shifted(s.prod, n * n);
    }
    return s.acc;
}

PowerSeries gen_psi(std::size_t L) {  // sum_{n>=1} q^{n^2} / (q;q^2)_n
    Running s(L);
    for (long n = 1; n * n < long(L); ++n) {
        s.prod.div_factor(2 * n - 1, -1);
        s.acc.add_shifted(s.prod, n * n);
    }
    return s.acc;
}

PowerSeries gen_chi(std::size_t L) {  // sum q^{n^2} (-q;q)_n / (-q^3;q^3)_n
    Running s(L);
    for (long n = 0; n * n < long(L); ++n) {
        if (n > 0) {
            s.prod.mul_factor(n, +1);
            s.prod.div_factor(3 * n, +1);
        }
        s.acc.add_shifted(s.prod, n * n);
    }
    return s.acc;
}

PowerSeries gen_omega(std::size_t L) {  // sum q^{2n(n+1)} / (q;q^2)_{n+1}^2
    Running s(L);
    for (long n = 0; 2 * n * (n + 1) < long(L); ++n) {
        s.prod.div_factor(2 * n + 1, -1);
        s.prod.div_factor(2 * n + 1, -1);
        s.acc.add_shifted(s.prod, 2 * n * (n + 1));
    }
    return s.acc;
}

PowerSeries gen_nu(std::size_t L) {  // sum q^{n(n+1)} / (-q;q^2)_{n+1}
    Running s(L);
    for (long n = 0; n * (n + 1) < long(L); ++n) {
        s.prod.div_factor(2 * n + 1, +1);
        s.acc.add_shifted(s.prod, n * (n + 1));
    }
    return s.acc;
}

PowerSeries gen_f0(std::size_t L) {  // sum q^{n^2} / (-q;q)_n
    Running s(L);
    for (long n = 0; n * n < long(L); ++n) {
        if (n > 0) s.prod.div_factor(n, +1);
        s.acc.add_shifted(s.prod, n * n);
    }
    return s.acc;
}

PowerSeries gen_f1(std::size_t L) {  // sum q^{n(n+1)} / (-q;q)_n
    Running s(L);
    for (long n = 0; n * (n + 1) < long(L); ++n) {
        if (n > 0) s.prod.div_factor(n, +1);
        s.acc.add_shifted(s.prod, n * (n + 1));
    }
    return s.acc;
}

PowerSeries gen_F0(std::size_t L) {  // sum q^{2n^2} / (q;q^2)_n
    Running s(L);
    for (long n = 0; 2 * n * n < long(L); ++n) {
        if (n > 0) s.prod.div_factor(2 * n - 1, -1);
        s.acc.add_shifted(s.prod, 2 * n * n);
    }
    return s.acc;
}

PowerSeries gen_F1(std::size_t L) {  // sum q^{2n(n+1)} / (q;q^2)_{n+1}
    Running s(L);
    for (long n = 0; 2 * n * (n + 1) < long(L); ++n) {
        s.prod.div_factor(2 * n + 1, -1);
        s.acc.add_shifted(s.prod, 2 * n * (n + 1));
    }
    return s.acc;
}

PowerSeries gen_phi0(std::size_t L) {  // sum q^{n^2} (-q;q^2)_n
    Running s(L);
    for (long n = 0; n * n < long(L); ++n) {
        if (n > 0) s.prod.mul_factor(2 * n - 1, +1);
        s.acc.add_shifted(s.prod, n * n);
    }
    return s.acc;
}

PowerSeries gen_phi1(std::size_t L) {  // sum q^{(n+1)^2} (-q;q^2)_n
    Running s(L);
    for (long n = 0; (n + 1) * (n + 1) < long(L); ++n) {
        if (n > 0) s.prod.mul_factor(2 * n - 1, +1);
        s.acc.add_shifted(s.prod, (n + 1) * (n + 1));
    }
    return s.acc;
}

PowerSeries gen_psi0(std::size_t L) {  // sum q^{(n+1)(n+2)/2} (-q;q)_n
    Running s(L);
    for (long n = 0; (n + 1) * (n + 2) / 2 < long(L); ++n) {
        if (n > 0) s.prod.mul_factor(n, +1);
        s.acc.add_shifted(s.prod, (n + 1) * (n + 2) / 2);
    }
    return s.acc;
}

PowerSeries gen_psi1(std::size_t L) {  // sum q^{n(n+1)/2} (-q;q)_n
    Running s(L);
    for (long n = 0; n * (n + 1) / 2 < long(L); ++n) {
        if (n > 0) s.prod.mul_factor(n, +1);
        s.acc.add_shifted(s.prod, n * (n + 1) / 2);
    }
    return s.acc;
}

PowerSeries gen_rho(std::size_t L) {  // sum q^{2n(n+1)} (q;q^2)_{n+1} / (q^3;q^6)_{n+1}
    Running s(L);
    for (long n = 0; 2 * n * (n + 1) < long(L); ++n) {
        s.prod.mul_factor(2 * n + 1, -1);
        s.prod.div_factor(6 * n + 3, -1);
        s.acc.add_shifted(s.prod, 2 * n * (n + 1));
    }
    return s.acc;
}

PowerSeries gen_xi(std::size_t L) {  // 1 + 2 sum_{n>=1} q^{1+6n(n-1)} / ((q;q^6)_n (q^5;q^6)_n)
    Running s(L);
    s.acc.add_shifted(PowerSeries::one(1), 0);
    for (long n = 1; 1 + 6 * n * (n - 1) < long(L); ++n) {
        s.prod.div_factor(6 * n - 5, -1);
        s.prod.div_factor(6 * n - 1, -1);
        s.acc.add_shifted(s.prod, 1 + 6 * n * (n - 1), 2);
    }
    return s.acc;
}

PowerSeries gen_sigma(std::size_t L) {  // sum_{n>=1} q^{3n(n-1)} / ((-q;q^3)_n (-q^2;q^3)_n)
    Running s(L);
    for (long n = 1; 3 * n * (n - 1) < long(L); ++n) {
        s.prod.div_factor(3 * n - 2, +1);
        s.prod.div_factor(3 * n - 1, +1);
        s.acc.add_shifted(s.prod, 3 * n * (n - 1));
    }
    return s.acc;
}

// Families with denominator (q^{n+1};q)_m whose factors change entirely with
// n: expand each summand from scratch.
template <typename ExpFn, typename LoFn, typename HiFn>
PowerSeries gen_scratch(std::size_t L, ExpFn exp_of, LoFn lo, HiFn hi) {
    PowerSeries acc(L);
    for (long n = 0;; ++n) {
        long e = exp_of(n);
        if (e >= long(L)) break;
        PowerSeries t = PowerSeries::one(L - e);
        for (long j = lo(n); j <= hi(n); ++j) t.div_factor(j, -1);
        acc.add_shifted(t, e);
    }
    return acc;
}

PowerSeries gen_chi0_eulerian(std::size_t L) {  // sum q^n / (q^{n+1};q)_n
    return gen_scratch(
        L, [](long n) { return n; }, [](long n) { return n + 1; },
        [](long n) { return 2 * n; });
}

PowerSeries gen_chi1_eulerian(std::size_t L) {  // sum q^n / (q^{n+1};q)_{n+1}
    return gen_scratch(
        L, [](long n) { return n; }, [](long n) { return n + 1; },
        [](long n) { return 2 * n + 1; });
}

PowerSeries gen_calF0(std::size_t L) {  // sum q^{n^2} / (q^{n+1};q)_n
    return gen_scratch(
        L, [](long n) { return n * n; }, [](long n) { return n + 1; },
        [](long n) { return 2 * n; });
}

PowerSeries gen_calF1(std::size_t L) {  // sum q^{(n+1)^2} / (q^{n+1};q)_{n+1}
    return gen_scratch(
        L, [](long n) { return (n + 1) * (n + 1); }, [](long n) { return n + 1; },
        [](long n) { return 2 * n + 1; });
}

PowerSeries gen_calF2(std::size_t L) {  // sum q^{n(n+1)} / (q^{n+1};q)_{n+1}
    return gen_scratch(
        L, [](long n) { return n * (n + 1); }, [](long n) { return n + 1; },
        [](long n) { return 2 * n + 1; });
}

PowerSeries gen_chi0(std::size_t L) {  // 2 F0(q) - phi0(-q)
    PowerSeries F0 = gen_F0(L), phi0 = gen_phi0(L).alternated();
    PowerSeries r(L);
    for (std::size_t i = 0; i < L; ++i) r[i] = 2 * F0[i] - phi0[i];
    return r;
}

PowerSeries gen_chi1(std::size_t L) {  // 2 F1(q) + q^{-1} phi1(-q)
    PowerSeries F1 = gen_F1(L), phi1 = gen_phi1(L + 1).alternated();
    PowerSeries r(L);
    for (std::size_t i = 0; i < L; ++i) r[i] = 2 * F1[i] + phi1[i + 1];
    return r;
}

}  // namespace

std::string to_string(MockThetaId id) {
    switch (id) {
        case MockThetaId::f: return "f";
        case MockThetaId::phi: return "phi";
        case MockThetaId::psi: return "psi";
        case MockThetaId::chi: return "chi";
        case MockThetaId::omega: return "omega";
        case MockThetaId::nu: return "nu";
        case MockThetaId::f0: return "f0";
        case MockThetaId::f1: return "f1";
        case MockThetaId::F0: return "F0";
        case MockThetaId::F1: return "F1";
        case MockThetaId::phi0: return "phi0";
        case MockThetaId::phi1: return "phi1";
        case MockThetaId::psi0: return "psi0";
        case MockThetaId::psi1: return "psi1";
        case MockThetaId::chi0: return "chi0";
        case MockThetaId::chi1: return "chi1";
        case MockThetaId::calF0: return "calF0";
        case MockThetaId::calF1: return "calF1";
        case MockThetaId::calF2: return "calF2";
        case MockThetaId::rho_app: return "rho_app";
        case MockThetaId::xi_app: return "xi_app";
        case MockThetaId::sigma_app: return "sigma_app";
    }
    throw DomainError("unknown MockThetaId");
}

MockThetaId mock_theta_id_from_string(const std::string& s) {
    static const std::map<std::string, MockThetaId> table = [] {
        std::map<std::string, MockThetaId> t;
        for (int i = 0; i <= int(MockThetaId::sigma_app); ++i) {
            auto id = MockThetaId(i);
            t[to_string(id)] = id;
        }
        t["rho"] = MockThetaId::rho_app;
        t["xi"] = MockThetaId::xi_app;
        t["sigma"] = MockThetaId::sigma_app;
        return t;
    }();
    auto it = table.find(s);
    if (it == table.end()) throw DomainError("unknown mock theta function label: " + s);
    return it->second;
}

bool is_oracle_only(MockThetaId id) {
    switch (id) {
        case MockThetaId::nu:
        case MockThetaId::rho_app:
        case MockThetaId::xi_app:
        case MockThetaId::sigma_app: return true;
        default: return false;
    }
}

PowerSeries mock_theta_series(MockThetaId id, std::size_t L) {
    switch (id) {
        case MockThetaId::f: return gen_f(L);
        case MockThetaId::phi: return gen_phi(L);
        case MockThetaId::psi: return gen_psi(L);
        case MockThetaId::chi: return gen_chi(L);
        case MockThetaId::omega: return gen_omega(L);
        case MockThetaId::nu: return gen_nu(L);
        case MockThetaId::f0: return gen_f0(L);
        case MockThetaId::f1: return gen_f1(L);
        case MockThetaId::F0: return gen_F0(L);
        case MockThetaId::F1: return gen_F1(L);
        case MockThetaId::phi0: return gen_phi0(L);
        case MockThetaId::phi1: return gen_phi1(L);
        case MockThetaId::psi0: return gen_psi0(L);
        case MockThetaId::psi1: return gen_psi1(L);
        case MockThetaId::chi0: return gen_chi0(L);
        case MockThetaId::chi1: return gen_chi1(L);
        case MockThetaId::calF0: return gen_calF0(L);
        case MockThetaId::calF1: return gen_calF1(L);
        case MockThetaId::calF2: return gen_calF2(L);
        case MockThetaId::rho_app: return gen_rho(L);
        case MockThetaId::xi_app: return gen_xi(L);
        case MockThetaId::sigma_app: return gen_sigma(L);
    }
    throw DomainError("unknown MockThetaId");
}

PowerSeries mock_theta_series_eulerian(MockThetaId id, std::size_t L) {
    switch (id) {
        case MockThetaId::chi0: return gen_chi0_eulerian(L);
        case MockThetaId::chi1: return gen_chi1_eulerian(L);
        default: return mock_theta_series(id, L);
    }
}

PowerSeries partition_series(std::size_t L) {
    PowerSeries p(L);
    p[0] = 1;
    for (long n = 1; n < long(L); ++n) {
        Int acc;
        for (long k = 1;; ++k) {
            long g1 = k * (3 * k - 1) / 2;
            long g2 = k * (3 * k + 1) / 2;
            if (g1 > n) break;
            if (k % 2 == 1) {
                acc += p[n - g1];
                if (g2 <= n) acc += p[n - g2];
            } else {
                acc -= p[n - g1];
                if (g2 <= n) acc -= p[n - g2];
            }
        }
        p[n] = acc;
    }
    return p;
}

namespace {

struct OracleCache {
    std::mutex mu;
    std::map<MockThetaId, PowerSeries> series;
    PowerSeries partition{1};
    bool partition_init = false;
};

OracleCache& cache() {
    static OracleCache c;
    return c;
}

}  // namespace

Int oracle_coeff(MockThetaId id, long long n) {
    if (n < 0) throw DomainError("oracle_coeff: n must be nonnegative");
    auto& c = cache();
    std::lock_guard<std::mutex> lock(c.mu);
    auto it = c.series.find(id);
    if (it == c.series.end() || long long(it->second.length()) <= n) {
        std::size_t L = std::max<std::size_t>(128, std::size_t(2 * n + 1));
        if (it != c.series.end()) L = std::max(L, 2 * it->second.length());
        auto s = mock_theta_series(id, L);
        it = c.series.insert_or_assign(id, std::move(s)).first;
    }
    return it->second[std::size_t(n)];
}

Int partition_oracle(long long n) {
    if (n < 0) throw DomainError("partition_oracle: n must be nonnegative");
    auto& c = cache();
    std::lock_guard<std::mutex> lock(c.mu);
    if (!c.partition_init || long long(c.partition.length()) <= n) {
        std::size_t L = std::max<std::size_t>(256, std::size_t(2 * n + 1));
        if (c.partition_init) L = std::max(L, 2 * c.partition.length());
        c.partition = partition_series(L);
        c.partition_init = true;
    }
    return c.partition[std::size_t(n)];
}

}  // namespace mockexact
