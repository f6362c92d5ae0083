#include "mockexact/tables.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace mockexact {

LevelData LevelData::of(long N) {
    if (N < 1) throw DomainError("LevelData: N must be positive");
    LevelData ld;
    ld.N = N;
    for (long u = 1; u <= N; ++u)
        if (N % u == 0 && std::gcd(u, N / u) == 1) ld.unitary_divisors.push_back(u);
    return ld;
}

namespace {

bool is_unitary(long u, long N) {
    return u >= 1 && N % u == 0 && std::gcd(u, N / u) == 1;
}

}  // namespace

long star(long a, long b, long N) {
    if (!is_unitary(a, N) || !is_unitary(b, N))
        throw DomainError("star: arguments must be unitary divisors");
    long g = std::gcd(a, b);
    return a / g * (b / g);
}

long psi_map(long u, long N) {
    if (!is_unitary(u, N)) throw DomainError("psi_map: u must be a unitary divisor");
    // x = 1 (mod 2N/u), x = -1 (mod 2u); unique mod 2N
    long m1 = 2 * N / u, m2 = 2 * u;
    for (long x = 1; x < 2 * N + 1; x += m1)
        if ((x + 1) % m2 == 0) return x % (2 * N);
    throw std::logic_error("psi_map: CRT failed");
}

long xi_of_b(long b, long r, long N, const EpsCharacter& eps) {
    long twoN = 2 * N;
    long bb = ((b % twoN) + twoN) % twoN;
    long total = 0;
    for (long u = 1; u <= N; ++u) {
        if (!is_unitary(u, N)) continue;
        if ((r * psi_map(u, N)) % twoN == bb) total += eps(u);
    }
    return total;
}

std::vector<int> xi_weights(long N, const EpsCharacter& eps, long r) {
    std::vector<int> w(2 * N, 0);
    for (long u = 1; u <= N; ++u) {
        if (!is_unitary(u, N)) continue;
        w[(r * psi_map(u, N)) % (2 * N)] += eps(u);
    }
    return w;
}

long atkin_lehner_b(long u, const QuadForm& Q, long N) {
    if (Q.a % N != 0) throw DomainError("atkin_lehner_b: N must divide a");
    if (!is_unitary(u, N)) throw DomainError("atkin_lehner_b: u must be a unitary divisor");
    long twoN = 2 * N;

    // W_u = u^{-1/2} [[alpha u, beta], [N, u]] with alpha u - beta N/u = 1,
    // beta the smallest nonnegative choice.
    long nu = N / u;
    long alpha = 0, beta = 0;
    for (long x = 0; x < nu; ++x)
        if ((Int(x) * u - 1) % nu == 0) {
            alpha = x;
            beta = long(Int((Int(x) * u - 1) / nu).get_si());
            break;
        }
    while (beta < 0) {
        alpha += nu;
        beta += u;
    }
    assert(alpha * u - beta * nu == 1);

    // Exact action on the form (gamma = delta = 1 folded in).
    Int a2 = Int(Q.a) * u - Int(Q.b) * N + Int(Q.c) * N * nu;
    Int b2 = Int(-2) * Q.a * beta + Int(Q.b) * (alpha * u + beta * nu) - Int(2) * Q.c * alpha * N;
    Int c2 = Int(Q.a) * beta * beta / u - Int(Q.b) * alpha * beta + Int(Q.c) * alpha * alpha * u;
    assert(b2 * b2 - 4 * a2 * c2 == Q.disc());
    assert(a2 % N == 0);

    long via_matrix = long(mpz_fdiv_ui(b2.get_mpz_t(), twoN));
    long r = ((Q.b % twoN) + twoN) % twoN;
    long via_psi = (psi_map(u, N) * r) % twoN;
    if (via_matrix != via_psi)
        throw std::logic_error("atkin_lehner_b: matrix and psi routes disagree");
    return via_matrix;
}

std::vector<std::pair<long, long>> gamma_infty_reps(long N, const Int& D, long a_max) {
    if (D >= 0) throw DomainError("gamma_infty_reps: D must be negative");
    std::vector<std::pair<long, long>> out;
    for (long a = N; a <= a_max; a += N) {
        auto sols = sqrt_mod(D, 4 * uint64_t(a));
        std::vector<long> bs;
        for (uint64_t s : sols) bs.push_back(long(s % (2 * uint64_t(a))));
        std::sort(bs.begin(), bs.end());
        bs.erase(std::unique(bs.begin(), bs.end()), bs.end());
        for (long b : bs) out.emplace_back(a, b);
    }
    return out;
}

Complex heegner_point(const QuadForm& Q, mpfr_prec_t p) {
    if (!Q.positive_definite()) throw DomainError("heegner_point: form must be positive definite");
    Real abs_d = Real::of(-Q.disc(), p + 8);
    Rat re(-Q.b, 2 * Q.a);
    re.canonicalize();
    return Complex(Real::of(re, p), (sqrt(abs_d) / (2 * Q.a)).rounded(p));
}

namespace {

GaussRat gr(long re_num, long re_den, long im_num, long im_den) {
    Rat re(re_num, re_den), im(im_num, im_den);
    re.canonicalize();
    im.canonicalize();
    return GaussRat(re, im);
}

Rat rat(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

std::vector<FormulaSpec> build_table() {
    const EpsCharacter eps3{{3}};
    const EpsCharacter eps237{{2, 3, 7}};
    const EpsCharacter eps235{{2, 3, 5}};
    std::vector<FormulaSpec> t;

    auto add = [&](MockThetaId id, long N, EpsCharacter eps, int m, int mod, long dA, long dB,
                   CharKind ck, bool psi48, std::vector<FormulaRow> rows) {
        t.push_back({id, N, std::move(eps), m, mod, dA, dB, ck, psi48, std::move(rows)});
    };

    // Order 3 (Table 1 + Theorem 1): all m=1, eps = eps_3.
    add(MockThetaId::f, 6, eps3, 1, 1, 24, -1, CharKind::kron_m3, false,
        {{0, rat(1, 1), 1, gr(1, 1, 0, 1)}});
    add(MockThetaId::omega, 6, eps3, 1, 2, 12, 8, CharKind::kron_m3, false,
        {{0, rat(-1, 4), 4, gr(-1, 2, 0, 1)}, {1, rat(-1, 4), 2, gr(1, 2, 0, 1)}});
    add(MockThetaId::chi, 18, eps3, 1, 3, 24, -1, CharKind::kron_m3, false,
        {{0, rat(1, 1), 1, gr(1, 1, 0, 1)},
         {1, rat(1, 1), 7, gr(1, 1, 0, 1)},
         {2, rat(-1, 1), 5, gr(1, 1, 0, 1)}});
    add(MockThetaId::phi, 24, eps3, 1, 4, 24, -1, CharKind::kron_m3, false,
        {{0, rat(1, 1), 1, gr(1, 1, 0, 1)},
         {1, rat(-1, 1), 13, gr(-1, 1, 0, 1)},
         {2, rat(1, 1), 7, gr(1, 1, 0, 1)},
         {3, rat(1, 1), 5, gr(-1, 1, 0, 1)}});
    add(MockThetaId::psi, 24, eps3, 1, 1, 96, -4, CharKind::kron_m3, true,
        {{0, rat(-1, 1), 2, gr(1, 1, 0, 1)}});

    // Order 5 (Table 2): N=60, eps = eps_2 eps_3 eps_5; left family m=1,
    // right family m=2 (Theorem fifth-2).
    add(MockThetaId::psi0, 60, eps235, 1, 1, 240, -4, CharKind::kron_3_chi5, false,
        {{0, rat(-1, 1), 2, gr(0, 1, -1, 1)}});
    add(MockThetaId::psi1, 60, eps235, 1, 1, 240, 44, CharKind::kron_3_chi5, false,
        {{0, rat(-1, 1), 14, gr(1, 1, 0, 1)}});
    add(MockThetaId::phi0, 60, eps235, 1, 2, 120, -1, CharKind::kron_3_chi5, false,
        {{0, rat(1, 1), 1, gr(1, 1, 0, 1)}, {1, rat(-1, 1), 11, gr(-1, 1, 0, 1)}});
    add(MockThetaId::phi1, 60, eps235, 1, 2, 120, -49, CharKind::kron_3_chi5, false,
        {{0, rat(-1, 1), 7, gr(0, 1, -1, 1)}, {1, rat(1, 1), 13, gr(0, 1, 1, 1)}});
    add(MockThetaId::f0, 60, eps235, 2, 1, 240, -4, CharKind::kron_3_chi5, false,
        {{0, rat(1, 1), 2, gr(0, 1, 1, 1)}});
    add(MockThetaId::f1, 60, eps235, 2, 1, 240, 44, CharKind::kron_3_chi5, false,
        {{0, rat(1, 1), 14, gr(-1, 1, 0, 1)}});
    add(MockThetaId::F0, 60, eps235, 2, 2, 120, -1, CharKind::kron_3_chi5, false,
        {{0, rat(-1, 2), 1, gr(-1, 2, 0, 1)}, {1, rat(-1, 2), 11, gr(-1, 2, 0, 1)}});
    add(MockThetaId::F1, 60, eps235, 2, 2, 120, 71, CharKind::kron_3_chi5, false,
        {{0, rat(-1, 2), 13, gr(0, 1, -1, 2)}, {1, rat(-1, 2), 7, gr(0, 1, -1, 2)}});

    // Order 7 (Table 3): N=42, m=1, eps = eps_2 eps_3 eps_7.
    add(MockThetaId::calF0, 42, eps237, 1, 1, 168, -1, CharKind::kron_m21, false,
        {{0, rat(1, 1), 1, gr(1, 1, 0, 1)}});
    add(MockThetaId::calF1, 42, eps237, 1, 1, 168, -25, CharKind::kron_m21, false,
        {{0, rat(-1, 1), 5, gr(-1, 1, 0, 1)}});
    add(MockThetaId::calF2, 42, eps237, 1, 1, 168, 47, CharKind::kron_m21, false,
        {{0, rat(-1, 1), 11, gr(-1, 1, 0, 1)}});
    return t;
}

// Transcription self-check: for every row, r^2 = -d_n (mod 4N) must hold on
// the whole residue class, and eps(N) = -1.
void validate_table(const std::vector<FormulaSpec>& t) {
    for (const auto& spec : t) {
        if (spec.eps(spec.N) != -1) throw std::logic_error("formula table: eps(N) != -1");
        for (const auto& row : spec.rows) {
            long fourN = 4 * spec.N;
            if ((spec.dA * spec.row_modulus) % fourN != 0)
                throw std::logic_error("formula table: dA*modulus not divisible by 4N for " +
                                       to_string(spec.id));
            long v = ((row.r * row.r + spec.dA * row.res + spec.dB) % fourN + fourN) % fourN;
            if (v != 0)
                throw std::logic_error("formula table: r^2 != -d_n mod 4N for " +
                                       to_string(spec.id));
        }
    }
}

}  // namespace

const std::vector<FormulaSpec>& formula_table() {
    static const std::vector<FormulaSpec> t = [] {
        auto table = build_table();
        validate_table(table);
        return table;
    }();
    return t;
}

const FormulaSpec& formula_spec_of(MockThetaId id) {
    for (const auto& s : formula_table())
        if (s.id == id) return s;
    throw DomainError("no formula data for " + to_string(id) +
                      " (oracle-only id, or chi0/chi1 which are combinations)");
}

bool has_formula_data(MockThetaId id) {
    for (const auto& s : formula_table())
        if (s.id == id) return true;
    return false;
}

ResolvedRow formula_spec(MockThetaId id, long long n) {
    if (n < 0) throw DomainError("formula_spec: n must be nonnegative");
    const FormulaSpec& s = formula_spec_of(id);
    int cls = int(n % s.row_modulus);
    for (const auto& row : s.rows) {
        if (row.res != cls) continue;
        return ResolvedRow{id,    n,        s.N,   &s.eps,      s.m,
                           row.c_n, s.dA * n + s.dB, row.r, row.k_n, s.char_kind,
                           s.psi_mod48_filter};
    }
    throw std::logic_error("formula_spec: no row matches n's residue class");
}

GaussRat row_character(CharKind kind, long long b) {
    switch (kind) {
        case CharKind::kron_m3: return gr(kronecker(-3, b), 1, 0, 1);
        case CharKind::kron_m21: return gr(kronecker(-21, b), 1, 0, 1);
        case CharKind::kron_3_chi5: {
            GaussInt c5 = chi5(b);
            long k = kronecker(3, b);
            return gr(k * c5.re, 1, k * c5.im, 1);
        }
    }
    throw DomainError("unknown character kind");
}

}  // namespace mockexact
