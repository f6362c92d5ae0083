#pragma once

#include <vector>

#include "mockexact/intops.hpp"
#include "mockexact/qseries.hpp"
#include "mockexact/real.hpp"

namespace mockexact {

/// Level N together with its group of unitary divisors.
struct LevelData {
    long N = 1;
    std::vector<long> unitary_divisors;  // sorted, closed under star

    static LevelData of(long N);
};

/// a * b = ab/(a,b)^2 on unitary divisors of N.
long star(long a, long b, long N);

/// The unique x mod 2N with x = 1 (mod 2N/u) and x = -1 (mod 2u),
/// normalized to [0, 2N).
long psi_map(long u, long N);

/// Character of U_N, multiplicative over the unitary prime-power
/// factorization; eps_p(u) = -1 exactly when p | u.
struct EpsCharacter {
    std::vector<long> primes;

    int operator()(long u) const {
        int s = 1;
        for (long p : primes)
            if (u % p == 0) s = -s;
        return s;
    }
};

/// xi(b) = sum of eps(q) over unitary divisors q with r*psi(q) = b (mod 2N).
long xi_of_b(long b, long r, long N, const EpsCharacter& eps);

/// Weight table w[b] = xi(b) for b in [0, 2N); zero off r*Psi(2N).
std::vector<int> xi_weights(long N, const EpsCharacter& eps, long r);

/// Integral binary quadratic form a x^2 + b xy + c y^2.
struct QuadForm {
    long a = 0, b = 0, c = 0;

    Int disc() const { return Int(b) * b - Int(4) * a * c; }
    bool positive_definite() const { return a > 0 && disc() < 0; }
};

/// Middle coefficient class of W_u Q mod 2N, computed both through an
/// explicit integral W_u matrix and through the congruence psi(u)*r; the two
/// routes must agree.
long atkin_lehner_b(long u, const QuadForm& Q, long N);

/// Representatives of Gamma_infty \ Q^+_{N,D}: all (a, b) with 0 < a <= a_max,
/// N | a, 0 <= b < 2a, b^2 = D (mod 4a).
std::vector<std::pair<long, long>> gamma_infty_reps(long N, const Int& D, long a_max);

/// Root of Q(tau, 1) = 0 in the upper half-plane.
Complex heegner_point(const QuadForm& Q, mpfr_prec_t p);

enum class CharKind { kron_m3, kron_3_chi5, kron_m21 };

/// One residue class row of the formula tables.
struct FormulaRow {
    int res;       // class of n modulo the spec's row modulus
    Rat c_n;       // Table 1-3 constant
    long r;        // component index mod 2N
    GaussRat k_n;  // theorem-level constant, parity already folded in
};

/// Per-function record transcribed from Tables 1-3 and Theorems 1-3/fifth-2.
struct FormulaSpec {
    MockThetaId id;
    long N;
    EpsCharacter eps;
    int m;
    int row_modulus;  // 1, 2, 3 or 4
    long dA, dB;      // d_n = dA*n + dB
    CharKind char_kind;
    bool psi_mod48_filter;
    std::vector<FormulaRow> rows;
};

/// Row resolved at a concrete n. d_n may be <= 0; callers decide whether
/// that is a domain error.
struct ResolvedRow {
    MockThetaId id;
    long long n;
    long N;
    const EpsCharacter* eps;
    int m;
    Rat c_n;
    long long d_n;
    long r;
    GaussRat k_n;
    CharKind char_kind;
    bool psi_mod48_filter;
};

/// All sixteen formula-bearing functions (chi0/chi1 excluded; they are
/// assembled from combinations upstream).
const std::vector<FormulaSpec>& formula_table();
const FormulaSpec& formula_spec_of(MockThetaId id);
ResolvedRow formula_spec(MockThetaId id, long long n);
bool has_formula_data(MockThetaId id);

/// Theorem-level character at b for a row.
GaussRat row_character(CharKind kind, long long b);

}  // namespace mockexact
