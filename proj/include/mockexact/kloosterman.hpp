#pragma once

#include <vector>

#include "mockexact/tables.hpp"

namespace mockexact {

/// A Kloosterman-type sum value tagged with where it came from.
struct KloostermanValue {
    Complex value;
    MockThetaId id;
    long long n = 0;
    long c = 0;
    int m = 1;
    const char* variant = "";

    /// Real part; the theorem-level and general sums are real-valued
    /// (their imaginary part is rounding noise only).
    const Real& real_part() const { return value.re; }
};

/// Classical S(m,n,c) = sum over d mod c coprime of e((m dbar + n d)/c).
Real classical_S(const Int& m, const Int& n, long c, mpfr_prec_t p);

/// A_c(n) from the Dedekind-sum definition.
Real A_partition(long c, long long n, mpfr_prec_t p);

/// A_c(n) from the sparse Whiteman/Selberg form
/// sqrt(c/3) sum_{b in [0,6c), b^2 = 1-24n (24c)} (12/b) cos(pi b/6c).
Real A_partition_whiteman(long c, long long n, mpfr_prec_t p);

/// A*_{2c}(n): (-1)^{(c+1)/2} A_{2c}(n) for odd c, (-1)^{c/2} A_{2c}(n-c/2)
/// for even c.
Real A_star(long two_c, long long n, mpfr_prec_t p);

/// Theorem-level sparse sum A_c^{(v)}(n|theta): the k_n-weighted character
/// sum over b in [0, Nc) with b^2 = -d_n (mod 4Nc), sine argument
/// -pi v b/(Nc); the psi(q) row additionally filters b = 2,14,34,46 mod 48.
/// v must divide the row's m (so v=1 except for the second fifth-order
/// family, where v is 1 or 2).
KloostermanValue A_theta(MockThetaId id, long long n, long c, int v, mpfr_prec_t p);

/// The general unitary-divisor sum of the defining equation:
/// i sqrt(c/2N) sum_{u||N} eps(u) sum_{b in [0,2Nc), b = r psi(u) (2N),
/// b^2 = -d_n (4Nc)} e(v b / 2Nc).
KloostermanValue A_general_raw(const ResolvedRow& row, long c, int v, mpfr_prec_t p);

/// c_n * A_general_raw: the general engine's value of the theorem-level sum
/// (equal to A_theta; the table constant c_n absorbs the k_n mismatch).
KloostermanValue A_general(const ResolvedRow& row, long c, int v, mpfr_prec_t p);

/// Largest |Im|/2^{-p} seen across A_general_raw evaluations since the last
/// reset; the reality invariant asks this to stay below 2^{16}.
double reality_monitor_max();
void reality_monitor_reset();

struct PartialSumRow {
    long x;
    Real partial;    // sum_{c<=x} A_c^{(m)}/c
    Real last_term;  // the c=x term
    Real running_sup;
};

struct PartialSumTable {
    std::vector<PartialSumRow> rows;  // at checkpoints 1,2,4,...,x_max
};

/// Running partial sums of A_c^{(m)}(n|theta)/c in ascending-c order,
/// reported at logarithmically spaced checkpoints. Term values for disjoint
/// c-chunks may be computed on several threads; accumulation order is fixed.
PartialSumTable partial_sums(MockThetaId id, long long n, long x_max, int m, mpfr_prec_t p,
                             int threads = 1);

}  // namespace mockexact
