#pragma once

#include <stdexcept>
#include <vector>

#include "mockexact/kloosterman.hpp"

namespace mockexact {

/// Stabilization policy for the conditionally convergent series. The p(n)
/// series converges absolutely and uses a computed tail bound instead of the
/// checkpoint window.
struct TruncationPolicy {
    long c_start_checkpoint = 32;
    int stability_window = 3;
    double residual_bound = 0.25;
    long c_hard_max = 100000;
    mpfr_prec_t precision_override = 0;  // 0 = automatic from the main term
    int threads = 1;
};

struct Checkpoint {
    long c;
    double value;
};

struct EvaluationReport {
    Int rounded_value;
    double residual = 0;
    long c_used = 0;
    mpfr_prec_t precision_used = 0;
    std::vector<Checkpoint> checkpoints;
};

class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& msg, EvaluationReport rep)
        : std::runtime_error(msg), report(std::move(rep)) {}
    EvaluationReport report;
};

/// Which route evaluates the coefficient series: the theorem-level sparse
/// sums (k_form), the general unitary-divisor engine behind Theorem-style
/// table data (table_form), or both with a required match.
enum class AlphaPath { k_form, table_form, both };

/// p(n) by the Rademacher series with A_c(n) in the sparse Whiteman form.
EvaluationReport partition_pn(long long n, const TruncationPolicy& policy = {});

/// alpha_theta(n) for the sixteen formula-bearing functions, plus chi0/chi1
/// through their combination identities.
EvaluationReport alpha_exact(MockThetaId id, long long n, const TruncationPolicy& policy = {},
                             AlphaPath path = AlphaPath::both);

struct Poincare18Checkpoint {
    long c;
    double re, im;
    double abs_err;
};

struct Poincare18Result {
    Complex approx;
    Complex target;
    std::vector<Poincare18Checkpoint> trace;

    Poincare18Result(mpfr_prec_t p) : approx(p), target(p) {}
};

/// Truncated constant term a_1(0) of the N=18, m=1 Poincare series at the
/// cusp 1/ell (ell = 3 or 6, sign picks the +- cusp matrix), against its
/// closed form 2 zeta_3^{-sign} (ell=3) or -zeta_3^{sign} (ell=6).
Poincare18Result poincare_const_18(int ell, int sign, long c_max, mpfr_prec_t p = 128);

struct CancellationReport {
    bool degenerate = false;
    double exponent = 0;
    double r2 = 0;
    PartialSumTable table;
};

/// Least-squares growth exponent of the running sup of |partial sums| over
/// x in [100, x_max]; requires x_max >= 1000.
CancellationReport cancellation_report(MockThetaId id, long long n, long x_max, int m,
                                       int threads = 1);

}  // namespace mockexact
