#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mockexact/real.hpp"

namespace mockexact {

/// Dense truncated integer power series in q.
class PowerSeries {
public:
    explicit PowerSeries(std::size_t length) : c_(length) {
        if (length == 0) throw DomainError("PowerSeries: length must be positive");
    }
    static PowerSeries one(std::size_t length) {
        PowerSeries s(length);
        s.c_[0] = 1;
        return s;
    }

    std::size_t length() const { return c_.size(); }
    Int& operator[](std::size_t i) { return c_[i]; }
    const Int& operator[](std::size_t i) const { return c_[i]; }

    PowerSeries operator+(const PowerSeries& o) const;
    PowerSeries operator-(const PowerSeries& o) const;
    /// Truncated product.
    PowerSeries operator*(const PowerSeries& o) const;
    /// Inverse modulo q^L; constant term must be a unit (+-1).
    PowerSeries inverse() const;
    /// q -> -q substitution: coefficient n picks up (-1)^n.
    PowerSeries alternated() const;

    /// In-place multiply by (1 + sign * q^j), j >= 1.
    void mul_factor(long j, int sign);
    /// In-place divide by (1 + sign * q^j), j >= 1 (geometric-series inversion).
    void div_factor(long j, int sign);
    /// acc += q^shift * s, truncated.
    void add_shifted(const PowerSeries& s, long shift, long scale = 1);

private:
    std::vector<Int> c_;
};

/// Truncated (a; q^step)_n with a = a_sign * q^{a_exp}, the only shapes the
/// Eulerian series here need.
PowerSeries pochhammer(long a_exp, int a_sign, long q_step, long n, std::size_t L);

enum class MockThetaId {
    f,
    phi,
    psi,
    chi,
    omega,
    nu,
    f0,
    f1,
    F0,
    F1,
    phi0,
    phi1,
    psi0,
    psi1,
    chi0,
    chi1,
    calF0,
    calF1,
    calF2,
    rho_app,
    xi_app,
    sigma_app,
};

std::string to_string(MockThetaId id);
/// Accepts the labels from to_string plus the aliases rho, xi, sigma.
MockThetaId mock_theta_id_from_string(const std::string& s);
/// nu, rho, xi, sigma have q-series only (no formula data).
bool is_oracle_only(MockThetaId id);

/// Exact coefficients alpha(0..L-1). chi0/chi1 are generated from the
/// combination identities chi0 = 2F0(q) - phi0(-q), chi1 = 2F1(q) + q^{-1}phi1(-q).
PowerSeries mock_theta_series(MockThetaId id, std::size_t L);

/// Direct Eulerian expansion of chi0/chi1 (identical to their own sum
/// definitions); kept as the cross-check for the combination identities.
PowerSeries mock_theta_series_eulerian(MockThetaId id, std::size_t L);

/// p(0..L-1) by Euler's pentagonal recurrence.
PowerSeries partition_series(std::size_t L);

/// Memoized coefficient access; extends the cached series geometrically.
Int oracle_coeff(MockThetaId id, long long n);
Int partition_oracle(long long n);

}  // namespace mockexact
