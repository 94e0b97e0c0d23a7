#pragma once

#include <cmath>
#include <string>

#include "kgring/errors.hpp"

namespace kgring {

/// Physical inputs in natural units (hbar = c = 1).
///
/// The central potential is the Kratzer well -A/r + B/r^2 with
/// A = 2*a0*r0 and B = a0*r0^2; the angular term is C*cot^2(theta)/r^2.
struct ModelParams {
    double mu;  ///< rest mass, > 0
    double a0;  ///< dissociation energy, > 0
    double r0;  ///< equilibrium internuclear distance, > 0
    double C;   ///< ring-shape strength, >= 0
    int D;      ///< spatial dimension, >= 2

    ModelParams(double mu_, double a0_, double r0_, double C_ = 0.0, int D_ = 3)
        : mu(mu_), a0(a0_), r0(r0_), C(C_), D(D_) {
        if (!(mu > 0.0)) throw DomainError("ModelParams: mu must be > 0");
        if (!(a0 > 0.0)) throw DomainError("ModelParams: a0 must be > 0");
        if (!(r0 > 0.0)) throw DomainError("ModelParams: r0 must be > 0");
        if (!(C >= 0.0)) throw DomainError("ModelParams: C must be >= 0");
        if (D < 2) throw DomainError("ModelParams: D must be an integer >= 2");
    }
};

/// Derived potential couplings A = 2*a0*r0, B = a0*r0^2.
struct Couplings {
    double A;
    double B;
};

inline Couplings derive_couplings(const ModelParams& p) {
    return {2.0 * p.a0 * p.r0, p.a0 * p.r0 * p.r0};
}

/// State labels: radial node count n, polar index n_theta, azimuthal magnitude m.
/// The sign of m lives only in the azimuthal phase factor exp(+-i m phi).
struct QuantumNumbers {
    int n;
    int n_theta;
    int m;

    QuantumNumbers(int n_, int n_theta_, int m_) : n(n_), n_theta(n_theta_), m(m_) {
        if (n < 0 || n_theta < 0 || m < 0)
            throw DomainError("QuantumNumbers: n, n_theta, m must be nonnegative integers");
    }
};

/// Energy-split quantities at a candidate energy E:
/// alpha1_sq = mu - E, alpha2_sq = mu + E, eps = sqrt(alpha1_sq * alpha2_sq).
struct EnergyChannel {
    double alpha1_sq;
    double alpha2_sq;
    double eps;
};

inline EnergyChannel channel_at(const ModelParams& p, double E) {
    if (!(std::abs(E) < p.mu))
        throw OutOfBoundWindow("channel_at: |E| must be < mu (got E=" + std::to_string(E) + ")");
    const double a1 = p.mu - E;
    const double a2 = p.mu + E;
    return {a1, a2, std::sqrt(a1 * a2)};
}

/// Substitution pair mapping the relativistic formulas onto Schroedinger ones:
/// alpha1_sq -> -E_NR and alpha2_sq -> 2*mu (with j -> l handled by the caller).
struct NonrelSubstitution {
    double E_nr;
    double two_mu;
};

inline NonrelSubstitution nonrel_transform(double alpha1_sq, double alpha2_sq) {
    return {-alpha1_sq, alpha2_sq};
}

} // namespace kgring
