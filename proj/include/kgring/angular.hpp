#pragma once

#include <complex>

#include "kgring/model.hpp"

namespace kgring {

/// Solution of the polar-angle problem at a fixed alpha2_sq = mu + E.
struct AngularSolution {
    double m_prime;     ///< effective azimuthal order sqrt(m^2 + C*alpha2_sq)
    double j;           ///< effective angular momentum (energy dependent)
    double j_prime;     ///< shifted angular momentum (ring term absorbed)
    double lambda_sep;  ///< separation constant j*(j + D - 2)
    double norm;        ///< polar normalization constant N for H(theta)
};

/// Effective azimuthal order m' = sqrt(m^2 + C*alpha2_sq).
double m_prime(int m, double C, double alpha2_sq);

/// Effective angular momentum
///   j = -(D-2)/2 + (1/2)*sqrt((D-2)^2 + (2nt+2m'+1)^2 - 4*C*alpha2_sq - 1),
/// positive branch. Throws NoRealAngularMomentum if the radicand is negative.
double j_from_ntilde(int ntilde, double m_prime, int D, double C, double alpha2_sq);

/// Shifted angular momentum
///   j' = -(D-2)/2 + (1/2)*sqrt((D-2)^2 + (2nt+2m'+1)^2 - 1);
/// the radicand is never negative for nt, m' >= 0.
double jprime_from_ntilde(int ntilde, double m_prime, int D);

/// Inverse of j_from_ntilde:
///   nt = -(1+2m')/2 + (1/2)*sqrt((2j+1)^2 + 4j(D-3) + 4*C*alpha2_sq).
/// For inputs produced by j_from_ntilde the result is the original integer.
double ntilde_from_j(double j, double m_prime, int D, double C, double alpha2_sq);

/// Normalization constant of the polar wavefunction, all factorials as Gammas:
///   N = 1/(2^m' Gamma(nt+m'+1)) * sqrt((2nt+2m'+1) Gamma(nt+2m'+1) nt! / 2).
double polar_norm(int ntilde, double m_prime);

/// Normalized polar wavefunction H(theta) = N sin^m'(theta) P_nt^{(m',m')}(cos theta).
/// Endpoints theta in {0, pi} are handled by continuous extension.
double polar_wavefunction(int ntilde, double m_prime, double theta);

/// Azimuthal factor (1/sqrt(2 pi)) exp(i m phi); the sign of m lives here only.
std::complex<double> azimuthal(int m, double phi);

/// Full angular solve for a state at the given alpha2_sq.
AngularSolution solve_angular(const ModelParams& p, const QuantumNumbers& qn, double alpha2_sq);

} // namespace kgring
