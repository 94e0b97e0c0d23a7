#include "kgring/angular.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "kgring/errors.hpp"
#include "kgring/specfun.hpp"

namespace kgring {

double m_prime(int m, double C, double alpha2_sq) {
    if (m < 0) throw DomainError("m_prime: m must be >= 0");
    if (!(C >= 0.0)) throw DomainError("m_prime: C must be >= 0");
    if (!(alpha2_sq > 0.0)) throw DomainError("m_prime: alpha2_sq must be > 0");
    return std::sqrt(static_cast<double>(m) * m + C * alpha2_sq);
}

double j_from_ntilde(int ntilde, double mp, int D, double C, double alpha2_sq) {
    if (ntilde < 0 || !(mp >= 0.0)) throw DomainError("j_from_ntilde: ntilde and m_prime must be >= 0");
    const double w = 2.0 * ntilde + 2.0 * mp + 1.0;
    const double disc = (D - 2.0) * (D - 2.0) + w * w - 4.0 * C * alpha2_sq - 1.0;
    if (disc < 0.0)
        throw NoRealAngularMomentum("j_from_ntilde: ring coupling too strong, discriminant = " +
                                    std::to_string(disc));
    return -0.5 * (D - 2.0) + 0.5 * std::sqrt(disc);
}

double jprime_from_ntilde(int ntilde, double mp, int D) {
    if (ntilde < 0 || !(mp >= 0.0))
        throw DomainError("jprime_from_ntilde: ntilde and m_prime must be >= 0");
    const double w = 2.0 * ntilde + 2.0 * mp + 1.0;
    return -0.5 * (D - 2.0) + 0.5 * std::sqrt((D - 2.0) * (D - 2.0) + w * w - 1.0);
}

double ntilde_from_j(double j, double mp, int D, double C, double alpha2_sq) {
    const double arg = (2.0 * j + 1.0) * (2.0 * j + 1.0) + 4.0 * j * (D - 3.0) + 4.0 * C * alpha2_sq;
    if (arg < 0.0) throw DomainError("ntilde_from_j: negative root argument");
    return -0.5 * (1.0 + 2.0 * mp) + 0.5 * std::sqrt(arg);
}

double polar_norm(int ntilde, double mp) {
    if (ntilde < 0 || !(mp >= 0.0)) throw DomainError("polar_norm: ntilde and m_prime must be >= 0");
    // log space: mp can exceed 100 for strong ring coupling
    const double log_n = -mp * std::numbers::ln2 - log_gamma(ntilde + mp + 1.0) +
                         0.5 * (std::log(2.0 * ntilde + 2.0 * mp + 1.0) +
                                log_gamma(ntilde + 2.0 * mp + 1.0) + log_gamma(ntilde + 1.0) -
                                std::numbers::ln2);
    return std::exp(log_n);
}

double polar_wavefunction(int ntilde, double mp, double theta) {
    if (!(theta >= 0.0 && theta <= std::numbers::pi))
        throw DomainError("polar_wavefunction: theta must lie in [0, pi]");
    const double s = std::cos(theta);
    const double sin_t = std::sin(theta);
    if (mp > 0.0 && (sin_t == 0.0 || std::abs(s) >= 1.0))
        return 0.0;  // continuous extension at the poles
    return polar_norm(ntilde, mp) * std::pow(sin_t, mp) * jacobi_sym(ntilde, mp, s).value;
}

std::complex<double> azimuthal(int m, double phi) {
    const double norm = 1.0 / std::sqrt(2.0 * std::numbers::pi);
    return std::polar(norm, m * phi);
}

AngularSolution solve_angular(const ModelParams& p, const QuantumNumbers& qn, double alpha2_sq) {
    const double mp = m_prime(qn.m, p.C, alpha2_sq);
    const double j = j_from_ntilde(qn.n_theta, mp, p.D, p.C, alpha2_sq);
    const double jp = jprime_from_ntilde(qn.n_theta, mp, p.D);
    return {mp, j, jp, j * (j + p.D - 2.0), polar_norm(qn.n_theta, mp)};
}

} // namespace kgring
