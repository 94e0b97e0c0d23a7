#include "kgring/radial.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "kgring/errors.hpp"
#include "kgring/specfun.hpp"

namespace kgring {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

/// Bisect f on [a, b] assuming f(a) and f(b) have opposite signs.
double bisect(const std::function<double(double)>& f, double a, double b, double fa, double fb,
              int max_iters) {
    for (int it = 0; it < max_iters; ++it) {
        const double mid = 0.5 * (a + b);
        if (mid == a || mid == b) break;  // interval collapsed to machine precision
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fa < 0.0) != (fm < 0.0)) {
            b = mid;
            fb = fm;
        } else {
            a = mid;
            fa = fm;
        }
    }
    // Return the endpoint with the smaller residual.
    return std::abs(fa) <= std::abs(fb) ? a : b;
}

struct ScanResult {
    std::vector<double> roots;  // ascending
};

/// Sign-change scan over (lo, hi) followed by bisection of every bracket.
/// Energies where the residual is infeasible are skipped.
ScanResult scan_roots(const std::function<double(double)>& f, double lo, double hi, int points,
                      int max_bisect_iters) {
    ScanResult out;
    const auto eval = [&](double E) -> double {
        try {
            return f(E);
        } catch (const DomainError&) {
            return kNaN;
        }
    };
    double prev_E = lo;
    double prev_f = eval(lo);
    for (int i = 1; i <= points; ++i) {
        const double E = lo + (hi - lo) * static_cast<double>(i) / points;
        const double fE = eval(E);
        if (std::isfinite(prev_f) && std::isfinite(fE)) {
            if (prev_f == 0.0) {
                out.roots.push_back(prev_E);
            } else if ((prev_f < 0.0) != (fE < 0.0)) {
                out.roots.push_back(bisect(f, prev_E, E, prev_f, fE, max_bisect_iters));
            }
        }
        prev_E = E;
        prev_f = fE;
    }
    if (std::isfinite(prev_f) && prev_f == 0.0) out.roots.push_back(prev_E);
    return out;
}

double log_radial_norm(int n, double zeta, double eps) {
    // C_nj = (2 eps)^{1 + zeta/2} sqrt(n! / ((2n+zeta+1) Gamma(n+zeta+1)))
    return (1.0 + 0.5 * zeta) * std::log(2.0 * eps) +
           0.5 * (log_gamma(n + 1.0) - std::log(2.0 * n + zeta + 1.0) - log_gamma(n + zeta + 1.0));
}

} // namespace

RadialIntermediates radial_intermediates(const ModelParams& p, double j, double E) {
    const EnergyChannel ch = channel_at(p, E);
    const auto [A, B] = derive_couplings(p);
    const double M = p.D + 2.0 * j;
    const double gamma4 = (M - 1.0) * (M - 3.0) + 4.0 * B * ch.alpha2_sq;
    if (gamma4 + 1.0 < 0.0)
        throw NegativeDiscriminant("radial_intermediates: 4*gamma^2 + 1 negative");
    return {M, gamma4, A * ch.alpha2_sq, std::sqrt(gamma4 + 1.0), ch.eps};
}

double energy_residual_kratzer(const ModelParams& p, int n, double j, double E) {
    if (n < 0) throw DomainError("energy_residual_kratzer: n must be >= 0");
    const EnergyChannel ch = channel_at(p, E);
    const auto [A, B] = derive_couplings(p);
    const double base = p.D + 2.0 * j - 2.0;
    const double radicand = base * base + 4.0 * B * ch.alpha2_sq;
    if (radicand < 0.0)
        throw NegativeDiscriminant("energy_residual_kratzer: negative radicand " +
                                   std::to_string(radicand));
    return (1.0 + 2.0 * n + std::sqrt(radicand)) * std::sqrt(ch.alpha1_sq) -
           A * std::sqrt(ch.alpha2_sq);
}

double energy_residual_noncentral(const ModelParams& p, const QuantumNumbers& qn, double E) {
    const EnergyChannel ch = channel_at(p, E);
    const auto [A, B] = derive_couplings(p);
    const double mp = m_prime(qn.m, p.C, ch.alpha2_sq);
    // Feasibility of the angular solve at this energy; throws NoRealAngularMomentum.
    (void)j_from_ntilde(qn.n_theta, mp, p.D, p.C, ch.alpha2_sq);
    const double jp = jprime_from_ntilde(qn.n_theta, mp, p.D);
    const double base = 2.0 * jp + p.D - 2.0;
    const double radicand = base * base + 4.0 * (B - p.C) * ch.alpha2_sq;
    if (radicand < 0.0)
        throw NegativeDiscriminant("energy_residual_noncentral: negative radicand " +
                                   std::to_string(radicand));
    return (1.0 + 2.0 * qn.n + std::sqrt(radicand)) * std::sqrt(ch.alpha1_sq) -
           A * std::sqrt(ch.alpha2_sq);
}

BoundState solve_bound_state(const ModelParams& p, const QuantumNumbers& qn,
                             const SolverConfig& cfg) {
    const double delta = cfg.window_margin * p.mu;
    const double lo = -p.mu + delta;
    const double hi = p.mu - delta;
    const auto f = [&](double E) { return energy_residual_noncentral(p, qn, E); };
    const ScanResult scan = scan_roots(f, lo, hi, cfg.scan_points, cfg.max_bisect_iters);
    if (scan.roots.empty())
        throw NoBoundState("solve_bound_state: no sign change in the energy window");

    // Physical-root policy: take the least-bound root (largest E).
    const double E = scan.roots.back();
    const double residual = energy_residual_noncentral(p, qn, E);
    if (std::abs(residual) > cfg.residual_tol * p.mu)
        throw NonConvergence("solve_bound_state: residual " + std::to_string(residual) +
                             " above tolerance");

    const EnergyChannel ch = channel_at(p, E);
    const AngularSolution ang = solve_angular(p, qn, ch.alpha2_sq);
    const RadialIntermediates inter = radial_intermediates(p, ang.j, E);
    const double norm = std::exp(log_radial_norm(qn.n, inter.zeta, inter.eps));
    SolveDiagnostics diag{scan.roots, scan.roots.size() > 1};
    return {p, qn, E, inter, ang, norm, std::move(diag)};
}

double coulomb_energy(double mu, double qe_sq, int n, int ell, int D) {
    if (!(mu > 0.0) || !(qe_sq >= 0.0) || n < 0 || ell < 0 || D < 2)
        throw DomainError("coulomb_energy: invalid inputs");
    const double N = 2.0 * n + 2.0 * ell + D - 1.0;
    return mu * (1.0 - 2.0 * qe_sq / (qe_sq + N * N));
}

double coulomb_series(double mu, double qe_sq, int n, int ell, int D) {
    if (!(mu > 0.0) || !(qe_sq >= 0.0) || n < 0 || ell < 0 || D < 2)
        throw DomainError("coulomb_series: invalid inputs");
    const double N = 2.0 * n + 2.0 * ell + D - 1.0;
    const double x = qe_sq / (N * N);
    return mu * (1.0 - 2.0 * x + 2.0 * x * x);
}

double coulomb_root(double mu, double A, int n, int ell, int D, const SolverConfig& cfg) {
    if (!(mu > 0.0) || !(A > 0.0) || n < 0 || ell < 0 || D < 2)
        throw DomainError("coulomb_root: invalid inputs");
    const auto f = [&](double E) {
        if (!(std::abs(E) < mu)) throw OutOfBoundWindow("coulomb_root: |E| >= mu");
        return (2.0 * n + 2.0 * ell + D - 1.0) * std::sqrt(mu - E) - A * std::sqrt(mu + E);
    };
    const double delta = cfg.window_margin * mu;
    const ScanResult scan = scan_roots(f, -mu + delta, mu - delta, cfg.scan_points,
                                       cfg.max_bisect_iters);
    if (scan.roots.empty()) throw NoBoundState("coulomb_root: no sign change");
    return scan.roots.back();
}

double nonrel_energy(const ModelParams& p, const QuantumNumbers& qn) {
    const auto [A, B] = derive_couplings(p);
    const double mp = m_prime(qn.m, p.C, 2.0 * p.mu);
    const double lp = jprime_from_ntilde(qn.n_theta, mp, p.D);  // 2l'+D-2 via the shifted branch
    const double base = 2.0 * lp + p.D - 2.0;
    const double radicand = base * base + 8.0 * p.mu * (B - p.C);
    if (radicand < 0.0)
        throw NegativeDiscriminant("nonrel_energy: negative radicand " + std::to_string(radicand));
    const double denom = 2.0 * qn.n + 1.0 + std::sqrt(radicand);
    return -8.0 * p.mu * p.a0 * p.a0 * p.r0 * p.r0 / (denom * denom);
}

double transformed_nonrel_residual(const ModelParams& p, const QuantumNumbers& qn, double E_nr) {
    if (!(E_nr < 0.0)) throw DomainError("transformed_nonrel_residual: E_nr must be negative");
    const auto [A, B] = derive_couplings(p);
    const double alpha1_sq = -E_nr;
    const double alpha2_sq = 2.0 * p.mu;
    const double mp = m_prime(qn.m, p.C, alpha2_sq);
    const double jp = jprime_from_ntilde(qn.n_theta, mp, p.D);
    const double base = 2.0 * jp + p.D - 2.0;
    const double radicand = base * base + 4.0 * (B - p.C) * alpha2_sq;
    if (radicand < 0.0)
        throw NegativeDiscriminant("transformed_nonrel_residual: negative radicand");
    return (1.0 + 2.0 * qn.n + std::sqrt(radicand)) * std::sqrt(alpha1_sq) -
           A * std::sqrt(alpha2_sq);
}

double radial_wavefunction(const BoundState& state, double r) {
    if (!(r > 0.0)) throw DomainError("radial_wavefunction: r must be > 0");
    const auto& it = state.intermediates;
    const double rho = 2.0 * it.eps * r;
    const double log_amp = std::log(state.norm) +
                           0.5 * (it.zeta + 2.0 - state.params.D) * std::log(r) - 0.5 * rho;
    return std::exp(log_amp) * laguerre(state.qn.n, it.zeta, rho).value;
}

double reduced_radial_wavefunction(const BoundState& state, double r) {
    if (!(r > 0.0)) throw DomainError("reduced_radial_wavefunction: r must be > 0");
    return std::pow(r, 0.5 * (state.params.D - 1.0)) * radial_wavefunction(state, r);
}

std::complex<double> total_wavefunction(const BoundState& state, double r, double theta,
                                        double phi) {
    const double radial = radial_wavefunction(state, r);
    const double polar = polar_wavefunction(state.qn.n_theta, state.angular.m_prime, theta);
    return radial * polar * azimuthal(state.qn.m, phi);
}

} // namespace kgring
