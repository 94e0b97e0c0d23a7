#pragma once

#include <complex>
#include <vector>

#include "kgring/angular.hpp"
#include "kgring/model.hpp"

namespace kgring {

/// Knobs of the bracketed bisection solver.
struct SolverConfig {
    int scan_points = 512;        ///< sign-change grid resolution over the energy window
    double window_margin = 1e-9;  ///< delta = margin * mu trimmed off both window edges
    double residual_tol = 1e-12;  ///< converged root must satisfy |f(E)| <= residual_tol * mu
    int max_bisect_iters = 200;
};

/// Derived radial quantities at a given (j, E).
struct RadialIntermediates {
    double M;        ///< D + 2j
    double gamma4;   ///< 4*gamma^2 = (M-1)(M-3) + 4*B*alpha2_sq
    double beta_sq;  ///< A*alpha2_sq
    double zeta;     ///< sqrt(4*gamma^2 + 1), the Laguerre order
    double eps;      ///< sqrt(mu^2 - E^2), the exponential decay rate
};

/// Root-search evidence attached to a converged state.
struct SolveDiagnostics {
    std::vector<double> roots;  ///< every bracketed root, ascending
    bool multiple_roots = false;
};

/// A converged bound state with everything needed to evaluate wavefunctions.
struct BoundState {
    ModelParams params;
    QuantumNumbers qn;
    double E;  ///< converged relativistic energy, |E| < mu
    RadialIntermediates intermediates;
    AngularSolution angular;  ///< evaluated at alpha2_sq = mu + E
    double norm;              ///< radial normalization constant C_nj
    SolveDiagnostics diagnostics;
};

RadialIntermediates radial_intermediates(const ModelParams& p, double j, double E);

/// Energy-condition residual for the central Kratzer problem at fixed j:
///   f(E) = [1 + 2n + sqrt((D+2j-2)^2 + 4B(mu+E))] sqrt(mu-E) - A sqrt(mu+E).
/// A bound state is a zero of f inside |E| < mu.
double energy_residual_kratzer(const ModelParams& p, int n, double j, double E);

/// Energy-condition residual for the full ring-shaped problem. The effective
/// numbers m'(E) and j'(E) are re-evaluated at every call:
///   f(E) = [1 + 2n + sqrt((2j'+D-2)^2 + 4(B-C)(mu+E))] sqrt(mu-E) - A sqrt(mu+E).
/// Algebraically identical to energy_residual_kratzer with j(E) from the
/// angular solve; the two routes are kept separate and cross-checked in tests.
double energy_residual_noncentral(const ModelParams& p, const QuantumNumbers& qn, double E);

/// Scans the window E in (-mu+delta, mu-delta) for sign changes of the
/// noncentral residual and bisects each bracket. Returns the root with the
/// largest E; any extra roots are preserved in the diagnostics.
BoundState solve_bound_state(const ModelParams& p, const QuantumNumbers& qn,
                             const SolverConfig& cfg = {});

/// Closed-form Coulomb-limit energy (A = Ze^2, B = 0, j = l):
///   E = mu * (1 - 2 qe_sq / (qe_sq + N^2)),  N = 2n + 2l + D - 1,
/// where qe_sq = A^2.
double coulomb_energy(double mu, double qe_sq, int n, int ell, int D);

/// Second-order expansion of coulomb_energy in qe_sq/N^2:
///   mu - 2 mu qe_sq/N^2 + 2 mu qe_sq^2/N^4.
double coulomb_series(double mu, double qe_sq, int n, int ell, int D);

/// Bisection root of the B = 0 energy condition at fixed integer l; the
/// independent route that must reproduce coulomb_energy.
double coulomb_root(double mu, double A, int n, int ell, int D, const SolverConfig& cfg = {});

/// Nonrelativistic closed form,
///   E_NR = -8 mu a0^2 r0^2 / [2n + 1 + sqrt((2l'+D-2)^2 + 8 mu (B - C))]^2
/// with 2l'+D-2 = sqrt((D-2)^2 + (2nt+2m'+1)^2 - 1) and m' = sqrt(m^2 + 2 mu C).
double nonrel_energy(const ModelParams& p, const QuantumNumbers& qn);

/// Noncentral residual under the nonrelativistic substitution
/// (alpha1_sq -> -E_nr, alpha2_sq -> 2 mu); zero when E_nr solves the
/// Schroedinger-limit condition.
double transformed_nonrel_residual(const ModelParams& p, const QuantumNumbers& qn, double E_nr);

/// Normalized radial wavefunction R(r) = C_nj r^{(zeta+2-D)/2} e^{-eps r} L_n^zeta(2 eps r).
double radial_wavefunction(const BoundState& state, double r);

/// Reduced radial function g(r) = r^{(D-1)/2} R(r).
double reduced_radial_wavefunction(const BoundState& state, double r);

/// Full normalized wavefunction R(r) H(theta) Phi(phi).
std::complex<double> total_wavefunction(const BoundState& state, double r, double theta,
                                        double phi);

} // namespace kgring
