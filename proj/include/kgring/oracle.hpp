#pragma once

#include <functional>
#include <span>
#include <string>

#include "kgring/radial.hpp"

namespace kgring::oracle {

/// Outcome of an ODE residual sweep over a grid.
struct ResidualReport {
    double max_rel_residual;  ///< max |residual| / max |second derivative|
    std::string grid;         ///< human-readable sampling description
    double tolerance;
    bool pass;  ///< max_rel_residual <= tolerance
};

/// Comparison of the analytic energy with a self-consistent matrix eigenvalue.
struct EigenCrossCheck {
    double E_analytic;
    double E_numeric;
    double gap;  ///< |E_analytic - E_numeric|, reported even on non-convergence
    int grid_size;
    double r_max;
    bool converged;
};

/// Residual of the reduced radial equation
///   g'' - [(M-1)(M-3)/(4r^2) - alpha2_sq (A/r - B/r^2) + eps^2] g = 0
/// with g'' built from Laguerre derivative identities applied twice.
ResidualReport radial_ode_residual(const BoundState& state, std::span<const double> r_grid,
                                   double tolerance = 1e-7);

/// Residual of the polar equation
///   H'' + cot(theta) H' - [(m^2 + C alpha2_sq cos^2 theta)/sin^2 theta - j(j+D-2)] H = 0
/// with analytic Jacobi derivatives. m^2 is recovered as m'^2 - C alpha2_sq.
ResidualReport angular_ode_residual(const AngularSolution& ang, int ntilde, int D, double C,
                                    double alpha2_sq, std::span<const double> theta_grid,
                                    double tolerance = 1e-7);

/// Adaptive quadrature of f over [a, b] with absolute target tol.
double quadrature_norm(const std::function<double(double)>& f, double a, double b,
                       double tol = 1e-10);

/// Adaptive quadrature of f over [a, inf), mapped rationally.
double quadrature_norm_to_inf(const std::function<double(double)>& f, double a = 0.0,
                              double tol = 1e-10);

/// Discretizes the reduced radial operator on a uniform Dirichlet grid and
/// iterates the candidate energy until the n-th eigenvalue equals E^2 - mu^2.
/// Requires N >= 200 and r_max >= 20*r0.
EigenCrossCheck matrix_eigen_crosscheck(const ModelParams& p, const QuantumNumbers& qn, int N,
                                        double r_max);

/// Same cross-check for the Coulomb limit (B = 0, fixed integer l); the
/// analytic reference is the closed-form Coulomb energy.
EigenCrossCheck matrix_eigen_crosscheck_coulomb(double mu, double A, int n, int ell, int D, int N,
                                                double r_max);

} // namespace kgring::oracle
