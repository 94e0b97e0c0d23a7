#pragma once

namespace kgring {

/// Function value together with its first derivative in the argument.
struct PolyEval {
    double value;
    double derivative;
};

/// Generalized Laguerre polynomial L_n^alpha(x) for real alpha > -1.
///
/// Value by the three-term recurrence; derivative via
/// d/dx L_n^alpha(x) = -L_{n-1}^{alpha+1}(x) (zero for n = 0).
PolyEval laguerre(int n, double alpha, double x);

/// Symmetric Jacobi polynomial P_n^{(alpha,alpha)}(s) for real alpha > -1, |s| <= 1.
///
/// Derivative via d/ds P_n^{(a,a)}(s) = ((n+2a+1)/2) * P_{n-1}^{(a+1,a+1)}(s).
PolyEval jacobi_sym(int n, double alpha, double s);

/// ln Gamma(x) for x > 0.
double log_gamma(double x);

} // namespace kgring
