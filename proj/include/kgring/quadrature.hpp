#pragma once

#include <cmath>
#include <functional>
#include <utility>
#include <vector>

#include "kgring/errors.hpp"

namespace kgring {

/// Adaptive Gauss-Kronrod (G7, K15) quadrature on [a, b].
/// Subdivides until the local error estimate drops below the absolute target;
/// throws NonConvergence once the interval budget is exhausted.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-10, int max_intervals = 4000);

/// Integral over [a, inf) via the rational map r = a + t/(1-t), t in [0, 1).
double integrate_to_inf(const std::function<double(double)>& f, double a = 0.0,
                        double abs_tol = 1e-10, int max_intervals = 4000);

} // namespace kgring
