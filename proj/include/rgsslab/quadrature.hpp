#pragma once

#include <functional>

namespace rgsslab {

// Adaptive Gauss-Kronrod (15-point) on a finite interval; throws QuadratureSingularity if the
// integrand is non-finite or the error estimate shows gross non-convergence.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol = 1e-14);

}  // namespace rgsslab
