#pragma once

#include <functional>

namespace fsw {

/// Shrink a bracketed sign change of f to the given width by bisection, then
/// polish with one guarded Newton step (skipped when df is empty or the step
/// leaves the bracket).  f(a) and f(b) must have opposite signs; an endpoint
/// that is exactly zero is returned as-is.
double refine_root(const std::function<double(double)>& f,
                   const std::function<double(double)>& df,
                   double a, double b, double width = 1e-13);

/// Golden-section search for the minimizer of f on [a, b] to within tol.
double minimize(const std::function<double(double)>& f,
                double a, double b, double tol = 1e-12);

} // namespace fsw
