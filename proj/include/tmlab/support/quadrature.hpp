#pragma once

#include <functional>

namespace tmlab {

struct QuadResult {
    double value = 0;
    double error = 0;
    bool converged = true;
};

// Adaptive Gauss-Kronrod (7/15) with an absolute error target, started from
// `panels` equal subintervals of [a, b].
QuadResult integrate(const std::function<double(double)>& fn, double a, double b, int panels,
                     double abs_tol, int max_depth = 18);

} // namespace tmlab
