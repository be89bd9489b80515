#include "tmlab/support/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace tmlab {

namespace {

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 15>;
using Gauss = boost::math::quadrature::gauss<double, 7>;

struct Panel {
    double value, error;
};

Panel gk15(const std::function<double(double)>& fn, double a, double b) {
    const auto& xk = Kronrod::abscissa();
    const auto& wk = Kronrod::weights();
    const auto& wg = Gauss::weights();
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double f0 = fn(c);
    double k = wk[0] * f0, g = wg[0] * f0;
    for (std::size_t i = 1; i < xk.size(); ++i) {
        double s = fn(c - h * xk[i]) + fn(c + h * xk[i]);
        k += wk[i] * s;
        // Gauss nodes sit at the even-indexed Kronrod abscissae.
        if (i % 2 == 0) g += wg[i / 2] * s;
    }
    return {k * h, std::abs((k - g) * h)};
}

void refine(const std::function<double(double)>& fn, double a, double b, Panel p, double tol, int depth,
            QuadResult& out) {
    if (!(p.error > tol) || depth <= 0 || !std::isfinite(p.value)) {
        if (p.error > tol || !std::isfinite(p.value)) out.converged = false;
        out.value += p.value;
        out.error += p.error;
        return;
    }
    double m = 0.5 * (a + b);
    Panel l = gk15(fn, a, m), r = gk15(fn, m, b);
    // Accept the pair when it agrees with the parent and is within tolerance.
    double err = l.error + r.error;
    if (err <= tol) {
        out.value += l.value + r.value;
        out.error += err;
        return;
    }
    refine(fn, a, m, l, 0.5 * tol, depth - 1, out);
    refine(fn, m, b, r, 0.5 * tol, depth - 1, out);
}

} // namespace

QuadResult integrate(const std::function<double(double)>& fn, double a, double b, int panels, double abs_tol,
                     int max_depth) {
    QuadResult out;
    out.value = 0;
    out.error = 0;
    if (a == b) return out;
    panels = std::max(1, panels);
    double h = (b - a) / panels;
    double tol = abs_tol / panels;
    for (int i = 0; i < panels; ++i) {
        double lo = a + i * h, hi = i + 1 == panels ? b : a + (i + 1) * h;
        refine(fn, lo, hi, gk15(fn, lo, hi), tol, max_depth, out);
    }
    // Roundoff floor: the GK error estimate cannot go below the accumulated rounding.
    out.error += 50 * std::numeric_limits<double>::epsilon() * std::abs(out.value);
    return out;
}

} // namespace tmlab
