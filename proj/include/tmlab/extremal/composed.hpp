#pragma once

#include <optional>
#include <vector>

#include "tmlab/core/entire.hpp"
#include "tmlab/extremal/polynomial.hpp"

namespace tmlab::extremal {

std::vector<Complex> compose_taylor(const BivarPolynomial& p, const core::EntireFunction& f, std::size_t order);
// Exact when P and the Taylor coefficients of f are exact, nullopt otherwise.
std::optional<std::vector<QComplex>> compose_taylor_exact(const BivarPolynomial& p, const core::EntireFunction& f,
                                                          std::size_t order);
Complex compose_eval(const BivarPolynomial& p, const core::EntireFunction& f, Complex z);

// F(z) = P(z, f(z)). Evaluates through the cached Taylor series where its certified
// tail is negligible (avoids cancellation near high-order zeros), directly otherwise.
class ComposedFunction {
public:
    ComposedFunction(BivarPolynomial p, core::EntireFunction f, std::size_t series_order = 0);

    Complex value(Complex z) const;
    Complex derivative(Complex z) const;  // P_z + P_w f'
    Complex direct_value(Complex z) const;
    Complex direct_derivative(Complex z) const;

    const BivarPolynomial& poly() const { return p_; }
    const core::EntireFunction& function() const { return f_; }
    const std::vector<Complex>& taylor() const { return series_; }
    const std::optional<std::vector<QComplex>>& taylor_exact() const { return exact_; }
    // Index of the first nonzero exact coefficient (cache length when all vanish); -1 without exact data.
    int exact_vanishing_order() const;

private:
    // Tail bound of the cached series at radius r, for the value (k=0) or derivative (k=1).
    double series_tail(double r, int k) const;

    BivarPolynomial p_;
    core::EntireFunction f_;
    std::vector<Complex> series_;
    std::optional<std::vector<QComplex>> exact_;
    std::vector<std::pair<double, double>> majorant_;  // (R, bound on max |F| over |z| = R)
};

} // namespace tmlab::extremal
