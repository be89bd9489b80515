#pragma once

#include <vector>

#include "tmlab/core/entire.hpp"
#include "tmlab/extremal/polynomial.hpp"

namespace tmlab::extremal {

struct VanishingResult {
    BivarPolynomial poly;
    bool exact = false;
    int guaranteed_order = 0;  // N - 1 = (n^2 + 3n)/2
    int verified_order = -1;   // exact order of F at 0 when exact, else -1
};

// Null vector of the (N-1) x N matrix of Taylor coefficients of z^i f^j.
VanishingResult vanishing_polynomial(const core::EntireFunction& f, int n);
// Exact path from exact Taylor coefficients (at least N - 1 of them), fraction-free elimination.
BivarPolynomial vanishing_from_taylor_exact(const std::vector<QComplex>& fser, int n);
// Floating path by singular value decomposition.
BivarPolynomial vanishing_from_taylor(const std::vector<Complex>& fser, int n);

// Q(z, w) = (z - 1)^n P(z, w/(z - 1)), of degree <= 2n; relates P along zeta to Q along (z-1) zeta.
BivarPolynomial zeta_reduction(const BivarPolynomial& p);

} // namespace tmlab::extremal
