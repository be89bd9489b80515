#pragma once

#include <cstdint>
#include <optional>

#include "tmlab/core/entire.hpp"

namespace tmlab::extremal {

// Growth-class constants for the intersection-count upper formula 10 C (2/beta)^{1/gamma} n^{1 + 1/gamma}.
struct ZnTheory {
    double C = 1;
    double beta = 1;
    double gamma = 1;
};

double zn_theory_upper(const ZnTheory& t, int n);

struct ZnOptions {
    int budget = 32;          // random polynomials
    std::uint64_t seed = 1;
    bool with_solver = false; // also count zeros of the mn_lower polynomial at r
    std::optional<ZnTheory> theory;
};

struct ZnBounds {
    int lower = 0;      // zeros of the vanishing construction in the disk
    int empirical = 0;  // max over all sampled polynomials
    std::optional<double> theory_upper;
    int samples = 0;    // polynomials counted successfully
    int skipped = 0;    // samples whose contour could not be cleared
};

ZnBounds zn_bounds(const core::EntireFunction& f, int n, double r, const ZnOptions& opt = {});
// Intersection counts with the graph of zeta, through Q(z, w) = (z - 1)^n P(z, w/(z - 1)) along
// zeta-tilde; zeros of Q at z = 1 are discounted by a small contour around 1.
ZnBounds zn_bounds_zeta(int n, double r, const ZnOptions& opt = {});

} // namespace tmlab::extremal
