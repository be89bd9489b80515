#pragma once

#include <functional>

#include "tmlab/extremal/composed.hpp"

namespace tmlab::extremal {

using ComplexFn = std::function<Complex(Complex)>;

struct ZeroCount {
    int count = 0;
    double winding = 0;   // before rounding
    double residual = 0;  // |winding - count|
    double radius = 0;    // contour actually used
    int nudges = 0;
};

// Winding number of F around |z| = r. The contour is moved outward by 0.25% steps
// (at most 4) when the min-modulus scan sees a zero too close to it.
ZeroCount zero_count(const ComplexFn& F, const ComplexFn& dF, double r);
ZeroCount zero_count(const ComposedFunction& F, double r);

struct CircleMax {
    double M = 0;
    double angle = 0;
};
// Maximum of |F| on |z| = r; grid ties resolved toward the smallest angle.
CircleMax circle_max(const ComplexFn& F, double r, int samples = 2048);

double doubling_ratio(const ComposedFunction& F, double r);  // M(2r, F) / M(r, F)
double markov_ratio(const ComposedFunction& F, double r);    // r M(r, F') / M(r, F)
double doubling_ratio(const BivarPolynomial& p, const core::EntireFunction& f, double r);
double markov_ratio(const BivarPolynomial& p, const core::EntireFunction& f, double r);

struct BpReport {
    double lhs = 0;     // M(s, F) / M(r, F)
    double rhs = 0;     // ((r^2 + s^2) / (2 r s))^m
    double margin = 0;  // lhs / rhs, computed in log space
    bool pass = false;
};
// Throws bp-violation when the measured ratio falls below the floor.
BpReport bp_check(const ComplexFn& F, double r, double s, int m);

} // namespace tmlab::extremal
