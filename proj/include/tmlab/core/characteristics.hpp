#pragma once

#include "tmlab/core/entire.hpp"

namespace tmlab::core {

struct Estimate {
    double value = 0;
    double error = 0;
};

struct MaxModulus {
    double log_M = 0;  // -inf when f vanishes on the circle
    double M = 0;
    double angle = 0;
};

struct CharOptions {
    double tol = 1e-8;
    int max_depth = 18;
    int samples = 1024;  // max-modulus grid
};

MaxModulus max_modulus(const EntireFunction& f, double r, const CharOptions& opt = {});
double growth_m(const EntireFunction& f, double r, const CharOptions& opt = {});

// Number of initial angular panels for circle averages at radius r.
int angular_panels(const EntireFunction& f, double r);

Estimate nevanlinna_T(const EntireFunction& f, double r, const CharOptions& opt = {});
Estimate proximity_m0(const EntireFunction& f, double r, const CharOptions& opt = {});

enum class SMethod { Area, Flux };
Estimate ahlfors_S(const EntireFunction& f, double r, const CharOptions& opt = {}, SMethod method = SMethod::Area);

struct T0Result {
    Estimate radial;    // (1/pi) int_{|z|<=r} rho_f^2 log(r/|z|)
    Estimate identity;  // m0(r) - log sqrt(1+|f(0)|^2)
    double discrepancy = 0;
};
// Computes both paths and throws cross-check-failure when they disagree beyond the summed bounds.
T0Result ahlfors_T0(const EntireFunction& f, double r, const CharOptions& opt = {});
Estimate ahlfors_T0_identity(const EntireFunction& f, double r, const CharOptions& opt = {});
Estimate ahlfors_T0_radial(const EntireFunction& f, double r, const CharOptions& opt = {});

Estimate length_L(const EntireFunction& f, double r, const CharOptions& opt = {});

} // namespace tmlab::core
