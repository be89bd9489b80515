#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tmlab/core/entire.hpp"
#include "tmlab/extremal/polynomial.hpp"

namespace tmlab::extremal {

struct ExtremalOptions {
    int circle_grid = 0;       // 0: 8 (n+1)^2
    int phase_grid = 16;       // phase fan for |F| <= 1
    int objective_phases = 2;  // spread over one fan sector
    int target_grid = 0;       // 0: 17 points on the closed upper half circle for real f, 32 otherwise
    int torus_grid = 8;        // per factor of the torus, en_lower
    int fine_factor = 10;      // certification grid refinement
    unsigned workers = 0;
};

struct ExtremalSolution {
    std::string quantity;  // "m_n", "e_n" or "W_n"
    int n = 0;
    double r = 0;
    BivarPolynomial poly;  // rescaled so the certified sup of |P(z, f(z))| on the unit disk is <= 1
    double value = 0;      // certified lower bound
    double raw_value = 0;  // same candidate measured against the constraint grid only
    double lp_value = 0;   // log of the LP optimum (relaxed program) at the winning target
    double gap = 0;        // lp_value - value
    double slack = 0;      // raw_value - value
    double sup_fine = 0;   // max |F| on the refined grid, before rescaling
    double lipschitz = 0;  // derivative correction added to sup_fine
    double delta = 0;      // Cauchy radius used for the correction
    Complex z0{0}, w0{0};
    double phase = 0;
    std::string source;    // "lp", "vanishing" or "trivial"
    bool exact_function = false;
    int circle_grid = 0, phase_grid = 0, fine_grid = 0, targets = 0;

    nlohmann::json to_json() const;
};

ExtremalSolution mn_lower(const core::EntireFunction& f, int n, double r, const ExtremalOptions& opt = {});
ExtremalSolution en_lower(const core::EntireFunction& f, int n, const ExtremalOptions& opt = {});

struct WnSample {
    Complex z;
    double value = 0;  // certified lower bound of W_n(z) / n^2
    ExtremalSolution solution;
};
std::vector<WnSample> wn_profile(const core::EntireFunction& f, int n, const std::vector<Complex>& points,
                                 const ExtremalOptions& opt = {});

} // namespace tmlab::extremal
