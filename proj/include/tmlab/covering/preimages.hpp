#pragma once

#include <vector>

#include <json.hpp>

#include "tmlab/core/entire.hpp"

namespace tmlab::covering {

struct Root {
    Complex z;
    int multiplicity = 1;
    double residual = 0;  // |f(z) - w|
    bool cluster = false; // subdivision floor reached with winding >= 2
};

struct PreimageSet {
    Complex w;
    double R = 0;
    double radius = 0;  // contour actually used (R after nudges)
    std::vector<Root> roots;
    int claimed = 0;    // argument-principle count over the disk
    int found = 0;      // multiplicity sum of listed roots
    bool unresolved = false;

    std::vector<Complex> points() const;
    nlohmann::json to_json() const;
};

// Roots of f - w in |z| <= R by quadtree subdivision with box winding numbers and Newton polishing.
// Throws certificate-mismatch when the found multiplicities disagree with the disk count.
PreimageSet preimages(const core::EntireFunction& f, Complex w, double R);

// Largest |f^{-1}(e^{i theta}) in Delta_2| over `samples` equally spaced angles (a lower estimate of n0).
int n0_of(const core::EntireFunction& f, int samples = 64);

} // namespace tmlab::covering
