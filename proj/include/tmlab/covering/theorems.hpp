#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "tmlab/core/entire.hpp"
#include "tmlab/covering/diameter.hpp"
#include "tmlab/growth/constants.hpp"

namespace tmlab::covering {

struct DnResult {
    double value = 0;     // clamped to [0, 1]
    double diameter = 0;  // unclamped diam_n
    std::vector<Complex> points;
    DiskCover cover;

    nlohmann::json to_json() const;
};

// min(1, diam_n(D_n(theta, r))) with D_n the preimages of e^{i theta} in 2 <= |z| <= r.
DnResult dn_theta(const core::EntireFunction& f, double theta, double r, int n);

struct TendReport {
    double R = 0, r = 0;
    int n = 0;
    double delta0 = 0;
    growth::LambdaSource lambda;
    double m2R = 0, S = 0, L = 0;
    bool length_hypothesis = false;  // L(R) <= delta0 S(R) / 6
    bool count_hypothesis = false;   // n <= Lambda(delta0) S(R), compared in log space
    double lhs = 0;                  // log(3R / 4r)
    double rhs = 0;                  // 4 n m(2R) / S(R)
    bool conclusion_asserted = false;
    bool conclusion_holds = false;
    double margin = 0;               // rhs - lhs
    int preimage_count = 0;          // |E|, E = f^{-1}({a, b}) in |z| <= R + r
    bool cover_witness = false;      // an n-cell cover of E with every radius <= r was found
    bool contradiction = false;      // witness + hypotheses + failed conclusion

    nlohmann::json to_json() const;
};

TendReport tend_check(const core::EntireFunction& f, double R, double r, int n, Complex a, Complex b,
                      std::optional<double> surrogate_lambda = std::nullopt);

} // namespace tmlab::covering
