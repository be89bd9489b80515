#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "tmlab/growth/table.hpp"

namespace tmlab::growth {

// log Lambda(delta0) = -log(4 + (48 pi / delta0) exp(36 pi^2 / delta0^2)), overflow-free.
double lambda_const(double delta0);

// h = 3 / (2 delta0) and log h1 = 36 pi^2 / delta0^2.
double h_const(double delta0);
double log_h1(double delta0);

// Chordal distance on the sphere of radius 1; |a - b| when |a| = |b| = 1.
double spherical_distance(std::complex<double> a, std::complex<double> b);

// Either the genuine Lambda(delta0) or a user surrogate in (0, 1]; always held as a log.
struct LambdaSource {
    bool surrogate = false;
    double log_value = 0;
    double delta0 = 1;
    double surrogate_input = 0;  // the decimal the user gave, kept for exact arithmetic

    static LambdaSource genuine(double delta0 = 1);
    static LambdaSource surrogate_value(double lambda);
    std::string label() const { return surrogate ? "surrogate" : "genuine"; }
    // Lambda * x in log space, x > 0
    double log_times(double x) const;
    double value() const;  // underflows to 0 for the genuine constant
    nlohmann::json to_json() const;
};

// C = 2^{3 rho + 4} (rho + 5) / rho
double ec_constant(double rho);
// log a, a = 8^{rho + 3} (rho + 5) / (Lambda rho)
double log_gdi_a(double rho, const LambdaSource& lambda);

struct R0R1 {
    double R0 = 0;
    double R1 = 0;
    std::map<std::string, double> roots;  // one entry per defining equation
    nlohmann::json to_json() const;
};

// Largest crossing of each defining equation, located conservatively on the table
// (a crossing is placed where the pessimistic value first stays above the target).
R0R1 r0_r1_of(const GrowthTable& t, double rel_tol = 1e-7);

struct ConstantsTable {
    double delta0 = 1;
    double log_lambda = 0;  // genuine Lambda(delta0)
    LambdaSource lambda;    // the one used by gated constructions
    std::optional<double> R0, R1;
    std::optional<double> rho;
    std::optional<double> C;      // e:c form, needs rho
    std::optional<double> log_a;  // uses `lambda`, needs rho
    double h = 0;
    double log_h1 = 0;

    nlohmann::json to_json() const;
};

ConstantsTable constants_table(double delta0, std::optional<double> surrogate = std::nullopt,
                               std::optional<double> rho = std::nullopt, std::optional<R0R1> radii = std::nullopt);

} // namespace tmlab::growth
