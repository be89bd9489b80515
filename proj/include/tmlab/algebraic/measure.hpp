#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tmlab/algebraic/jets.hpp"
#include "tmlab/algebraic/lattice.hpp"
#include "tmlab/core/entire.hpp"
#include "tmlab/core/order.hpp"

namespace tmlab::algebraic {

struct AlgebraicMeasure {
    bool finite = false;
    BigInt d = 0;        // d(E, m)
    double norm = 0;     // ||f||_{E,m} >= 1
    double log_value = INFINITY;
    std::string reason;  // why the measure is infinite

    nlohmann::json to_json() const;
};

// d(E, m) ||f||_{E,m}; infinite when some jet has fewer than m values.
AlgebraicMeasure algebraic_measure(const std::vector<ValueJet>& E, int m);

struct EmpiricalA {
    double log_value = INFINITY;  // an upper bound on the infimum, over the supplied candidates only
    std::size_t best = 0;
    std::size_t considered = 0;
    nlohmann::json to_json() const;
};
// Candidates need |E| >= s and E inside the closed disk of radius r.
EmpiricalA a_K_empirical(const std::vector<std::vector<ValueJet>>& candidates, std::size_t s, const Rational& r, int m);

// eta over I_K(d, A) within radius r for dA >= lambda, f a polynomial with coefficients in K.
struct EmpiricalEta {
    double log_value = INFINITY;
    BigInt d = 0;
    Rational A{0};
    std::size_t points = 0;
    nlohmann::json to_json() const;
};
EmpiricalEta eta_empirical(const std::vector<FieldElement>& poly, const std::vector<std::pair<BigInt, Rational>>& dA,
                           const Rational& lambda, const Rational& r, int m);

struct GeapRow {
    int k = 0;
    int mu_lo = 0, mu_hi = 0;
    double lhs = INFINITY;  // log C_K + 2 sigma log A_K(E, k+1)
    double rhs = 0;         // log of the right side, minimized over the permitted mu
    bool holds = false;
    nlohmann::json to_json() const;
};

struct GeapRecord {
    int n = 0;
    double r = 0, r_n = 0;
    std::size_t size = 0;
    int z_upper = 0;
    double log_CK = 0;
    std::vector<GeapRow> rows;
    bool consistent = false;  // some permitted (k, mu) satisfies the inequality
    nlohmann::json to_json() const;
};

// (16 C1 C2)^sigma with the calibrated Siegel constants
double geap_log_CK(const NumberField& K);
// log of (r / (k (n+1)^{2 sigma - 1}))^{k/n} exp((mu/n) log(r_n / (4 e^4 r))), with k^k = 1 at k = 0
double geap_log_rhs(double r, int k, int n, int sigma, double mu, double r_n);
// z_upper caps mu; it defaults to the vanishing floor (n^2 + 3n)/2, which only narrows the mu range.
GeapRecord geap_bound(const std::vector<ValueJet>& E, int n, double r, double r_n, std::optional<int> z_upper = std::nullopt,
                      std::optional<double> log_CK = std::nullopt);
GeapRecord geap_bound(const std::vector<ValueJet>& E, int n, double r, const core::OrderEstimate& est,
                      std::optional<int> z_upper = std::nullopt, std::optional<double> log_CK = std::nullopt);

struct PgeapCheck {
    bool hypothesis = false;  // C_K A^{2 sigma}(E, 1) < exp((n/4) log(r_n / (4 e^4 r)))
    double lhs = 0, rhs = 0;  // logs
    std::size_t size = 0;
    std::optional<int> z_upper;
    bool consistent = true;   // hypothesis implies |E| <= z_upper when z_upper is known
    nlohmann::json to_json() const;
};
PgeapCheck pgeap_check(const std::vector<ValueJet>& E, int n, double r, double r_n, std::optional<int> z_upper = std::nullopt,
                       std::optional<double> log_CK = std::nullopt);

struct ProportionRow {
    double A = 0;
    double log_B = 0;  // log of the value-house cap exp(A^{phi(A)})
    std::size_t total = 0;
    std::size_t members = 0;
    std::size_t undecided = 0;  // |f(z)| beyond 2^50 or non-finite; counted as non-members
    double proportion = 0;
    std::vector<std::string> member_points;
    nlohmann::json to_json() const;
};

struct ProportionReport {
    std::string field;
    std::string function;
    double tol = 0;
    std::vector<ProportionRow> rows;
    std::string caveat;
    nlohmann::json to_json() const;
};

// Membership f(z) in I_K is decided by rounding to the nearest lattice point and testing |f(z) - w| <= tol max(1, |f(z)|).
ProportionReport proportion_experiment(const NumberField& K, const core::EntireFunction& f, const std::vector<Rational>& A_list,
                                       const core::OrderEstimate& phi, double tol = 1e-9, unsigned workers = 0);

} // namespace tmlab::algebraic
