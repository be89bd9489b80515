#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tmlab/core/entire.hpp"
#include "tmlab/core/order.hpp"
#include "tmlab/growth/admissible.hpp"
#include "tmlab/growth/table.hpp"

namespace tmlab::growth {

struct Sc1Report {
    double k = 0;
    double window_lo = 0, window_hi = 0;
    int samples = 0;
    double A1 = 0, A2 = 0;      // pessimistic min / max of m(kr)/m(r)
    double rho1 = 0, rho2 = 0;  // log A / log k
    std::optional<double> d1, d2;  // m(1)/A1, A2 m(1) when m(1) is available
    bool accepted = false;         // A1 > 1
    std::optional<bool> order_in_range;
    std::string rejection;

    nlohmann::json to_json() const;
};

// Samples r geometrically over the window (or the table grid inside it, when finer).
Sc1Report sc1_check(const GrowthTable& t, double k, double window_lo, double window_hi, int samples = 48,
                    std::optional<double> order = std::nullopt);

struct FundamentalTerm {
    double R_touch = 0;   // R'_j, where m meets the envelope
    double R = 0;         // R_j in (R'_j / k, 2 R'_j) with C S(R_j) >= m(4 R_j)
    long long n = 0;      // n_j in [Lambda S(R_j)/3, 2 Lambda S(R_j)/5]
    double eps = 0;       // epsilon_j
    double eps_raw = 0;   // 1/rho - log(2 R_j)/log n_j; any eps >= this works
    AdmissibleInterval interval;  // I(R_j, rho/2, Lambda/3, 1, C)

    nlohmann::json to_json() const;
};

struct FundamentalSequence {
    double rho = 0;
    double k = 0;   // 2^{5/rho}
    double C = 0;   // e:c constant
    LambdaSource lambda;
    std::vector<FundamentalTerm> terms;
    std::vector<double> touching;  // all envelope-touching radii found
    std::string explanation;       // why the sequence is empty or short

    bool empty() const { return terms.empty(); }
    nlohmann::json to_json() const;
};

FundamentalSequence fundamental_sequence(const GrowthTable& t, const core::OrderEstimate& est, const LambdaSource& lambda,
                                         int jmax, long long n0 = 0, double R1 = 0);

struct SubsequenceVerdict {
    bool pass = false;
    std::vector<long long> sequence;  // the selected n_j
    std::vector<double> r_n;          // r_{n_j}
    std::vector<double> lhs;          // m(r_{n_j}) or log|c_{n_j}|
    std::vector<double> rhs;          // a n_j or a n_j - n_j log r_{n_j}
    std::string violation;            // first failed condition when !pass

    nlohmann::json to_json() const;
};

// Greedy selection from an increasing pool: from each n_j jump to the largest pool member n with
// n^gamma <= b n_j that satisfies m(r_n) >= a n. Comparisons allow a 1e-12 relative rounding margin.
SubsequenceVerdict pesif_criteria(const std::function<double(double)>& m_of, const core::OrderEstimate& est,
                                  double gamma, double b, double a, const std::vector<long long>& pool);
// Same selection with log|c_n| >= a n - n log r_n (the Cauchy bridge to the pesif hypothesis).
SubsequenceVerdict tc_criterion(const std::function<double(long long)>& log_abs_coef, const core::OrderEstimate& est,
                                double gamma, double b, double a, const std::vector<long long>& pool);

struct ZetaGrowthFit {
    std::string function;
    std::vector<double> radii;
    std::vector<double> ratios;  // m(r) / (r log r)
    double c1 = 0, c2 = 0;

    nlohmann::json to_json() const;
};

// r must lie in [2, 40]; throws envelope-violation otherwise.
ZetaGrowthFit zeta_growth_check(const core::EntireFunction& f, const std::vector<double>& radii);

} // namespace tmlab::growth
