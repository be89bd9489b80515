#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tmlab/growth/constants.hpp"
#include "tmlab/growth/table.hpp"

namespace tmlab::growth {

struct AdmissibleParams {
    double alpha = 1;
    double beta = 0.1;
    double gamma = 1;
    double C = 1;
    long long n0 = 0;
    double R1 = 0;  // R1(f); 0 when the table is synthetic

    nlohmann::json to_json() const;
};

struct AdmissibleInterval {
    double R = 0;
    AdmissibleParams params;
    LambdaSource lambda;
    Bracket S;      // S(R)
    Bracket m4R;    // m(4R)
    long long lo = 0;  // ceil(beta S^gamma), pessimistic S
    long long hi = 0;  // floor(Lambda S / 2 - n0), pessimistic S

    bool contains(long long n) const { return lo <= n && n <= hi; }
    nlohmann::json to_json() const;
};

struct Rejection {
    std::string condition;  // "parameters", "R>R1", "beta S^gamma <= Lambda S/2 - n0 - 1", "S>=R^alpha", "m(4R)<=C S"
    std::string detail;
};

struct AdmissibleOutcome {
    std::optional<AdmissibleInterval> interval;
    std::optional<Rejection> rejection;

    bool admissible() const { return interval.has_value(); }
    nlohmann::json to_json() const;
};

// Every comparison must pass at the pessimistic end of the table's enclosures.
AdmissibleOutcome admissible_check(const GrowthTable& t, double R, const AdmissibleParams& p, const LambdaSource& lambda);

struct ChainCertificate {
    double R_from = 0, R_to = 0;
    double S_from_lo = 0;  // pessimistic S(R_j)
    double S_to_hi = 0;    // pessimistic S(R_{j+1})
    double lhs = 0;        // beta S^gamma(R_{j+1})
    double rhs = 0;        // Lambda S(R_j) / 2 - n0
    std::string method;    // "rational" or "mpfr"

    nlohmann::json to_json() const;
};

struct CoveringSystem {
    std::vector<AdmissibleInterval> intervals;
    std::vector<ChainCertificate> chain;  // chain[j] links intervals[j] -> intervals[j + 1]
    bool empty() const { return intervals.empty(); }
    std::string note;

    nlohmann::json to_json() const;
};

// Greedy: the smallest admissible grid radius, then repeatedly the smallest larger admissible one
// whose chain condition holds.
CoveringSystem covering_scan(const GrowthTable& t, const AdmissibleParams& p, const LambdaSource& lambda);

// beta S_to^gamma <= Lambda S_from / 2 - n0, decided exactly on the stored doubles
// (rational arithmetic when gamma and the surrogate are short decimals, else 512-bit mpfr).
bool chain_holds(const AdmissibleParams& p, const LambdaSource& lambda, double S_from, double S_to,
                 std::string* method = nullptr);
// Re-verifies all certificates and interval endpoints of a system.
bool verify_covering_system(const CoveringSystem& sys, const AdmissibleParams& p, const LambdaSource& lambda);

} // namespace tmlab::growth
