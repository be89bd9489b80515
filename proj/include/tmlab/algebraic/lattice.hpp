#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "tmlab/algebraic/field.hpp"

namespace tmlab::algebraic {

struct EnumerationOptions {
    unsigned workers = 0;
    long double budget = 2e7;  // coordinate-box points
};

// I_K(d, A) intersected with the closed disk of radius r (no disk when r is empty), in coordinate order.
std::vector<FieldElement> enumerate_IK(const NumberField& K, const BigInt& d, const Rational& A,
                                       const std::optional<Rational>& r, const EnumerationOptions& opt = {});
// N_K(d, A, r) without materializing the points.
long long count_IK(const NumberField& K, const BigInt& d, const Rational& A, const std::optional<Rational>& r,
                   const EnumerationOptions& opt = {});

struct NpFit {
    std::string branch;  // "r>A", "real r<=A" or "complex r<=A"
    std::vector<double> A;
    std::vector<double> r;  // inf for no disk
    std::vector<long long> counts;
    std::vector<double> ratios;  // count over the branch's normal form
    double c1 = 0, c2 = 0;

    nlohmann::json to_json() const;
};

// r = factor * A for each A, or no disk when factor is empty.
NpFit np_fit(const NumberField& K, const BigInt& d, const std::vector<Rational>& A_list,
             const std::optional<Rational>& r_factor, const EnumerationOptions& opt = {});

} // namespace tmlab::algebraic
