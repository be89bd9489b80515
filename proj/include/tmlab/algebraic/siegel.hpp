#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "tmlab/algebraic/field.hpp"

namespace tmlab::algebraic {

using IntVector = std::vector<BigInt>;
using IntMatrix = std::vector<IntVector>;

// Z-basis (as rows) of {x in Z^ncols : M x = 0}, by unimodular row reduction of [M^T | I].
IntMatrix integer_kernel(const IntMatrix& M, std::size_t ncols);
// LLL on the rows, exact rational Gram-Schmidt.
IntMatrix lll_reduce(IntMatrix basis, const Rational& delta = Rational(3, 4));

struct SiegelProblem {
    NumberField K;
    std::vector<std::vector<FieldElement>> rows;  // nu equations in N unknowns, entries in I_K
    std::optional<double> entry_house;            // computed from the entries when absent
    std::optional<double> target;                 // default C1 (C2 N E)^{nu/(N-nu)}
};

struct SiegelSolution {
    std::vector<FieldElement> c;
    double height = 0;  // max house
    double bound = 0;
    double C1 = 0, C2 = 0;
    double entry_house = 0;
    std::size_t nu = 0, N = 0;
    std::size_t kernel_rank = 0;  // over Z after expanding over the integral basis
    bool verified = false;        // every equation vanishes exactly

    nlohmann::json to_json() const;
};

// C1 = C2 = sigma gamma2 / gamma1
double siegel_constant(const NumberField& K);
SiegelSolution siegel_solve(const SiegelProblem& problem);

} // namespace tmlab::algebraic
