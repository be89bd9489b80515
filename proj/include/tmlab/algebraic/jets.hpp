#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "tmlab/algebraic/field.hpp"
#include "tmlab/algebraic/siegel.hpp"
#include "tmlab/core/entire.hpp"

namespace tmlab::algebraic {

// z0 together with f(z0), ..., f^{(m-1)}(z0), all known to lie in K. Fewer values than an order m
// requires means some derivative is not known to lie in K.
struct ValueJet {
    FieldElement z0;
    std::vector<FieldElement> values;

    const NumberField& field() const { return z0.field(); }
    int multiplicity() const { return static_cast<int>(values.size()); }
    // least d with z0 and the first m values in I_K(d)
    BigInt denominator(int m) const;
    BigInt denominator() const { return denominator(multiplicity()); }
    // max of the houses of z0 and the first m values
    MpReal house_bound(int m) const;
    MpReal house_bound() const { return house_bound(multiplicity()); }

    nlohmann::json to_json() const;
    static ValueJet from_json(const nlohmann::json& j);
};

// Exact jet of the polynomial sum c_k z^k with coefficients in K.
ValueJet polynomial_jet(const std::vector<FieldElement>& coeffs, const FieldElement& z0, int m);
// e^z at 0: every derivative equals 1.
ValueJet exp_jet_at_zero(const NumberField& K, int m);

// k-th derivative of z^i f^j at z0, from the jet (k < m).
FieldElement g_derivative(const ValueJet& jet, int i, int j, int k);

struct JetBound {
    int i = 0, j = 0, k = 0;
    FieldElement value;
    double house = 0;
    double bound = 0;   // A^{i+j} (i+j)^k with A = max(1, house bound)
    double margin = 0;  // bound / house, inf for a zero value
    bool integral = false;  // d^{i+j} value in I_K

    nlohmann::json to_json() const;
};
// Throws bound-violation if the house bound or integrality fails (an upstream bug).
JetBound jet_norm_bounds(const ValueJet& jet, int i, int j, int k);

struct JetLowerBound {
    int n = 0, k = 0;
    bool nonzero = false;
    double log_abs = 0;    // log |d^n F^{(k)}(z0)|
    double log_bound = 0;  // -(sigma - 1) log(h d^n A^n (n+1)^{k+2})
    bool ok = true;

    nlohmann::json to_json() const;
};
// F = sum c_ij z^i w^j, coefficients in I_K in the flat (i + j, j) order.
JetLowerBound jet_lower_bound(const ValueJet& jet, const std::vector<FieldElement>& P, int n, int k);
FieldElement F_derivative(const ValueJet& jet, const std::vector<FieldElement>& P, int n, int k);

struct DecayRecord {
    double t = 0;
    double lhs = 0;  // sup of |F| on |z| = 2r
    double rhs = 0;  // (n+1)^2 h (4r/t)^mu M^n(t, f)
    int mu = 0;      // zeros of F in the disk of radius r
    bool holds = false;

    nlohmann::json to_json() const;
};

struct AuxPolynomial {
    int n = 0;
    std::vector<FieldElement> coeffs;  // flat (i + j, j) order
    std::size_t nu = 0, N = 0;
    double height = 0;
    double bound = 0;     // Siegel target for the system actually solved
    double H_n = 0;       // C1 (C2 d^n A^n (n+1)^{m+1})^{nu/(N-nu)}
    double r = 1;         // max(1, max |z_q|)
    bool vanishing_verified = false;
    std::vector<DecayRecord> decay;

    Complex eval(Complex z, Complex w) const;
    nlohmann::json to_json() const;
};

// Siegel polynomial vanishing to the jets' orders at their points. When f is given, the sup-norm decay
// record is evaluated for each t >= 2r in ts.
AuxPolynomial auxiliary_polynomial(const std::vector<ValueJet>& jets, int n, const core::EntireFunction* f = nullptr,
                                   const std::vector<double>& ts = {});

} // namespace tmlab::algebraic
