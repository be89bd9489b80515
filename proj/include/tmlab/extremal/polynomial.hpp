#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "tmlab/support/exact.hpp"

namespace tmlab::extremal {

// Coefficients c_ij, i + j <= n, stored by total degree d = i + j and then by j.
class BivarPolynomial {
public:
    BivarPolynomial() = default;
    explicit BivarPolynomial(int degree);  // zero polynomial
    BivarPolynomial(int degree, std::vector<Complex> coeffs);
    static BivarPolynomial exact(int degree, std::vector<QComplex> coeffs);
    static BivarPolynomial monomial(int degree, int i, int j);

    static std::size_t count(int degree) { return static_cast<std::size_t>((degree + 1) * (degree + 2) / 2); }
    static std::size_t index(int i, int j) { return static_cast<std::size_t>((i + j) * (i + j + 1) / 2 + j); }
    // (i, j) of the flat index
    static std::pair<int, int> exponents(std::size_t idx);

    int degree() const { return degree_; }
    int tight_degree() const;  // largest i+j with a nonzero coefficient, -1 for zero
    bool is_zero() const;
    bool has_exact() const { return exact_.has_value(); }

    const std::vector<Complex>& coeffs() const { return c_; }
    const std::optional<std::vector<QComplex>>& exact_coeffs() const { return exact_; }
    Complex coeff(int i, int j) const { return c_[index(i, j)]; }
    void set(int i, int j, Complex v);

    Complex eval(Complex z, Complex w) const;
    Complex dz(Complex z, Complex w) const;
    Complex dw(Complex z, Complex w) const;
    double coefficient_l2() const;

    BivarPolynomial scaled(double s) const;

    nlohmann::json to_json() const;
    static BivarPolynomial from_json(const nlohmann::json& j);

private:
    int degree_ = 0;
    std::vector<Complex> c_;
    std::optional<std::vector<QComplex>> exact_;
};

} // namespace tmlab::extremal
