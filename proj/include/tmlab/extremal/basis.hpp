#pragma once

#include <map>
#include <mutex>
#include <vector>

#include <Eigen/Dense>

#include "tmlab/core/entire.hpp"
#include "tmlab/extremal/polynomial.hpp"
#include "tmlab/support/mp.hpp"

namespace tmlab::extremal {

// Orthonormal basis q_k of span{z^i f^j : i + j <= n} for the discrete inner product
// (1/K) sum_m u(zeta_m) conj v(zeta_m), zeta_m = exp(2 pi i m / K). Gram-Schmidt runs in
// 100-digit arithmetic because the monomials are nearly dependent along the graph.
class GraphBasis {
public:
    GraphBasis(const core::EntireFunction& f, int n, int grid);

    int degree() const { return n_; }
    std::size_t size() const { return count_; }
    int grid() const { return grid_; }
    // f is summed from exact Taylor data; otherwise its double values are promoted.
    bool exact_function() const { return exact_f_; }

    const Eigen::MatrixXcd& node_values() const { return nodes_; }  // K x N
    Eigen::VectorXcd values(Complex z) const;                       // q_k(z)
    Eigen::VectorXcd torus_values(Complex z, Complex w) const;      // q_k with f replaced by w

    // Monomial coefficients c_ij of sum_k a_k q_k.
    std::vector<MpComplex> monomial_coeffs(const Eigen::VectorXcd& a) const;
    MpComplex eval(const std::vector<MpComplex>& c, Complex z) const;
    MpComplex eval_torus(const std::vector<MpComplex>& c, Complex z, Complex w) const;
    MpComplex f_value(Complex z) const;
    BivarPolynomial to_polynomial(const std::vector<MpComplex>& c, const MpReal& scale) const;

private:
    std::vector<MpComplex> monomials(Complex z, const MpComplex& w) const;
    MpComplex eval_torus_mp(const std::vector<MpComplex>& c, Complex z, const MpComplex& w) const;
    Eigen::VectorXcd transform(const std::vector<MpComplex>& g) const;
    int terms_for(double r) const;

    core::EntireFunction f_;
    int n_, grid_;
    std::size_t count_;
    bool exact_f_ = false;
    std::vector<std::vector<MpComplex>> rinv_;  // upper triangular, column k gives q_k
    Eigen::MatrixXcd nodes_;
    mutable std::vector<MpComplex> taylor_;
    mutable std::map<double, int> terms_;
    mutable std::mutex mutex_;
};

} // namespace tmlab::extremal
