#pragma once

#include <vector>

#include <json.hpp>

#include "tmlab/core/entire.hpp"

namespace tmlab::core {

// Proximate order of the form r^{rho(r)} = C r^rho (log r)^beta.
struct OrderEstimate {
    double rho = 0;
    double log_C = 0;
    double beta = 0;
    double fit_residual = 0;
    std::vector<double> radii;
    std::vector<double> m_values;
    std::vector<double> rho_r;  // rho(r) at the sampled radii
    std::vector<double> psi;    // psi(r) = r^{rho(r) - rho}
    double slow_variation_eps = 0;  // max |psi(kr)/psi(r) - 1| over k in [1, 2] on the sampled range

    static OrderEstimate constant(double rho);

    double log_envelope(double r) const;  // rho(r) log r
    double proximate(double r) const;     // rho(r)
    nlohmann::json to_json() const;
};

// rho from the top decade [rmax/10, rmax].
OrderEstimate order_estimate(const EntireFunction& f, double rmax, int samples = 32);
OrderEstimate proximate_fit(const std::vector<double>& radii, const std::vector<double>& m_values);
// Solves r^{rho(r)} = n.
double solve_rn(const OrderEstimate& est, double n);

} // namespace tmlab::core
