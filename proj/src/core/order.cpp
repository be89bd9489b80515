#include "tmlab/core/order.hpp"

#include <algorithm>
#include <cmath>

#include "tmlab/core/characteristics.hpp"
#include "tmlab/support/error.hpp"
#include "tmlab/support/format.hpp"

namespace tmlab::core {

OrderEstimate OrderEstimate::constant(double rho) {
    OrderEstimate e;
    e.rho = rho;
    return e;
}

double OrderEstimate::log_envelope(double r) const {
    double lr = std::log(r);
    double extra = beta == 0 ? 0.0 : beta * std::log(std::max(lr, 1e-300));
    return log_C + rho * lr + extra;
}

double OrderEstimate::proximate(double r) const { return log_envelope(r) / std::log(r); }

nlohmann::json OrderEstimate::to_json() const {
    nlohmann::json samples = nlohmann::json::array();
    for (std::size_t i = 0; i < radii.size(); ++i)
        samples.push_back({{"r", num_str(radii[i])}, {"m", num_str(m_values[i])}, {"rho_r", num_str(rho_r[i])},
                           {"psi", num_str(psi[i])}});
    return {{"rho", num_str(rho)}, {"log_C", num_str(log_C)}, {"beta", num_str(beta)},
            {"fit_residual", num_str(fit_residual)}, {"slow_variation_eps", num_str(slow_variation_eps)},
            {"samples", samples}};
}

OrderEstimate proximate_fit(const std::vector<double>& radii, const std::vector<double>& m_values) {
    if (radii.size() != m_values.size() || radii.size() < 3) domain_error("insufficient-range", "need >= 3 samples");
    std::vector<double> x, y, w;
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (!(radii[i] > std::exp(1.0)) || !(m_values[i] > 0)) continue;
        x.push_back(std::log(radii[i]));
        y.push_back(std::log(m_values[i]));
        w.push_back(std::log(x.back()));
    }
    if (x.size() < 3) domain_error("insufficient-range", "need >= 3 samples with r > e and m(r) > 0");
    std::size_t n = x.size();
    auto mean = [](const std::vector<double>& v) {
        double s = 0;
        for (double t : v) s += t;
        return s / v.size();
    };
    double mx = mean(x), my = mean(y), sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    OrderEstimate e;
    e.rho = sxy / sxx;
    if (!(e.rho > 0)) domain_error("insufficient-range", "log m does not grow with log r");
    // beta: least squares of log m - rho log r against log log r.
    double mw = mean(w), sww = 0, swz = 0;
    std::vector<double> z(n);
    for (std::size_t i = 0; i < n; ++i) z[i] = y[i] - e.rho * x[i];
    double mz = mean(z);
    for (std::size_t i = 0; i < n; ++i) {
        sww += (w[i] - mw) * (w[i] - mw);
        swz += (w[i] - mw) * (z[i] - mz);
    }
    e.beta = sww > 1e-12 ? swz / sww : 0.0;
    if (std::abs(e.beta) < 1e-9) e.beta = 0;
    // C chosen so the envelope touches the data from above.
    double lc = -1e300, res = 0;
    for (std::size_t i = 0; i < n; ++i) lc = std::max(lc, z[i] - e.beta * w[i]);
    e.log_C = lc;
    for (std::size_t i = 0; i < n; ++i) res += std::pow(z[i] - e.beta * w[i] - lc, 2);
    e.fit_residual = std::sqrt(res / n);
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (!(radii[i] > std::exp(1.0))) continue;
        e.radii.push_back(radii[i]);
        e.m_values.push_back(m_values[i]);
        e.rho_r.push_back(e.proximate(radii[i]));
        e.psi.push_back(std::exp(e.log_envelope(radii[i]) - e.rho * std::log(radii[i])));
    }
    // Slow variation of psi on the sampled range.
    double eps = 0;
    for (double r : e.radii)
        for (int j = 1; j <= 8; ++j) {
            double k = 1 + j / 8.0;
            double ratio = std::exp(e.log_envelope(k * r) - e.rho * std::log(k * r) - e.log_envelope(r) +
                                    e.rho * std::log(r));
            eps = std::max(eps, std::abs(ratio - 1));
        }
    e.slow_variation_eps = eps;
    return e;
}

OrderEstimate order_estimate(const EntireFunction& f, double rmax, int samples) {
    if (!(rmax >= 30)) domain_error("insufficient-range", "rmax must be at least 30 for a decade above e");
    std::vector<double> radii, m;
    for (int i = 0; i < samples; ++i) {
        double r = rmax / 10 * std::pow(10.0, static_cast<double>(i) / (samples - 1));
        radii.push_back(r);
        m.push_back(growth_m(f, r));
    }
    auto e = proximate_fit(radii, m);
    // Slope divergence warning surfaces as a large residual; infinite order is not detected further.
    return e;
}

double solve_rn(const OrderEstimate& est, double n) {
    if (!(n > 0)) domain_error("bad-parameter", "n must be positive");
    if (est.beta == 0 && est.log_C == 0) return std::pow(n, 1.0 / est.rho);
    if (est.beta == 0) return std::exp((std::log(n) - est.log_C) / est.rho);
    double target = std::log(n);
    double lo = 1.0, hi = 2.0;
    while (est.log_envelope(std::exp(hi)) < target) hi *= 2;
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        (est.log_envelope(std::exp(mid)) < target ? lo : hi) = mid;
    }
    return std::exp(0.5 * (lo + hi));
}

} // namespace tmlab::core
