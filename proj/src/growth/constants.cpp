#include "tmlab/growth/constants.hpp"

#include <cmath>
#include <functional>

#include "tmlab/support/error.hpp"
#include "tmlab/support/exact.hpp"
#include "tmlab/support/format.hpp"

namespace tmlab::growth {

double lambda_const(double delta0) {
    if (!(delta0 > 0 && delta0 <= 2)) domain_error("bad-delta0", "delta0 must lie in (0, 2]");
    double a = std::log(4.0);
    double b = std::log(48 * kPi / delta0) + 36 * kPi * kPi / (delta0 * delta0);
    double hi = std::max(a, b), lo = std::min(a, b);
    return -(hi + std::log1p(std::exp(lo - hi)));
}

double h_const(double delta0) {
    if (!(delta0 > 0 && delta0 <= 2)) domain_error("bad-delta0", "delta0 must lie in (0, 2]");
    return 3 / (2 * delta0);
}

double log_h1(double delta0) {
    if (!(delta0 > 0 && delta0 <= 2)) domain_error("bad-delta0", "delta0 must lie in (0, 2]");
    return 36 * kPi * kPi / (delta0 * delta0);
}

double spherical_distance(std::complex<double> a, std::complex<double> b) {
    return 2 * std::abs(a - b) / std::sqrt((1 + std::norm(a)) * (1 + std::norm(b)));
}

LambdaSource LambdaSource::genuine(double delta0) { return {false, lambda_const(delta0), delta0}; }

LambdaSource LambdaSource::surrogate_value(double lambda) {
    if (!(lambda > 0 && lambda <= 1)) domain_error("bad-surrogate", "surrogate Lambda must lie in (0, 1]");
    return {true, std::log(lambda), 1, lambda};
}

double LambdaSource::log_times(double x) const { return log_value + std::log(x); }

double LambdaSource::value() const { return std::exp(log_value); }

nlohmann::json LambdaSource::to_json() const {
    nlohmann::json j{{"source", label()}, {"log_value", num_json(log_value)}};
    if (surrogate)
        j["value"] = num_json(surrogate_input);
    else
        j["delta0"] = num_json(delta0);
    return j;
}

double ec_constant(double rho) {
    if (!(rho > 0)) domain_error("bad-order", "rho must be positive");
    return std::pow(2.0, 3 * rho + 4) * (rho + 5) / rho;
}

double log_gdi_a(double rho, const LambdaSource& lambda) {
    if (!(rho > 0)) domain_error("bad-order", "rho must be positive");
    return (rho + 3) * std::log(8.0) + std::log(rho + 5) - lambda.log_value - std::log(rho);
}

namespace {

// Largest r in [a, b] where holds(r) is false, refined to a crossing with holds() true just above.
// Returns a when the predicate holds on the whole grid segment.
double last_crossing(const std::vector<double>& grid, double top, const std::function<bool(double)>& holds,
                     double rel_tol, const std::string& what) {
    std::vector<double> pts;
    for (double r : grid)
        if (r <= top * (1 + 1e-14)) pts.push_back(std::min(r, top));
    if (pts.empty() || pts.back() < top) pts.push_back(top);
    if (!holds(pts.back()))
        numeric_error("profile-range-insufficient", what + " not reached by r = " + num_str(pts.back()));
    std::size_t i = pts.size() - 1;
    while (i > 0 && holds(pts[i - 1])) --i;
    if (i == 0) return pts.front();
    double lo = pts[i - 1], hi = pts[i];
    while (hi - lo > rel_tol * hi) {
        double mid = 0.5 * (lo + hi);
        (holds(mid) ? hi : lo) = mid;
    }
    return hi;
}

} // namespace

nlohmann::json R0R1::to_json() const {
    nlohmann::json r;
    for (const auto& [k, v] : roots) r[k] = num_json(v);
    return {{"R0", num_json(R0)}, {"R1", num_json(R1)}, {"roots", r}};
}

R0R1 r0_r1_of(const GrowthTable& t, double rel_tol) {
    const auto& g = t.grid();
    if (g.empty()) domain_error("bad-grid", "table has no grid");
    double top = std::isfinite(t.r_max()) ? t.r_max() : g.back();
    R0R1 out;
    double s_target = 288 * kPi * kPi / std::log(4.0 / 3.0);
    out.roots["R=64"] = 64;
    out.roots["S(R)"] = last_crossing(g, top, [&](double r) { return t.S(r).lo >= s_target; }, rel_tol,
                                      "S(R) = 288 pi^2 / log(4/3)");
    out.roots["m(R)"] = last_crossing(
        g, top, [&](double r) { return t.m(r).lo >= 4 * std::max(0.0, std::log(r)); }, rel_tol, "m(R) = 4 log+ R");
    out.roots["m(4R)"] =
        last_crossing(g, top / 4, [&](double r) { return t.m(4 * r).lo >= 36; }, rel_tol, "m(4R) = 36");
    out.R0 = 0;
    for (const auto& [k, v] : out.roots) out.R0 = std::max(out.R0, v);
    double t0_target = 1.5 * std::log(2.0) + 3 * t.log_plus_f0();
    out.roots["T0"] =
        last_crossing(g, top, [&](double r) { return t.T0(r).lo >= t0_target; }, rel_tol, "T0(r) = 3 log 2 / 2 + 3 log+|f(0)|");
    out.R1 = std::max(out.R0, out.roots["T0"]);
    return out;
}

nlohmann::json ConstantsTable::to_json() const {
    auto opt = [](const std::optional<double>& v) { return v ? nlohmann::json(num_str(*v)) : nlohmann::json(); };
    return {{"delta0", num_json(delta0)},
            {"log_lambda", num_json(log_lambda)},
            {"lambda", lambda.to_json()},
            {"R0", opt(R0)},
            {"R1", opt(R1)},
            {"rho", opt(rho)},
            {"C", opt(C)},
            {"log_a", opt(log_a)},
            {"h", num_json(h)},
            {"log_h1", num_json(log_h1)}};
}

ConstantsTable constants_table(double delta0, std::optional<double> surrogate, std::optional<double> rho,
                               std::optional<R0R1> radii) {
    ConstantsTable c;
    c.delta0 = delta0;
    c.log_lambda = lambda_const(delta0);
    c.lambda = surrogate ? LambdaSource::surrogate_value(*surrogate) : LambdaSource::genuine(delta0);
    c.h = h_const(delta0);
    c.log_h1 = growth::log_h1(delta0);
    if (radii) {
        c.R0 = radii->R0;
        c.R1 = radii->R1;
    }
    if (rho) {
        c.rho = rho;
        c.C = ec_constant(*rho);
        c.log_a = log_gdi_a(*rho, c.lambda);
    }
    return c;
}

} // namespace tmlab::growth
