#include "tmlab/core/characteristics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/tools/minima.hpp>

#include "tmlab/support/error.hpp"
#include "tmlab/support/quadrature.hpp"

namespace tmlab::core {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double log_abs_at(const EntireFunction& f, double r, double theta) {
    return f.eval_scaled(std::polar(r, theta)).log_abs();
}

double rho_sq(const EntireFunction& f, Complex z) {
    double s = spherical_deriv(f.eval_scaled(z, 0), f.eval_scaled(z, 1));
    return s * s;
}

void require_positive(double r) {
    if (!(r > 0)) domain_error("bad-radius", "radius must be positive");
}

} // namespace

int angular_panels(const EntireFunction& f, double r) {
    // |z f'/f| on a coarse scan, ignoring samples near zeros of f where it blows up.
    double lv[64], ld[64], top = -kInf;
    for (int j = 0; j < 64; ++j) {
        Complex z = std::polar(r, 2 * kPi * j / 64);
        lv[j] = f.eval_scaled(z, 0).log_abs();
        ld[j] = f.eval_scaled(z, 1).log_abs();
        top = std::max(top, lv[j]);
    }
    double worst = 0;
    for (int j = 0; j < 64; ++j)
        if (lv[j] > top - 10 && ld[j] > -kInf) worst = std::max(worst, r * std::exp(ld[j] - lv[j]));
    double p = 16 + 2 * std::min(worst, 1e6);
    return static_cast<int>(std::clamp(p, 16.0, double(1 << 18)));
}

MaxModulus max_modulus(const EntireFunction& f, double r, const CharOptions& opt) {
    require_positive(r);
    int n = std::max(opt.samples, 8 * angular_panels(f, r));
    std::vector<double> vals(n);
    for (int j = 0; j < n; ++j) vals[j] = log_abs_at(f, r, 2 * kPi * j / n);
    auto better = [](double a, double b) {
        // a beats b unless within the tie tolerance
        if (b == -kInf) return a > b;
        return a - b > 1e-13 * std::max(1.0, std::abs(b));
    };
    int best = 0;
    for (int j = 1; j < n; ++j)
        if (better(vals[j], vals[best])) best = j;
    MaxModulus out{vals[best], 0, 2 * kPi * best / n};
    if (out.log_M == -kInf) return out;
    // Refine around every sampled local maximum close to the best value.
    double h = 2 * kPi / n;
    for (int j = 0; j < n; ++j) {
        double v = vals[j];
        if (v < vals[(j + n - 1) % n] || v < vals[(j + 1) % n]) continue;
        if (out.log_M - v > 1e-3 * std::max(1.0, std::abs(out.log_M)) + 1e-9) continue;
        double c = 2 * kPi * j / n;
        auto neg = [&](double t) { return -log_abs_at(f, r, t); };
        auto res = boost::math::tools::brent_find_minima(neg, c - h, c + h, 52);
        if (better(-res.second, out.log_M)) {
            out.log_M = -res.second;
            double a = std::fmod(res.first, 2 * kPi);
            out.angle = a < 0 ? a + 2 * kPi : a;
        }
    }
    out.M = std::exp(out.log_M);
    return out;
}

double growth_m(const EntireFunction& f, double r, const CharOptions& opt) {
    return std::max(0.0, max_modulus(f, r, opt).log_M);
}

Estimate nevanlinna_T(const EntireFunction& f, double r, const CharOptions& opt) {
    require_positive(r);
    auto fn = [&](double t) { return std::max(0.0, log_abs_at(f, r, t)); };
    auto q = integrate(fn, 0, 2 * kPi, angular_panels(f, r), opt.tol * 2 * kPi, opt.max_depth);
    if (!q.converged) numeric_error("quadrature-nonconvergence", "T(r) did not converge");
    return {q.value / (2 * kPi), q.error / (2 * kPi)};
}

Estimate proximity_m0(const EntireFunction& f, double r, const CharOptions& opt) {
    require_positive(r);
    auto fn = [&](double t) {
        double l = log_abs_at(f, r, t);
        if (l == -kInf) return 0.0;
        return std::max(l, 0.0) + 0.5 * std::log1p(std::exp(-2 * std::abs(l)));
    };
    auto q = integrate(fn, 0, 2 * kPi, angular_panels(f, r), opt.tol * 2 * kPi, opt.max_depth);
    if (!q.converged) numeric_error("quadrature-nonconvergence", "m0(r) did not converge");
    return {q.value / (2 * kPi), q.error / (2 * kPi)};
}

namespace {

// int_0^{2pi} rho_f^2(t e^{i theta}) d theta
QuadResult circle_rho_sq(const EntireFunction& f, double t, double abs_tol, int depth) {
    if (t == 0) return {2 * kPi * rho_sq(f, 0), 0, true};
    auto fn = [&](double th) { return rho_sq(f, std::polar(t, th)); };
    return integrate(fn, 0, 2 * kPi, angular_panels(f, t), abs_tol, depth);
}

} // namespace

Estimate ahlfors_S(const EntireFunction& f, double r, const CharOptions& opt, SMethod method) {
    require_positive(r);
    if (method == SMethod::Flux) {
        auto fn = [&](double th) {
            Complex z = std::polar(r, th);
            Scaled v = f.eval_scaled(z, 0), d = f.eval_scaled(z, 1);
            if (v.mantissa == Complex(0) || d.mantissa == Complex(0)) return 0.0;
            // Re(e^{i th} f' conj f)/(1+|f|^2), scales combined in log space
            double num = std::real(std::polar(1.0, th) * d.mantissa * std::conj(v.mantissa));
            double lv = v.log_abs();
            double lden = lv > 0 ? 2 * lv + std::log1p(std::exp(-2 * lv)) : std::log1p(std::exp(2 * lv));
            return num * std::exp(d.log_scale + v.log_scale - lden);
        };
        auto q = integrate(fn, 0, 2 * kPi, angular_panels(f, r), opt.tol * 2 * kPi / r, opt.max_depth);
        if (!q.converged) numeric_error("quadrature-nonconvergence", "S(r) flux did not converge");
        return {r * q.value / (2 * kPi), r * q.error / (2 * kPi)};
    }
    double inner_tol = 0.5 * opt.tol * kPi / (r * r);
    double inner_err = 0;
    bool ok = true;
    auto fn = [&](double t) {
        auto q = circle_rho_sq(f, t, inner_tol, opt.max_depth);
        ok = ok && q.converged;
        inner_err = std::max(inner_err, q.error);
        return t * q.value;
    };
    auto q = integrate(fn, 0, r, 8, 0.5 * opt.tol * kPi, opt.max_depth);
    if (!q.converged || !ok) numeric_error("quadrature-nonconvergence", "S(r) area did not converge");
    double err = (q.error + inner_err * r * r / 2) / kPi;
    return {q.value / kPi, err};
}

Estimate ahlfors_T0_identity(const EntireFunction& f, double r, const CharOptions& opt) {
    Estimate m0 = proximity_m0(f, r, opt);
    double l0 = f.eval_scaled(0).log_abs();
    double c = l0 == -kInf ? 0.0 : (std::max(l0, 0.0) + 0.5 * std::log1p(std::exp(-2 * std::abs(l0))));
    return {m0.value - c, m0.error + 1e-15 * std::abs(c)};
}

Estimate ahlfors_T0_radial(const EntireFunction& f, double r, const CharOptions& opt) {
    require_positive(r);
    // Exchanging the order of integration in int_0^r S(t)/t dt gives the weight log(r/t).
    double inner_tol = 0.5 * opt.tol * kPi * 4 / (r * r);
    double inner_err = 0;
    bool ok = true;
    auto fn = [&](double t) {
        if (t <= 0) return 0.0;
        auto q = circle_rho_sq(f, t, inner_tol, opt.max_depth);
        ok = ok && q.converged;
        inner_err = std::max(inner_err, q.error);
        return t * std::log(r / t) * q.value;
    };
    auto q = integrate(fn, 0, r, 8, 0.5 * opt.tol * kPi, opt.max_depth);
    if (!q.converged || !ok) numeric_error("quadrature-nonconvergence", "radial T0 did not converge");
    double err = (q.error + inner_err * r * r / 4) / kPi;
    return {q.value / kPi, err};
}

T0Result ahlfors_T0(const EntireFunction& f, double r, const CharOptions& opt) {
    T0Result out;
    out.radial = ahlfors_T0_radial(f, r, opt);
    out.identity = ahlfors_T0_identity(f, r, opt);
    out.discrepancy = std::abs(out.radial.value - out.identity.value);
    if (out.discrepancy > out.radial.error + out.identity.error + 1e-12)
        numeric_error("cross-check-failure", "radial and identity T0 disagree beyond their error bounds");
    return out;
}

Estimate length_L(const EntireFunction& f, double r, const CharOptions& opt) {
    require_positive(r);
    auto fn = [&](double th) { return std::sqrt(rho_sq(f, std::polar(r, th))); };
    auto q = integrate(fn, 0, 2 * kPi, angular_panels(f, r), opt.tol / (2 * r), opt.max_depth);
    if (!q.converged) numeric_error("quadrature-nonconvergence", "L(r) did not converge");
    return {2 * r * q.value, 2 * r * q.error};
}

} // namespace tmlab::core
