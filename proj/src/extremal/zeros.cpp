#include "tmlab/extremal/zeros.hpp"

#include <cmath>

#include <boost/math/tools/minima.hpp>

#include "tmlab/support/error.hpp"
#include "tmlab/support/quadrature.hpp"

namespace tmlab::extremal {

namespace {

constexpr int kScan = 4096;
constexpr int kMaxNudges = 4;

} // namespace

ZeroCount zero_count(const ComplexFn& F, const ComplexFn& dF, double r) {
    if (!(r > 0)) domain_error("bad-radius", "contour radius must be positive");
    double rad = r;
    for (int nudge = 0; nudge <= kMaxNudges; ++nudge, rad *= 1.0025) {
        // Newton step |F/F'| estimates the distance to the nearest zero.
        double delta = 2e-3 * rad;
        double worst = INFINITY, slope = 0;
        for (int k = 0; k < kScan; ++k) {
            Complex z = std::polar(rad, 2 * kPi * k / kScan);
            Complex v = F(z), d = dF(z);
            if (v == Complex(0)) { worst = 0; break; }
            worst = std::min(worst, std::abs(v / d));
            slope = std::max(slope, std::abs(z * d / v));
        }
        if (worst < delta) continue;
        auto fn = [&](double t) {
            Complex z = std::polar(rad, t);
            return std::real(z * dF(z) / F(z));
        };
        int panels = std::clamp(static_cast<int>(16 + 2 * slope), 16, 4096);
        auto q = integrate(fn, 0, 2 * kPi, panels, 1e-7, 24);
        double w = q.value / (2 * kPi);
        ZeroCount out{static_cast<int>(std::lround(w)), w, std::abs(w - std::round(w)), rad, nudge};
        if (!q.converged || out.residual >= 0.1)
            numeric_error("nonintegral-winding", "winding residual " + std::to_string(out.residual));
        return out;
    }
    numeric_error("zero-on-contour", "zero within reach of every admissible contour");
}

ZeroCount zero_count(const ComposedFunction& F, double r) {
    return zero_count([&](Complex z) { return F.value(z); }, [&](Complex z) { return F.derivative(z); }, r);
}

CircleMax circle_max(const ComplexFn& F, double r, int samples) {
    std::vector<double> vals(samples);
    for (int k = 0; k < samples; ++k) vals[k] = std::abs(F(std::polar(r, 2 * kPi * k / samples)));
    auto better = [](double a, double b) { return a - b > 1e-13 * b; };
    int best = 0;
    for (int k = 1; k < samples; ++k)
        if (better(vals[k], vals[best])) best = k;
    CircleMax out{vals[best], 2 * kPi * best / samples};
    double h = 2 * kPi / samples;
    for (int k = 0; k < samples; ++k) {
        double v = vals[k];
        if (v < vals[(k + samples - 1) % samples] || v < vals[(k + 1) % samples]) continue;
        if (v < (1 - 1e-3) * out.M) continue;
        double c = 2 * kPi * k / samples;
        auto neg = [&](double t) { return -std::abs(F(std::polar(r, t))); };
        auto res = boost::math::tools::brent_find_minima(neg, c - h, c + h, 52);
        if (better(-res.second, out.M)) {
            out.M = -res.second;
            double a = std::fmod(res.first, 2 * kPi);
            out.angle = a < 0 ? a + 2 * kPi : a;
        }
    }
    return out;
}

double doubling_ratio(const ComposedFunction& F, double r) {
    auto fv = [&](Complex z) { return F.value(z); };
    double m1 = circle_max(fv, r).M;
    if (m1 == 0) domain_error("zero-function", "F vanishes identically on the circle");
    return circle_max(fv, 2 * r).M / m1;
}

double markov_ratio(const ComposedFunction& F, double r) {
    double m1 = circle_max([&](Complex z) { return F.value(z); }, r).M;
    if (m1 == 0) domain_error("zero-function", "F vanishes identically on the circle");
    return r * circle_max([&](Complex z) { return F.derivative(z); }, r).M / m1;
}

double doubling_ratio(const BivarPolynomial& p, const core::EntireFunction& f, double r) {
    return doubling_ratio(ComposedFunction(p, f), r);
}

double markov_ratio(const BivarPolynomial& p, const core::EntireFunction& f, double r) {
    return markov_ratio(ComposedFunction(p, f), r);
}

BpReport bp_check(const ComplexFn& F, double r, double s, int m) {
    if (!(r > 0 && r < s)) domain_error("bad-radius", "need 0 < r < s");
    double mr = circle_max(F, r).M, ms = circle_max(F, s).M;
    if (mr == 0) domain_error("zero-function", "F vanishes identically on the circle");
    double log_base = std::log((r * r + s * s) / (2 * r * s));
    BpReport out;
    out.lhs = ms / mr;
    out.rhs = std::exp(m * log_base);
    double log_margin = std::log(ms) - std::log(mr) - m * log_base;
    out.margin = std::exp(log_margin);
    // measured moduli carry rounding; allow a relative 1e-12
    out.pass = log_margin >= -1e-12;
    if (!out.pass) certificate_error("bp-violation", "measured doubling below the Blaschke floor");
    return out;
}

} // namespace tmlab::extremal
