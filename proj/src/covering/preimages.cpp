#include "tmlab/covering/preimages.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "tmlab/extremal/zeros.hpp"
#include "tmlab/support/error.hpp"
#include "tmlab/support/format.hpp"
#include "tmlab/support/quadrature.hpp"

namespace tmlab::covering {

namespace {

constexpr double kFloor = 1e-9;
constexpr int kEdgeSamples = 64;

struct Box {
    Complex lo, hi;  // lower-left and upper-right corners
    double size() const { return std::max(hi.real() - lo.real(), hi.imag() - lo.imag()); }
    Complex center() const { return 0.5 * (lo + hi); }
    bool contains(Complex z, double pad) const {
        return z.real() >= lo.real() - pad && z.real() <= hi.real() + pad && z.imag() >= lo.imag() - pad &&
               z.imag() <= hi.imag() + pad;
    }
};

class Finder {
public:
    Finder(const core::EntireFunction& f, Complex w) : f_(f), w_(w) {}

    Complex F(Complex z) const { return f_.eval(z) - w_; }
    Complex dF(Complex z) const { return f_.eval_deriv(z, 1); }

    // Winding of F around the box boundary, nullopt when a zero sits too close to an edge.
    std::optional<int> winding(const Box& b) const {
        Complex c[4] = {b.lo, Complex(b.hi.real(), b.lo.imag()), b.hi, Complex(b.lo.real(), b.hi.imag())};
        double total = 0;
        for (int e = 0; e < 4; ++e) {
            Complex a = c[e], d = c[(e + 1) % 4] - c[e];
            double len = std::abs(d), slope = 0;
            for (int k = 0; k <= kEdgeSamples; ++k) {
                Complex z = a + d * (double(k) / kEdgeSamples);
                Complex v = F(z), dv = dF(z);
                if (v == Complex(0)) return std::nullopt;
                // |F/F'| tracks the distance to a simple zero; any zero on the edge is within
                // half a sample spacing of some sample.
                if (std::abs(v / dv) < len / kEdgeSamples) return std::nullopt;
                slope = std::max(slope, std::abs(dv / v) * len);
            }
            auto fn = [&](double t) {
                Complex z = a + d * t;
                return std::imag(dF(z) / F(z) * d);
            };
            int panels = std::clamp(static_cast<int>(4 + slope), 4, 2048);
            auto q = integrate(fn, 0, 1, panels, 1e-9, 24);
            if (!q.converged) return std::nullopt;
            total += q.value;
        }
        double wnd = total / (2 * kPi);
        if (std::abs(wnd - std::round(wnd)) >= 0.1) return std::nullopt;
        return static_cast<int>(std::lround(wnd));
    }

    std::optional<Complex> newton(Complex z, const Box& b) const {
        for (int it = 0; it < 60; ++it) {
            Complex d = dF(z);
            if (d == Complex(0)) return std::nullopt;
            Complex step = F(z) / d;
            z -= step;
            if (!b.contains(z, 0.25 * b.size())) return std::nullopt;
            if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(z))) break;
            if (it == 59) return std::nullopt;
        }
        if (!b.contains(z, 1e-12 * std::max(1.0, std::abs(z)))) return std::nullopt;
        return z;
    }

    void process(const Box& b, int wnd, int depth) {
        if (wnd <= 0) return;
        if (wnd == 1) {
            if (auto z = newton(b.center(), b)) {
                roots.push_back({*z, 1, std::abs(F(*z)), false});
                return;
            }
        }
        if (b.size() < kFloor * floor_scale || depth > 80) {
            roots.push_back({b.center(), wnd, std::abs(F(b.center())), wnd >= 2});
            unresolved = unresolved || wnd >= 2;
            return;
        }
        // Split near the middle, moving the cut when a root sits on it.
        for (double frac : {0.5, 0.47, 0.53, 0.41, 0.59, 0.37, 0.63}) {
            double xm = b.lo.real() + frac * (b.hi.real() - b.lo.real());
            double ym = b.lo.imag() + (1 - frac) * (b.hi.imag() - b.lo.imag());
            Box kids[4] = {{b.lo, {xm, ym}},
                           {{xm, b.lo.imag()}, {b.hi.real(), ym}},
                           {{b.lo.real(), ym}, {xm, b.hi.imag()}},
                           {{xm, ym}, b.hi}};
            int w[4], sum = 0;
            bool ok = true;
            for (int k = 0; k < 4 && ok; ++k) {
                auto v = winding(kids[k]);
                ok = v.has_value() && *v >= 0;
                if (ok) sum += (w[k] = *v);
            }
            if (!ok || sum != wnd) continue;
            for (int k = 0; k < 4; ++k) process(kids[k], w[k], depth + 1);
            return;
        }
        numeric_error("subdivision-failure", "no admissible split for a box of size " + num_str(b.size()));
    }

    std::vector<Root> roots;
    bool unresolved = false;
    double floor_scale = 1;

private:
    const core::EntireFunction& f_;
    Complex w_;
};

} // namespace

std::vector<Complex> PreimageSet::points() const {
    std::vector<Complex> out;
    for (const auto& r : roots) out.push_back(r.z);
    return out;
}

nlohmann::json PreimageSet::to_json() const {
    nlohmann::json j;
    j["w"] = {num_json(w.real()), num_json(w.imag())};
    j["R"] = num_json(R);
    j["radius"] = num_json(radius);
    j["claimed"] = claimed;
    j["found"] = found;
    j["unresolved"] = unresolved;
    auto arr = nlohmann::json::array();
    for (const auto& r : roots)
        arr.push_back({{"re", num_json(r.z.real())},
                       {"im", num_json(r.z.imag())},
                       {"multiplicity", r.multiplicity},
                       {"residual", num_json(r.residual)},
                       {"cluster", r.cluster}});
    j["roots"] = arr;
    j["precision_digits"] = kOutputDigits;
    return j;
}

PreimageSet preimages(const core::EntireFunction& f, Complex w, double R) {
    if (!(R > 0)) domain_error("bad-radius", "R must be positive");
    Finder finder(f, w);
    auto zc = extremal::zero_count([&](Complex z) { return finder.F(z); }, [&](Complex z) { return finder.dF(z); }, R);
    PreimageSet out;
    out.w = w;
    out.R = R;
    out.radius = zc.radius;
    out.claimed = zc.count;
    if (zc.count > 0) {
        finder.floor_scale = std::max(1.0, zc.radius);
        bool done = false;
        for (double grow : {1.0, 1.013, 1.029, 1.047}) {
            double s = zc.radius * grow;
            Box root{{-s, -s}, {s, s}};
            auto wnd = finder.winding(root);
            if (!wnd) continue;
            finder.process(root, *wnd, 0);
            done = true;
            break;
        }
        if (!done) numeric_error("zero-on-contour", "no clean enclosing square for the disk");
    }
    for (const auto& r : finder.roots)
        if (std::abs(r.z) <= zc.radius) out.roots.push_back(r);
    std::sort(out.roots.begin(), out.roots.end(), [](const Root& a, const Root& b) {
        if (std::abs(a.z) != std::abs(b.z)) return std::abs(a.z) < std::abs(b.z);
        return std::arg(a.z) < std::arg(b.z);
    });
    for (const auto& r : out.roots) out.found += r.multiplicity;
    out.unresolved = finder.unresolved;
    if (out.found != out.claimed)
        certificate_error("certificate-mismatch", "found " + std::to_string(out.found) + " roots, winding count " +
                                                      std::to_string(out.claimed));
    return out;
}

int n0_of(const core::EntireFunction& f, int samples) {
    if (samples < 1) domain_error("bad-grid", "need at least one angle");
    int best = 0;
    for (int k = 0; k < samples; ++k) {
        Complex w = std::polar(1.0, 2 * kPi * k / samples);
        auto zc = extremal::zero_count([&](Complex z) { return f.eval(z) - w; },
                                       [&](Complex z) { return f.eval_deriv(z, 1); }, 2);
        best = std::max(best, zc.count);
    }
    return best;
}

} // namespace tmlab::covering
