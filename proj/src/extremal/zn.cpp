#include "tmlab/extremal/zn.hpp"

#include <cmath>
#include <random>

#include "tmlab/extremal/composed.hpp"
#include "tmlab/extremal/solver.hpp"
#include "tmlab/extremal/vanishing.hpp"
#include "tmlab/extremal/zeros.hpp"
#include "tmlab/support/error.hpp"

namespace tmlab::extremal {

namespace {

BivarPolynomial random_polynomial(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    std::vector<Complex> c(BivarPolynomial::count(n));
    double s = 0;
    for (auto& x : c) {
        x = Complex(g(rng), g(rng));
        s += std::norm(x);
    }
    for (auto& x : c) x /= std::sqrt(s);
    return BivarPolynomial(n, std::move(c));
}

std::optional<int> try_count(const ComposedFunction& F, double r) {
    try {
        return zero_count(F, r).count;
    } catch (const Error&) {
        return std::nullopt;
    }
}

// Zeros of P(z, zeta(z)) in |z| < r, counted as zeros of Q(z, zeta-tilde(z)) minus those near z = 1.
std::optional<int> zeta_count(const BivarPolynomial& p, const core::EntireFunction& zt, double r) {
    ComposedFunction q(zeta_reduction(p), zt);
    auto total = try_count(q, r);
    if (!total) return std::nullopt;
    if (r <= 1) return total;
    try {
        auto near = zero_count([&](Complex z) { return q.value(1.0 + z); },
                               [&](Complex z) { return q.derivative(1.0 + z); }, 0.05);
        return *total - near.count;
    } catch (const Error&) {
        return std::nullopt;
    }
}

void check(int n, double r) {
    if (n < 1) domain_error("bad-degree", "n must be at least 1");
    if (!(r >= 1)) domain_error("bad-radius", "Z_n(r) needs r >= 1");
}

} // namespace

double zn_theory_upper(const ZnTheory& t, int n) {
    if (!(t.beta > 0 && t.gamma > 0)) domain_error("bad-constant", "beta and gamma must be positive");
    return 10 * t.C * std::pow(2 / t.beta, 1 / t.gamma) * std::pow(double(n), 1 + 1 / t.gamma);
}

ZnBounds zn_bounds(const core::EntireFunction& f, int n, double r, const ZnOptions& opt) {
    check(n, r);
    ZnBounds out;
    VanishingResult v = vanishing_polynomial(f, n);
    auto lower = try_count(ComposedFunction(v.poly, f), r);
    if (!lower) numeric_error("zero-on-contour", "vanishing construction has a zero on every admissible contour");
    out.lower = out.empirical = *lower;
    ++out.samples;
    std::mt19937_64 rng(opt.seed);
    for (int s = 0; s < opt.budget; ++s) {
        auto c = try_count(ComposedFunction(random_polynomial(n, rng), f), r);
        if (!c) { ++out.skipped; continue; }
        ++out.samples;
        out.empirical = std::max(out.empirical, *c);
    }
    if (opt.with_solver && r > 1) {
        auto sol = mn_lower(f, n, r);
        if (auto c = try_count(ComposedFunction(sol.poly, f), r)) {
            ++out.samples;
            out.empirical = std::max(out.empirical, *c);
        } else {
            ++out.skipped;
        }
    }
    if (opt.theory) out.theory_upper = zn_theory_upper(*opt.theory, n);
    return out;
}

ZnBounds zn_bounds_zeta(int n, double r, const ZnOptions& opt) {
    check(n, r);
    auto zt = core::EntireFunction::zeta_tilde();
    // zeta = zeta-tilde / (z - 1) = -zeta-tilde * sum z^k near 0
    std::size_t big_n = BivarPolynomial::count(n);
    auto zts = zt.taylor(big_n - 1);
    std::vector<Complex> zs(zts.size());
    Complex acc = 0;
    for (std::size_t k = 0; k < zts.size(); ++k) {
        acc += zts[k];
        zs[k] = -acc;
    }
    ZnBounds out;
    auto lower = zeta_count(vanishing_from_taylor(zs, n), zt, r);
    if (!lower) numeric_error("zero-on-contour", "vanishing construction has a zero on every admissible contour");
    out.lower = out.empirical = *lower;
    ++out.samples;
    std::mt19937_64 rng(opt.seed);
    for (int s = 0; s < opt.budget; ++s) {
        auto c = zeta_count(random_polynomial(n, rng), zt, r);
        if (!c) { ++out.skipped; continue; }
        ++out.samples;
        out.empirical = std::max(out.empirical, *c);
    }
    if (opt.theory) out.theory_upper = zn_theory_upper(*opt.theory, n);
    return out;
}

} // namespace tmlab::extremal
