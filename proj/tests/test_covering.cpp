#include <doctest.h>

#include <cmath>
#include <random>

#include "tmlab/covering/preimages.hpp"
#include "tmlab/covering/theorems.hpp"
#include "tmlab/support/error.hpp"

using namespace tmlab;
using namespace tmlab::covering;

namespace {

bool covers(Complex c, double r, const std::vector<Complex>& pts) {
    for (Complex p : pts)
        if (std::abs(p - c) > r * (1 + 1e-12) + 1e-12) return false;
    return true;
}

// Smallest disk spanned by a pair or triple that contains everything.
double med_oracle(const std::vector<Complex>& pts) {
    if (pts.size() == 1) return 0;
    double best = INFINITY;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            Complex c = 0.5 * (pts[i] + pts[j]);
            double r = 0.5 * std::abs(pts[i] - pts[j]);
            if (covers(c, r, pts)) best = std::min(best, r);
            for (std::size_t k = j + 1; k < pts.size(); ++k) {
                Complex a = pts[i], b = pts[j], d = pts[k];
                double den = 2 * (a.real() * (b.imag() - d.imag()) + b.real() * (d.imag() - a.imag()) +
                                  d.real() * (a.imag() - b.imag()));
                if (std::abs(den) < 1e-14) continue;
                double ux = (std::norm(a) * (b.imag() - d.imag()) + std::norm(b) * (d.imag() - a.imag()) +
                             std::norm(d) * (a.imag() - b.imag())) / den;
                double uy = (std::norm(a) * (d.real() - b.real()) + std::norm(b) * (a.real() - d.real()) +
                             std::norm(d) * (b.real() - a.real())) / den;
                Complex u(ux, uy);
                double rr = std::abs(a - u);
                if (covers(u, rr, pts)) best = std::min(best, rr);
            }
        }
    return best;
}

// Every labelling of the points with at most n labels.
double partition_oracle(const std::vector<Complex>& pts, int n) {
    std::size_t k = pts.size();
    std::vector<int> lab(k, 0);
    double best = INFINITY;
    while (true) {
        double total = 0;
        for (int b = 0; b < n; ++b) {
            std::vector<Complex> cell;
            for (std::size_t i = 0; i < k; ++i)
                if (lab[i] == b) cell.push_back(pts[i]);
            if (!cell.empty()) total += med_oracle(cell);
        }
        best = std::min(best, total);
        std::size_t i = 0;
        while (i < k && ++lab[i] == n) lab[i++] = 0;
        if (i == k) break;
    }
    return best;
}

std::vector<Complex> random_points(std::mt19937_64& rng, int k, double radius) {
    std::uniform_real_distribution<double> u(-radius, radius);
    std::vector<Complex> p;
    while (static_cast<int>(p.size()) < k) {
        Complex z(u(rng), u(rng));
        if (std::abs(z) <= radius) p.push_back(z);
    }
    return p;
}

bool has_point(const std::vector<Complex>& pts, Complex z, double tol = 1e-10) {
    for (Complex p : pts)
        if (std::abs(p - z) < tol) return true;
    return false;
}

} // namespace

TEST_CASE("preimages of e^z") {
    auto f = core::EntireFunction::exp();
    auto s = preimages(f, 1, 7);
    CHECK(s.claimed == 3);
    CHECK(s.found == 3);
    REQUIRE(s.roots.size() == 3);
    auto p = s.points();
    CHECK(has_point(p, 0));
    CHECK(has_point(p, Complex(0, 2 * kPi)));
    CHECK(has_point(p, Complex(0, -2 * kPi)));
    for (const auto& r : s.roots) {
        CHECK(r.residual < 1e-12);
        CHECK(std::abs(r.z) <= 7);
    }

    auto m = preimages(f, -1, 10);
    CHECK(m.found == 4);
    for (int k : {-3, -1, 1, 3}) CHECK(has_point(m.points(), Complex(0, k * kPi)));
}

TEST_CASE("preimages of polynomials, including a double root") {
    auto sq = core::EntireFunction::polynomial({QComplex(0), QComplex(0), QComplex(1)});
    auto s = preimages(sq, 1, 2);
    CHECK(s.found == 2);
    CHECK(has_point(s.points(), 1));
    CHECK(has_point(s.points(), -1));

    auto d = preimages(sq, 0, 1);
    CHECK(d.found == 2);
    REQUIRE(d.roots.size() == 1);
    CHECK(d.roots[0].multiplicity == 2);
    CHECK(d.roots[0].cluster);
    CHECK(d.unresolved);
    CHECK(std::abs(d.roots[0].z) < 1e-8);
}

TEST_CASE("n0 estimates") {
    auto f = core::EntireFunction::exp();
    // e^z = e^{i theta} at i(theta + 2 pi k); count those in |z| < 2
    int oracle = 0;
    for (int k = 0; k < 64; ++k) {
        double th = 2 * kPi * k / 64;
        int c = 0;
        for (int j = -2; j <= 2; ++j) c += std::abs(th + 2 * kPi * j) < 2;
        oracle = std::max(oracle, c);
    }
    CHECK(n0_of(f) == oracle);
    CHECK(oracle == 1);
    CHECK(n0_of(core::EntireFunction::polynomial({QComplex(0), QComplex(0), QComplex(0), QComplex(1)})) == 3);
    CHECK(n0_of(core::EntireFunction::polynomial({QComplex(0), QComplex(1)})) == 1);
}

TEST_CASE("min enclosing disk against the pair/triple oracle") {
    auto d0 = min_enclosing_disk({0});
    CHECK(d0.radius == 0);
    CHECK(d0.center == Complex(0));
    auto d1 = min_enclosing_disk({0, 1});
    CHECK(std::abs(d1.center - 0.5) < 1e-15);
    CHECK(std::abs(d1.radius - 0.5) < 1e-15);
    auto d2 = min_enclosing_disk({0, 1, Complex(0, 1)});
    CHECK(std::abs(d2.radius - med_oracle({0, 1, Complex(0, 1)})) < 1e-14);

    std::mt19937_64 rng(21);
    for (int t = 0; t < 200; ++t) {
        auto p = random_points(rng, 1 + t % 12, 5);
        auto d = min_enclosing_disk(p);
        CHECK(covers(d.center, d.radius, p));
        CHECK(std::abs(d.radius - med_oracle(p)) < 1e-12);
    }
    CHECK_THROWS_AS(min_enclosing_disk({}), Error);
}

TEST_CASE("exact n-th diameter small cases") {
    CHECK(nth_diameter_exact({0, 1}, 1).total == doctest::Approx(0.5));
    CHECK(nth_diameter_exact({0, 1, 10}, 2).total == doctest::Approx(0.5));
    CHECK(nth_diameter_greedy({0, 1, 10}, 2).total == doctest::Approx(0.5));
    CHECK(nth_diameter_greedy({0, 1, 10}, 3).total == 0);
    CHECK(nth_diameter_exact({0, 1, 10}, 5).total == 0);
    std::vector<Complex> big(15, 0);
    CHECK_THROWS_AS(nth_diameter_exact(big, 2), Error);
}

TEST_CASE("exact n-th diameter against the partition oracle") {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 100; ++t) {
        auto p = random_points(rng, 8, 5);
        double prev = INFINITY;
        for (int n = 1; n <= 3; ++n) {
            auto c = nth_diameter_exact(p, n);
            CHECK(std::abs(c.total - partition_oracle(p, n)) < 1e-10);
            CHECK(c.total <= prev + 1e-12);
            prev = c.total;
            // cover validity
            for (std::size_t i = 0; i < p.size(); ++i)
                CHECK(std::abs(p[i] - c.disks[c.assignment[i]].center) <= c.disks[c.assignment[i]].radius * (1 + 1e-12) + 1e-12);
            CHECK(nth_diameter_greedy(p, n).total >= c.total - 1e-12);
        }
    }
}

TEST_CASE("n-th diameter invariants") {
    std::mt19937_64 rng(5);
    double worst_ratio = 0;
    for (int t = 0; t < 10; ++t) {
        auto p = random_points(rng, 12, 5);
        auto ex = nth_diameter_exact(p, 4);
        auto gr = nth_diameter_greedy(p, 4);
        CHECK(gr.total >= ex.total - 1e-12);
        if (ex.total > 0) worst_ratio = std::max(worst_ratio, gr.total / ex.total);
        // scaling covariance
        std::vector<Complex> q;
        for (Complex z : p) q.push_back(2.5 * z);
        CHECK(std::abs(nth_diameter_exact(q, 4).total - 2.5 * ex.total) < 1e-10);
        // subsets never need more
        std::vector<Complex> sub(p.begin(), p.begin() + 9);
        CHECK(nth_diameter_exact(sub, 4).total <= ex.total + 1e-12);
    }
    MESSAGE("greedy/exact worst ratio on 12-point corpus: " << worst_ratio);
}

TEST_CASE("dn_theta") {
    auto f = core::EntireFunction::exp();
    auto one = dn_theta(f, 0, 15, 1);
    CHECK(one.points.size() == 4);
    CHECK(std::abs(one.diameter - 4 * kPi) < 1e-9);
    CHECK(one.value == 1);
    CHECK(dn_theta(f, 0, 15, 4).value == 0);
    auto lin = core::EntireFunction::polynomial({QComplex(0), QComplex(1)});
    auto none = dn_theta(lin, 0.3, 5, 2);
    CHECK(none.points.empty());
    CHECK(none.value == 0);
    for (double th : {0.5, 2.0, 4.0}) {
        double v = dn_theta(f, th, 12, 2).value;
        CHECK(v >= 0);
        CHECK(v <= 1);
    }
    CHECK_THROWS_AS(dn_theta(f, 0, 1.5, 1), Error);
}

TEST_CASE("tend_check gating") {
    auto f = core::EntireFunction::exp();
    auto rep = tend_check(f, 10, 1, 2, 1, -1, 0.5);
    CHECK(rep.delta0 == doctest::Approx(2));
    CHECK(rep.m2R == doctest::Approx(20).epsilon(1e-9));
    CHECK(rep.S > 0);
    CHECK(rep.lhs == doctest::Approx(std::log(7.5)));
    CHECK(rep.rhs == doctest::Approx(8 * rep.m2R / rep.S));
    CHECK(rep.preimage_count == 7);  // 0, +-2 pi i and +-pi i, +-3 pi i inside |z| <= 11
    CHECK(!rep.contradiction);

    auto genuine = tend_check(f, 10, 1, 2, 1, -1);
    CHECK(!genuine.count_hypothesis);
    CHECK(!genuine.conclusion_asserted);

    auto many = tend_check(f, 10, 1, 100000, 1, -1, 0.5);
    CHECK(!many.count_hypothesis);
    CHECK_THROWS_AS(tend_check(f, 10, 1, 2, 2, -1), Error);
}
