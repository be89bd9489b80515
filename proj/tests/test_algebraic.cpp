#include <doctest.h>

#include <cmath>
#include <random>
#include <unordered_map>

#include "tmlab/algebraic/bounds.hpp"
#include "tmlab/algebraic/jets.hpp"
#include "tmlab/algebraic/lattice.hpp"
#include "tmlab/algebraic/measure.hpp"
#include "tmlab/algebraic/siegel.hpp"
#include "tmlab/core/order.hpp"
#include "tmlab/extremal/polynomial.hpp"
#include "tmlab/support/error.hpp"

using namespace tmlab;
using namespace tmlab::algebraic;

namespace {

const NumberField QQ = NumberField::rationals();
const NumberField QI = NumberField::quadratic(-1);
const NumberField QR2 = NumberField::quadratic(2);
const NumberField QM3 = NumberField::quadratic(-3);

FieldElement q(const NumberField& K, long x, long y = 0) { return FieldElement(K, Rational(x), Rational(y)); }

FieldElement random_element(const NumberField& K, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-40, 40), den(1, 6);
    Rational x(num(rng), den(rng)), y(K.degree() == 2 ? num(rng) : 0, den(rng));
    return FieldElement(K, x, y);
}

long long gaussian_grid_count(long R2) {  // #{a + bi : a^2 + b^2 <= R2}
    long long c = 0;
    for (long a = -100; a <= 100; ++a)
        for (long b = -100; b <= 100; ++b) c += a * a + b * b <= R2;
    return c;
}

} // namespace

TEST_CASE("house examples") {
    CHECK(FieldElement(QR2, 1, 1).house_d() == doctest::Approx(1 + std::sqrt(2.0)).epsilon(1e-15));
    for (const auto& K : {QQ, QI, QR2, QM3}) CHECK(q(K, 3).house_d() == doctest::Approx(3));
    CHECK(q(QI, 2, 1).house_d() == doctest::Approx(std::sqrt(5.0)).epsilon(1e-15));
    CHECK(q(QI, 2, 1).house_le(Rational(224, 100)));
    CHECK_FALSE(q(QI, 2, 1).house_le(Rational(223, 100)));
    CHECK(NumberField::parse("Q(i)") == QI);
    CHECK(NumberField::parse("quad:5").half_omega());
    CHECK_THROWS_AS(NumberField::quadratic(8), Error);
}

TEST_CASE("house is submultiplicative and subadditive") {
    std::mt19937_64 rng(11);
    int violations = 0;
    for (const auto& K : {QQ, QI, QR2, QM3, NumberField::quadratic(5)}) {
        for (int t = 0; t < 1000; ++t) {
            auto a = random_element(K, rng), b = random_element(K, rng);
            MpReal ha = a.house(), hb = b.house(), slack("1e-60");
            if ((a * b).house() > ha * hb * (1 + slack)) ++violations;
            if ((a + b).house() > (ha + hb) * (1 + slack)) ++violations;
        }
    }
    CHECK(violations == 0);
}

TEST_CASE("basis norm equivalence on enumeration output") {
    for (const auto& K : {QI, QR2, QM3, NumberField::quadratic(-2), NumberField::quadratic(5)}) {
        CHECK(K.gamma1() > 0);
        CHECK(K.gamma1() <= K.gamma2());
        for (const auto& z : enumerate_IK(K, 1, 6, std::nullopt)) {
            double c = z.coord_norm().convert_to<double>(), h = z.house_d();
            CHECK(K.gamma1() * c <= h * (1 + 1e-9) + 1e-12);
            CHECK(h <= K.gamma2() * c * (1 + 1e-9) + 1e-12);
        }
    }
}

TEST_CASE("lattice point counts") {
    CHECK(count_IK(QI, 1, 2, std::nullopt) == 13);
    CHECK(count_IK(QI, 1, 2, std::nullopt) == gaussian_grid_count(4));
    CHECK(enumerate_IK(QI, 1, 2, std::nullopt).size() == 13);
    CHECK(count_IK(QQ, 1, 5, Rational(3)) == 7);
    CHECK(count_IK(QI, 2, 1, Rational(1)) == 13);
    for (const auto& z : enumerate_IK(QI, 2, 1, Rational(1))) {
        CHECK(z.abs_le(1));
        CHECK((Rational(2) * z).is_integral());
    }
    for (long R : {3, 7, 12, 30}) CHECK(count_IK(QI, 1, R, std::nullopt) == gaussian_grid_count(R * R));
    // real quadratic: house <= A bounds both conjugates; a small brute-force check over x + y sqrt 2
    long long brute = 0;
    for (long x = -20; x <= 20; ++x)
        for (long y = -20; y <= 20; ++y) brute += std::abs(x + y * std::sqrt(2.0)) <= 5 && std::abs(x - y * std::sqrt(2.0)) <= 5;
    CHECK(count_IK(QR2, 1, 5, std::nullopt) == brute);
}

TEST_CASE("N_K(d, A, r) = N_K(1, dA, dr)") {
    struct Case {
        NumberField K;
        long d;
        Rational A;
        std::optional<Rational> r;
    };
    std::vector<Case> grid;
    for (const auto& K : {QQ, QI, QR2, QM3})
        for (long d : {1, 2, 3})
            grid.push_back({K, d, Rational(5, 2), d == 2 ? std::optional<Rational>(Rational(3, 2)) : std::nullopt});
    for (const auto& K : {QQ, QI, QR2, QM3}) {
        grid.push_back({K, 4, Rational(2), Rational(1)});
        grid.push_back({K, 5, Rational(3, 2), Rational(7, 3)});
    }
    REQUIRE(grid.size() == 20);
    for (const auto& c : grid) {
        CAPTURE(c.K.name());
        CAPTURE(c.d);
        std::optional<Rational> dr;
        if (c.r) dr = Rational(c.d) * *c.r;
        CHECK(count_IK(c.K, c.d, c.A, c.r) == count_IK(c.K, 1, Rational(c.d) * c.A, dr));
    }
}

TEST_CASE("np_fit normal forms") {
    std::vector<Rational> As;
    for (long A = 5; A <= 50; A += 5) As.emplace_back(A);
    auto fit = np_fit(QI, 1, As, std::nullopt);
    CHECK(fit.branch == "r>A");
    for (double x : fit.ratios) {
        CHECK(x >= 2.5);
        CHECK(x <= 3.6);
    }
    CHECK(fit.ratios.back() == doctest::Approx(M_PI).epsilon(0.03));

    std::vector<Rational> Bs;
    for (long A = 20; A <= 60; A += 10) Bs.emplace_back(A);
    auto line = np_fit(QQ, 1, Bs, Rational(1, 2));
    CHECK(line.branch == "real r<=A");
    for (double x : line.ratios) {
        CHECK(x >= 1.8);
        CHECK(x <= 2.2);
    }

    for (const auto& K : {QQ, QI, QR2}) {
        double a = double(count_IK(K, 1, 20, std::nullopt)), b = double(count_IK(K, 2, 20, std::nullopt));
        CHECK(b / a == doctest::Approx(std::pow(2.0, K.degree())).epsilon(0.2));
    }
    CHECK_THROWS_AS(enumerate_IK(QI, 1, 100000, std::nullopt), Error);
}

TEST_CASE("Siegel: single equation") {
    SiegelProblem pb{QQ, {{q(QQ, 1), q(QQ, 2), q(QQ, 3)}}, std::nullopt, std::nullopt};
    auto sol = siegel_solve(pb);
    CHECK(sol.height == 1);
    CHECK(sol.verified);
    CHECK((sol.c[0] + Rational(2) * sol.c[1] + Rational(3) * sol.c[2]).is_zero());
    SiegelProblem square{QQ, {{q(QQ, 1), q(QQ, 2)}, {q(QQ, 3), q(QQ, 4)}}, std::nullopt, std::nullopt};
    CHECK_THROWS_AS(siegel_solve(square), Error);
}

namespace {

// Exhaustive meet-in-the-middle over [-h, h]^N: smallest sup-norm of a nonzero integer solution found with
// coordinates bounded by h, or 0 when none exists there.
long mitm_height(const std::vector<std::vector<long>>& M, long h) {
    std::size_t nu = M.size(), N = M[0].size(), half = N / 2;
    auto key = [&](const std::vector<long>& v) {
        std::string k;
        for (long x : v) k += std::to_string(x) + ",";
        return k;
    };
    auto walk = [&](std::size_t from, std::size_t to, auto&& visit) {
        std::vector<long> x(to - from, -h);
        for (;;) {
            visit(x);
            std::size_t i = 0;
            while (i < x.size() && x[i] == h) x[i++] = -h;
            if (i == x.size()) return;
            ++x[i];
        }
    };
    std::unordered_map<std::string, long> left;  // image -> smallest sup-norm
    walk(0, half, [&](const std::vector<long>& x) {
        std::vector<long> img(nu, 0);
        long s = 0;
        for (std::size_t t = 0; t < half; ++t) s = std::max(s, std::abs(x[t]));
        for (std::size_t e = 0; e < nu; ++e)
            for (std::size_t t = 0; t < half; ++t) img[e] += M[e][t] * x[t];
        auto k = key(img);
        auto it = left.find(k);
        // the zero image is kept only for nonzero x
        if (s == 0) return;
        if (it == left.end() || it->second > s) left[k] = s;
    });
    long best = 0;
    walk(half, N, [&](const std::vector<long>& x) {
        std::vector<long> img(nu, 0);
        long s = 0;
        for (std::size_t t = 0; t < N - half; ++t) s = std::max(s, std::abs(x[t]));
        for (std::size_t e = 0; e < nu; ++e)
            for (std::size_t t = 0; t < N - half; ++t) img[e] -= M[e][half + t] * x[t];
        bool zero = std::all_of(img.begin(), img.end(), [](long v) { return v == 0; });
        if (zero && s > 0 && (best == 0 || s < best)) best = s;
        auto it = left.find(key(img));
        if (it != left.end()) {
            long hh = std::max(s, it->second);
            if (best == 0 || hh < best) best = hh;
        }
    });
    return best;
}

std::vector<std::vector<long>> random_system(std::mt19937_64& rng, std::size_t nu, std::size_t N, long emax) {
    std::uniform_int_distribution<long> ent(0, emax);
    std::vector<std::vector<long>> M(nu, std::vector<long>(N));
    for (auto& row : M)
        for (auto& a : row) a = ent(rng);
    return M;
}

SiegelProblem as_problem(const std::vector<std::vector<long>>& M) {
    SiegelProblem pb{QQ, {}, std::nullopt, std::nullopt};
    for (const auto& row : M) {
        std::vector<FieldElement> r;
        for (long a : row) r.push_back(q(QQ, a));
        pb.rows.push_back(r);
    }
    return pb;
}

} // namespace

TEST_CASE("Siegel: 50 seeded instances over Z") {
    std::mt19937_64 rng(20240601);
    for (int t = 0; t < 50; ++t) {
        auto M = random_system(rng, 5, 10, 9);
        auto sol = siegel_solve(as_problem(M));
        CAPTURE(t);
        CHECK(sol.verified);
        CHECK(sol.height <= 90);
        CHECK(sol.height >= 1);
        // re-check with plain integers
        std::vector<long> x;
        for (const auto& c : sol.c) {
            REQUIRE(c.is_integral());
            x.push_back(c.x().convert_to<long>());
        }
        for (const auto& row : M) {
            long s = 0;
            for (std::size_t u = 0; u < 10; ++u) s += row[u] * x[u];
            CHECK(s == 0);
        }
    }
}

TEST_CASE("Siegel: exhaustive oracle") {
    std::mt19937_64 rng(7);
    // one instance at the target size: a solution of height <= 8 exists, and the reduced vector is within the
    // LLL factor 2^{(5-1)/2} sqrt(10) of it
    auto M = random_system(rng, 5, 10, 9);
    long h = mitm_height(M, 8);
    REQUIRE(h > 0);
    CHECK(h <= 90);
    auto sol = siegel_solve(as_problem(M));
    CHECK(sol.height >= h);
    CHECK(sol.height <= 4 * std::sqrt(10.0) * h);
    // small instances: exact minimum against the same factor for rank 2
    for (int t = 0; t < 30; ++t) {
        auto S = random_system(rng, 2, 4, 3);
        long hs = mitm_height(S, 12);
        REQUIRE(hs > 0);
        auto ss = siegel_solve(as_problem(S));
        CHECK(ss.height >= hs);
        CHECK(ss.height <= std::sqrt(2.0) * 2 * hs + 1e-9);
    }
}

TEST_CASE("jet norm bounds") {
    auto e = exp_jet_at_zero(QQ, 3);
    auto b = jet_norm_bounds(e, 1, 1, 1);
    CHECK(b.value == q(QQ, 1));
    CHECK(b.bound == 2);
    auto b0 = jet_norm_bounds(e, 0, 1, 0);
    CHECK(b0.value == q(QQ, 1));
    CHECK(b0.bound == 1);

    ValueJet f{q(QQ, 1), {q(QQ, 2), q(QQ, 3)}};
    auto b2 = jet_norm_bounds(f, 0, 2, 1);
    CHECK(b2.value == q(QQ, 12));
    CHECK(b2.bound == 18);
    CHECK(b2.margin == doctest::Approx(1.5));
    CHECK_THROWS_AS(g_derivative(f, 0, 1, 2), Error);
}

namespace {

// polynomial corpus: exact jets of integer or half-integer polynomials at points of several fields
std::vector<std::pair<ValueJet, std::vector<FieldElement>>> jet_corpus() {
    std::vector<std::pair<ValueJet, std::vector<FieldElement>>> out;
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> c(-3, 3);
    for (const auto& K : {QQ, QI, QR2, QM3}) {
        for (int t = 0; t < 6; ++t) {
            std::vector<FieldElement> poly;
            for (int k = 0; k < 4; ++k) poly.push_back(q(K, c(rng), K.degree() == 2 ? c(rng) : 0));
            FieldElement z0 = FieldElement(K, Rational(c(rng), 1 + t % 2), Rational(K.degree() == 2 ? c(rng) : 0, 1 + t % 2));
            out.emplace_back(polynomial_jet(poly, z0, 4), poly);
        }
    }
    return out;
}

} // namespace

TEST_CASE("jet bounds never violated on the exact corpus") {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<long> c(-4, 4);
    int upper = 0, lower = 0, nonzero = 0;
    for (const auto& [jet, poly] : jet_corpus()) {
        const auto& K = jet.field();
        for (int i = 0; i <= 3; ++i)
            for (int j = 0; j <= 3; ++j)
                for (int k = 0; k < 4; ++k) {
                    CHECK_NOTHROW(jet_norm_bounds(jet, i, j, k));
                    ++upper;
                }
        for (int n = 1; n <= 3; ++n) {
            std::vector<FieldElement> P;
            for (std::size_t idx = 0; idx < extremal::BivarPolynomial::count(n); ++idx)
                P.push_back(q(K, c(rng), K.degree() == 2 ? c(rng) : 0));
            if (std::all_of(P.begin(), P.end(), [](const FieldElement& x) { return x.is_zero(); })) P[0] = q(K, 1);
            for (int k = 0; k < 4; ++k) {
                auto lb = jet_lower_bound(jet, P, n, k);
                CHECK(lb.ok);
                nonzero += lb.nonzero;
                ++lower;
            }
        }
    }
    CHECK(upper > 1000);
    CHECK(nonzero > lower / 2);
}

namespace {

// exact P(z, f(z)) for polynomial f, as a coefficient list in z
std::vector<FieldElement> substitute(const std::vector<FieldElement>& P, int n, const std::vector<FieldElement>& f) {
    const auto& K = f[0].field();
    auto mul = [&](const std::vector<FieldElement>& a, const std::vector<FieldElement>& b) {
        std::vector<FieldElement> r(a.size() + b.size() - 1, FieldElement(K, 0));
        for (std::size_t x = 0; x < a.size(); ++x)
            for (std::size_t y = 0; y < b.size(); ++y) r[x + y] += a[x] * b[y];
        return r;
    };
    std::vector<FieldElement> acc(1, FieldElement(K, 0));
    for (std::size_t idx = 0; idx < P.size(); ++idx) {
        auto [i, j] = extremal::BivarPolynomial::exponents(idx);
        std::vector<FieldElement> term(static_cast<std::size_t>(i) + 1, FieldElement(K, 0));
        term[static_cast<std::size_t>(i)] = P[idx];
        for (int t = 0; t < j; ++t) term = mul(term, f);
        if (term.size() > acc.size()) acc.resize(term.size(), FieldElement(K, 0));
        for (std::size_t x = 0; x < term.size(); ++x) acc[x] += term[x];
    }
    (void)n;
    return acc;
}

FieldElement poly_deriv_at(const std::vector<FieldElement>& p, const FieldElement& z, int k) {
    FieldElement v(z.field(), 0);
    for (std::size_t t = static_cast<std::size_t>(k); t < p.size(); ++t) {
        Rational fall(1);
        for (int s = 0; s < k; ++s) fall *= static_cast<long>(t) - s;
        v += fall * (p[t] * z.pow(static_cast<unsigned>(t - static_cast<std::size_t>(k))));
    }
    return v;
}

} // namespace

TEST_CASE("auxiliary polynomial") {
    auto aux = auxiliary_polynomial({exp_jet_at_zero(QQ, 2)}, 1);
    REQUIRE(aux.coeffs.size() == 3);
    // flat order (0,0), (1,0), (0,1): w - 1 - z up to a unit
    auto unit = aux.coeffs[2];
    REQUIRE(!unit.is_zero());
    CHECK(aux.coeffs[0] == -unit);
    CHECK(aux.coeffs[1] == -unit);
    CHECK(aux.vanishing_verified);

    std::vector<FieldElement> f = {q(QQ, 1), q(QQ, 0), q(QQ, 1)};  // 1 + z^2
    std::vector<ValueJet> jets = {polynomial_jet(f, q(QQ, 0), 2), polynomial_jet(f, q(QQ, 1), 2)};
    auto two = auxiliary_polynomial(jets, 2);
    CHECK(two.nu == 4);
    CHECK(two.N == 6);
    bool nonzero = std::any_of(two.coeffs.begin(), two.coeffs.end(), [](const FieldElement& c) { return !c.is_zero(); });
    CHECK(nonzero);
    auto G = substitute(two.coeffs, 2, f);
    for (const auto& z : {q(QQ, 0), q(QQ, 1)})
        for (int k = 0; k < 2; ++k) CHECK(poly_deriv_at(G, z, k).is_zero());

    jets.push_back(polynomial_jet(f, q(QQ, -1), 2));
    CHECK_THROWS_AS(auxiliary_polynomial(jets, 2), Error);

    // decay record for e^z
    auto fexp = core::EntireFunction::exp();
    auto withdecay = auxiliary_polynomial({exp_jet_at_zero(QQ, 2)}, 1, &fexp, {2.0, 4.0, 8.0});
    REQUIRE(withdecay.decay.size() == 3);
    for (const auto& d : withdecay.decay) CHECK(d.holds);
    CHECK_THROWS_AS(auxiliary_polynomial({exp_jet_at_zero(QQ, 2)}, 1, &fexp, {1.0}), Error);
}

TEST_CASE("algebraic measure") {
    auto m0 = algebraic_measure({exp_jet_at_zero(QQ, 1)}, 1);
    CHECK(m0.finite);
    CHECK(m0.d == 1);
    CHECK(m0.norm == 1);
    CHECK(m0.log_value == 0);

    ValueJet unknown{q(QQ, 1), {}};
    auto inf = algebraic_measure({exp_jet_at_zero(QQ, 1), unknown}, 1);
    CHECK_FALSE(inf.finite);
    CHECK(std::isinf(inf.log_value));

    std::vector<ValueJet> E;
    long vals[] = {5, -2, 0, 1, 4, -5, 3};
    int t = 0;
    for (const auto& z : enumerate_IK(QQ, 1, 3, std::nullopt)) E.push_back({z, {q(QQ, vals[t++])}});
    REQUIRE(E.size() == 7);
    auto m5 = algebraic_measure(E, 1);
    CHECK(m5.norm == 5);
    CHECK(m5.log_value == doctest::Approx(std::log(5.0)));

    ValueJet half{FieldElement(QQ, Rational(1, 2)), {FieldElement(QQ, Rational(1, 3))}};
    auto m6 = algebraic_measure({half}, 1);
    CHECK(m6.d == 6);

    auto ea = a_K_empirical({E, {exp_jet_at_zero(QQ, 1)}}, 1, 3, 1);
    CHECK(ea.log_value == 0);
    CHECK(ea.best == 1);
    CHECK_THROWS_AS(a_K_empirical({E}, 8, 3, 1), Error);

    // z^2 + 1 on I_Q(d, A) within radius 2: d = 1, A = 2 gives values up to 5
    auto eta = eta_empirical({q(QQ, 1), q(QQ, 0), q(QQ, 1)}, {{1, Rational(2)}, {1, Rational(3)}}, 2, 2, 1);
    CHECK(eta.log_value == doctest::Approx(std::log(5.0)));
}

TEST_CASE("growth of the algebraic measure") {
    CHECK(geap_log_rhs(1.5, 0, 8, 2, 20, 100) == doctest::Approx(20.0 / 8 * std::log(100 / (4 * std::exp(4.0) * 1.5))));

    // 20 points of I_Q(i)(3) in the unit disk, integer jets of house <= 5
    auto pts = enumerate_IK(QI, 3, 1, Rational(1));
    REQUIRE(pts.size() >= 20);
    std::vector<ValueJet> E;
    for (int t = 0; t < 20; ++t) {
        ValueJet jet{pts[static_cast<std::size_t>(t)], {}};
        for (int k = 0; k < 6; ++k) jet.values.push_back(q(QI, (t + k) % 5 - 2, (t * k) % 3 - 1));
        E.push_back(jet);
    }
    auto est = core::OrderEstimate::constant(1);
    auto rec = geap_bound(E, 8, 1, est);
    CHECK(rec.r_n == doctest::Approx(8));
    CHECK(rec.z_upper == 44);
    REQUIRE_FALSE(rec.rows.empty());
    for (const auto& row : rec.rows) {
        CHECK(20 * (row.k + 1) * 4 > 64);
        CHECK(row.mu_lo >= 16);
        CHECK(row.holds);
    }
    CHECK(rec.consistent);
    CHECK_THROWS_AS(geap_bound(E, 8, 4, 8.0), Error);
    CHECK_THROWS_AS(geap_bound(E, 8, 1, 8.0, 10), Error);

    auto pg = pgeap_check(E, 8, 1, 8.0, 44);
    CHECK_FALSE(pg.hypothesis);
    CHECK(pg.consistent);
}

TEST_CASE("preimage proportion") {
    auto phi = core::OrderEstimate::constant(1);
    auto rep = proportion_experiment(QI, core::EntireFunction::exp(), {2, 4, 8}, phi);
    REQUIRE(rep.rows.size() == 3);
    CHECK(rep.rows[0].total == 13);
    CHECK(rep.rows[0].members >= 1);
    CHECK(rep.rows[0].proportion >= 1.0 / 13 - 1e-15);
    CHECK(rep.rows[0].member_points == std::vector<std::string>{"0"});
    for (const auto& row : rep.rows) CHECK(row.total >= 1);
    CHECK_FALSE(rep.caveat.empty());

    auto sq = proportion_experiment(QI, core::EntireFunction::parse("poly:0,0,1"), {2, 4, 8}, phi);
    for (const auto& row : sq.rows) CHECK(row.proportion == 1);
    CHECK_THROWS_AS(proportion_experiment(QR2, core::EntireFunction::exp(), {2}, phi), Error);
}

TEST_CASE("algebraic bounds registry") {
    const auto& reg = algebraic_bounds();
    auto v = [&](const std::string& k, growth::BoundParams p) { return reg.evaluate(k, p).log_value; };
    CHECK(v("tgeap_rhs", {{"r", 1}, {"k", 2}, {"n", 8}, {"sigma", 2}, {"mu", 16}, {"r_n", 8}}) ==
          doctest::Approx(-8.43491086702226));
    CHECK(v("pgeap_rhs", {{"n", 8}, {"r", 1}, {"r_n", 64}}) == doctest::Approx(2 * (std::log(16.0) - 4)));
    CHECK(v("tid_rhs", {{"rho", 1}, {"sigma", 2}, {"m", 100}, {"lambda", 0.5}}) == doctest::Approx(-7.604207988899271));
    CHECK(v("tid_a", {{"rho", 1}, {"lambda", 0.5}}) == doctest::Approx(12.188967177627235));
    CHECK(v("tid_s", {{"a", 10}, {"n", 4}, {"m", 4}}) == doctest::Approx(std::log(41.0)));
    CHECK(v("talgineq_a", {{"C", 1}, {"beta", 0.5}, {"gamma", 1}}) == doctest::Approx(std::log(40.0)));
    growth::BoundParams alg = {{"m", 100}, {"s", 10}, {"sigma", 1}, {"rho", 1}, {"C", 1}, {"beta", 0.5}, {"gamma", 1}};
    CHECK(v("talgineq", alg) == doctest::Approx(-2.0735601755984607));
    alg["C_prime"] = 0.1;
    CHECK(v("talgineq", alg) == doctest::Approx(std::log(0.1257373369089141 - 0.1)));
    alg["C_prime"] = 1;
    CHECK_THROWS_AS(v("talgineq", alg), Error);
    CHECK(v("ciad_rhs", {{"sigma", 3}, {"rho", 1}, {"m", 100}, {"c_prime", 1}, {"lambda", 0.5}}) ==
          doctest::Approx(-8.009673097007434));
    CHECK_THROWS_AS(v("ciad_rhs", {{"sigma", 2}, {"rho", 1}, {"m", 100}, {"c_prime", 1}}), Error);
    CHECK(v("tprop_ratio", {{"a", 2}, {"A", 10}, {"eps", 0.5}, {"rho", 1}, {"sigma", 2}}) ==
          doctest::Approx(std::log(20 * std::log(30.0))));
    CHECK(v("lvsl_H", {{"C1", 2}, {"C2", 2}, {"d", 1}, {"A", 3}, {"n", 2}, {"m", 3}, {"nu", 4}, {"N", 6}}) ==
          doctest::Approx(std::log(2 * 1458.0 * 1458.0)));
    CHECK_THROWS_AS(v("lvsl_H", {{"C1", 2}, {"C2", 2}, {"d", 1}, {"A", 3}, {"n", 2}, {"m", 3}, {"nu", 6}, {"N", 6}}), Error);
    CHECK(v("lgt_upper", {{"A", 3}, {"i", 0}, {"j", 2}, {"k", 1}}) == doctest::Approx(std::log(18.0)));
    CHECK(std::isinf(v("lgt_upper", {{"A", 3}, {"i", 0}, {"j", 0}, {"k", 1}})));
    CHECK(v("lgt_lower", {{"h", 2}, {"d", 3}, {"A", 2}, {"n", 2}, {"k", 1}, {"sigma", 2}}) ==
          doctest::Approx(-std::log(2.0 * 9 * 4 * 27)));
    CHECK(v("lvsl_decay", {{"n", 2}, {"H", 5}, {"r", 1}, {"t", 4}, {"mu", 3}, {"logM", 1.5}}) ==
          doctest::Approx(std::log(45.0) + 3));
    CHECK_THROWS_AS(v("lvsl_decay", {{"n", 2}, {"H", 5}, {"r", 1}, {"t", 1}, {"mu", 3}, {"logM", 1.5}}), Error);

    // consistency with the Siegel run: lvsl_H matches H_n of the auxiliary polynomial
    auto aux = auxiliary_polynomial({exp_jet_at_zero(QQ, 2)}, 1);
    double c = siegel_constant(QQ);
    CHECK(std::exp(v("lvsl_H", {{"C1", c}, {"C2", c}, {"d", 1}, {"A", 1}, {"n", 1}, {"m", 2}, {"nu", 2}, {"N", 3}})) ==
          doctest::Approx(aux.H_n));

    const auto& all = all_bounds();
    CHECK(all.keys().size() == reg.keys().size() + growth::growth_bounds().keys().size());
    CHECK(all.evaluate("tme1_en", {{"C", 1}, {"alpha", 1}, {"gamma", 1}, {"beta", 0.1}, {"n", 10}}).value ==
          doctest::Approx(2000 * std::log(100.0)));
}
