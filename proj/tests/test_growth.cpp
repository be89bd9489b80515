#include <doctest.h>

#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/roots.hpp>

#include "tmlab/core/characteristics.hpp"
#include "tmlab/covering/preimages.hpp"
#include "tmlab/extremal/solver.hpp"
#include "tmlab/growth/admissible.hpp"
#include "tmlab/growth/bounds.hpp"
#include "tmlab/growth/classes.hpp"
#include "tmlab/growth/constants.hpp"
#include "tmlab/support/error.hpp"
#include "tmlab/support/mp.hpp"

using namespace tmlab;
using namespace tmlab::growth;

namespace {

using GK = boost::math::quadrature::gauss_kronrod<double, 61>;

// S(R) for e^z: rho^2 = 1/(4 cosh^2 x) depends on Re z only, so the disk integral is one-dimensional.
double exp_S_oracle(double R) {
    auto g = [R](double x) {
        double c = std::cosh(x);
        return 2 * std::sqrt(std::max(0.0, R * R - x * x)) / (4 * c * c);
    };
    double lim = std::min(R, 40.0);
    return GK::integrate(g, -lim, lim, 20, 1e-14) / kPi;
}

// T0(r) for e^z from the circle mean of log sqrt(1 + |e^z|^2).
double exp_T0_oracle(double r) {
    auto g = [r](double t) {
        double x = r * std::cos(t);
        return x > 0 ? x + 0.5 * std::log1p(std::exp(-2 * x)) : 0.5 * std::log1p(std::exp(2 * x));
    };
    return GK::integrate(g, 0, 2 * kPi, 20, 1e-14) / (2 * kPi) - 0.5 * std::log(2.0);
}

double bisect(const std::function<double(double)>& g, double lo, double hi) {
    auto tol = [](double a, double b) { return std::abs(b - a) <= 1e-12 * std::abs(b); };
    auto [a, b] = boost::math::tools::bisect(g, lo, hi, tol);
    return 0.5 * (a + b);
}

GrowthTable square_law(std::vector<double> grid) {
    // S(R) = R^2 and m(4R) = R^2
    return GrowthTable::synthetic(
        "S=R^2", [](double r) { return r * r; }, [](double r) { return r * r / 16; }, std::move(grid),
        [](double r) { return r * r / 2; });
}

std::vector<double> geo(double lo, double hi, int n) {
    std::vector<double> g;
    for (int i = 0; i < n; ++i) g.push_back(lo * std::pow(hi / lo, double(i) / (n - 1)));
    return g;
}

} // namespace

TEST_CASE("lambda constant against a 100-digit oracle") {
    for (double d : {1.0, 2.0, 0.5, 1.5}) {
        MpReal dd(d);
        MpReal v = -log(MpReal(4) + MpReal(48) * mp_pi() / dd * exp(36 * mp_pi() * mp_pi() / (dd * dd)));
        CHECK(std::abs(lambda_const(d) - v.convert_to<double>()) < 1e-12 * std::abs(v.convert_to<double>()));
    }
    CHECK(lambda_const(1) == doctest::Approx(-360.33).epsilon(0.01 / 360));
    CHECK(lambda_const(1) < -300);
    CHECK(lambda_const(2) == doctest::Approx(-(9 * kPi * kPi + std::log(24 * kPi))).epsilon(1e-12));
    CHECK(std::isfinite(lambda_const(1e-3)));
    double prev = 0;
    for (double d = 2; d > 0.05; d *= 0.9) {
        double v = lambda_const(d);
        CHECK(v < prev);
        prev = v;
    }
    CHECK_THROWS_AS(lambda_const(0), Error);
    CHECK_THROWS_AS(lambda_const(2.5), Error);
    CHECK(h_const(1) == 1.5);
    CHECK(log_h1(2) == doctest::Approx(9 * kPi * kPi));
    CHECK(spherical_distance(1, -1) == doctest::Approx(2));
    CHECK(spherical_distance(1, Complex(0, 1)) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("constants table") {
    auto c = constants_table(1, 0.5, 1.0);
    CHECK(c.log_lambda < -300);
    CHECK(c.lambda.surrogate);
    CHECK(*c.C == doctest::Approx(768));
    CHECK(std::exp(*c.log_a) == doctest::Approx(8.0 * 8 * 8 * 8 * 6 / 0.5));
    auto g = constants_table(1);
    CHECK(!g.lambda.surrogate);
    CHECK(g.lambda.log_value == c.log_lambda);
    CHECK(!g.C);
    CHECK(g.to_json()["h"] == "1.5");
}

TEST_CASE("R0 and R1 on a synthetic law") {
    auto t = square_law(geo(1, 1000, 40));
    auto rr = r0_r1_of(t, 1e-12);
    double s_target = 288 * kPi * kPi / std::log(4.0 / 3.0);
    CHECK(rr.roots["S(R)"] == doctest::Approx(std::sqrt(s_target)).epsilon(1e-10));
    // m(R) = R^2/16 meets 4 log R above 1
    double mroot = bisect([](double r) { return r * r / 16 - 4 * std::log(r); }, 5, 100);
    CHECK(rr.roots["m(R)"] == doctest::Approx(mroot).epsilon(1e-10));
    CHECK(rr.roots["m(4R)"] == doctest::Approx(6).epsilon(1e-10));
    CHECK(rr.roots["T0"] == doctest::Approx(std::sqrt(3 * std::log(2.0))).epsilon(1e-10));
    CHECK(rr.R0 == doctest::Approx(std::sqrt(s_target)).epsilon(1e-10));
    CHECK(rr.R1 >= rr.R0);

    auto shifted = GrowthTable::synthetic(
        "f0", [](double r) { return r * r; }, [](double r) { return r * r / 16; }, geo(1, 1000, 40),
        [](double r) { return r * r / 2; }, 2.0);
    CHECK(r0_r1_of(shifted, 1e-12).roots["T0"] == doctest::Approx(std::sqrt(3 * std::log(2.0) + 12)).epsilon(1e-10));

    CHECK_THROWS_AS(r0_r1_of(square_law(geo(1, 50, 10))), Error);
}

TEST_CASE("R0 for e^z against quadrature oracles") {
    auto f = core::EntireFunction::exp();
    auto t = GrowthTable::live(f, geo(1, 40000, 41));
    auto rr = r0_r1_of(t, 1e-7);
    double s_target = 288 * kPi * kPi / std::log(4.0 / 3.0);
    double s_root = bisect([&](double r) { return exp_S_oracle(r) - s_target; }, 20000, 40000);
    CHECK(rr.roots["S(R)"] == doctest::Approx(s_root).epsilon(1e-6));
    double m_root = bisect([](double r) { return r - 4 * std::log(r); }, 3, 20);
    CHECK(m_root == doctest::Approx(8.613).epsilon(1e-4));
    CHECK(rr.roots["m(R)"] == doctest::Approx(m_root).epsilon(1e-6));
    CHECK(rr.roots["m(4R)"] == doctest::Approx(9).epsilon(1e-6));
    double t_root = bisect([](double r) { return exp_T0_oracle(r) - 1.5 * std::log(2.0); }, 0.5, 20);
    CHECK(rr.roots["T0"] == doctest::Approx(t_root).epsilon(1e-6));
    CHECK(rr.R0 == rr.roots["S(R)"]);
    CHECK(rr.R1 == rr.R0);
    MESSAGE("R0(e^z) = " << rr.R0);

    CHECK_THROWS_AS(r0_r1_of(GrowthTable::live(f, geo(1, 1000, 12))), Error);
}

TEST_CASE("profile-backed table brackets") {
    auto f = core::EntireFunction::exp();
    auto p = core::build_profile(f, {1, 2, 4, 8});
    auto t = GrowthTable::from_profile(p);
    auto at2 = t.S(2);
    CHECK(at2.lo <= exp_S_oracle(2));
    CHECK(at2.hi >= exp_S_oracle(2));
    auto mid = t.S(3);
    CHECK(mid.lo <= exp_S_oracle(3));
    CHECK(mid.hi >= exp_S_oracle(3));
    CHECK(t.m(5).lo <= 5);
    CHECK(t.m(5).hi >= 5);
    CHECK_THROWS_AS(t.S(9), Error);
}

TEST_CASE("admissible_check") {
    auto t = square_law({100});
    AdmissibleParams p;
    p.alpha = 1;
    p.beta = 0.1;
    p.gamma = 1;
    p.C = 1;
    p.n0 = 0;
    auto half = LambdaSource::surrogate_value(0.5);
    auto o = admissible_check(t, 100, p, half);
    REQUIRE(o.admissible());
    CHECK(o.interval->lo == 1000);
    CHECK(o.interval->hi == 2500);

    auto g = admissible_check(t, 100, p, LambdaSource::genuine());
    REQUIRE(!g.admissible());
    CHECK(g.rejection->condition == "beta S^gamma <= Lambda S/2 - n0 - 1");

    auto bad = p;
    bad.gamma = 0;
    CHECK(admissible_check(t, 100, bad, half).rejection->condition == "parameters");
    bad = p;
    bad.R1 = 100;
    CHECK(admissible_check(t, 100, bad, half).rejection->condition == "R>R1");
    bad = p;
    bad.alpha = 2.5;
    CHECK(admissible_check(t, 100, bad, half).rejection->condition == "S>=R^alpha");
    bad = p;
    bad.C = 0.5;
    CHECK(admissible_check(t, 100, bad, half).rejection->condition == "m(4R)<=C S");

    // gamma = 1/2: beta sqrt(S) = 10 exactly
    auto sq = p;
    sq.gamma = 0.5;
    auto h = admissible_check(t, 100, sq, half);
    REQUIRE(h.admissible());
    CHECK(h.interval->lo == 10);
    // n0 shifts the top end
    auto shifted = p;
    shifted.n0 = 7;
    CHECK(admissible_check(t, 100, shifted, half).interval->hi == 2493);
}

TEST_CASE("admissible intervals re-verify independently") {
    auto t = square_law(geo(20, 500, 30));
    AdmissibleParams p;
    p.alpha = 1.5;
    p.beta = 0.3;
    p.gamma = 0.75;
    p.C = 1.2;
    p.n0 = 3;
    p.R1 = 25;
    auto lam = LambdaSource::surrogate_value(0.25);
    int accepted = 0;
    for (double R : t.grid()) {
        auto o = admissible_check(t, R, p, lam);
        double S = R * R, m4 = R * R;
        bool oracle = R > p.R1 && p.beta * std::pow(S, p.gamma) <= 0.125 * S - p.n0 - 1 && S >= std::pow(R, p.alpha) &&
                      m4 <= p.C * S;
        CHECK(o.admissible() == oracle);
        if (o.admissible()) {
            ++accepted;
            CHECK(o.interval->lo == static_cast<long long>(std::ceil(p.beta * std::pow(S, p.gamma) - 1e-9)));
            CHECK(o.interval->hi == static_cast<long long>(std::floor(0.125 * S - p.n0 + 1e-9)));
        }
    }
    CHECK(accepted > 5);
}

TEST_CASE("covering_scan") {
    std::vector<double> grid;
    for (double R = 100; R <= 400; R += 20) grid.push_back(R);
    auto t = square_law(grid);
    AdmissibleParams p;
    p.alpha = 1;
    p.beta = 0.1;
    p.gamma = 1;
    p.C = 1;
    auto half = LambdaSource::surrogate_value(0.5);
    auto sys = covering_scan(t, p, half);
    REQUIRE(!sys.empty());
    CHECK(sys.intervals.size() >= 2);
    CHECK(sys.chain.size() + 1 == sys.intervals.size());
    CHECK(verify_covering_system(sys, p, half));
    for (std::size_t j = 0; j + 1 < sys.intervals.size(); ++j) {
        Rational Sj(sys.intervals[j].S.lo), Sn(sys.intervals[j + 1].S.hi);
        CHECK(Rational(1, 10) * Sn <= Rational(1, 4) * Sj);
        CHECK(sys.chain[j].method == "rational");
    }
    auto tampered = sys;
    tampered.intervals[1].S.hi = 1e9;
    CHECK(!verify_covering_system(tampered, p, half));
    tampered = sys;
    tampered.intervals[0].hi += 1;
    CHECK(!verify_covering_system(tampered, p, half));

    CHECK(covering_scan(square_law({100}), p, half).intervals.size() <= 1);
    CHECK(covering_scan(t, p, LambdaSource::genuine()).empty());

    auto poly = core::EntireFunction::polynomial({QComplex(0), QComplex(0), QComplex(1)});
    auto pt = GrowthTable::live(poly, geo(1, 400, 12));
    auto ps = covering_scan(pt, p, half);
    CHECK(ps.empty());
    CHECK(ps.note.find("empty-system") == 0);
    CHECK(sys.to_json()["chain"].size() == sys.chain.size());
}

TEST_CASE("sc1_check") {
    auto f = core::EntireFunction::exp();
    auto t = GrowthTable::live(f, geo(1, 400, 8));
    auto rep = sc1_check(t, 2, 10, 100, 32, 1.0);
    CHECK(rep.A1 == doctest::Approx(2).epsilon(1e-9));
    CHECK(rep.A2 == doctest::Approx(2).epsilon(1e-9));
    CHECK(rep.accepted);
    CHECK(rep.rho1 == doctest::Approx(1).epsilon(1e-9));
    CHECK(*rep.order_in_range);
    CHECK(*rep.d1 == doctest::Approx(0.5).epsilon(1e-9));

    auto xi = GrowthTable::live(core::EntireFunction::xi(), geo(10, 320, 6));
    auto xr = sc1_check(xi, 8, 10, 40, 16);
    CHECK(xr.accepted);
    CHECK(xr.A1 > 1);
    MESSAGE("xi: A1 = " << xr.A1 << ", A2 = " << xr.A2);

    auto gap = GrowthTable::live(core::EntireFunction::gap_series(3, 2), geo(2, 500, 8));
    auto gr = sc1_check(gap, 2, 50, 200, 40);
    CHECK(gr.A1 < 1.5);
    MESSAGE("gap series on [50, 200]: A1 = " << gr.A1);

    auto flat = GrowthTable::synthetic("flat", [](double) { return 1.0; }, [](double) { return 3.0; }, {});
    auto fr = sc1_check(flat, 2, 1, 10);
    CHECK(!fr.accepted);
    CHECK(!fr.rejection.empty());
}

TEST_CASE("fundamental sequence for e^z") {
    auto f = core::EntireFunction::exp();
    auto t = GrowthTable::live(f, geo(1, 8192, 40));
    auto est = core::OrderEstimate::constant(1);
    auto half = LambdaSource::surrogate_value(0.5);
    auto seq = fundamental_sequence(t, est, half, 5, 1);
    INFO(seq.explanation);
    REQUIRE(!seq.empty());
    CHECK(seq.terms.size() == 5);
    CHECK(seq.k == doctest::Approx(32));
    CHECK(seq.C == doctest::Approx(768));
    long long prev = 0;
    double prev_eps = INFINITY;
    for (const auto& term : seq.terms) {
        CHECK(term.n > prev);
        prev = term.n;
        CHECK(term.R > term.R_touch / seq.k);
        CHECK(term.R < 2 * term.R_touch);
        double S = exp_S_oracle(term.R);
        CHECK(seq.C * S >= 4 * term.R);
        CHECK(term.n >= 0.5 * S / 3 - 1e-9);
        CHECK(term.n <= 0.2 * S + 1e-9);
        CHECK(term.interval.contains(term.n));
        CHECK(term.eps > 0);
        CHECK(term.eps <= prev_eps);
        prev_eps = term.eps;
        CHECK(term.R >= std::pow(double(term.n), 1 - term.eps) / 2);
        // independent admissibility of I(R, 1/2, 1/6, 1, C) with n0 = 1
        CHECK(S >= std::sqrt(term.R));
        CHECK(S / 6 <= S / 4 - 2);
    }
    auto gen = fundamental_sequence(t, est, LambdaSource::genuine(), 5, 1);
    CHECK(gen.empty());
    CHECK(gen.explanation.find("-300") != std::string::npos);

    auto poly = core::EntireFunction::polynomial({QComplex(0), QComplex(0), QComplex(1)});
    auto pt = GrowthTable::live(poly, geo(1, 8192, 30));
    CHECK(fundamental_sequence(pt, core::order_estimate(poly, 1000), half, 5, 0).empty());
    CHECK(fundamental_sequence(pt, core::OrderEstimate::constant(0), half, 5, 0).empty());
}

TEST_CASE("pesif and tc criteria") {
    auto f = core::EntireFunction::exp();
    auto est = core::OrderEstimate::constant(1);
    std::vector<long long> pool;
    for (long long j = 1; j <= 50; ++j) pool.push_back(j);
    auto m_of = [&](double r) { return core::growth_m(f, r); };
    auto v = pesif_criteria(m_of, est, 1, 2, 1, pool);
    CHECK(v.pass);
    CHECK(v.sequence.front() == 1);
    CHECK(v.sequence.back() == 50);
    for (std::size_t i = 0; i < v.sequence.size(); ++i) CHECK(v.r_n[i] == doctest::Approx(double(v.sequence[i])));

    auto thin = pesif_criteria(m_of, est, 0.5, 1, 1, {2, 100});
    CHECK(!thin.pass);
    CHECK(thin.violation.find("(2, 100)") != std::string::npos);

    auto weak = pesif_criteria([](double r) { return 0.5 * r; }, est, 1, 2, 1, pool);
    CHECK(!weak.pass);

    // gap series: n_{j+1} = n_j^2, c_{n_j} = n_j^{-n_j}, r_n = e n / 2
    auto gap = core::EntireFunction::gap_series(3, 2);
    auto c = gap.taylor(17);
    for (int n : {2, 4, 16}) CHECK(std::log(std::abs(c[n])) == doctest::Approx(-n * std::log(double(n))).epsilon(1e-12));
    CHECK(std::abs(c[3]) == 0);
    core::OrderEstimate env;
    env.rho = 1;
    env.log_C = std::log(2 / std::exp(1.0));
    auto logc = [](long long n) { return -double(n) * std::log(double(n)); };
    auto tc = tc_criterion(logc, env, 0.5, 1, std::log(std::exp(1.0) / 2), {2, 4, 16, 256, 65536});
    CHECK(tc.pass);
    CHECK(tc.sequence.size() == 5);
    CHECK(tc.r_n[2] == doctest::Approx(std::exp(1.0) * 8));
    auto tc_bad = tc_criterion(logc, env, 0.5, 1, 0.9, {2, 4, 16});
    CHECK(!tc_bad.pass);
    CHECK_THROWS_AS(pesif_criteria(m_of, est, 1, 2, 1, {3, 2}), Error);
}

TEST_CASE("zeta growth shape") {
    auto xi = core::EntireFunction::xi();
    auto fx = zeta_growth_check(xi, {10, 20, 30, 40});
    CHECK(fx.c1 > 0);
    CHECK(fx.c2 < 3);
    CHECK(fx.ratios.size() == 4);
    auto zt = zeta_growth_check(core::EntireFunction::zeta_tilde(), {10, 20, 30, 40});
    CHECK(zt.c1 > 0);
    CHECK(zt.c2 < 3);
    // m(30, zeta~) >= log|zeta~(30)| = log 29 + log zeta(30)
    CHECK(zt.ratios[2] * 30 * std::log(30.0) >= std::log(29.0));
    MESSAGE("xi: [" << fx.c1 << ", " << fx.c2 << "], zeta~: [" << zt.c1 << ", " << zt.c2 << "]");
    // |xi| < 1 on |z| = 2, so m vanishes there
    CHECK_THROWS_AS(zeta_growth_check(xi, {2}), Error);
    CHECK_THROWS_AS(zeta_growth_check(xi, {41}), Error);
    CHECK_THROWS_AS(zeta_growth_check(xi, {1.5}), Error);
}

TEST_CASE("bounds registry regression values") {
    const auto& reg = growth_bounds();
    auto val = [&](const std::string& k, BoundParams p) { return reg.evaluate(k, p).value; };
    const double e = std::exp(1.0);
    CHECK(val("tme1_en", {{"C", 1}, {"alpha", 1}, {"gamma", 1}, {"beta", 0.1}, {"n", 10}}) ==
          doctest::Approx(2000 * std::log(100.0)).epsilon(1e-13));
    CHECK(val("tme1_en", {{"C", 1}, {"alpha", 1}, {"gamma", 1}, {"beta", 0.1}, {"n", 10}}) ==
          doctest::Approx(9210.34).epsilon(1e-6));
    CHECK(val("tme1_mn", {{"C", 1}, {"gamma", 1}, {"beta", 0.1}, {"n", 10}, {"r", e}}) == doctest::Approx(3000));
    CHECK(val("tme1_mn", {{"C", 2}, {"gamma", 0.5}, {"beta", 0.25}, {"n", 4}, {"r", e * e}}) ==
          doctest::Approx(6 * 16 * 64 * 2.0));
    CHECK(val("tliminf", {{"rho", 1}, {"lambda", 0.5}, {"n", 10}}) ==
          doctest::Approx(4096.0 * 6 / 0.5 * 100 * std::log(10.0)));
    CHECK(val("tgdi_a", {{"rho", 1}, {"lambda", 0.5}}) == doctest::Approx(49152));
    CHECK(val("ec_C", {{"rho", 1}}) == doctest::Approx(768));
    CHECK(val("ec_C", {{"rho", 2}}) == doctest::Approx(1024.0 * 7 / 2));
    CHECK(val("cgnz", {{"a", 2}, {"n", 3}}) == doctest::Approx(72));
    CHECK(val("cgnz", {{"rho", 1}, {"lambda", 0.5}, {"n", 1}}) == doctest::Approx(4 * 49152.0));
    CHECK(val("cnz", {{"C", 1}, {"beta", 0.5}, {"gamma", 1}, {"n", 2}}) == doctest::Approx(160));
    CHECK(val("csc1di", {{"a", 2}, {"n", 3}, {"m_ar", 5}}) == doctest::Approx(48));
    CHECK(val("tgmi", {{"a", 2}, {"M", 3}, {"n", 2}, {"r", 4}}) == doctest::Approx(6 * e));
    CHECK(val("tmi", {{"C", 1}, {"gamma", 1}, {"beta", 1}, {"n", 2}, {"M", 1}, {"r", 1}}) == doctest::Approx(24 * e));
    CHECK(val("tpesif", {{"C", 1}, {"M", 1}, {"rho", 1}, {"gamma", 1}, {"lambda", 0.5}}) == doctest::Approx(24));
    CHECK(val("tpesif", {{"C", 1}, {"M", 1}, {"rho", 1}, {"gamma", 1}, {"lambda", 0.5}, {"n", 2}}) ==
          doctest::Approx(24 * 4 * std::log(12.0)));
    CHECK(val("tpesif_M", {{"rho", 1}, {"gamma", 1}, {"C", 2}, {"b", 1}, {"a", 0.5}}) == doctest::Approx(128));
    CHECK(val("tpesif_C", {{"rho", 1}, {"a", 1}}) == doctest::Approx(768));
    CHECK(val("lmi_c", {{"A", e}, {"k", e}}) == doctest::Approx(e));
    CHECK(val("lpl_c", {{"A1", 16}, {"A2", 2}, {"k", 2}}) == doctest::Approx(32));
    CHECK(val("lsi_c", {{"rho", 1}, {"k", 32}, {"a", 1}}) == doctest::Approx(768));

    std::set<std::string> covered = {"tme1_en", "tme1_mn", "tliminf", "tgdi_a", "ec_C",   "cgnz",    "cnz",
                                     "csc1di",  "tgmi",    "tmi",     "tpesif", "tpesif_M", "tpesif_C", "lmi_c",
                                     "lpl_c",   "lsi_c"};
    for (const auto& k : reg.keys()) CHECK_MESSAGE(covered.count(k), k);
    CHECK(reg.keys().size() == covered.size());
}

TEST_CASE("bounds registry domains and log space") {
    const auto& reg = growth_bounds();
    try {
        reg.evaluate("lpl_c", {{"A1", 8}, {"A2", 2}, {"k", 2}});
        FAIL("expected a domain violation");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Domain);
        CHECK(std::string(e.what()).find("A1") != std::string::npos);
    }
    CHECK_THROWS_AS(reg.evaluate("lsi_c", {{"rho", 1}, {"k", 8}, {"a", 1}}), Error);
    CHECK_THROWS_AS(reg.evaluate("tme1_en", {{"C", 1}, {"alpha", 1}, {"gamma", 1}, {"beta", 0.1}}), Error);
    CHECK_THROWS_AS(reg.evaluate("tme1_en", {{"C", 1}, {"alpha", 1}, {"gamma", 1}, {"beta", 0.1}, {"n", 10}, {"q", 1}}),
                    Error);
    CHECK_THROWS_AS(reg.evaluate("nope", {}), Error);

    // genuine Lambda: log value ~ 360 above the surrogate one
    auto g = reg.evaluate("tgdi_a", {{"rho", 1}});
    CHECK(g.log_value == doctest::Approx(std::log(4096.0 * 6) - lambda_const(1)));
    CHECK(!g.overflow);
    auto big = reg.evaluate("tgdi_a", {{"rho", 1}, {"delta0", 0.5}});
    CHECK(big.overflow);
    CHECK(std::isfinite(big.log_value));

    double prev = 0;
    for (int n = 1; n <= 200; ++n) {
        double v = reg.evaluate("tme1_en", {{"C", 1}, {"alpha", 1}, {"gamma", 0.5}, {"beta", 0.3}, {"n", double(n)}}).value;
        CHECK(v >= prev);
        prev = v;
        double c = reg.evaluate("cnz", {{"C", 1}, {"beta", 0.3}, {"gamma", 0.5}, {"n", double(n)}}).value;
        double c2 = reg.evaluate("cnz", {{"C", 1}, {"beta", 0.3}, {"gamma", 0.5}, {"n", double(n + 1)}}).value;
        CHECK(c2 >= c);
    }
    CHECK(reg.evaluate("tme1_mn", {{"C", 1}, {"gamma", 1}, {"beta", 0.1}, {"n", 10}, {"r", 1}}).value == 0);
}

TEST_CASE("measured m_n stays below the admissible-interval bound for e^z") {
    auto f = core::EntireFunction::exp();
    auto t = GrowthTable::live(f, geo(10, 2000, 24));
    auto half = LambdaSource::surrogate_value(0.5);
    AdmissibleParams p;
    p.alpha = 0.5;
    p.beta = 0.5 / 3;
    p.gamma = 1;
    p.C = ec_constant(1);
    p.n0 = covering::n0_of(f);
    CHECK(p.n0 == 1);
    std::optional<AdmissibleInterval> iv;
    for (double R : t.grid()) {
        if (4 * R > t.r_max()) break;
        auto o = admissible_check(t, R, p, half);
        if (o.admissible() && o.interval->lo <= o.interval->hi) {
            iv = o.interval;
            break;
        }
    }
    REQUIRE(iv);
    long long n = iv->lo;
    REQUIRE(n <= 6);
    double r = std::exp(1.0);
    REQUIRE(r <= iv->R);
    double measured = extremal::mn_lower(f, static_cast<int>(n), r).value;
    double bound = growth_bounds()
                       .evaluate("tme1_mn", {{"C", p.C}, {"gamma", 1}, {"beta", p.beta}, {"n", double(n)}, {"r", r}})
                       .value;
    MESSAGE("n = " << n << " in [" << iv->lo << ", " << iv->hi << "] at R = " << iv->R << ": m_n(e) >= " << measured
                   << ", bound " << bound);
    CHECK(measured <= bound);
}
