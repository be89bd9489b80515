#include "tmlab/growth/classes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tmlab/core/characteristics.hpp"
#include "tmlab/support/error.hpp"
#include "tmlab/support/exact.hpp"
#include "tmlab/support/format.hpp"

namespace tmlab::growth {

namespace {

constexpr double kPlateau = 1e-3;
constexpr double kRound = 1e-12;

nlohmann::json num_array(const std::vector<double>& v) {
    auto a = nlohmann::json::array();
    for (double x : v) a.push_back(num_json(x));
    return a;
}

std::vector<double> geometric(double lo, double hi, int count) {
    std::vector<double> out;
    if (count <= 1 || lo == hi) return {lo};
    for (int i = 0; i < count; ++i) out.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (count - 1)));
    out.back() = hi;
    return out;
}

bool ge_round(double lhs, double rhs) { return lhs >= rhs - kRound * std::max({1.0, std::abs(lhs), std::abs(rhs)}); }

} // namespace

nlohmann::json Sc1Report::to_json() const {
    nlohmann::json j{{"k", num_json(k)},       {"window", {num_json(window_lo), num_json(window_hi)}},
                     {"samples", samples},     {"A1", num_json(A1)},
                     {"A2", num_json(A2)},     {"rho1", num_json(rho1)},
                     {"rho2", num_json(rho2)}, {"accepted", accepted}};
    if (d1) j["d1"] = num_json(*d1);
    if (d2) j["d2"] = num_json(*d2);
    if (order_in_range) j["order_in_range"] = *order_in_range;
    if (!rejection.empty()) j["rejection"] = rejection;
    return j;
}

Sc1Report sc1_check(const GrowthTable& t, double k, double window_lo, double window_hi, int samples,
                    std::optional<double> order) {
    if (!(k > 1)) domain_error("bad-parameter", "k must exceed 1");
    if (!(window_lo > 0 && window_hi >= window_lo)) domain_error("bad-window", "need 0 < lo <= hi");
    Sc1Report rep;
    rep.k = k;
    rep.window_lo = window_lo;
    rep.window_hi = window_hi;
    std::vector<double> rs = geometric(window_lo, window_hi, samples);
    for (double r : t.grid())
        if (r > window_lo && r < window_hi) rs.push_back(r);
    std::sort(rs.begin(), rs.end());
    rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
    rep.samples = static_cast<int>(rs.size());
    rep.A1 = std::numeric_limits<double>::infinity();
    rep.A2 = 0;
    for (double r : rs) {
        Bracket a = t.m(r), b = t.m(k * r);
        if (!(a.lo > 0)) {
            rep.rejection = "m(r) is not positive at r = " + num_str(r);
            rep.A1 = rep.A2 = 0;
            return rep;
        }
        rep.A1 = std::min(rep.A1, b.lo / a.hi);
        rep.A2 = std::max(rep.A2, b.hi / a.lo);
    }
    rep.rho1 = std::log(rep.A1) / std::log(k);
    rep.rho2 = std::log(rep.A2) / std::log(k);
    rep.accepted = rep.A1 > 1;
    if (!rep.accepted) rep.rejection = "A1 = " + num_str(rep.A1) + " <= 1";
    if (t.covers(1)) {
        double m1 = t.m(1).mid();
        rep.d1 = m1 / rep.A1;
        rep.d2 = rep.A2 * m1;
    }
    if (order) rep.order_in_range = *order >= rep.rho1 - 1e-9 && *order <= rep.rho2 + 1e-9;
    return rep;
}

nlohmann::json FundamentalTerm::to_json() const {
    return {{"R_touch", num_json(R_touch)}, {"R", num_json(R)},           {"n", n},
            {"eps", num_json(eps)},         {"eps_raw", num_json(eps_raw)}, {"interval", interval.to_json()}};
}

nlohmann::json FundamentalSequence::to_json() const {
    auto terms_j = nlohmann::json::array();
    for (const auto& t : terms) terms_j.push_back(t.to_json());
    return {{"rho", num_json(rho)},         {"k", num_json(k)},     {"C", num_json(C)},
            {"lambda", lambda.to_json()},   {"terms", terms_j},     {"touching", num_array(touching)},
            {"explanation", explanation},   {"empty", empty()}};
}

FundamentalSequence fundamental_sequence(const GrowthTable& t, const core::OrderEstimate& est, const LambdaSource& lambda,
                                         int jmax, long long n0, double R1) {
    FundamentalSequence seq;
    seq.rho = est.rho;
    seq.lambda = lambda;
    if (!(est.rho > 0)) {
        seq.explanation = "order estimate is not positive; no envelope touching";
        return seq;
    }
    seq.k = std::pow(2.0, 5 / est.rho);
    seq.C = ec_constant(est.rho);

    // envelope ratios on grid points where the whole search window is covered
    std::vector<double> rs, ratio;
    for (double r : t.grid()) {
        if (!(r > std::exp(1.0)) || !t.covers(r / seq.k) || !t.covers(8 * r)) continue;
        double m = t.m(r).mid();
        if (!(m > 0)) continue;
        rs.push_back(r);
        ratio.push_back(std::exp(std::log(m) - est.log_envelope(r)));
    }
    for (std::size_t i = 0; i < rs.size(); ++i) {
        bool left = i == 0 || ratio[i] >= ratio[i - 1] * (1 - kPlateau);
        bool right = i + 1 == rs.size() || ratio[i] >= ratio[i + 1] * (1 - kPlateau);
        if (left && right && ratio[i] >= 1 - kPlateau) seq.touching.push_back(rs[i]);
    }
    if (seq.touching.empty()) {
        seq.explanation = "no radius where m(r) meets the envelope r^rho(r) within the plateau tolerance";
        return seq;
    }

    AdmissibleParams p;
    p.alpha = est.rho / 2;
    p.gamma = 1;
    p.C = seq.C;
    p.n0 = n0;
    p.R1 = R1;
    p.beta = lambda.value() / 3;
    std::string first_fail;
    long long last_n = 0;
    for (double Rt : seq.touching) {
        if (static_cast<int>(seq.terms.size()) >= jmax) break;
        // R ranges over (R'/k, 2R'); the first candidate meeting every condition wins
        std::string fail;
        std::optional<FundamentalTerm> found;
        for (double R : geometric(Rt / seq.k, 2 * Rt, 34)) {
            if (R <= Rt / seq.k || R >= 2 * Rt) continue;
            if (!(seq.C * t.S(R).lo >= t.m(4 * R).hi)) {
                if (fail.empty()) fail = "C S(R) >= m(4R) fails at R = " + num_str(R);
                continue;
            }
            Bracket S = t.S(R);
            long long lo, hi;
            if (lambda.surrogate) {
                Rational L = decimal_rational(lambda.surrogate_input);
                lo = ceil_rational(L * Rational(S.hi) / 3).convert_to<long long>();
                hi = floor_rational(2 * L * Rational(S.lo) / 5).convert_to<long long>();
            } else {
                double l3 = std::exp(lambda.log_times(S.hi / 3)), l25 = std::exp(lambda.log_times(2 * S.lo / 5));
                lo = static_cast<long long>(std::ceil(l3));
                hi = static_cast<long long>(std::floor(l25));
            }
            lo = std::max({lo, last_n + 1, 1LL});
            if (lo > hi) {
                fail = "[Lambda S/3, 2 Lambda S/5] holds no new integer at R = " + num_str(R);
                if (!lambda.surrogate)
                    fail += "; log Lambda = " + num_str(lambda.log_value, 6) + " < -300 makes it empty at any computable S";
                continue;
            }
            auto adm = admissible_check(t, R, p, lambda);
            if (!adm.admissible()) {
                fail = "I(R_j) not admissible at R = " + num_str(R) + ": " + adm.rejection->condition;
                continue;
            }
            if (!adm.interval->contains(lo)) {
                fail = "n_j outside I(R_j) at R = " + num_str(R);
                continue;
            }
            FundamentalTerm term;
            term.R_touch = Rt;
            term.R = R;
            term.n = lo;
            term.interval = *adm.interval;
            if (lo >= 2) {
                term.eps_raw = 1 / est.rho - std::log(2 * R) / std::log(static_cast<double>(lo));
                term.eps = std::max(term.eps_raw, 1 / std::log(static_cast<double>(lo)));
            } else {
                term.eps_raw = -std::numeric_limits<double>::infinity();
                term.eps = 1;
            }
            found = term;
            break;
        }
        if (!found) {
            if (first_fail.empty()) first_fail = "near R' = " + num_str(Rt) + ": " + fail;
            continue;
        }
        last_n = found->n;
        seq.terms.push_back(*found);
    }
    if (seq.terms.empty())
        seq.explanation = first_fail;
    else if (!first_fail.empty())
        seq.explanation = "some touching radii skipped: " + first_fail;
    return seq;
}

nlohmann::json SubsequenceVerdict::to_json() const {
    auto seq = nlohmann::json::array();
    for (auto n : sequence) seq.push_back(n);
    nlohmann::json j{{"pass", pass}, {"sequence", seq}, {"r_n", num_array(r_n)}, {"lhs", num_array(lhs)},
                     {"rhs", num_array(rhs)}};
    if (!violation.empty()) j["violation"] = violation;
    return j;
}

namespace {

SubsequenceVerdict select(const std::function<std::pair<double, double>(long long, double)>& sides,
                          const core::OrderEstimate& est, double gamma, double b, const std::vector<long long>& pool,
                          const std::string& cond_name) {
    if (!(gamma > 0 && gamma <= 1 && b > 0)) domain_error("bad-parameter", "need 0 < gamma <= 1 and b > 0");
    for (std::size_t i = 0; i < pool.size(); ++i)
        if (pool[i] < 1 || (i > 0 && pool[i] <= pool[i - 1])) domain_error("bad-sequence", "pool must increase from 1");
    SubsequenceVerdict v;
    std::size_t n = pool.size();
    std::vector<double> rn(n), l(n), r(n);
    std::vector<bool> ok(n);
    for (std::size_t i = 0; i < n; ++i) {
        rn[i] = core::solve_rn(est, static_cast<double>(pool[i]));
        std::tie(l[i], r[i]) = sides(pool[i], rn[i]);
        ok[i] = ge_round(l[i], r[i]);
    }
    auto take = [&](std::size_t i) {
        v.sequence.push_back(pool[i]);
        v.r_n.push_back(rn[i]);
        v.lhs.push_back(l[i]);
        v.rhs.push_back(r[i]);
    };
    std::size_t cur = 0;
    while (cur < n && !ok[cur]) ++cur;
    if (cur == n) {
        v.violation = cond_name + " fails for every pool member";
        return v;
    }
    take(cur);
    auto reachable = [&](std::size_t from, std::size_t to) {
        // n_to^gamma <= b n_from, in logs
        double lhs = gamma * std::log(static_cast<double>(pool[to]));
        double rhs = std::log(b) + std::log(static_cast<double>(pool[from]));
        return lhs <= rhs + kRound * std::max(1.0, std::abs(rhs));
    };
    while (cur + 1 < n) {
        std::optional<std::size_t> next;
        for (std::size_t i = cur + 1; i < n && reachable(cur, i); ++i)
            if (ok[i]) next = i;
        if (!next) {
            std::size_t i = cur + 1;
            if (!reachable(cur, i))
                v.violation = "n_{j+1}^gamma <= b n_j fails for the pair (" + std::to_string(pool[cur]) + ", " +
                              std::to_string(pool[i]) + ")";
            else
                v.violation = cond_name + " fails at n = " + std::to_string(pool[i]);
            return v;
        }
        cur = *next;
        take(cur);
    }
    v.pass = true;
    return v;
}

} // namespace

SubsequenceVerdict pesif_criteria(const std::function<double(double)>& m_of, const core::OrderEstimate& est,
                                  double gamma, double b, double a, const std::vector<long long>& pool) {
    if (!(a > 0 && a <= 1)) domain_error("bad-parameter", "need 0 < a <= 1");
    auto sides = [&](long long n, double rn) { return std::make_pair(m_of(rn), a * static_cast<double>(n)); };
    return select(sides, est, gamma, b, pool, "m(r_n) >= a n");
}

SubsequenceVerdict tc_criterion(const std::function<double(long long)>& log_abs_coef, const core::OrderEstimate& est,
                                double gamma, double b, double a, const std::vector<long long>& pool) {
    if (!(a > 0 && a <= 1)) domain_error("bad-parameter", "need 0 < a <= 1");
    auto sides = [&](long long n, double rn) {
        double nd = static_cast<double>(n);
        return std::make_pair(log_abs_coef(n), a * nd - nd * std::log(rn));
    };
    return select(sides, est, gamma, b, pool, "log|c_n| >= a n - n log r_n");
}

nlohmann::json ZetaGrowthFit::to_json() const {
    return {{"function", function}, {"radii", num_array(radii)}, {"ratios", num_array(ratios)},
            {"c1", num_json(c1)},   {"c2", num_json(c2)}};
}

ZetaGrowthFit zeta_growth_check(const core::EntireFunction& f, const std::vector<double>& radii) {
    if (radii.empty()) domain_error("bad-grid", "no radii");
    ZetaGrowthFit fit;
    fit.function = f.describe();
    fit.c1 = std::numeric_limits<double>::infinity();
    fit.c2 = 0;
    for (double r : radii) {
        if (!(r >= 2 && r <= 40))
            domain_error("envelope-violation", "r = " + num_str(r) + " outside the accuracy envelope [2, 40]");
        double q = core::growth_m(f, r) / (r * std::log(r));
        fit.radii.push_back(r);
        fit.ratios.push_back(q);
        fit.c1 = std::min(fit.c1, q);
        fit.c2 = std::max(fit.c2, q);
    }
    if (!(fit.c1 > 0 && std::isfinite(fit.c2)))
        numeric_error("fit-degenerate", "m(r)/(r log r) must be positive and finite on the range");
    return fit;
}

} // namespace tmlab::growth
