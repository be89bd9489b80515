#include "tmlab/growth/admissible.hpp"

#include <cmath>

#include "tmlab/support/error.hpp"
#include "tmlab/support/exact.hpp"
#include "tmlab/support/format.hpp"
#include "tmlab/support/mp.hpp"

namespace tmlab::growth {

namespace {

constexpr long kMaxExactDenominator = 64;

// gamma = p/q with small q, else nullopt
std::optional<std::pair<long, long>> small_fraction(double gamma) {
    Rational g = decimal_rational(gamma);
    BigInt p = numerator(g), q = denominator(g);
    if (q > kMaxExactDenominator || p > kMaxExactDenominator) return std::nullopt;
    return std::make_pair(p.convert_to<long>(), q.convert_to<long>());
}

Rational rpow(const Rational& x, long k) {
    Rational out(1);
    for (long i = 0; i < k; ++i) out *= x;
    return out;
}

// Decides beta S_left^gamma <= Lambda S_right / 2 - offset.
bool leq(const AdmissibleParams& p, const LambdaSource& lambda, double S_left, double S_right, long long offset,
         std::string* method) {
    auto frac = small_fraction(p.gamma);
    if (lambda.surrogate && frac && S_left >= 0 && S_right >= 0) {
        if (method) *method = "rational";
        Rational rhs = decimal_rational(lambda.surrogate_input) * Rational(S_right) / 2 - Rational(offset);
        if (rhs < 0) return false;
        auto [a, b] = *frac;
        // (beta S^{a/b})^b = beta^b S^a
        return rpow(decimal_rational(p.beta), b) * rpow(Rational(S_left), a) <= rpow(rhs, b);
    }
    if (method) *method = "mpfr";
    MpReal rhs = exp(MpReal(lambda.log_value)) * MpReal(S_right) / 2 - MpReal(offset);
    if (rhs < 0) return false;
    MpReal lhs = MpReal(p.beta) * pow(MpReal(S_left), MpReal(p.gamma));
    return lhs <= rhs;
}

long long ceil_beta_pow(const AdmissibleParams& p, double S) {
    MpReal v = MpReal(p.beta) * pow(MpReal(S), MpReal(p.gamma));
    auto frac = small_fraction(p.gamma);
    long long n = ceil(v).convert_to<long long>();
    if (!frac) return n;
    auto [a, b] = *frac;
    Rational target = rpow(decimal_rational(p.beta), b) * rpow(Rational(S), a);
    // smallest integer N >= 0 with N^b >= target
    while (n > 0 && rpow(Rational(n - 1), b) >= target) --n;
    while (rpow(Rational(n), b) < target) ++n;
    return n;
}

long long floor_half_lambda(const LambdaSource& lambda, double S, long long n0) {
    if (lambda.surrogate) {
        Rational v = decimal_rational(lambda.surrogate_input) * Rational(S) / 2 - Rational(n0);
        return floor_rational(v).convert_to<long long>();
    }
    MpReal v = exp(MpReal(lambda.log_value)) * MpReal(S) / 2 - MpReal(n0);
    return floor(v).convert_to<long long>();
}

Rejection reject(std::string cond, std::string detail) { return {std::move(cond), std::move(detail)}; }

nlohmann::json bracket_json(const Bracket& b) { return {{"lo", num_json(b.lo)}, {"hi", num_json(b.hi)}}; }

} // namespace

nlohmann::json AdmissibleParams::to_json() const {
    return {{"alpha", num_json(alpha)}, {"beta", num_json(beta)}, {"gamma", num_json(gamma)},
            {"C", num_json(C)},         {"n0", n0},               {"R1", num_json(R1)}};
}

nlohmann::json AdmissibleInterval::to_json() const {
    return {{"R", num_json(R)},         {"params", params.to_json()}, {"lambda", lambda.to_json()},
            {"S", bracket_json(S)},     {"m4R", bracket_json(m4R)},   {"lo", lo},
            {"hi", hi}};
}

nlohmann::json AdmissibleOutcome::to_json() const {
    if (interval) return {{"admissible", true}, {"interval", interval->to_json()}};
    return {{"admissible", false}, {"condition", rejection->condition}, {"detail", rejection->detail}};
}

AdmissibleOutcome admissible_check(const GrowthTable& t, double R, const AdmissibleParams& p, const LambdaSource& lambda) {
    AdmissibleOutcome out;
    if (!(R > p.R1)) {
        out.rejection = reject("R>R1", "R = " + num_str(R) + " is not above R1 = " + num_str(p.R1));
        return out;
    }
    if (!(p.alpha > 0 && p.beta > 0 && p.gamma > 0 && p.gamma <= 1 && p.C > 0 && p.n0 >= 0)) {
        out.rejection = reject("parameters", "need alpha, beta, C > 0, 0 < gamma <= 1, n0 >= 0");
        return out;
    }
    Bracket S = t.S(R);
    Bracket m4 = t.m(4 * R);
    // concave in S, so both ends suffice
    if (!leq(p, lambda, S.lo, S.lo, p.n0 + 1, nullptr) || !leq(p, lambda, S.hi, S.hi, p.n0 + 1, nullptr)) {
        out.rejection = reject("beta S^gamma <= Lambda S/2 - n0 - 1",
                               "S(R) in [" + num_str(S.lo) + ", " + num_str(S.hi) + "], log Lambda = " +
                                   num_str(lambda.log_value) + " (" + lambda.label() + ")");
        return out;
    }
    if (!(S.lo >= std::pow(R, p.alpha))) {
        out.rejection = reject("S>=R^alpha", "S(R) >= " + num_str(S.lo) + " vs R^alpha = " + num_str(std::pow(R, p.alpha)));
        return out;
    }
    if (!(m4.hi <= p.C * S.lo)) {
        out.rejection = reject("m(4R)<=C S", "m(4R) <= " + num_str(m4.hi) + " vs C S(R) >= " + num_str(p.C * S.lo));
        return out;
    }
    AdmissibleInterval iv;
    iv.R = R;
    iv.params = p;
    iv.lambda = lambda;
    iv.S = S;
    iv.m4R = m4;
    iv.lo = ceil_beta_pow(p, S.hi);
    iv.hi = floor_half_lambda(lambda, S.lo, p.n0);
    out.interval = iv;
    return out;
}

bool chain_holds(const AdmissibleParams& p, const LambdaSource& lambda, double S_from, double S_to,
                 std::string* method) {
    return leq(p, lambda, S_to, S_from, p.n0, method);
}

nlohmann::json ChainCertificate::to_json() const {
    return {{"R_from", num_json(R_from)}, {"R_to", num_json(R_to)}, {"S_from_lo", num_json(S_from_lo)},
            {"S_to_hi", num_json(S_to_hi)}, {"lhs", num_json(lhs)},   {"rhs", num_json(rhs)},
            {"method", method}};
}

nlohmann::json CoveringSystem::to_json() const {
    auto iv = nlohmann::json::array(), ch = nlohmann::json::array();
    for (const auto& i : intervals) iv.push_back(i.to_json());
    for (const auto& c : chain) ch.push_back(c.to_json());
    return {{"empty", empty()}, {"intervals", iv}, {"chain", ch}, {"note", note}};
}

CoveringSystem covering_scan(const GrowthTable& t, const AdmissibleParams& p, const LambdaSource& lambda) {
    CoveringSystem sys;
    std::optional<Rejection> first_reject;
    for (double R : t.grid()) {
        if (!t.covers(R) || !t.covers(4 * R)) continue;
        auto o = admissible_check(t, R, p, lambda);
        if (!o.admissible()) {
            if (!first_reject) first_reject = o.rejection;
            continue;
        }
        const auto& iv = *o.interval;
        if (sys.intervals.empty()) {
            sys.intervals.push_back(iv);
            continue;
        }
        const auto& last = sys.intervals.back();
        ChainCertificate c;
        c.R_from = last.R;
        c.R_to = iv.R;
        c.S_from_lo = last.S.lo;
        c.S_to_hi = iv.S.hi;
        if (!chain_holds(p, lambda, c.S_from_lo, c.S_to_hi, &c.method)) continue;
        c.lhs = p.beta * std::pow(c.S_to_hi, p.gamma);
        c.rhs = lambda.value() * c.S_from_lo / 2 - static_cast<double>(p.n0);
        sys.chain.push_back(c);
        sys.intervals.push_back(iv);
    }
    if (sys.intervals.empty())
        sys.note = "empty-system" + (first_reject ? ": first rejection " + first_reject->condition : std::string());
    else if (sys.intervals.size() == 1)
        sys.note = "single interval; no chain link found";
    return sys;
}

bool verify_covering_system(const CoveringSystem& sys, const AdmissibleParams& p, const LambdaSource& lambda) {
    if (sys.chain.size() + (sys.intervals.empty() ? 0 : 1) != sys.intervals.size()) return false;
    for (const auto& iv : sys.intervals) {
        if (!(iv.R > p.R1)) return false;
        if (!leq(p, lambda, iv.S.lo, iv.S.lo, p.n0 + 1, nullptr) || !leq(p, lambda, iv.S.hi, iv.S.hi, p.n0 + 1, nullptr))
            return false;
        if (!(Rational(iv.m4R.hi) <= decimal_rational(p.C) * Rational(iv.S.lo))) return false;
        if (auto fa = small_fraction(p.alpha)) {
            // S >= R^{a/b}  <=>  S^b >= R^a
            if (!(rpow(Rational(iv.S.lo), fa->second) >= rpow(Rational(iv.R), fa->first))) return false;
        } else if (!(MpReal(iv.S.lo) >= pow(MpReal(iv.R), MpReal(p.alpha)))) {
            return false;
        }
        if (iv.lo != ceil_beta_pow(p, iv.S.hi) || iv.hi != floor_half_lambda(lambda, iv.S.lo, p.n0)) return false;
    }
    for (std::size_t j = 0; j < sys.chain.size(); ++j) {
        const auto& c = sys.chain[j];
        if (c.R_from != sys.intervals[j].R || c.R_to != sys.intervals[j + 1].R) return false;
        if (!(c.R_to > c.R_from)) return false;
        if (!chain_holds(p, lambda, sys.intervals[j].S.lo, sys.intervals[j + 1].S.hi)) return false;
    }
    return true;
}

} // namespace tmlab::growth
