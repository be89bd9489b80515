#include "tmlab/algebraic/measure.hpp"

#include <cmath>

#include "tmlab/algebraic/siegel.hpp"
#include "tmlab/support/error.hpp"
#include "tmlab/support/format.hpp"
#include "tmlab/support/parallel.hpp"

namespace tmlab::algebraic {

nlohmann::json AlgebraicMeasure::to_json() const {
    nlohmann::json j{{"finite", finite}, {"log_value", num_json(log_value)}};
    if (finite) {
        j["d"] = d.str();
        j["norm"] = num_json(norm);
    } else {
        j["reason"] = reason;
    }
    return j;
}

AlgebraicMeasure algebraic_measure(const std::vector<ValueJet>& E, int m) {
    if (m < 1) domain_error("bad-parameter", "order m must be at least 1");
    AlgebraicMeasure out;
    BigInt d = 1;
    MpReal norm(1);
    for (const auto& jet : E) {
        if (jet.multiplicity() < m) {
            out.reason = "f^(" + std::to_string(jet.multiplicity()) + ") at " + jet.z0.str() + " is not known to lie in K";
            return out;
        }
        d = std::max(d, jet.denominator(m));
        norm = std::max(norm, jet.house_bound(m));
    }
    out.finite = true;
    out.d = d;
    out.norm = norm.convert_to<double>();
    out.log_value = (log(MpReal(d)) + log(norm)).convert_to<double>();
    return out;
}

nlohmann::json EmpiricalA::to_json() const {
    return {{"log_value", num_json(log_value)}, {"best", best}, {"considered", considered},
            {"kind", "empirical upper bound on the infimum over the supplied candidates"}};
}

EmpiricalA a_K_empirical(const std::vector<std::vector<ValueJet>>& candidates, std::size_t s, const Rational& r, int m) {
    EmpiricalA out;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
        const auto& E = candidates[c];
        if (E.size() < s) continue;
        bool inside = true;
        for (const auto& jet : E) inside = inside && jet.z0.abs_le(r);
        if (!inside) continue;
        ++out.considered;
        double v = algebraic_measure(E, m).log_value;
        if (v < out.log_value) {
            out.log_value = v;
            out.best = c;
        }
    }
    if (out.considered == 0) domain_error("no-candidate", "no candidate set with |E| >= s inside the disk");
    return out;
}

nlohmann::json EmpiricalEta::to_json() const {
    return {{"log_value", num_json(log_value)}, {"d", d.str()}, {"A", to_string(A)}, {"points", points},
            {"kind", "empirical upper bound over the supplied (d, A)"}};
}

EmpiricalEta eta_empirical(const std::vector<FieldElement>& poly, const std::vector<std::pair<BigInt, Rational>>& dA,
                           const Rational& lambda, const Rational& r, int m) {
    if (poly.empty()) domain_error("bad-polynomial", "no coefficients");
    const NumberField& K = poly[0].field();
    EmpiricalEta out;
    bool any = false;
    for (const auto& [d, A] : dA) {
        if (Rational(d) * A < lambda) continue;
        auto pts = enumerate_IK(K, d, A, r);
        std::vector<ValueJet> E;
        for (const auto& z : pts) E.push_back(polynomial_jet(poly, z, m));
        double v = algebraic_measure(E, m).log_value;
        any = true;
        if (v < out.log_value) {
            out.log_value = v;
            out.d = d;
            out.A = A;
            out.points = pts.size();
        }
    }
    if (!any) domain_error("no-candidate", "no (d, A) with dA >= lambda");
    return out;
}

nlohmann::json GeapRow::to_json() const {
    return {{"k", k}, {"mu_lo", mu_lo}, {"mu_hi", mu_hi}, {"lhs", num_json(lhs)}, {"rhs", num_json(rhs)}, {"holds", holds}};
}

nlohmann::json GeapRecord::to_json() const {
    auto rs = nlohmann::json::array();
    for (const auto& row : rows) rs.push_back(row.to_json());
    return {{"n", n},           {"r", num_json(r)},          {"r_n", num_json(r_n)}, {"size", size},
            {"z_upper", z_upper}, {"log_CK", num_json(log_CK)}, {"rows", rs},         {"consistent", consistent}};
}

double geap_log_CK(const NumberField& K) {
    double c = siegel_constant(K);
    return K.degree() * std::log(16 * c * c);
}

double geap_log_rhs(double r, int k, int n, int sigma, double mu, double r_n) {
    double first = k == 0 ? 0 : double(k) / n * (std::log(r) - std::log(double(k)) - (2 * sigma - 1) * std::log(double(n + 1)));
    return first + mu / n * (std::log(r_n) - std::log(4 * r) - 4);
}

namespace {

void geap_pre(const std::vector<ValueJet>& E, int n, double r, double r_n) {
    if (n < 1) domain_error("bad-parameter", "n must be at least 1");
    if (E.empty()) domain_error("bad-parameter", "E is empty");
    if (!(r >= 1 && r <= r_n / 4))
        domain_error("precondition", "need 1 <= r <= r_n/4 (r = " + num_str(r) + ", r_n = " + num_str(r_n) + ")");
    Rational rr = decimal_rational(r);
    for (const auto& jet : E)
        if (!jet.z0.abs_le(rr)) domain_error("precondition", jet.z0.str() + " lies outside the disk of radius " + num_str(r));
}

} // namespace

GeapRecord geap_bound(const std::vector<ValueJet>& E, int n, double r, double r_n, std::optional<int> z_upper,
                      std::optional<double> log_CK) {
    geap_pre(E, n, r, r_n);
    const NumberField& K = E[0].field();
    int sigma = K.degree();
    int floor_z = (n * n + 3 * n) / 2;
    if (z_upper && *z_upper < floor_z)
        domain_error("bad-parameter", "z_upper below the vanishing floor (n^2+3n)/2 = " + std::to_string(floor_z));
    GeapRecord rec;
    rec.n = n;
    rec.r = r;
    rec.r_n = r_n;
    rec.size = E.size();
    rec.z_upper = z_upper.value_or(floor_z);
    rec.log_CK = log_CK.value_or(geap_log_CK(K));
    long long l = static_cast<long long>(E.size());
    int quarter = (n * n + 3) / 4;  // ceil(n^2/4)
    for (int k = 0; static_cast<long long>(k) * l <= rec.z_upper; ++k) {
        if (!(4 * (k + 1) * l > static_cast<long long>(n) * n)) continue;
        GeapRow row;
        row.k = k;
        row.mu_lo = static_cast<int>(std::max<long long>(quarter, k * l));
        row.mu_hi = rec.z_upper;
        if (row.mu_lo > row.mu_hi) continue;
        auto meas = algebraic_measure(E, k + 1);
        row.lhs = meas.finite ? rec.log_CK + 2 * sigma * meas.log_value : INFINITY;
        row.rhs = std::min(geap_log_rhs(r, k, n, sigma, row.mu_lo, r_n), geap_log_rhs(r, k, n, sigma, row.mu_hi, r_n));
        row.holds = row.lhs >= row.rhs;
        rec.consistent = rec.consistent || row.holds;
        rec.rows.push_back(row);
    }
    return rec;
}

GeapRecord geap_bound(const std::vector<ValueJet>& E, int n, double r, const core::OrderEstimate& est, std::optional<int> z_upper,
                      std::optional<double> log_CK) {
    return geap_bound(E, n, r, core::solve_rn(est, n), z_upper, log_CK);
}

nlohmann::json PgeapCheck::to_json() const {
    nlohmann::json j{{"hypothesis", hypothesis}, {"lhs", num_json(lhs)}, {"rhs", num_json(rhs)}, {"size", size},
                     {"consistent", consistent}};
    if (z_upper) j["z_upper"] = *z_upper;
    return j;
}

PgeapCheck pgeap_check(const std::vector<ValueJet>& E, int n, double r, double r_n, std::optional<int> z_upper,
                       std::optional<double> log_CK) {
    geap_pre(E, n, r, r_n);
    const NumberField& K = E[0].field();
    PgeapCheck c;
    c.size = E.size();
    c.z_upper = z_upper;
    auto meas = algebraic_measure(E, 1);
    c.lhs = meas.finite ? log_CK.value_or(geap_log_CK(K)) + 2 * K.degree() * meas.log_value : INFINITY;
    c.rhs = n / 4.0 * (std::log(r_n) - std::log(4 * r) - 4);
    c.hypothesis = c.lhs < c.rhs;
    if (c.hypothesis && z_upper) c.consistent = static_cast<long long>(E.size()) <= *z_upper;
    return c;
}

nlohmann::json ProportionRow::to_json() const {
    return {{"A", num_json(A)},         {"log_B", num_json(log_B)},         {"total", total},
            {"members", members},       {"undecided", undecided},           {"proportion", num_json(proportion)},
            {"member_points", member_points}};
}

nlohmann::json ProportionReport::to_json() const {
    auto rs = nlohmann::json::array();
    for (const auto& row : rows) rs.push_back(row.to_json());
    return {{"field", field}, {"function", function}, {"tol", num_json(tol)}, {"rows", rs}, {"caveat", caveat}};
}

namespace {

// nearest point of I_K to w, or nullopt when w is out of reach of double rounding
std::optional<FieldElement> nearest_integer(const NumberField& K, Complex w) {
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag()) || std::abs(w) > std::ldexp(1.0, 50)) return std::nullopt;
    if (K.degree() == 1) return FieldElement(K, Rational(BigInt(std::llround(w.real()))));
    Complex om = FieldElement::from_coords(K, {BigInt(0), BigInt(1)}).embed();
    long long q = std::llround(w.imag() / om.imag());
    std::optional<FieldElement> best;
    double bd = INFINITY;
    for (long long p2 = q - 1; p2 <= q + 1; ++p2) {
        long long p1 = std::llround(w.real() - double(p2) * om.real());
        for (long long a = p1 - 1; a <= p1 + 1; ++a) {
            auto c = FieldElement::from_coords(K, {BigInt(a), BigInt(p2)});
            double dist = std::abs(c.embed() - w);
            if (dist < bd) {
                bd = dist;
                best = c;
            }
        }
    }
    return best;
}

} // namespace

ProportionReport proportion_experiment(const NumberField& K, const core::EntireFunction& f, const std::vector<Rational>& A_list,
                                       const core::OrderEstimate& phi, double tol, unsigned workers) {
    if (K.kind() == FieldKind::RealQuadratic)
        domain_error("membership-undecidable", "I_K is dense in R for a real quadratic K; rounding cannot decide membership");
    ProportionReport rep;
    rep.field = K.name();
    rep.function = f.describe();
    rep.tol = tol;
    rep.caveat = "membership f(z) in I_K is decided by rounding to the nearest lattice point within tol; "
                 "an approximation for transcendental f, exact only when f maps I_K into I_K";
    for (const auto& A : A_list) {
        if (!(A >= 1)) domain_error("bad-parameter", "A must be at least 1");
        ProportionRow row;
        row.A = A.convert_to<double>();
        row.log_B = std::exp(phi.log_envelope(row.A));
        auto pts = enumerate_IK(K, 1, A, std::nullopt);
        row.total = pts.size();
        std::vector<int> state(pts.size(), 0);  // 1 member, 2 undecided
        parallel_for(
            pts.size(),
            [&](std::size_t i) {
                Complex w = f.eval(pts[i].embed());
                auto c = nearest_integer(K, w);
                if (!c) {
                    state[i] = 2;
                    return;
                }
                if (std::abs(c->embed() - w) > tol * std::max(1.0, std::abs(w))) return;
                double h = c->house_d();
                if (h == 0 || std::log(h) <= row.log_B) state[i] = 1;
            },
            workers);
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (state[i] == 1) {
                ++row.members;
                row.member_points.push_back(pts[i].str());
            }
            if (state[i] == 2) ++row.undecided;
        }
        row.proportion = double(row.members) / double(row.total);
        rep.rows.push_back(row);
    }
    return rep;
}

} // namespace tmlab::algebraic
