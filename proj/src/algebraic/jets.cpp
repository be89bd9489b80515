#include "tmlab/algebraic/jets.hpp"

#include <cmath>

#include "tmlab/core/characteristics.hpp"
#include "tmlab/extremal/polynomial.hpp"
#include "tmlab/extremal/zeros.hpp"
#include "tmlab/support/error.hpp"
#include "tmlab/support/format.hpp"

namespace tmlab::algebraic {

namespace {

using extremal::BivarPolynomial;

Rational factorial(int k) {
    Rational f(1);
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

Rational falling(int i, int p) {  // i! / (i - p)!
    Rational f(1);
    for (int t = 0; t < p; ++t) f *= i - t;
    return f;
}

Rational binom(int k, int p) { return falling(k, p) / factorial(p); }

// [z^t] of f^j for t <= k, from the Taylor coefficients a_0..a_k
std::vector<FieldElement> series_power(const std::vector<FieldElement>& a, int j, const NumberField& K) {
    std::size_t len = a.size();
    std::vector<FieldElement> out(len, FieldElement(K, 0));
    out[0] = FieldElement(K, 1);
    for (int p = 0; p < j; ++p) {
        std::vector<FieldElement> next(len, FieldElement(K, 0));
        for (std::size_t x = 0; x < len; ++x) {
            if (out[x].is_zero()) continue;
            for (std::size_t y = 0; x + y < len; ++y) next[x + y] += out[x] * a[y];
        }
        out = std::move(next);
    }
    return out;
}

void need_order(const ValueJet& jet, int m) {
    if (m > jet.multiplicity())
        domain_error("incomplete-jet", "jet at " + jet.z0.str() + " has " + std::to_string(jet.multiplicity()) +
                                           " values, order " + std::to_string(m) + " needed");
}

MpReal mp_pow_int(const MpReal& x, int k) {
    if (k == 0) return MpReal(1);
    return pow(x, k);
}

} // namespace

BigInt ValueJet::denominator(int m) const {
    need_order(*this, m);
    BigInt d = z0.den();
    for (int t = 0; t < m; ++t) d = lcm(d, values[t].den());
    return d;
}

MpReal ValueJet::house_bound(int m) const {
    need_order(*this, m);
    MpReal h = z0.house();
    for (int t = 0; t < m; ++t) h = std::max(h, values[t].house());
    return h;
}

nlohmann::json ValueJet::to_json() const {
    auto vs = nlohmann::json::array();
    for (const auto& v : values) vs.push_back(v.to_json());
    return {{"z0", z0.to_json()}, {"values", vs}};
}

ValueJet ValueJet::from_json(const nlohmann::json& j) {
    ValueJet jet;
    jet.z0 = FieldElement::from_json(j.at("z0"));
    for (const auto& v : j.at("values")) {
        jet.values.push_back(FieldElement::from_json(v));
        if (!(jet.values.back().field() == jet.field())) domain_error("field-mismatch", "jet values outside the field of z0");
    }
    return jet;
}

ValueJet polynomial_jet(const std::vector<FieldElement>& coeffs, const FieldElement& z0, int m) {
    const NumberField& K = z0.field();
    ValueJet jet{z0, {}};
    int deg = static_cast<int>(coeffs.size()) - 1;
    for (int t = 0; t < m; ++t) {
        FieldElement v(K, 0);
        for (int k = t; k <= deg; ++k) v += falling(k, t) * (coeffs[k] * z0.pow(static_cast<unsigned>(k - t)));
        jet.values.push_back(v);
    }
    return jet;
}

ValueJet exp_jet_at_zero(const NumberField& K, int m) {
    return {FieldElement(K, 0), std::vector<FieldElement>(static_cast<std::size_t>(m), FieldElement(K, 1))};
}

FieldElement g_derivative(const ValueJet& jet, int i, int j, int k) {
    if (i < 0 || j < 0 || k < 0) domain_error("bad-parameter", "negative index");
    need_order(jet, k + 1);
    const NumberField& K = jet.field();
    std::vector<FieldElement> a;
    for (int t = 0; t <= k; ++t) a.push_back(Rational(1) / factorial(t) * jet.values[t]);
    auto pw = series_power(a, j, K);
    FieldElement g(K, 0);
    for (int p = 0; p <= std::min(i, k); ++p) {
        // a_{j, k-p} = (k-p)! [z^{k-p}] f^j
        FieldElement ajk = factorial(k - p) * pw[k - p];
        g += (binom(k, p) * falling(i, p)) * (jet.z0.pow(static_cast<unsigned>(i - p)) * ajk);
    }
    return g;
}

nlohmann::json JetBound::to_json() const {
    return {{"i", i},
            {"j", j},
            {"k", k},
            {"value", value.to_json()},
            {"value_str", value.str()},
            {"house", num_json(house)},
            {"bound", num_json(bound)},
            {"margin", num_json(margin)},
            {"integral", integral}};
}

JetBound jet_norm_bounds(const ValueJet& jet, int i, int j, int k) {
    JetBound b;
    b.i = i;
    b.j = j;
    b.k = k;
    b.value = g_derivative(jet, i, j, k);
    int m = jet.multiplicity();
    MpReal A = std::max(MpReal(1), jet.house_bound(m));
    MpReal bound = mp_pow_int(A, i + j) * mp_pow_int(MpReal(i + j), k);
    MpReal h = b.value.house();
    b.house = h.convert_to<double>();
    b.bound = bound.convert_to<double>();
    b.margin = h == 0 ? INFINITY : (bound / h).convert_to<double>();
    BigInt d = jet.denominator(m);
    b.integral = (Rational(pow(d, static_cast<unsigned>(i + j))) * b.value).is_integral();
    if (!b.integral) certificate_error("bound-violation", "d^{i+j} g^(k)_ij(z0) is not an algebraic integer: " + b.value.str());
    if (h > bound * (1 + MpReal("1e-40")))
        certificate_error("bound-violation", "house " + num_str(b.house) + " exceeds A^{i+j}(i+j)^k = " + num_str(b.bound));
    return b;
}

FieldElement F_derivative(const ValueJet& jet, const std::vector<FieldElement>& P, int n, int k) {
    if (P.size() != BivarPolynomial::count(n)) domain_error("bad-polynomial", "coefficient count does not match the degree");
    FieldElement acc(jet.field(), 0);
    for (std::size_t idx = 0; idx < P.size(); ++idx) {
        if (P[idx].is_zero()) continue;
        auto [i, j] = BivarPolynomial::exponents(idx);
        acc += P[idx] * g_derivative(jet, i, j, k);
    }
    return acc;
}

nlohmann::json JetLowerBound::to_json() const {
    return {{"n", n}, {"k", k}, {"nonzero", nonzero}, {"log_abs", num_json(log_abs)}, {"log_bound", num_json(log_bound)},
            {"ok", ok}};
}

JetLowerBound jet_lower_bound(const ValueJet& jet, const std::vector<FieldElement>& P, int n, int k) {
    JetLowerBound lb;
    lb.n = n;
    lb.k = k;
    int m = jet.multiplicity();
    BigInt d = jet.denominator(m);
    FieldElement v = Rational(pow(d, static_cast<unsigned>(n))) * F_derivative(jet, P, n, k);
    MpReal h(0);
    for (const auto& c : P) {
        if (!c.is_integral()) domain_error("bad-polynomial", "coefficients must lie in I_K");
        h = std::max(h, c.house());
    }
    MpReal A = std::max(MpReal(1), jet.house_bound(m));
    int sigma = jet.field().degree();
    lb.nonzero = !v.is_zero();
    lb.ok = v.is_integral();
    if (!lb.nonzero) {
        lb.log_abs = -INFINITY;
        return lb;
    }
    MpReal lbound = -(sigma - 1) * (log(h) + n * log(MpReal(d)) + n * log(A) + (k + 2) * log(MpReal(n + 1)));
    MpReal la = log(v.abs_mp());
    lb.log_abs = la.convert_to<double>();
    lb.log_bound = lbound.convert_to<double>();
    lb.ok = lb.ok && la >= lbound - MpReal("1e-40");
    return lb;
}

nlohmann::json DecayRecord::to_json() const {
    return {{"t", num_json(t)}, {"lhs", num_json(lhs)}, {"rhs", num_json(rhs)}, {"mu", mu}, {"holds", holds}};
}

Complex AuxPolynomial::eval(Complex z, Complex w) const {
    Complex acc = 0;
    for (std::size_t idx = 0; idx < coeffs.size(); ++idx) {
        if (coeffs[idx].is_zero()) continue;
        auto [i, j] = BivarPolynomial::exponents(idx);
        acc += coeffs[idx].embed() * std::pow(z, i) * std::pow(w, j);
    }
    return acc;
}

nlohmann::json AuxPolynomial::to_json() const {
    auto cs = nlohmann::json::array();
    for (std::size_t idx = 0; idx < coeffs.size(); ++idx) {
        auto [i, j] = BivarPolynomial::exponents(idx);
        cs.push_back({{"i", i}, {"j", j}, {"c", coeffs[idx].to_json()}, {"c_str", coeffs[idx].str()}});
    }
    auto dec = nlohmann::json::array();
    for (const auto& d : decay) dec.push_back(d.to_json());
    return {{"n", n},
            {"coefficients", cs},
            {"nu", nu},
            {"N", N},
            {"height", num_json(height)},
            {"bound", num_json(bound)},
            {"H_n", num_json(H_n)},
            {"r", num_json(r)},
            {"vanishing_verified", vanishing_verified},
            {"decay", dec}};
}

AuxPolynomial auxiliary_polynomial(const std::vector<ValueJet>& jets, int n, const core::EntireFunction* f,
                                   const std::vector<double>& ts) {
    if (jets.empty()) domain_error("bad-jets", "no jets");
    if (n < 1) domain_error("bad-parameter", "n must be at least 1");
    const NumberField& K = jets[0].field();
    std::size_t N = BivarPolynomial::count(n), nu = 0;
    int mmax = 0;
    BigInt dmax = 1;
    MpReal A(1);
    for (const auto& jet : jets) {
        if (!(jet.field() == K)) domain_error("field-mismatch", "jets over different fields");
        if (jet.multiplicity() < 1) domain_error("bad-jets", "jet with no values at " + jet.z0.str());
        nu += static_cast<std::size_t>(jet.multiplicity());
        mmax = std::max(mmax, jet.multiplicity());
        dmax = std::max(dmax, jet.denominator());
        A = std::max(A, jet.house_bound());
    }
    if (!(nu < N))
        domain_error("precondition", "nu = " + std::to_string(nu) + " conditions need nu < N = " + std::to_string(N));

    SiegelProblem pb;
    pb.K = K;
    for (const auto& jet : jets) {
        Rational dn(pow(jet.denominator(), static_cast<unsigned>(n)));
        for (int k = 0; k < jet.multiplicity(); ++k) {
            std::vector<FieldElement> row;
            for (std::size_t idx = 0; idx < N; ++idx) {
                auto [i, j] = BivarPolynomial::exponents(idx);
                row.push_back(dn * g_derivative(jet, i, j, k));
            }
            pb.rows.push_back(std::move(row));
        }
    }
    SiegelSolution sol = siegel_solve(pb);

    AuxPolynomial aux;
    aux.n = n;
    aux.coeffs = sol.c;
    aux.nu = nu;
    aux.N = N;
    aux.height = sol.height;
    aux.bound = sol.bound;
    double logH = std::log(sol.C1) + double(nu) / double(N - nu) *
                                         (std::log(sol.C2) + n * std::log(dmax.convert_to<double>()) +
                                          n * std::log(A.convert_to<double>()) +
                                          (mmax + 1) * std::log(double(n + 1)));
    aux.H_n = std::exp(logH);
    aux.vanishing_verified = true;
    double rmax = 1;
    for (const auto& jet : jets) {
        for (int k = 0; k < jet.multiplicity(); ++k)
            aux.vanishing_verified = aux.vanishing_verified && F_derivative(jet, aux.coeffs, n, k).is_zero();
        rmax = std::max(rmax, jet.z0.abs_mp().convert_to<double>());
    }
    if (!aux.vanishing_verified) certificate_error("aux-not-vanishing", "Siegel polynomial misses a condition");
    aux.r = rmax;

    if (f) {
        auto F = [&](Complex z) { return aux.eval(z, f->eval(z)); };
        auto dF = [&](Complex z) {
            Complex w = f->eval(z), dw = f->eval_deriv(z, 1), acc = 0;
            for (std::size_t idx = 0; idx < aux.coeffs.size(); ++idx) {
                if (aux.coeffs[idx].is_zero()) continue;
                auto [i, j] = BivarPolynomial::exponents(idx);
                Complex c = aux.coeffs[idx].embed();
                if (i > 0) acc += c * double(i) * std::pow(z, i - 1) * std::pow(w, j);
                if (j > 0) acc += c * double(j) * std::pow(z, i) * std::pow(w, j - 1) * dw;
            }
            return acc;
        };
        double lhs = extremal::circle_max(F, 2 * aux.r).M;
        auto zc = extremal::zero_count(F, dF, aux.r);
        for (double t : ts) {
            if (!(t >= 2 * aux.r)) domain_error("precondition", "t = " + num_str(t) + " is below 2r = " + num_str(2 * aux.r));
            DecayRecord rec;
            rec.t = t;
            rec.mu = zc.count;
            rec.lhs = lhs;
            // Bernstein-Walsh needs max(1, t, M(t, f)); M(t, f) >= t fails for slow f at small t
            double logM = std::max({0.0, std::log(t), core::max_modulus(*f, t).log_M});
            double lr = 2 * std::log(double(n + 1)) + std::log(aux.height) + rec.mu * std::log(4 * zc.radius / t) + n * logM;
            rec.rhs = std::exp(lr);
            rec.holds = std::log(lhs) <= lr + 1e-9;
            aux.decay.push_back(rec);
        }
    }
    return aux;
}

} // namespace tmlab::algebraic
