#include "tmlab/algebraic/bounds.hpp"

#include <cmath>

#include "tmlab/algebraic/measure.hpp"

namespace tmlab::algebraic {

using growth::bound_domain;
using growth::bound_log_lambda;
using growth::bound_param;
using growth::BoundParams;
using growth::BoundRegistry;

namespace {

const std::vector<std::string> kLambda = {"lambda", "log_lambda"};

void positive(const std::string& key, double v, const std::string& name) {
    if (!(v > 0)) bound_domain(key, name + " must be positive");
}

void at_least(const std::string& key, double v, double lo, const std::string& name) {
    if (!(v >= lo)) bound_domain(key, name + " must be at least " + std::to_string(static_cast<int>(lo)));
}

void whole(const std::string& key, double v, const std::string& name) {
    if (!(v >= 0 && v == std::floor(v))) bound_domain(key, name + " must be a nonnegative integer");
}

double talgineq_log_a(const std::string& key, double C, double beta, double gamma) {
    positive(key, C, "C");
    positive(key, beta, "beta");
    if (!(gamma > 0 && gamma <= 1)) bound_domain(key, "gamma must lie in (0, 1]");
    return std::log(10 * C) + std::log(2 / beta) / gamma;
}

BoundRegistry build() {
    BoundRegistry reg;
    auto P = [](const BoundParams& p, const char* key, const char* name) { return bound_param(p, key, name); };

    reg.add({"tgeap_rhs", "right side of the algebraic-measure growth inequality",
             "(r/(k (n+1)^(2sigma-1)))^(k/n) exp((mu/n) log(r_n/(4 e^4 r))), k^k = 1 at k = 0",
             {"r", "k", "n", "sigma", "mu", "r_n"}, {}},
            [P](const BoundParams& p) {
                const char* key = "tgeap_rhs";
                double r = P(p, key, "r"), k = P(p, key, "k"), n = P(p, key, "n"), s = P(p, key, "sigma"), mu = P(p, key, "mu"),
                       rn = P(p, key, "r_n");
                whole(key, k, "k");
                at_least(key, n, 1, "n");
                at_least(key, s, 1, "sigma");
                if (!(mu >= 0)) bound_domain(key, "mu must be nonnegative");
                if (!(r >= 1 && r <= rn / 4)) bound_domain(key, "need 1 <= r <= r_n/4");
                return geap_log_rhs(r, static_cast<int>(k), static_cast<int>(n), static_cast<int>(s), mu, rn);
            });
    reg.add({"pgeap_rhs", "threshold of the cardinality test", "exp((n/4) log(r_n/(4 e^4 r)))", {"n", "r", "r_n"}, {}},
            [P](const BoundParams& p) {
                const char* key = "pgeap_rhs";
                double n = P(p, key, "n"), r = P(p, key, "r"), rn = P(p, key, "r_n");
                at_least(key, n, 1, "n");
                if (!(r >= 1 && r <= rn / 4)) bound_domain(key, "need 1 <= r <= r_n/4");
                return n / 4 * (std::log(rn) - std::log(4 * r) - 4);
            });
    reg.add({"tid_rhs", "lower growth of the algebraic measure along a fundamental sequence",
             "2^(-3rho/2-10)/sigma (Lambda m/(rho(rho+5)))^(1/2)", {"rho", "sigma", "m"}, kLambda},
            [P](const BoundParams& p) {
                const char* key = "tid_rhs";
                double rho = P(p, key, "rho"), s = P(p, key, "sigma"), m = P(p, key, "m");
                positive(key, rho, "rho");
                at_least(key, s, 1, "sigma");
                positive(key, m, "m");
                return -(1.5 * rho + 10) * std::log(2.0) - std::log(s) +
                       0.5 * (bound_log_lambda(p) + std::log(m) - std::log(rho) - std::log(rho + 5));
            });
    reg.add({"tid_a", "sequence constant a", "2^(3rho+11)(rho+5)/(Lambda rho)", {"rho"}, kLambda}, [P](const BoundParams& p) {
        double rho = P(p, "tid_a", "rho");
        positive("tid_a", rho, "rho");
        return (3 * rho + 11) * std::log(2.0) + std::log(rho + 5) - bound_log_lambda(p) - std::log(rho);
    });
    reg.add({"tid_s", "cardinality along the sequence", "a n^2/m + 1", {"a", "n", "m"}, {}}, [P](const BoundParams& p) {
        const char* key = "tid_s";
        double a = P(p, key, "a"), n = P(p, key, "n"), m = P(p, key, "m");
        positive(key, a, "a");
        at_least(key, n, 1, "n");
        positive(key, m, "m");
        return std::log(a * n * n / m + 1);
    });
    reg.add({"talgineq_a", "constant a of the algebraic inequality", "10 C (2/beta)^(1/gamma)", {"C", "beta", "gamma"}, {}},
            [P](const BoundParams& p) {
                const char* key = "talgineq_a";
                return talgineq_log_a(key, P(p, key, "C"), P(p, key, "beta"), P(p, key, "gamma"));
            });
    reg.add({"talgineq", "lower bound on the algebraic measure with a covering system",
             "(ms)^(1/tau)/(64 sigma rho tau a^(1/tau)) log(ms/a) - C'_K, tau = 1 + 1/gamma, a = 10C(2/beta)^(1/gamma); "
             "C'_K defaults to 0 (main term)",
             {"m", "s", "sigma", "rho", "C", "beta", "gamma"}, {"C_prime"}},
            [P](const BoundParams& p) {
                const char* key = "talgineq";
                double m = P(p, key, "m"), s = P(p, key, "s"), sg = P(p, key, "sigma"), rho = P(p, key, "rho"),
                       g = P(p, key, "gamma");
                double la = talgineq_log_a(key, P(p, key, "C"), P(p, key, "beta"), g);
                positive(key, m, "m");
                positive(key, s, "s");
                at_least(key, sg, 1, "sigma");
                positive(key, rho, "rho");
                double lms = std::log(m * s);
                if (!(lms > la)) bound_domain(key, "ms must exceed a");
                double tau = 1 + 1 / g;
                double main = (lms - la) / tau - std::log(64 * sg * rho * tau) + std::log(lms - la);
                auto it = p.find("C_prime");
                if (it == p.end()) return main;
                if (!(it->second >= 0)) bound_domain(key, "C_prime must be nonnegative");
                double v = std::exp(main) - it->second;
                if (!(v > 0)) bound_domain(key, "main term does not exceed C_prime");
                return std::log(v);
            });
    reg.add({"ciad_rhs", "lower bound on the algebraic measure of integer points",
             "(sigma-2)/sigma 2^(-3rho/2-10) (c' Lambda m/(rho(rho+5)))^(1/2)", {"sigma", "rho", "m", "c_prime"}, kLambda},
            [P](const BoundParams& p) {
                const char* key = "ciad_rhs";
                double s = P(p, key, "sigma"), rho = P(p, key, "rho"), m = P(p, key, "m"), c = P(p, key, "c_prime");
                at_least(key, s, 3, "sigma");
                positive(key, rho, "rho");
                positive(key, m, "m");
                positive(key, c, "c_prime");
                return std::log((s - 2) / s) - (1.5 * rho + 10) * std::log(2.0) +
                       0.5 * (std::log(c) + bound_log_lambda(p) + std::log(m) - std::log(rho) - std::log(rho + 5));
            });
    reg.add({"tprop_ratio", "upper bound on the preimage proportion", "a A^(2(1+eps)rho - sigma) log(3A)",
             {"a", "A", "eps", "rho", "sigma"}, {}},
            [P](const BoundParams& p) {
                const char* key = "tprop_ratio";
                double a = P(p, key, "a"), A = P(p, key, "A"), e = P(p, key, "eps"), rho = P(p, key, "rho"), s = P(p, key, "sigma");
                positive(key, a, "a");
                at_least(key, A, 1, "A");
                positive(key, e, "eps");
                positive(key, rho, "rho");
                at_least(key, s, 1, "sigma");
                return std::log(a) + (2 * (1 + e) * rho - s) * std::log(A) + std::log(std::log(3 * A));
            });
    reg.add({"lvsl_H", "height bound of the auxiliary polynomial", "C1 (C2 d^n A^n (n+1)^(m+1))^(nu/(N-nu))",
             {"C1", "C2", "d", "A", "n", "m", "nu", "N"}, {}},
            [P](const BoundParams& p) {
                const char* key = "lvsl_H";
                double C1 = P(p, key, "C1"), C2 = P(p, key, "C2"), d = P(p, key, "d"), A = P(p, key, "A"), n = P(p, key, "n"),
                       m = P(p, key, "m"), nu = P(p, key, "nu"), N = P(p, key, "N");
                positive(key, C1, "C1");
                positive(key, C2, "C2");
                at_least(key, d, 1, "d");
                positive(key, A, "A");
                whole(key, n, "n");
                whole(key, m, "m");
                positive(key, nu, "nu");
                if (!(nu < N)) bound_domain(key, "need nu < N");
                return std::log(C1) + nu / (N - nu) * (std::log(C2) + n * std::log(d) + n * std::log(A) + (m + 1) * std::log(n + 1));
            });
    reg.add({"lgt_upper", "house bound on derivatives of z^i f^j", "A^(i+j) (i+j)^k with A = max(1, A), 0^0 = 1",
             {"A", "i", "j", "k"}, {}},
            [P](const BoundParams& p) {
                const char* key = "lgt_upper";
                double A = P(p, key, "A"), i = P(p, key, "i"), j = P(p, key, "j"), k = P(p, key, "k");
                positive(key, A, "A");
                whole(key, i, "i");
                whole(key, j, "j");
                whole(key, k, "k");
                double base = (i + j) * std::log(std::max(1.0, A));
                if (k == 0) return base;
                if (i + j == 0) return -HUGE_VAL;
                return base + k * std::log(i + j);
            });
    reg.add({"lgt_lower", "lower bound on nonzero derivative values", "(h d^n A^n (n+1)^(k+2))^(1-sigma)",
             {"h", "d", "A", "n", "k", "sigma"}, {}},
            [P](const BoundParams& p) {
                const char* key = "lgt_lower";
                double h = P(p, key, "h"), d = P(p, key, "d"), A = P(p, key, "A"), n = P(p, key, "n"), k = P(p, key, "k"),
                       s = P(p, key, "sigma");
                at_least(key, h, 1, "h");
                at_least(key, d, 1, "d");
                at_least(key, A, 1, "A");
                whole(key, n, "n");
                whole(key, k, "k");
                at_least(key, s, 1, "sigma");
                return -(s - 1) * (std::log(h) + n * std::log(d) + n * std::log(A) + (k + 2) * std::log(n + 1));
            });
    reg.add({"lvsl_decay", "sup-norm decay of the auxiliary polynomial on the disk of radius 2r",
             "(n+1)^2 H (4r/t)^mu M^n(t, f), M supplied as logM", {"n", "H", "r", "t", "mu", "logM"}, {}},
            [P](const BoundParams& p) {
                const char* key = "lvsl_decay";
                double n = P(p, key, "n"), H = P(p, key, "H"), r = P(p, key, "r"), t = P(p, key, "t"), mu = P(p, key, "mu"),
                       lm = P(p, key, "logM");
                whole(key, n, "n");
                positive(key, H, "H");
                positive(key, r, "r");
                if (!(t >= 2 * r)) bound_domain(key, "need t >= 2r");
                if (!(mu >= 0)) bound_domain(key, "mu must be nonnegative");
                return 2 * std::log(n + 1) + std::log(H) + mu * std::log(4 * r / t) + n * lm;
            });
    return reg;
}

} // namespace

const BoundRegistry& algebraic_bounds() {
    static const BoundRegistry reg = build();
    return reg;
}

const BoundRegistry& all_bounds() {
    static const BoundRegistry reg = [] {
        BoundRegistry r = growth::growth_bounds();
        r.merge(algebraic_bounds());
        return r;
    }();
    return reg;
}

} // namespace tmlab::algebraic
