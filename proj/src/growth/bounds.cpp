#include "tmlab/growth/bounds.hpp"

#include <cmath>
#include <limits>

#include "tmlab/growth/constants.hpp"
#include "tmlab/support/error.hpp"
#include "tmlab/support/format.hpp"

namespace tmlab::growth {

nlohmann::json BoundValue::to_json() const {
    return {{"key", key}, {"log_value", num_json(log_value)}, {"value", num_json(value)}, {"overflow", overflow}};
}

void BoundRegistry::add(BoundSpec spec, LogEval eval) {
    if (evals_.count(spec.key)) domain_error("duplicate-bound", spec.key);
    evals_[spec.key] = std::move(eval);
    specs_.push_back(std::move(spec));
}

bool BoundRegistry::has(const std::string& key) const { return evals_.count(key) > 0; }

const BoundSpec& BoundRegistry::spec(const std::string& key) const {
    for (const auto& s : specs_)
        if (s.key == key) return s;
    domain_error("unknown-bound", "no bound named '" + key + "'");
}

std::vector<std::string> BoundRegistry::keys() const {
    std::vector<std::string> out;
    for (const auto& s : specs_) out.push_back(s.key);
    return out;
}

BoundValue BoundRegistry::evaluate(const std::string& key, const BoundParams& params) const {
    const BoundSpec& s = spec(key);
    for (const auto& [name, v] : params) {
        bool known = name == "delta0";
        for (const auto& r : s.required) known = known || r == name;
        for (const auto& o : s.optional) known = known || o == name;
        if (!known) domain_error("unknown-parameter", key + " takes no parameter '" + name + "'");
        if (!std::isfinite(v)) bound_domain(key, name + " must be finite");
    }
    BoundValue out;
    out.key = key;
    out.log_value = evals_.at(key)(params);
    if (std::isnan(out.log_value)) bound_domain(key, "evaluation left the domain");
    out.value = std::exp(out.log_value);
    out.overflow = std::isinf(out.value) && std::isfinite(out.log_value);
    return out;
}

void BoundRegistry::merge(const BoundRegistry& other) {
    for (const auto& s : other.specs_) add(s, other.evals_.at(s.key));
}

void bound_domain(const std::string& key, const std::string& what) { domain_error("parameter-domain", key + ": " + what); }

double bound_param(const BoundParams& p, const std::string& key, const std::string& name) {
    auto it = p.find(name);
    if (it == p.end()) domain_error("missing-parameter", key + " needs '" + name + "'");
    return it->second;
}

double bound_log_lambda(const BoundParams& p) {
    if (auto it = p.find("log_lambda"); it != p.end()) return it->second;
    if (auto it = p.find("lambda"); it != p.end()) {
        if (!(it->second > 0 && it->second <= 1)) domain_error("parameter-domain", "lambda must lie in (0, 1]");
        return std::log(it->second);
    }
    auto it = p.find("delta0");
    return lambda_const(it == p.end() ? 1.0 : it->second);
}

namespace {

const std::vector<std::string> kLambda = {"lambda", "log_lambda"};

double log_n_and_gamma(const std::string& key, double n, double gamma) {
    if (!(gamma > 0 && gamma <= 1)) bound_domain(key, "gamma must lie in (0, 1]");
    if (!(n >= 1)) bound_domain(key, "n must be at least 1");
    return (1 + 1 / gamma) * std::log(n);
}

void positive(const std::string& key, double v, const std::string& name) {
    if (!(v > 0)) bound_domain(key, name + " must be positive");
}

// log of log(x), -inf at x = 1
double loglog(const std::string& key, double x, const std::string& what) {
    if (!(x >= 1)) bound_domain(key, what + " must be at least 1");
    return std::log(std::log(x));
}

double gdi_log_a(const std::string& key, const BoundParams& p) {
    if (auto it = p.find("a"); it != p.end()) {
        positive(key, it->second, "a");
        return std::log(it->second);
    }
    double rho = bound_param(p, key, "rho");
    positive(key, rho, "rho");
    return (rho + 3) * std::log(8.0) + std::log(rho + 5) - bound_log_lambda(p) - std::log(rho);
}

BoundRegistry build() {
    BoundRegistry reg;
    auto P = [](const BoundParams& p, const char* key, const char* name) { return bound_param(p, key, name); };

    reg.add({"tme1_en", "e_n bound for n in an admissible union", "2C/(alpha gamma beta^(1/gamma)) n^(1+1/gamma) log(n/beta)",
             {"C", "alpha", "gamma", "beta", "n"}, {}},
            [P](const BoundParams& p) {
                const char* k = "tme1_en";
                double C = P(p, k, "C"), al = P(p, k, "alpha"), g = P(p, k, "gamma"), b = P(p, k, "beta"), n = P(p, k, "n");
                positive(k, C, "C");
                positive(k, al, "alpha");
                positive(k, b, "beta");
                double ln = log_n_and_gamma(k, n, g);
                if (!(n > b)) bound_domain(k, "n must exceed beta");
                return std::log(2 * C) - std::log(al) - std::log(g) - std::log(b) / g + ln + std::log(std::log(n / b));
            });
    reg.add({"tme1_mn", "m_n(r) bound for n in I(R, ...), 1 <= r <= R", "3C/beta^(1/gamma) n^(1+1/gamma) log r",
             {"C", "gamma", "beta", "n", "r"}, {}},
            [P](const BoundParams& p) {
                const char* k = "tme1_mn";
                double C = P(p, k, "C"), g = P(p, k, "gamma"), b = P(p, k, "beta"), n = P(p, k, "n"), r = P(p, k, "r");
                positive(k, C, "C");
                positive(k, b, "beta");
                double ln = log_n_and_gamma(k, n, g);
                return std::log(3 * C) - std::log(b) / g + ln + loglog(k, r, "r");
            });
    reg.add({"tliminf", "e_{n_j} upper bound along a fundamental sequence", "8^(rho+3)(rho+5)/(Lambda rho^2) n^2 log n",
             {"rho", "n"}, kLambda},
            [P](const BoundParams& p) {
                const char* k = "tliminf";
                double rho = P(p, k, "rho"), n = P(p, k, "n");
                positive(k, rho, "rho");
                return (rho + 3) * std::log(8.0) + std::log(rho + 5) - bound_log_lambda(p) - 2 * std::log(rho) +
                       2 * std::log(n) + loglog(k, n, "n");
            });
    reg.add({"tgdi_a", "doubling constant a", "8^(rho+3)(rho+5)/(Lambda rho)", {"rho"}, kLambda},
            [](const BoundParams& p) { return gdi_log_a("tgdi_a", p); });
    reg.add({"ec_C", "admissibility constant C along touching radii", "2^(3rho+4)(rho+5)/rho", {"rho"}, {}},
            [P](const BoundParams& p) {
                double rho = P(p, "ec_C", "rho");
                positive("ec_C", rho, "rho");
                return (3 * rho + 4) * std::log(2.0) + std::log(rho + 5) - std::log(rho);
            });
    std::vector<std::string> gdi_opt = {"a", "rho", "lambda", "log_lambda"};
    reg.add({"cgnz", "zero count along a fundamental sequence", "4 a n^2", {"n"}, gdi_opt}, [P](const BoundParams& p) {
        double n = P(p, "cgnz", "n");
        if (!(n >= 1)) bound_domain("cgnz", "n must be at least 1");
        return std::log(4.0) + gdi_log_a("cgnz", p) + 2 * std::log(n);
    });
    reg.add({"cnz", "zero count with a covering system, large n", "10C (2/beta)^(1/gamma) n^(1+1/gamma)",
             {"C", "beta", "gamma", "n"}, {}},
            [P](const BoundParams& p) {
                const char* k = "cnz";
                double C = P(p, k, "C"), b = P(p, k, "beta"), g = P(p, k, "gamma"), n = P(p, k, "n");
                positive(k, C, "C");
                positive(k, b, "beta");
                double ln = log_n_and_gamma(k, n, g);
                return std::log(10 * C) + std::log(2 / b) / g + ln;
            });
    reg.add({"csc1di", "zero count under the two-sided growth condition", "a (n m(ar) + n^2)", {"a", "n", "m_ar"}, {}},
            [P](const BoundParams& p) {
                const char* k = "csc1di";
                double a = P(p, k, "a"), n = P(p, k, "n"), m = P(p, k, "m_ar");
                if (!(a > 1)) bound_domain(k, "a must exceed 1");
                if (!(n >= 1)) bound_domain(k, "n must be at least 1");
                if (!(m >= 0)) bound_domain(k, "m_ar must be nonnegative");
                return std::log(a) + std::log(n * m + n * n);
            });
    reg.add({"tgmi", "tangential Markov inequality along a fundamental sequence", "e a M(r,F) n^2 / r",
             {"M", "n", "r"}, gdi_opt},
            [P](const BoundParams& p) {
                const char* k = "tgmi";
                double M = P(p, k, "M"), n = P(p, k, "n"), r = P(p, k, "r");
                positive(k, M, "M");
                if (!(n >= 1)) bound_domain(k, "n must be at least 1");
                if (!(r >= 1)) bound_domain(k, "r must be at least 1");
                return 1 + gdi_log_a(k, p) + std::log(M) + 2 * std::log(n) - std::log(r);
            });
    reg.add({"tmi", "tangential Markov inequality with a covering system",
             "3e C 2^(1/gamma) n^(1+1/gamma) M(r,F) / (beta^(1/gamma) r)", {"C", "gamma", "beta", "n", "M", "r"}, {}},
            [P](const BoundParams& p) {
                const char* k = "tmi";
                double C = P(p, k, "C"), g = P(p, k, "gamma"), b = P(p, k, "beta"), n = P(p, k, "n"), M = P(p, k, "M"),
                       r = P(p, k, "r");
                positive(k, C, "C");
                positive(k, b, "beta");
                positive(k, M, "M");
                if (!(r >= 1)) bound_domain(k, "r must be at least 1");
                double ln = log_n_and_gamma(k, n, g);
                return std::log(3 * C) + 1 + std::log(2.0) / g + ln + std::log(M) - std::log(b) / g - std::log(r);
            });
    reg.add({"tpesif", "e_n coefficient from a slowly thinning touching sequence",
             "4C (3M)^(1/gamma) / (rho gamma Lambda^(1/gamma)); times n^(1+1/gamma) log(3Mn/Lambda) when n is given",
             {"C", "M", "rho", "gamma"}, {"n", "lambda", "log_lambda"}},
            [P](const BoundParams& p) {
                const char* k = "tpesif";
                double C = P(p, k, "C"), M = P(p, k, "M"), rho = P(p, k, "rho"), g = P(p, k, "gamma");
                positive(k, C, "C");
                positive(k, M, "M");
                positive(k, rho, "rho");
                if (!(g > 0 && g <= 1)) bound_domain(k, "gamma must lie in (0, 1]");
                double ll = bound_log_lambda(p);
                double v = std::log(4 * C) + std::log(3 * M) / g - std::log(rho) - std::log(g) - ll / g;
                if (auto it = p.find("n"); it != p.end()) {
                    double n = it->second;
                    double ln = log_n_and_gamma(k, n, g);
                    double inner = std::log(3 * M * n) - ll;  // log(3Mn/Lambda)
                    if (!(inner > 0)) bound_domain(k, "3Mn/Lambda must exceed 1");
                    v += ln + std::log(inner);
                }
                return v;
            });
    reg.add({"tpesif_M", "ratio constant M of the thinning-sequence criterion", "2^((2rho+3)gamma) C b / a",
             {"rho", "gamma", "C", "b", "a"}, {}},
            [P](const BoundParams& p) {
                const char* k = "tpesif_M";
                double rho = P(p, k, "rho"), g = P(p, k, "gamma"), C = P(p, k, "C"), b = P(p, k, "b"), a = P(p, k, "a");
                positive(k, rho, "rho");
                positive(k, C, "C");
                positive(k, b, "b");
                if (!(g > 0 && g <= 1)) bound_domain(k, "gamma must lie in (0, 1]");
                if (!(a > 0 && a <= 1)) bound_domain(k, "a must lie in (0, 1]");
                return (2 * rho + 3) * g * std::log(2.0) + std::log(C) + std::log(b) - std::log(a);
            });
    reg.add({"tpesif_C", "admissibility constant of the thinning-sequence criterion",
             "2^(3rho+4)/a (1 + log2(32/a)/rho)", {"rho", "a"}, {}},
            [P](const BoundParams& p) {
                const char* k = "tpesif_C";
                double rho = P(p, k, "rho"), a = P(p, k, "a");
                positive(k, rho, "rho");
                if (!(a > 0 && a <= 1)) bound_domain(k, "a must lie in (0, 1]");
                return (3 * rho + 4) * std::log(2.0) - std::log(a) + std::log1p(std::log2(32 / a) / rho);
            });
    reg.add({"lmi_c", "T0/S ratio constant", "A log k / log A", {"A", "k"}, {}}, [P](const BoundParams& p) {
        const char* k = "lmi_c";
        double A = P(p, k, "A"), kk = P(p, k, "k");
        if (!(A > 1)) bound_domain(k, "A must exceed 1");
        if (!(kk > 1)) bound_domain(k, "k must exceed 1");
        return std::log(A) + std::log(std::log(kk)) - std::log(std::log(A));
    });
    reg.add({"lpl_c", "m(8r)/S ratio constant from two-sided growth", "A1 A2 log(2k) / (2 log(A1/8))", {"A1", "A2", "k"}, {}},
            [P](const BoundParams& p) {
                const char* k = "lpl_c";
                double A1 = P(p, k, "A1"), A2 = P(p, k, "A2"), kk = P(p, k, "k");
                if (!(A1 > 8)) bound_domain(k, "A1 must exceed 8");
                if (!(A2 > 1)) bound_domain(k, "A2 must exceed 1");
                if (!(kk > 1)) bound_domain(k, "k must exceed 1");
                return std::log(A1) + std::log(A2) + std::log(std::log(2 * kk)) - std::log(2.0) - std::log(std::log(A1 / 8));
            });
    reg.add({"lsi_c", "m(8r)/S ratio constant near envelope touching", "(8k)^rho log(2k) / (2 log(a k^rho / 16))",
             {"rho", "k", "a"}, {}},
            [P](const BoundParams& p) {
                const char* k = "lsi_c";
                double rho = P(p, k, "rho"), kk = P(p, k, "k"), a = P(p, k, "a");
                positive(k, rho, "rho");
                if (!(kk > 1)) bound_domain(k, "k must exceed 1");
                if (!(a > 0 && a <= 1)) bound_domain(k, "a must lie in (0, 1]");
                double inner = std::log(a) + rho * std::log(kk) - std::log(16.0);  // log(a k^rho / 16)
                if (!(inner > 0)) bound_domain(k, "k^rho must exceed 16/a");
                return rho * std::log(8 * kk) + std::log(std::log(2 * kk)) - std::log(2.0) - std::log(inner);
            });
    return reg;
}

} // namespace

const BoundRegistry& growth_bounds() {
    static const BoundRegistry reg = build();
    return reg;
}

} // namespace tmlab::growth
