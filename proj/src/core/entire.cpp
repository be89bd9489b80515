#include "tmlab/core/entire.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <variant>

#include "tmlab/core/special.hpp"
#include "tmlab/support/error.hpp"

namespace tmlab::core {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct StreamData {
    std::function<Complex(std::size_t)> coef;
    std::function<QComplex(std::size_t)> exact;
    TailBound tail;
    double radius;
    std::string label;
    int degree = -1;
};

struct ExpPolyData {
    std::vector<ExpPolyTerm> terms;
    std::string label;
};

struct GapData {
    double tau;
    long long n1;
    std::vector<long long> exps;
};

struct ZetaTildeData {};
struct XiData {};

struct DilationData {
    EntireFunction inner;
    Complex s;
};

struct ShiftData {
    EntireFunction inner;
    Complex w;
};

Complex horner(const std::vector<Complex>& p, Complex z) {
    Complex v = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * z + *it;
    return v;
}

std::vector<Complex> poly_deriv(const std::vector<Complex>& p) {
    if (p.size() <= 1) return {};
    std::vector<Complex> d(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<double>(i);
    return d;
}

std::vector<Complex> poly_add(std::vector<Complex> a, const std::vector<Complex>& b) {
    if (b.size() > a.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return a;
}

std::vector<Complex> poly_mul(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Complex> c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

double log_add(double a, double b) {
    if (a == -kInf) return b;
    if (b == -kInf) return a;
    double m = std::max(a, b);
    return m + std::log1p(std::exp(-std::abs(a - b)));
}

// Coefficients of exp(q) as a power series, floating.
std::vector<Complex> exp_series(const std::vector<Complex>& q, std::size_t count) {
    std::vector<Complex> b(count);
    if (count == 0) return b;
    b[0] = q.empty() ? Complex(1) : std::exp(q[0]);
    for (std::size_t k = 1; k < count; ++k) {
        Complex s = 0;
        for (std::size_t m = 1; m <= k && m < q.size(); ++m) s += static_cast<double>(m) * q[m] * b[k - m];
        b[k] = s / static_cast<double>(k);
    }
    return b;
}

std::vector<QComplex> exp_series_exact(const std::vector<QComplex>& q, std::size_t count) {
    std::vector<QComplex> b(count);
    if (count == 0) return b;
    b[0] = QComplex(1);
    for (std::size_t k = 1; k < count; ++k) {
        QComplex s;
        for (std::size_t m = 1; m <= k && m < q.size(); ++m)
            if (!q[m].is_zero()) s += QComplex(Rational(static_cast<long>(m))) * q[m] * b[k - m];
        b[k] = s * QComplex(Rational(1, static_cast<long>(k)));
    }
    return b;
}

std::vector<Complex> to_floating(const std::vector<QComplex>& v) {
    std::vector<Complex> out;
    out.reserve(v.size());
    for (const auto& c : v) out.push_back(c.to_complex());
    return out;
}

double falling_log(double n, int k) { return std::lgamma(n + 1) - std::lgamma(n - k + 1); }

QComplex exact_of(Complex c) { return {decimal_rational(c.real()), decimal_rational(c.imag())}; }

std::string fmt(Complex c) {
    std::ostringstream os;
    os.precision(17);
    if (c.imag() == 0) os << c.real();
    else os << "(" << c.real() << "," << c.imag() << ")";
    return os.str();
}

// k-th derivative by the Cauchy integral on a circle of radius rho, sampled at m points.
template <class F>
Scaled cauchy_derivative(const F& scaled_at, Complex z, int k, double rho = 0.5, int m = 64) {
    std::vector<Scaled> samples(m);
    double top = -kInf;
    for (int j = 0; j < m; ++j) {
        samples[j] = scaled_at(z + std::polar(rho, 2 * kPi * j / m));
        if (samples[j].mantissa != Complex(0)) top = std::max(top, samples[j].log_scale);
    }
    if (top == -kInf) return {};
    Complex acc = 0;
    for (int j = 0; j < m; ++j)
        acc += samples[j].mantissa * std::exp(samples[j].log_scale - top) * std::polar(1.0, -2 * kPi * j * k / m);
    Scaled out;
    out.log_scale = top + std::lgamma(k + 1.0) - k * std::log(rho);
    out.mantissa = acc / static_cast<double>(m);
    return out;
}

// Taylor coefficients by a discrete Cauchy transform on |z| = rho.
template <class F>
std::vector<Complex> cauchy_taylor(const F& value_at, std::size_t count, double rho = 1.0) {
    std::size_t m = 256;
    while (m < 2 * count) m *= 2;
    std::vector<Complex> samples(m);
    for (std::size_t j = 0; j < m; ++j) samples[j] = value_at(std::polar(rho, 2 * kPi * j / m));
    std::vector<Complex> out(count);
    for (std::size_t k = 0; k < count; ++k) {
        Complex acc = 0;
        for (std::size_t j = 0; j < m; ++j) acc += samples[j] * std::polar(1.0, -2 * kPi * double(j * k % m) / m);
        out[k] = acc / (static_cast<double>(m) * std::pow(rho, static_cast<double>(k)));
    }
    return out;
}

} // namespace

struct EntireFunction::Impl {
    std::variant<StreamData, ExpPolyData, GapData, ZetaTildeData, XiData, DilationData, ShiftData> data;
    EvalOptions opts;
};

namespace {

template <class T>
const T* as(const std::shared_ptr<const EntireFunction::Impl>& p) {
    return std::get_if<T>(&p->data);
}

} // namespace

EntireFunction EntireFunction::taylor_stream(std::function<Complex(std::size_t)> coef, TailBound tail, double radius,
                                             std::function<QComplex(std::size_t)> exact, std::string label) {
    if (!coef || !tail) domain_error("bad-function", "taylor-stream needs a coefficient generator and a tail bound");
    if (!(radius > 0)) domain_error("bad-function", "taylor-stream radius must be positive");
    auto impl = std::make_shared<Impl>();
    impl->data = StreamData{std::move(coef), std::move(exact), std::move(tail), radius, std::move(label)};
    return EntireFunction(impl);
}

EntireFunction EntireFunction::polynomial_stream(std::vector<QComplex> coeffs) {
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    auto fl = to_floating(coeffs);
    std::size_t deg1 = coeffs.size();
    auto coef = [fl](std::size_t k) { return k < fl.size() ? fl[k] : Complex(0); };
    auto exact = [coeffs](std::size_t k) { return k < coeffs.size() ? coeffs[k] : QComplex(); };
    auto tail = [fl, deg1](std::size_t n, double r) {
        double s = 0;
        for (std::size_t k = n; k < deg1; ++k) s += std::abs(fl[k]) * std::pow(r, static_cast<double>(k));
        return s;
    };
    auto f = taylor_stream(coef, tail, kInf, exact, "poly-stream");
    auto impl = std::make_shared<Impl>(*f.impl_);
    std::get<StreamData>(impl->data).degree = static_cast<int>(deg1) - 1;
    return EntireFunction(impl);
}

EntireFunction EntireFunction::exp_poly_sum(std::vector<ExpPolyTerm> terms, std::string label) {
    for (auto& t : terms) {
        if (t.p_exact) t.p = to_floating(*t.p_exact);
        if (t.q_exact) t.q = to_floating(*t.q_exact);
        if (t.q.empty()) t.q = {Complex(0)};
    }
    auto impl = std::make_shared<Impl>();
    impl->data = ExpPolyData{std::move(terms), std::move(label)};
    return EntireFunction(impl);
}

EntireFunction EntireFunction::polynomial(std::vector<QComplex> coeffs) {
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    ExpPolyTerm t;
    t.p_exact = coeffs;
    t.q_exact = std::vector<QComplex>{QComplex()};
    std::ostringstream os;
    os << "poly:";
    for (std::size_t i = 0; i < coeffs.size(); ++i) os << (i ? "," : "") << coeffs[i].str();
    return exp_poly_sum({t}, os.str());
}

EntireFunction EntireFunction::constant(Complex c) {
    ExpPolyTerm t;
    t.p = {c};
    t.q = {Complex(0)};
    if (c.real() == std::floor(c.real()) && c.imag() == std::floor(c.imag())) {
        t.p_exact = std::vector<QComplex>{exact_of(c)};
        t.q_exact = std::vector<QComplex>{QComplex()};
    }
    return exp_poly_sum({t}, "const:" + fmt(c));
}

EntireFunction EntireFunction::exp_of(std::vector<QComplex> q, std::string label) {
    ExpPolyTerm t;
    t.p_exact = std::vector<QComplex>{QComplex(1)};
    t.q_exact = std::move(q);
    return exp_poly_sum({t}, std::move(label));
}

EntireFunction EntireFunction::exp() { return exp_of({QComplex(), QComplex(1)}, "exp"); }

EntireFunction EntireFunction::gap_series(double tau, long long n1) {
    if (!(tau > 2)) domain_error("bad-function", "gap series needs tau > 2");
    if (n1 < 2) domain_error("bad-function", "gap series needs n1 >= 2");
    GapData g{tau, n1, {}};
    double n = static_cast<double>(n1);
    while (n < 1e17) {
        g.exps.push_back(static_cast<long long>(n));
        double next = std::round(std::pow(n, tau - 1));
        if (next <= n) domain_error("bad-function", "gap exponents must increase");
        n = next;
    }
    auto impl = std::make_shared<Impl>();
    impl->data = std::move(g);
    return EntireFunction(impl);
}

EntireFunction EntireFunction::zeta_tilde() {
    auto impl = std::make_shared<Impl>();
    impl->data = ZetaTildeData{};
    return EntireFunction(impl);
}

EntireFunction EntireFunction::xi() {
    auto impl = std::make_shared<Impl>();
    impl->data = XiData{};
    return EntireFunction(impl);
}

EntireFunction EntireFunction::parse(const std::string& spec) {
    auto colon = spec.find(':');
    std::string head = spec.substr(0, colon);
    std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
    auto split = [](const std::string& s, char sep) {
        std::vector<std::string> out;
        std::string cur;
        for (char c : s) {
            if (c == sep) { out.push_back(cur); cur.clear(); }
            else cur.push_back(c);
        }
        out.push_back(cur);
        return out;
    };
    if (head == "exp" && rest.empty()) return exp();
    if (head == "exp-z2") return exp_of({QComplex(), QComplex(), QComplex(1)}, "exp-z2");
    if (head == "zeta-tilde") return zeta_tilde();
    if (head == "xi") return xi();
    if (head == "gap") {
        auto parts = rest.empty() ? std::vector<std::string>{} : split(rest, ':');
        double tau = parts.size() > 0 ? std::stod(parts[0]) : 3.0;
        long long n1 = parts.size() > 1 ? std::stoll(parts[1]) : 2;
        return gap_series(tau, n1);
    }
    if (head == "poly" || head == "poly-stream") {
        std::vector<QComplex> c;
        for (const auto& s : split(rest, ',')) c.emplace_back(parse_rational(s));
        return head == "poly" ? polynomial(c) : polynomial_stream(c);
    }
    if (head == "z") return polynomial({QComplex(), QComplex(1)});
    if (head == "const") return constant(Complex(to_double(parse_rational(rest)), 0));
    domain_error("unknown-function", "unknown function kind '" + spec + "'");
}

EntireFunction EntireFunction::dilate(Complex s) const {
    if (s == Complex(0)) domain_error("bad-function", "dilation factor must be nonzero");
    if (auto d = as<DilationData>(impl_)) return d->inner.dilate(d->s * s);
    auto impl = std::make_shared<Impl>();
    impl->data = DilationData{*this, s};
    impl->opts = impl_->opts;
    return EntireFunction(impl);
}

EntireFunction EntireFunction::shift(Complex w) const {
    auto impl = std::make_shared<Impl>();
    impl->data = ShiftData{*this, w};
    impl->opts = impl_->opts;
    return EntireFunction(impl);
}

FunctionKind EntireFunction::kind() const { return static_cast<FunctionKind>(impl_->data.index()); }

const EvalOptions& EntireFunction::options() const { return impl_->opts; }

EntireFunction EntireFunction::with_options(EvalOptions opts) const {
    auto impl = std::make_shared<Impl>(*impl_);
    impl->opts = opts;
    return EntireFunction(impl);
}

std::string EntireFunction::describe() const {
    return std::visit(
        [](const auto& d) -> std::string {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, StreamData>) return d.label;
            else if constexpr (std::is_same_v<T, ExpPolyData>) return d.label;
            else if constexpr (std::is_same_v<T, GapData>) {
                std::ostringstream os;
                os << "gap:" << d.tau << ":" << d.n1;
                return os.str();
            } else if constexpr (std::is_same_v<T, ZetaTildeData>) return "zeta-tilde";
            else if constexpr (std::is_same_v<T, XiData>) return "xi";
            else if constexpr (std::is_same_v<T, DilationData>) return "dilate(" + fmt(d.s) + "," + d.inner.describe() + ")";
            else return "shift(" + fmt(d.w) + "," + d.inner.describe() + ")";
        },
        impl_->data);
}

double EntireFunction::radius() const {
    if (auto s = as<StreamData>(impl_)) return s->radius;
    if (auto d = as<DilationData>(impl_)) return d->inner.radius() / std::abs(d->s);
    if (auto w = as<ShiftData>(impl_)) return w->inner.radius();
    return kInf;
}

int EntireFunction::polynomial_degree() const {
    if (auto s = as<StreamData>(impl_)) return s->degree;
    if (auto e = as<ExpPolyData>(impl_)) {
        int deg = -1;
        for (const auto& t : e->terms) {
            for (std::size_t i = 1; i < t.q.size(); ++i)
                if (t.q[i] != Complex(0)) return -1;
            for (int i = static_cast<int>(t.p.size()) - 1; i >= 0; --i)
                if (t.p[i] != Complex(0)) { deg = std::max(deg, i); break; }
        }
        return std::max(deg, 0);
    }
    if (auto d = as<DilationData>(impl_)) return d->inner.polynomial_degree();
    if (auto w = as<ShiftData>(impl_)) return w->inner.polynomial_degree();
    return -1;
}

Scaled EntireFunction::eval_scaled(Complex z, int k) const {
    if (k < 0) domain_error("bad-derivative", "derivative order must be nonnegative");
    const auto& opts = impl_->opts;
    return std::visit(
        [&](const auto& d) -> Scaled {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, StreamData>) {
                double r = std::abs(z);
                if (r >= d.radius) domain_error("outside-radius", "point outside the taylor-stream radius");
                double big_r = std::isinf(d.radius) ? 2 * r + 1 : r + 0.5 * (d.radius - r);
                double kfact = std::tgamma(k + 1.0);
                Complex sum = 0;
                for (std::size_t j = k;; ++j) {
                    if (j > opts.max_terms)
                        numeric_error("truncation-budget-exceeded", "tail bound not below tolerance within term budget");
                    Complex c = d.coef(j);
                    if (c != Complex(0)) {
                        double lf = falling_log(static_cast<double>(j), k);
                        sum += c * std::exp(lf) * std::pow(z, static_cast<double>(j - k));
                    }
                    double bound = k == 0 ? d.tail(j + 1, r)
                                          : kfact * d.tail(j + 1, big_r) / std::pow(big_r - r, static_cast<double>(k));
                    if (bound == 0 || bound <= opts.rel_tol * std::abs(sum)) break;
                }
                return {sum, 0.0};
            } else if constexpr (std::is_same_v<T, ExpPolyData>) {
                std::vector<std::pair<Complex, Complex>> parts;  // (P_k(z), q(z))
                double top = -kInf;
                for (const auto& t : d.terms) {
                    std::vector<Complex> p = t.p;
                    auto dq = poly_deriv(t.q);
                    for (int i = 0; i < k; ++i) p = poly_add(poly_deriv(p), poly_mul(p, dq));
                    Complex pv = horner(p, z), qv = horner(t.q, z);
                    if (pv == Complex(0)) continue;
                    parts.emplace_back(pv, qv);
                    top = std::max(top, qv.real());
                }
                if (parts.empty()) return {};
                Complex acc = 0;
                for (auto& [pv, qv] : parts) acc += pv * std::exp(qv - top);
                return {acc, top};
            } else if constexpr (std::is_same_v<T, GapData>) {
                double r = std::abs(z);
                if (r == 0) {
                    Complex v = 0;
                    for (long long n : d.exps)
                        if (n == k) v += std::exp(std::lgamma(k + 1.0) - n * std::log(static_cast<double>(n)));
                    return {v, 0.0};
                }
                double lr = std::log(r), arg = std::arg(z);
                std::vector<std::pair<double, double>> terms;  // (log magnitude, phase)
                double top = -kInf;
                bool closed = false;
                for (long long n : d.exps) {
                    if (n < k) continue;
                    double dn = static_cast<double>(n);
                    double lt = falling_log(dn, k) + (dn - k) * lr - dn * std::log(dn);
                    terms.emplace_back(lt, std::fmod((dn - k) * arg, 2 * kPi));
                    top = std::max(top, lt);
                    if (dn > 2 * (r + k + 2) && lt < top - 60) { closed = true; break; }
                }
                if (!closed) numeric_error("truncation-budget-exceeded", "gap series exponents exhausted");
                Complex acc = 0;
                for (auto& [lt, ph] : terms) acc += std::polar(std::exp(lt - top), ph);
                return {acc, top};
            } else if constexpr (std::is_same_v<T, ZetaTildeData>) {
                if (k == 0) return {core::zeta_tilde(z), 0.0};
                if (std::abs(z) + 0.5 > kZetaEnvelope)
                    domain_error("accuracy-envelope-exceeded", "derivative stencil leaves the zeta envelope");
                return cauchy_derivative([](Complex u) { return Scaled{core::zeta_tilde(u), 0.0}; }, z, k);
            } else if constexpr (std::is_same_v<T, XiData>) {
                if (k == 0) return xi_scaled(z);
                if (std::abs(z) + 0.5 > kXiEnvelope)
                    domain_error("accuracy-envelope-exceeded", "derivative stencil leaves the xi envelope");
                return cauchy_derivative([](Complex u) { return xi_scaled(u); }, z, k);
            } else if constexpr (std::is_same_v<T, DilationData>) {
                Scaled v = d.inner.eval_scaled(d.s * z, k);
                if (k > 0) {
                    v.mantissa *= std::polar(1.0, k * std::arg(d.s));
                    v.log_scale += k * std::log(std::abs(d.s));
                }
                return v;
            } else {
                Scaled v = d.inner.eval_scaled(z, k);
                if (k > 0) return v;
                if (v.log_scale <= 0 || v.mantissa == Complex(0)) return {v.value() - d.w, 0.0};
                return {v.mantissa - d.w * std::exp(-v.log_scale), v.log_scale};
            }
        },
        impl_->data);
}

Complex EntireFunction::eval(Complex z) const { return eval_scaled(z, 0).value(); }

Complex EntireFunction::eval_deriv(Complex z, int k) const { return eval_scaled(z, k).value(); }

std::vector<Complex> EntireFunction::taylor(std::size_t count) const {
    return std::visit(
        [&](const auto& d) -> std::vector<Complex> {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, StreamData>) {
                std::vector<Complex> out(count);
                for (std::size_t k = 0; k < count; ++k) out[k] = d.coef(k);
                return out;
            } else if constexpr (std::is_same_v<T, ExpPolyData>) {
                std::vector<Complex> out(count);
                for (const auto& t : d.terms) {
                    auto e = exp_series(t.q, count);
                    for (std::size_t i = 0; i < t.p.size(); ++i)
                        for (std::size_t j = 0; i + j < count; ++j) out[i + j] += t.p[i] * e[j];
                }
                return out;
            } else if constexpr (std::is_same_v<T, GapData>) {
                std::vector<Complex> out(count);
                for (long long n : d.exps)
                    if (static_cast<std::size_t>(n) < count)
                        out[n] = std::exp(-static_cast<double>(n) * std::log(static_cast<double>(n)));
                return out;
            } else if constexpr (std::is_same_v<T, ZetaTildeData>) {
                return cauchy_taylor([](Complex u) { return core::zeta_tilde(u); }, count);
            } else if constexpr (std::is_same_v<T, XiData>) {
                return cauchy_taylor([](Complex u) { return core::xi(u); }, count);
            } else if constexpr (std::is_same_v<T, DilationData>) {
                auto c = d.inner.taylor(count);
                Complex p = 1;
                for (auto& x : c) { x *= p; p *= d.s; }
                return c;
            } else {
                auto c = d.inner.taylor(count);
                if (!c.empty()) c[0] -= d.w;
                return c;
            }
        },
        impl_->data);
}

bool EntireFunction::taylor_direct() const {
    if (auto d = as<DilationData>(impl_)) return d->inner.taylor_direct();
    if (auto w = as<ShiftData>(impl_)) return w->inner.taylor_direct();
    return !as<ZetaTildeData>(impl_) && !as<XiData>(impl_);
}

std::optional<std::vector<QComplex>> EntireFunction::taylor_exact(std::size_t count) const {
    return std::visit(
        [&](const auto& d) -> std::optional<std::vector<QComplex>> {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, StreamData>) {
                if (!d.exact) return std::nullopt;
                std::vector<QComplex> out(count);
                for (std::size_t k = 0; k < count; ++k) out[k] = d.exact(k);
                return out;
            } else if constexpr (std::is_same_v<T, ExpPolyData>) {
                std::vector<QComplex> out(count);
                for (const auto& t : d.terms) {
                    if (!t.p_exact || !t.q_exact) return std::nullopt;
                    const auto& q = *t.q_exact;
                    if (!q.empty() && !q[0].is_zero()) return std::nullopt;
                    auto e = exp_series_exact(q, count);
                    const auto& p = *t.p_exact;
                    for (std::size_t i = 0; i < p.size(); ++i)
                        for (std::size_t j = 0; i + j < count; ++j)
                            if (!p[i].is_zero() && !e[j].is_zero()) out[i + j] += p[i] * e[j];
                }
                return out;
            } else if constexpr (std::is_same_v<T, GapData>) {
                std::vector<QComplex> out(count);
                for (long long n : d.exps) {
                    if (static_cast<std::size_t>(n) >= count) break;
                    BigInt den = boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(n));
                    out[n] = QComplex(Rational(BigInt(1), den));
                }
                return out;
            } else if constexpr (std::is_same_v<T, DilationData>) {
                auto c = d.inner.taylor_exact(count);
                if (!c) return std::nullopt;
                QComplex s = exact_of(d.s), p(1);
                for (auto& x : *c) { x *= p; p *= s; }
                return c;
            } else if constexpr (std::is_same_v<T, ShiftData>) {
                auto c = d.inner.taylor_exact(count);
                if (!c) return std::nullopt;
                if (!c->empty()) (*c)[0] -= exact_of(d.w);
                return c;
            } else {
                return std::nullopt;
            }
        },
        impl_->data);
}

double EntireFunction::tail_bound(std::size_t n, double r) const {
    return std::visit(
        [&](const auto& d) -> double {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, StreamData>) {
                return d.tail(n, r);
            } else if constexpr (std::is_same_v<T, ExpPolyData>) {
                // Majorant p^(R) exp(q^(R)) with absolute coefficients; Cauchy on the majorant.
                int qdeg = 0;
                double qlead = 0;
                for (const auto& t : d.terms)
                    for (std::size_t i = 1; i < t.q.size(); ++i)
                        if (t.q[i] != Complex(0) && static_cast<int>(i) >= qdeg) {
                            qdeg = static_cast<int>(i);
                            qlead = std::abs(t.q[i]);
                        }
                int pdeg = polynomial_degree();
                if (pdeg >= 0) {
                    // Polynomial: exact finite tail.
                    auto c = taylor(pdeg + 1);
                    double s = 0;
                    for (std::size_t k = n; k < c.size(); ++k) s += std::abs(c[k]) * std::pow(r, double(k));
                    return s;
                }
                if (r == 0) return n == 0 ? std::abs(eval(0)) : 0.0;
                auto log_major = [&](double big_r) {
                    double acc = -kInf;
                    for (const auto& t : d.terms) {
                        double pv = 0, qv = t.q.empty() ? 0 : t.q[0].real();
                        for (std::size_t i = 0; i < t.p.size(); ++i) pv += std::abs(t.p[i]) * std::pow(big_r, double(i));
                        for (std::size_t i = 1; i < t.q.size(); ++i) qv += std::abs(t.q[i]) * std::pow(big_r, double(i));
                        if (pv > 0) acc = log_add(acc, std::log(pv) + qv);
                    }
                    return acc;
                };
                std::vector<double> cands;
                double star = std::pow(std::max(1.0, double(n)) / (qdeg * qlead), 1.0 / qdeg);
                for (double f : {0.5, 0.7, 1.0, 1.4, 2.0}) cands.push_back(star * f);
                for (double f : {1.1, 1.25, 1.5, 2.0, 3.0, 4.0, 8.0}) cands.push_back(r * f);
                double best = kInf;
                for (double big_r : cands) {
                    if (big_r <= r * 1.0001) continue;
                    double q = r / big_r;
                    double lb = log_major(big_r) + n * std::log(q) - std::log1p(-q);
                    best = std::min(best, lb);
                }
                return std::exp(best);
            } else if constexpr (std::is_same_v<T, GapData>) {
                double s = 0;
                for (long long m : d.exps)
                    if (static_cast<std::size_t>(m) >= n && r > 0)
                        s += std::exp(static_cast<double>(m) * (std::log(r) - std::log(static_cast<double>(m))));
                return s;
            } else if constexpr (std::is_same_v<T, ZetaTildeData> || std::is_same_v<T, XiData>) {
                // Sampled maximum modulus on a larger circle: an estimate, not a certificate.
                double env = std::is_same_v<T, XiData> ? kXiEnvelope : kZetaEnvelope;
                double best = kInf;
                for (double f : {1.5, 2.0, 3.0}) {
                    double big_r = std::max(r * f, r + 1.0);
                    if (big_r > env) continue;
                    double lm = -kInf;
                    for (int j = 0; j < 256; ++j) lm = std::max(lm, eval_scaled(std::polar(big_r, 2 * kPi * j / 256)).log_abs());
                    double q = r / big_r;
                    best = std::min(best, std::exp(lm + n * std::log(q) - std::log1p(-q) + 0.1));
                }
                return best;
            } else if constexpr (std::is_same_v<T, DilationData>) {
                return d.inner.tail_bound(n, r * std::abs(d.s));
            } else {
                return d.inner.tail_bound(n, r) + (n == 0 ? std::abs(d.w) : 0.0);
            }
        },
        impl_->data);
}

Complex eval(const EntireFunction& f, Complex z) { return f.eval(z); }
Complex eval_deriv(const EntireFunction& f, Complex z, int k) { return f.eval_deriv(z, k); }

double spherical_deriv(const Scaled& value, const Scaled& deriv) {
    double ad = std::abs(deriv.mantissa);
    if (ad == 0) return 0;
    double lv = value.log_abs();
    double denom = lv > 0 ? 2 * lv + std::log1p(std::exp(-2 * lv)) : std::log1p(std::exp(2 * lv));
    return std::exp(std::log(ad) + deriv.log_scale - denom);
}

double spherical_deriv(const EntireFunction& f, Complex z) {
    return spherical_deriv(f.eval_scaled(z, 0), f.eval_scaled(z, 1));
}

} // namespace tmlab::core
