#include "tmlab/extremal/composed.hpp"

#include <cmath>
#include <limits>

namespace tmlab::extremal {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Summation error of the series stays below 1e-8 relative.
bool rounding_ok(double magnitude, Complex s) { return 1e-16 * magnitude <= 1e-8 * std::abs(s); }

template <class T>
std::vector<T> mul_trunc(const std::vector<T>& a, const std::vector<T>& b, std::size_t order) {
    std::vector<T> c(order);
    for (std::size_t i = 0; i < order && i < a.size(); ++i) {
        if (a[i] == T()) continue;
        for (std::size_t j = 0; i + j < order && j < b.size(); ++j)
            if (!(b[j] == T())) c[i + j] += a[i] * b[j];
    }
    return c;
}

template <class T>
std::vector<T> compose_series(int n, const std::vector<T>& coeff, const std::vector<T>& fser, std::size_t order) {
    std::vector<T> out(order);
    std::vector<T> power(order);
    if (order) power[0] = T(1);
    for (int j = 0; j <= n; ++j) {
        if (j > 0) power = mul_trunc(power, fser, order);
        for (int i = 0; i + j <= n; ++i) {
            const T& c = coeff[BivarPolynomial::index(i, j)];
            if (c == T()) continue;
            for (std::size_t k = i; k < order; ++k)
                if (!(power[k - i] == T())) out[k] += c * power[k - i];
        }
    }
    return out;
}

} // namespace

std::vector<Complex> compose_taylor(const BivarPolynomial& p, const core::EntireFunction& f, std::size_t order) {
    if (auto ex = compose_taylor_exact(p, f, order)) {
        std::vector<Complex> out;
        for (const auto& q : *ex) out.push_back(q.to_complex());
        return out;
    }
    return compose_series<Complex>(p.degree(), p.coeffs(), f.taylor(order), order);
}

std::optional<std::vector<QComplex>> compose_taylor_exact(const BivarPolynomial& p, const core::EntireFunction& f,
                                                          std::size_t order) {
    if (!p.has_exact()) return std::nullopt;
    auto fe = f.taylor_exact(order);
    if (!fe) return std::nullopt;
    return compose_series<QComplex>(p.degree(), *p.exact_coeffs(), *fe, order);
}

Complex compose_eval(const BivarPolynomial& p, const core::EntireFunction& f, Complex z) {
    return p.eval(z, f.eval(z));
}

ComposedFunction::ComposedFunction(BivarPolynomial p, core::EntireFunction f, std::size_t series_order)
    : p_(std::move(p)), f_(std::move(f)) {
    std::size_t order = series_order ? series_order : BivarPolynomial::count(p_.degree()) + 80;
    exact_ = compose_taylor_exact(p_, f_, order);
    if (exact_) {
        for (const auto& q : *exact_) series_.push_back(q.to_complex());
    } else if (f_.taylor_direct() && std::isfinite(f_.tail_bound(0, 1.0))) {
        series_ = compose_series<Complex>(p_.degree(), p_.coeffs(), f_.taylor(order), order);
    }
    for (double big_r : {0.25, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0}) {
        if (big_r >= f_.radius()) break;
        double mf = f_.tail_bound(0, big_r);
        if (!std::isfinite(mf)) continue;
        double b = 0;
        for (std::size_t k = 0; k < p_.coeffs().size(); ++k) {
            auto [i, j] = BivarPolynomial::exponents(k);
            b += std::abs(p_.coeffs()[k]) * std::pow(big_r, i) * std::pow(mf, j);
        }
        majorant_.emplace_back(big_r, b);
    }
}

double ComposedFunction::series_tail(double r, int k) const {
    double best = kInf;
    double kk = static_cast<double>(series_.size());
    for (auto [big_r, b] : majorant_) {
        if (big_r <= 1.05 * r) continue;
        double q = r / big_r;
        double t = k == 0 ? b * std::pow(q, kk) / (1 - q)
                          : b / big_r * std::pow(q, kk - 1) * (kk / (1 - q) + q / ((1 - q) * (1 - q)));
        best = std::min(best, t);
    }
    return best;
}

Complex ComposedFunction::direct_value(Complex z) const { return p_.eval(z, f_.eval(z)); }

Complex ComposedFunction::direct_derivative(Complex z) const {
    Complex w = f_.eval(z);
    return p_.dz(z, w) + p_.dw(z, w) * f_.eval_deriv(z, 1);
}

Complex ComposedFunction::value(Complex z) const {
    if (!series_.empty()) {
        double r = std::abs(z);
        double tail = series_tail(r, 0);
        if (tail < kInf) {
            Complex s = 0;
            double mag = 0;
            for (std::size_t k = series_.size(); k-- > 0;) {
                s = s * z + series_[k];
                mag = mag * r + std::abs(series_[k]);
            }
            if (tail <= 1e-13 * std::abs(s) && rounding_ok(mag, s)) return s;
        }
    }
    return direct_value(z);
}

Complex ComposedFunction::derivative(Complex z) const {
    if (!series_.empty()) {
        double r = std::abs(z);
        double tail = series_tail(r, 1);
        if (tail < kInf) {
            Complex s = 0;
            double mag = 0;
            for (std::size_t k = series_.size(); k-- > 1;) {
                s = s * z + double(k) * series_[k];
                mag = mag * r + double(k) * std::abs(series_[k]);
            }
            if (tail <= 1e-13 * std::abs(s) && rounding_ok(mag, s)) return s;
        }
    }
    return direct_derivative(z);
}

int ComposedFunction::exact_vanishing_order() const {
    if (!exact_) return -1;
    for (std::size_t k = 0; k < exact_->size(); ++k)
        if (!(*exact_)[k].is_zero()) return static_cast<int>(k);
    return static_cast<int>(exact_->size());
}

} // namespace tmlab::extremal
