#include "tmlab/core/special.hpp"

#include <array>
#include <cmath>

#include <boost/math/special_functions/bernoulli.hpp>

#include "tmlab/support/error.hpp"

namespace tmlab::core {

namespace {

const double kLogTwoPi = std::log(2 * kPi);

// log sin(pi z), stable for large |Im z|.
Complex log_sin_pi(Complex z) {
    Complex w = kPi * z;
    if (std::abs(w.imag()) < 20) return std::log(std::sin(w));
    const Complex i(0, 1);
    if (w.imag() > 0) {
        // sin w = (e^{-iw}/2i)(e^{2iw} - 1) ... with |e^{2iw}| small
        return -i * w - std::log(2.0 * i) + std::log(1.0 - std::exp(2.0 * i * w)) + std::log(Complex(-1, 0));
    }
    return i * w - std::log(2.0 * i) + std::log(1.0 - std::exp(-2.0 * i * w));
}

} // namespace

Complex log_gamma(Complex z) {
    if (z.real() <= 0 && z.imag() == 0 && z.real() == std::floor(z.real()))
        domain_error("gamma-pole", "Gamma has a pole at a nonpositive integer");
    if (z.real() < 0) return std::log(kPi) - log_sin_pi(z) - log_gamma(1.0 - z);
    Complex shift_sum = 0;
    Complex w = z;
    while (std::abs(w) < 15 || w.real() < 8) {
        shift_sum += std::log(w);
        w += 1.0;
    }
    Complex s = (w - 0.5) * std::log(w) - w + 0.5 * kLogTwoPi;
    Complex winv = 1.0 / w, winv2 = winv * winv, pw = winv;
    for (int k = 1; k <= 12; ++k) {
        double b = boost::math::bernoulli_b2n<double>(k);
        s += b / (2.0 * k * (2.0 * k - 1)) * pw;
        pw *= winv2;
    }
    return s - shift_sum;
}

namespace detail {

Complex zeta_tilde_em(Complex s) {
    int n = std::max(20, static_cast<int>(std::ceil(std::abs(s))) + 10);
    Complex sum = 0;
    for (int k = n - 1; k >= 1; --k) sum += std::exp(-s * std::log(static_cast<double>(k)));
    double logn = std::log(static_cast<double>(n));
    Complex npow = std::exp(-s * logn);  // N^{-s}
    sum += 0.5 * npow;
    // Bernoulli corrections B_{2j}/(2j)! s(s+1)...(s+2j-2) N^{-s-2j+1}
    Complex rising = s;
    Complex term_pow = npow / static_cast<double>(n);
    double fact = 2;  // (2j)!
    for (int j = 1; j <= 60; ++j) {
        Complex t = boost::math::bernoulli_b2n<double>(j) / fact * rising * term_pow;
        sum += t;
        if (std::abs(t) < 1e-18 * std::abs(sum)) break;
        rising *= (s + (2.0 * j - 1)) * (s + 2.0 * j);
        term_pow /= static_cast<double>(n) * n;
        fact *= (2.0 * j + 1) * (2.0 * j + 2);
    }
    return (s - 1.0) * sum + npow * static_cast<double>(n);
}

} // namespace detail

Complex zeta_tilde(Complex s) {
    if (std::abs(s) > kZetaEnvelope) domain_error("accuracy-envelope-exceeded", "|z| > 60 for zeta");
    if (s.real() >= 0.5) return detail::zeta_tilde_em(s);
    return (s - 1.0) * zeta(s);
}

Complex zeta(Complex s) {
    if (s == Complex(1, 0)) domain_error("pole-at-one", "zeta has a pole at 1");
    if (std::abs(s) > kZetaEnvelope) domain_error("accuracy-envelope-exceeded", "|z| > 60 for zeta");
    if (s.real() >= 0.5) return detail::zeta_tilde_em(s) / (s - 1.0);
    // zeta(s) = -2^s pi^{s-1} [sin(pi s/2)/s] Gamma(1-s) (s'-1)zeta(s') with s' = 1-s
    Complex sinc;
    if (std::abs(s) < 1e-4) {
        Complex u = kPi * s / 2.0;
        sinc = kPi / 2.0 * (1.0 - u * u / 6.0);
    } else {
        sinc = std::sin(kPi * s / 2.0) / s;
    }
    Complex logfac = s * std::log(2.0) + (s - 1.0) * std::log(kPi) + log_gamma(1.0 - s);
    return -std::exp(logfac) * sinc * detail::zeta_tilde_em(1.0 - s);
}

Scaled xi_scaled(Complex z) {
    if (std::abs(z) > kXiEnvelope) domain_error("accuracy-envelope-exceeded", "|z| > 400 for xi");
    if (z.real() < 0.5) z = 1.0 - z;
    // xi(z) = z/2 pi^{-z/2} Gamma(z/2) (z-1)zeta(z)
    Complex zt = detail::zeta_tilde_em(z);
    Complex lg = -0.5 * z * std::log(kPi) + log_gamma(0.5 * z);
    Scaled out;
    out.log_scale = lg.real();
    out.mantissa = 0.5 * z * zt * std::polar(1.0, lg.imag());
    return out;
}

Complex xi(Complex z) { return xi_scaled(z).value(); }

} // namespace tmlab::core
