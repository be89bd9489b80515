#pragma once

#include <cmath>
#include <complex>
#include <limits>

namespace tmlab::core {

// mantissa * exp(log_scale); keeps values such as exp(exp(5)) representable.
struct Scaled {
    std::complex<double> mantissa{0.0, 0.0};
    double log_scale = 0.0;

    std::complex<double> value() const { return mantissa * std::exp(log_scale); }
    double log_abs() const {
        double a = std::abs(mantissa);
        return a == 0 ? -std::numeric_limits<double>::infinity() : std::log(a) + log_scale;
    }
};

} // namespace tmlab::core
