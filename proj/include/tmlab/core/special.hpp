#pragma once

#include "tmlab/core/scaled.hpp"
#include "tmlab/support/exact.hpp"

namespace tmlab::core {

inline constexpr double kZetaEnvelope = 60.0;
inline constexpr double kXiEnvelope = 400.0;

Complex log_gamma(Complex z);

// (s-1) zeta(s), entire; envelope |s| <= 60.
Complex zeta_tilde(Complex s);
Complex zeta(Complex s);

// xi(z) = z(z-1)/2 pi^{-z/2} Gamma(z/2) zeta(z), returned as mantissa * exp(log_scale).
Scaled xi_scaled(Complex z);
Complex xi(Complex z);

namespace detail {
// Euler-Maclaurin evaluation of (s-1) zeta(s) for Re s >= 1/2, no envelope check.
Complex zeta_tilde_em(Complex s);
} // namespace detail

} // namespace tmlab::core
