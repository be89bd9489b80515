#pragma once

#include <complex>

#include <boost/multiprecision/mpfr.hpp>

#include "tmlab/support/exact.hpp"

namespace tmlab {

using MpReal = boost::multiprecision::mpfr_float_100;

struct MpComplex {
    MpReal re{0};
    MpReal im{0};

    MpComplex() = default;
    MpComplex(MpReal r, MpReal i = MpReal(0)) : re(std::move(r)), im(std::move(i)) {}
    explicit MpComplex(Complex z) : re(z.real()), im(z.imag()) {}
    explicit MpComplex(const QComplex& q) : re(MpReal(q.re)), im(MpReal(q.im)) {}

    Complex to_complex() const { return {re.convert_to<double>(), im.convert_to<double>()}; }
    MpReal norm() const { return re * re + im * im; }
    MpReal abs() const { return sqrt(norm()); }

    friend MpComplex operator+(const MpComplex& a, const MpComplex& b) { return {a.re + b.re, a.im + b.im}; }
    friend MpComplex operator-(const MpComplex& a, const MpComplex& b) { return {a.re - b.re, a.im - b.im}; }
    friend MpComplex operator*(const MpComplex& a, const MpComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend MpComplex operator*(const MpComplex& a, const MpReal& s) { return {a.re * s, a.im * s}; }
    friend MpComplex operator/(const MpComplex& a, const MpComplex& b) {
        MpReal n = b.norm();
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    MpComplex& operator+=(const MpComplex& b) { re += b.re; im += b.im; return *this; }
    MpComplex& operator-=(const MpComplex& b) { re -= b.re; im -= b.im; return *this; }
    MpComplex& operator*=(const MpComplex& b) { return *this = *this * b; }
    MpComplex conj() const { return {re, -im}; }
};

inline MpComplex mp_polar(const MpReal& r, const MpReal& theta) { return {r * cos(theta), r * sin(theta)}; }

inline MpReal mp_pi() { return boost::math::constants::pi<MpReal>(); }

} // namespace tmlab
