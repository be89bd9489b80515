#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace tmlab {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

// Exact value of the shortest decimal that round-trips to x, so 0.1 becomes 1/10.
Rational decimal_rational(double x);
// Accepts "p/q", plain integers and decimal/scientific notation.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
double to_double(const Rational& q);

BigInt ceil_rational(const Rational& q);
BigInt floor_rational(const Rational& q);

// Exact element of Q(i).
struct QComplex {
    Rational re{0};
    Rational im{0};

    QComplex() = default;
    QComplex(Rational r, Rational i = Rational(0)) : re(std::move(r)), im(std::move(i)) {}
    QComplex(long r) : re(r) {}

    bool is_zero() const { return re == 0 && im == 0; }
    Complex to_complex() const { return {to_double(re), to_double(im)}; }

    friend QComplex operator+(const QComplex& a, const QComplex& b) { return {a.re + b.re, a.im + b.im}; }
    friend QComplex operator-(const QComplex& a, const QComplex& b) { return {a.re - b.re, a.im - b.im}; }
    friend QComplex operator-(const QComplex& a) { return {-a.re, -a.im}; }
    friend QComplex operator*(const QComplex& a, const QComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend QComplex operator/(const QComplex& a, const QComplex& b);
    QComplex& operator+=(const QComplex& b) { re += b.re; im += b.im; return *this; }
    QComplex& operator-=(const QComplex& b) { re -= b.re; im -= b.im; return *this; }
    QComplex& operator*=(const QComplex& b) { return *this = *this * b; }
    friend bool operator==(const QComplex& a, const QComplex& b) { return a.re == b.re && a.im == b.im; }

    std::string str() const;
};

// Power series helpers on exact coefficients, truncated at `order` terms.
std::vector<QComplex> series_mul(const std::vector<QComplex>& a, const std::vector<QComplex>& b, std::size_t order);

} // namespace tmlab
