#include "tmlab/support/exact.hpp"

#include <charconv>
#include <cmath>

#include "tmlab/support/error.hpp"

namespace tmlab {

namespace {

BigInt pow10(long e) {
    BigInt r = 1;
    for (long i = 0; i < e; ++i) r *= 10;
    return r;
}

// Parses [sign]digits[.digits][e[sign]digits].
Rational parse_decimal(std::string_view s) {
    bool neg = false;
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) { neg = s[i] == '-'; ++i; }
    std::string digits;
    long frac = 0;
    bool seen_dot = false, any = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c >= '0' && c <= '9') { digits.push_back(c); any = true; if (seen_dot) ++frac; }
        else if (c == '.' && !seen_dot) seen_dot = true;
        else break;
    }
    if (!any) domain_error("bad-number", "cannot parse '" + std::string(s) + "'");
    long exp10 = 0;
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        auto tail = s.substr(i);
        if (!tail.empty() && tail[0] == '+') tail.remove_prefix(1);
        auto [p, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), exp10);
        if (ec != std::errc() || p != tail.data() + tail.size())
            domain_error("bad-number", "cannot parse exponent in '" + std::string(s) + "'");
        i = s.size();
    }
    if (i != s.size()) domain_error("bad-number", "trailing characters in '" + std::string(s) + "'");
    // a leading 0 would make the string constructor read octal
    auto nz = digits.find_first_not_of('0');
    BigInt mant(nz == std::string::npos ? std::string("0") : digits.substr(nz));
    long e = exp10 - frac;
    Rational q = e >= 0 ? Rational(mant * pow10(e)) : Rational(mant, pow10(-e));
    return neg ? Rational(-q) : q;
}

} // namespace

Rational decimal_rational(double x) {
    if (!std::isfinite(x)) domain_error("bad-number", "non-finite value");
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return parse_decimal(std::string_view(buf, p - buf));
}

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return parse_decimal(text);
    Rational num = parse_decimal(text.substr(0, slash));
    Rational den = parse_decimal(text.substr(slash + 1));
    if (den == 0) domain_error("bad-number", "zero denominator");
    return num / den;
}

std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

BigInt floor_rational(const Rational& q) {
    BigInt n = numerator(q), d = denominator(q);
    BigInt f = n / d;
    if (n < 0 && f * d != n) f -= 1;
    return f;
}

BigInt ceil_rational(const Rational& q) { return -floor_rational(-q); }

QComplex operator/(const QComplex& a, const QComplex& b) {
    Rational n = b.re * b.re + b.im * b.im;
    if (n == 0) numeric_error("division-by-zero", "exact complex division by zero");
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

std::string QComplex::str() const {
    if (im == 0) return to_string(re);
    return to_string(re) + (im < 0 ? "-" : "+") + to_string(abs(im)) + "i";
}

std::vector<QComplex> series_mul(const std::vector<QComplex>& a, const std::vector<QComplex>& b, std::size_t order) {
    std::vector<QComplex> c(order);
    for (std::size_t i = 0; i < a.size() && i < order; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size() && i + j < order; ++j)
            if (!b[j].is_zero()) c[i + j] += a[i] * b[j];
    }
    return c;
}

} // namespace tmlab
