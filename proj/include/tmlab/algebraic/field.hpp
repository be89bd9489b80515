#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tmlab/support/exact.hpp"
#include "tmlab/support/mp.hpp"

namespace tmlab::algebraic {

enum class FieldKind { Rational, ImaginaryQuadratic, RealQuadratic };

// Q or Q(sqrt d) with d squarefree. Integral basis (1, omega), omega = sqrt d, or (1 + sqrt d)/2 when d = 1 mod 4.
class NumberField {
public:
    static NumberField rationals();
    static NumberField quadratic(long d);
    // "Q", "Q(i)", "Q(sqrt-3)", "quad:5"
    static NumberField parse(const std::string& name);
    static NumberField from_json(const nlohmann::json& j);

    FieldKind kind() const { return kind_; }
    long d() const { return d_; }
    int degree() const { return kind_ == FieldKind::Rational ? 1 : 2; }
    bool is_real() const { return kind_ != FieldKind::ImaginaryQuadratic; }
    bool half_omega() const { return half_; }
    // gamma1 |||z||| <= ||z|| <= gamma2 |||z|||
    double gamma1() const { return g1_; }
    double gamma2() const { return g2_; }
    std::string name() const;
    nlohmann::json to_json() const;

    friend bool operator==(const NumberField& a, const NumberField& b) { return a.d_ == b.d_ && a.kind_ == b.kind_; }

private:
    FieldKind kind_ = FieldKind::Rational;
    long d_ = 1;
    bool half_ = false;
    double g1_ = 1, g2_ = 1;
};

// x + y sqrt(d) with rational x, y (y = 0 over Q).
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(const NumberField& K, Rational x, Rational y = Rational(0));
    // (sum p_i omega_i) / den
    static FieldElement from_coords(const NumberField& K, const std::vector<BigInt>& p, const BigInt& den = 1);
    static FieldElement from_json(const nlohmann::json& j);

    const NumberField& field() const { return K_; }
    const Rational& x() const { return x_; }
    const Rational& y() const { return y_; }

    // Integer coordinates over the integral basis and the reduced denominator: the least d with d z integral.
    std::vector<BigInt> coords() const;
    BigInt den() const;
    bool is_integral() const { return den() == 1; }
    bool is_zero() const { return x_ == 0 && y_ == 0; }

    MpReal house() const;          // max |conjugate|
    double house_d() const;
    bool house_le(const Rational& bound) const;  // exact
    Rational coord_norm() const;   // max |coordinate|, rational in general
    Complex embed() const;         // identity embedding into C
    std::vector<Complex> conjugates() const;
    bool abs_le(const Rational& r) const;  // |embed| <= r, exact
    MpReal abs_mp() const;
    FieldElement conj() const;     // Galois conjugate

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const Rational& q, const FieldElement& a);
    FieldElement& operator+=(const FieldElement& b) { return *this = *this + b; }
    FieldElement& operator*=(const FieldElement& b) { return *this = *this * b; }
    friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.x_ == b.x_ && a.y_ == b.y_; }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }
    FieldElement pow(unsigned k) const;

    std::string str() const;
    nlohmann::json to_json() const;

private:
    NumberField K_;
    Rational x_{0}, y_{0};
};

// sign of x + y sqrt(d) for d > 0
int surd_sign(const Rational& x, const Rational& y, long d);

BigInt lcm(const BigInt& a, const BigInt& b);

} // namespace tmlab::algebraic
