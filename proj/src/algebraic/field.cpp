#include "tmlab/algebraic/field.hpp"

#include <algorithm>
#include <cmath>

#include "tmlab/support/error.hpp"

namespace tmlab::algebraic {

namespace {

int sgn(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

bool squarefree(long d) {
    long a = std::labs(d);
    for (long p = 2; p * p <= a; ++p)
        if (a % (p * p) == 0) return false;
    return true;
}

// max over the embeddings of |p1 + p2 omega_k|
double embed_max(const std::vector<Complex>& om, double p1, double p2) {
    double m = 0;
    for (auto w : om) m = std::max(m, std::abs(p1 + p2 * w));
    return m;
}

double edge_min(const std::vector<Complex>& om, bool first_fixed) {
    // convex along the edge, so golden-section search finds the minimum
    auto g = [&](double t) { return first_fixed ? embed_max(om, 1, t) : embed_max(om, t, 1); };
    double a = -1, b = 1;
    const double phi = 0.5 * (std::sqrt(5.0) - 1);
    for (int it = 0; it < 200; ++it) {
        double c = b - phi * (b - a), e = a + phi * (b - a);
        if (g(c) <= g(e)) b = e; else a = c;
    }
    return std::min({g(0.5 * (a + b)), g(-1), g(1)});
}

} // namespace

BigInt lcm(const BigInt& a, const BigInt& b) {
    if (a == 0 || b == 0) return 0;
    BigInt g = gcd(a, b);
    return abs(a / g * b);
}

int surd_sign(const Rational& x, const Rational& y, long d) {
    int sx = sgn(x), sy = sgn(y);
    if (sy == 0) return sx;
    if (sx == 0 || sx == sy) return sy;
    Rational lhs = x * x, rhs = y * y * d;
    if (lhs > rhs) return sx;
    if (lhs < rhs) return sy;
    return 0;
}

NumberField NumberField::rationals() { return NumberField(); }

NumberField NumberField::quadratic(long d) {
    if (d == 0 || d == 1 || !squarefree(d)) domain_error("bad-field", "d = " + std::to_string(d) + " is not a squarefree integer other than 0, 1");
    NumberField K;
    K.d_ = d;
    K.kind_ = d < 0 ? FieldKind::ImaginaryQuadratic : FieldKind::RealQuadratic;
    K.half_ = ((d % 4) + 4) % 4 == 1;
    double s = std::sqrt(std::fabs(double(d)));
    double a = K.half_ ? 0.5 : 0, b = K.half_ ? 0.5 * s : s;
    std::vector<Complex> om = d < 0 ? std::vector<Complex>{{a, b}, {a, -b}} : std::vector<Complex>{{a + b, 0}, {a - b, 0}};
    K.g2_ = 0;
    for (double p1 : {-1.0, 1.0})
        for (double p2 : {-1.0, 1.0}) K.g2_ = std::max(K.g2_, embed_max(om, p1, p2));
    K.g1_ = std::min(edge_min(om, true), edge_min(om, false));
    return K;
}

NumberField NumberField::parse(const std::string& name) {
    if (name == "Q" || name == "rational") return rationals();
    if (name == "Q(i)" || name == "gaussian") return quadratic(-1);
    auto num = [&](const std::string& s) {
        try {
            std::size_t pos = 0;
            long v = std::stol(s, &pos);
            if (pos != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            domain_error("bad-field", "cannot parse field '" + name + "'");
        }
    };
    if (name.rfind("quad:", 0) == 0) return quadratic(num(name.substr(5)));
    if (name.rfind("Q(sqrt", 0) == 0 && name.back() == ')') return quadratic(num(name.substr(6, name.size() - 7)));
    domain_error("bad-field", "unknown field '" + name + "' (use Q, Q(i), Q(sqrtD) or quad:D)");
}

NumberField NumberField::from_json(const nlohmann::json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "rational") return rationals();
    long d = j.at("d").get<long>();
    NumberField K = quadratic(d);
    if ((kind == "imaginary-quadratic") != (d < 0)) domain_error("bad-field", "kind does not match d");
    return K;
}

std::string NumberField::name() const {
    if (kind_ == FieldKind::Rational) return "Q";
    if (d_ == -1) return "Q(i)";
    return "Q(sqrt" + std::to_string(d_) + ")";
}

nlohmann::json NumberField::to_json() const {
    static const char* names[] = {"rational", "imaginary-quadratic", "real-quadratic"};
    nlohmann::json j{{"kind", names[static_cast<int>(kind_)]}, {"d", d_}};
    return j;
}

FieldElement::FieldElement(const NumberField& K, Rational x, Rational y) : K_(K), x_(std::move(x)), y_(std::move(y)) {
    if (K.kind() == FieldKind::Rational && y_ != 0) domain_error("bad-element", "Q has no sqrt part");
}

FieldElement FieldElement::from_coords(const NumberField& K, const std::vector<BigInt>& p, const BigInt& den) {
    if (static_cast<int>(p.size()) != K.degree()) domain_error("bad-element", "coordinate count must equal the degree");
    if (den <= 0) domain_error("bad-element", "denominator must be positive");
    Rational p1(p[0], den);
    if (K.degree() == 1) return {K, p1};
    Rational p2(p[1], den);
    if (K.half_omega()) return {K, p1 + p2 / 2, p2 / 2};
    return {K, p1, p2};
}

FieldElement FieldElement::from_json(const nlohmann::json& j) {
    NumberField K = NumberField::from_json(j.at("field"));
    std::vector<BigInt> p;
    for (const auto& c : j.at("coords")) p.emplace_back(c.get<std::string>());
    BigInt den = j.contains("den") ? BigInt(j.at("den").get<std::string>()) : BigInt(1);
    return from_coords(K, p, den);
}

namespace {

std::vector<Rational> rational_coords(const NumberField& K, const Rational& x, const Rational& y) {
    if (K.degree() == 1) return {x};
    if (K.half_omega()) return {x - y, 2 * y};
    return {x, y};
}

} // namespace

BigInt FieldElement::den() const {
    BigInt l = 1;
    for (const auto& q : rational_coords(K_, x_, y_)) l = lcm(l, denominator(q));
    return l;
}

std::vector<BigInt> FieldElement::coords() const {
    BigInt l = den();
    std::vector<BigInt> out;
    for (const auto& q : rational_coords(K_, x_, y_)) out.push_back(numerator(q) * (l / denominator(q)));
    return out;
}

Rational FieldElement::coord_norm() const {
    Rational m(0);
    for (const auto& q : rational_coords(K_, x_, y_)) m = std::max(m, Rational(abs(q)));
    return m;
}

MpReal FieldElement::house() const {
    switch (K_.kind()) {
    case FieldKind::Rational: return abs(MpReal(x_));
    case FieldKind::ImaginaryQuadratic: return sqrt(MpReal(x_ * x_ - y_ * y_ * K_.d()));
    default: return abs(MpReal(x_)) + abs(MpReal(y_)) * sqrt(MpReal(K_.d()));
    }
}

double FieldElement::house_d() const { return house().convert_to<double>(); }

bool FieldElement::house_le(const Rational& B) const {
    if (B < 0) return false;
    switch (K_.kind()) {
    case FieldKind::Rational: return abs(x_) <= B;
    case FieldKind::ImaginaryQuadratic: return x_ * x_ - y_ * y_ * K_.d() <= B * B;
    default: {
        Rational slack = B - abs(x_);
        return slack >= 0 && y_ * y_ * K_.d() <= slack * slack;
    }
    }
}

bool FieldElement::abs_le(const Rational& r) const {
    if (r < 0) return false;
    switch (K_.kind()) {
    case FieldKind::Rational: return abs(x_) <= r;
    case FieldKind::ImaginaryQuadratic: return x_ * x_ - y_ * y_ * K_.d() <= r * r;
    default: return surd_sign(x_ - r, y_, K_.d()) <= 0 && surd_sign(x_ + r, y_, K_.d()) >= 0;
    }
}

MpReal FieldElement::abs_mp() const {
    switch (K_.kind()) {
    case FieldKind::Rational: return abs(MpReal(x_));
    case FieldKind::ImaginaryQuadratic: return sqrt(MpReal(x_ * x_ - y_ * y_ * K_.d()));
    default: return abs(MpReal(x_) + MpReal(y_) * sqrt(MpReal(K_.d())));
    }
}

Complex FieldElement::embed() const {
    double x = to_double(x_), y = to_double(y_);
    switch (K_.kind()) {
    case FieldKind::Rational: return {x, 0};
    case FieldKind::ImaginaryQuadratic: return {x, y * std::sqrt(double(-K_.d()))};
    default: return {x + y * std::sqrt(double(K_.d())), 0};
    }
}

FieldElement FieldElement::conj() const { return {K_, x_, -y_}; }

std::vector<Complex> FieldElement::conjugates() const {
    if (K_.degree() == 1) return {embed()};
    return {embed(), conj().embed()};
}

namespace {
void same_field(const FieldElement& a, const FieldElement& b) {
    if (!(a.field() == b.field())) domain_error("field-mismatch", a.field().name() + " vs " + b.field().name());
}
} // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    same_field(a, b);
    return {a.K_, a.x_ + b.x_, a.y_ + b.y_};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    same_field(a, b);
    return {a.K_, a.x_ - b.x_, a.y_ - b.y_};
}

FieldElement operator-(const FieldElement& a) { return {a.K_, -a.x_, -a.y_}; }

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    same_field(a, b);
    return {a.K_, a.x_ * b.x_ + a.y_ * b.y_ * a.K_.d(), a.x_ * b.y_ + a.y_ * b.x_};
}

FieldElement operator*(const Rational& q, const FieldElement& a) { return {a.K_, q * a.x_, q * a.y_}; }

FieldElement FieldElement::pow(unsigned k) const {
    FieldElement out(K_, 1), b = *this;
    for (; k; k >>= 1) {
        if (k & 1) out *= b;
        b *= b;
    }
    return out;
}

std::string FieldElement::str() const {
    if (K_.degree() == 1 || y_ == 0) return to_string(x_);
    std::string unit = K_.d() == -1 ? "i" : "sqrt(" + std::to_string(K_.d()) + ")";
    std::string ys = y_ == 1 ? unit : (y_ == -1 ? "-" + unit : to_string(y_) + "*" + unit);
    if (x_ == 0) return ys;
    return to_string(x_) + (y_ > 0 ? " + " : " - ") + (y_ > 0 ? ys : ys.substr(1));
}

nlohmann::json FieldElement::to_json() const {
    auto c = nlohmann::json::array();
    for (const auto& p : coords()) c.push_back(p.str());
    return {{"field", K_.to_json()}, {"coords", c}, {"den", den().str()}};
}

} // namespace tmlab::algebraic
