#include "tmlab/extremal/polynomial.hpp"

#include <cmath>

#include "tmlab/support/error.hpp"
#include "tmlab/support/format.hpp"

namespace tmlab::extremal {

BivarPolynomial::BivarPolynomial(int degree) : degree_(degree), c_(count(degree)) {
    if (degree < 0) domain_error("bad-degree", "degree must be nonnegative");
}

BivarPolynomial::BivarPolynomial(int degree, std::vector<Complex> coeffs) : degree_(degree), c_(std::move(coeffs)) {
    if (degree < 0) domain_error("bad-degree", "degree must be nonnegative");
    if (c_.size() != count(degree)) domain_error("bad-polynomial", "coefficient count does not match degree");
}

BivarPolynomial BivarPolynomial::exact(int degree, std::vector<QComplex> coeffs) {
    std::vector<Complex> fl;
    for (const auto& q : coeffs) fl.push_back(q.to_complex());
    BivarPolynomial p(degree, fl);
    p.exact_ = std::move(coeffs);
    return p;
}

BivarPolynomial BivarPolynomial::monomial(int degree, int i, int j) {
    std::vector<QComplex> c(count(degree));
    c[index(i, j)] = QComplex(1);
    return exact(degree, c);
}

std::pair<int, int> BivarPolynomial::exponents(std::size_t idx) {
    int d = 0;
    while (static_cast<std::size_t>((d + 1) * (d + 2) / 2) <= idx) ++d;
    int j = static_cast<int>(idx) - d * (d + 1) / 2;
    return {d - j, j};
}

int BivarPolynomial::tight_degree() const {
    for (std::size_t k = c_.size(); k-- > 0;)
        if (c_[k] != Complex(0)) return exponents(k).first + exponents(k).second;
    return -1;
}

bool BivarPolynomial::is_zero() const { return tight_degree() < 0; }

void BivarPolynomial::set(int i, int j, Complex v) {
    c_[index(i, j)] = v;
    exact_.reset();
}

Complex BivarPolynomial::eval(Complex z, Complex w) const {
    // Horner in z for each power of w, then Horner in w.
    Complex acc = 0;
    for (int j = degree_; j >= 0; --j) {
        Complex inner = 0;
        for (int i = degree_ - j; i >= 0; --i) inner = inner * z + c_[index(i, j)];
        acc = acc * w + inner;
    }
    return acc;
}

Complex BivarPolynomial::dz(Complex z, Complex w) const {
    Complex acc = 0;
    for (int j = degree_; j >= 0; --j) {
        Complex inner = 0;
        for (int i = degree_ - j; i >= 1; --i) inner = inner * z + double(i) * c_[index(i, j)];
        acc = acc * w + inner;
    }
    return acc;
}

Complex BivarPolynomial::dw(Complex z, Complex w) const {
    Complex acc = 0;
    for (int j = degree_; j >= 1; --j) {
        Complex inner = 0;
        for (int i = degree_ - j; i >= 0; --i) inner = inner * z + c_[index(i, j)];
        acc = acc * w + double(j) * inner;
    }
    return acc;
}

double BivarPolynomial::coefficient_l2() const {
    double s = 0;
    for (auto c : c_) s += std::norm(c);
    return std::sqrt(s);
}

BivarPolynomial BivarPolynomial::scaled(double s) const {
    auto c = c_;
    for (auto& x : c) x *= s;
    return BivarPolynomial(degree_, c);
}

nlohmann::json BivarPolynomial::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t k = 0; k < c_.size(); ++k) {
        auto [i, j] = exponents(k);
        nlohmann::json e = {{"i", i}, {"j", j}, {"re", num_str(c_[k].real())}, {"im", num_str(c_[k].imag())}};
        if (exact_) e["exact"] = (*exact_)[k].str();
        arr.push_back(e);
    }
    return {{"degree", degree_}, {"coeffs", arr}, {"precision_digits", kOutputDigits}};
}

BivarPolynomial BivarPolynomial::from_json(const nlohmann::json& j) {
    try {
        int n = j.at("degree").get<int>();
        std::vector<Complex> c(count(n));
        std::vector<QComplex> q(count(n));
        bool all_exact = true;
        for (const auto& e : j.at("coeffs")) {
            int i = e.at("i").get<int>(), jj = e.at("j").get<int>();
            if (i < 0 || jj < 0 || i + jj > n) domain_error("file-format", "coefficient index out of range");
            c[index(i, jj)] = {num_from_json(e.at("re")), num_from_json(e.at("im"))};
            if (e.contains("exact")) {
                // "a", "a+bi" or "a-bi" with rational parts
                std::string s = e.at("exact").get<std::string>();
                QComplex v;
                if (!s.empty() && s.back() == 'i') {
                    auto pos = s.find_last_of("+-", s.size() - 2);
                    if (pos == 0 || pos == std::string::npos) domain_error("file-format", "bad exact coefficient " + s);
                    v = QComplex(parse_rational(s.substr(0, pos)), parse_rational(s.substr(pos, s.size() - 1 - pos)));
                } else {
                    v = QComplex(parse_rational(s));
                }
                q[index(i, jj)] = v;
            } else {
                all_exact = false;
            }
        }
        return all_exact ? exact(n, q) : BivarPolynomial(n, c);
    } catch (const nlohmann::json::exception& e) {
        domain_error("file-format", std::string("bad polynomial JSON: ") + e.what());
    }
}

} // namespace tmlab::extremal
