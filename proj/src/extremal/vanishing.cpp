#include "tmlab/extremal/vanishing.hpp"

#include <Eigen/Dense>

#include "tmlab/extremal/composed.hpp"
#include "tmlab/support/error.hpp"

namespace tmlab::extremal {

namespace {

BigInt lcm_big(const BigInt& a, const BigInt& b) { return a / gcd(a, b) * b; }

// Rows k = 0..N-2: coefficient k of z^i f^j.
template <class T>
std::vector<std::vector<T>> coefficient_matrix(const std::vector<T>& fser, int n) {
    std::size_t cols = BivarPolynomial::count(n), rows = cols - 1;
    std::vector<std::vector<T>> m(rows, std::vector<T>(cols));
    std::vector<T> power(rows);
    power[0] = T(1);
    for (int j = 0; j <= n; ++j) {
        if (j > 0) {
            std::vector<T> next(rows);
            for (std::size_t a = 0; a < rows; ++a) {
                if (power[a] == T()) continue;
                for (std::size_t b = 0; a + b < rows && b < fser.size(); ++b) next[a + b] += power[a] * fser[b];
            }
            power = next;
        }
        for (int i = 0; i + j <= n; ++i) {
            std::size_t col = BivarPolynomial::index(i, j);
            for (std::size_t k = i; k < rows; ++k) m[k][col] = power[k - i];
        }
    }
    return m;
}

} // namespace

BivarPolynomial vanishing_from_taylor_exact(const std::vector<QComplex>& fser, int n) {
    if (n < 1) domain_error("bad-degree", "n must be at least 1");
    auto a = coefficient_matrix(fser, n);
    std::size_t rows = a.size(), cols = rows + 1;
    // Scale rows to Gaussian integers.
    for (auto& row : a) {
        BigInt l = 1;
        for (const auto& e : row) l = lcm_big(l, lcm_big(denominator(e.re), denominator(e.im)));
        QComplex s{Rational(l)};
        for (auto& e : row) e *= s;
    }
    // Fraction-free (Bareiss) elimination with column skipping.
    QComplex prev(1);
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
            a[i][c] = QComplex();
        }
        prev = a[r][c];
        pivots.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::size_t free_col = 0;
    while (free_col < cols && is_pivot[free_col]) ++free_col;
    if (free_col == cols) numeric_error("rank-deficiency-anomaly", "null space is trivial");
    std::vector<QComplex> x(cols);
    x[free_col] = QComplex(1);
    for (std::size_t k = pivots.size(); k-- > 0;) {
        std::size_t pc = pivots[k];
        QComplex s;
        for (std::size_t j = pc + 1; j < cols; ++j)
            if (!x[j].is_zero() && !a[k][j].is_zero()) s += a[k][j] * x[j];
        x[pc] = -s / a[k][pc];
    }
    // Primitive integral representative, last nonzero coefficient with positive real part.
    BigInt l = 1;
    for (const auto& e : x) l = lcm_big(l, lcm_big(denominator(e.re), denominator(e.im)));
    BigInt g = 0;
    for (auto& e : x) {
        e *= QComplex(Rational(l));
        g = gcd(g, gcd(numerator(e.re), numerator(e.im)));
    }
    if (g == 0) numeric_error("rank-deficiency-anomaly", "zero null vector");
    QComplex scale{Rational(BigInt(1), g)};
    for (std::size_t k = cols; k-- > 0;)
        if (!x[k].is_zero()) {
            if (x[k].re < 0 || (x[k].re == 0 && x[k].im < 0)) scale = -scale;
            break;
        }
    for (auto& e : x) e *= scale;
    return BivarPolynomial::exact(n, x);
}

BivarPolynomial vanishing_from_taylor(const std::vector<Complex>& fser, int n) {
    if (n < 1) domain_error("bad-degree", "n must be at least 1");
    auto a = coefficient_matrix(fser, n);
    std::size_t rows = a.size(), cols = rows + 1;
    Eigen::MatrixXcd m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = a[i][j];
    // Column scaling keeps the SVD well conditioned when powers of f have very different sizes.
    Eigen::VectorXd colscale(cols);
    for (std::size_t j = 0; j < cols; ++j) {
        double s = m.col(j).norm();
        colscale(j) = s > 0 ? 1 / s : 1;
        m.col(j) *= colscale(j);
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeFullV);
    Eigen::VectorXcd v = svd.matrixV().col(cols - 1);
    std::vector<Complex> c(cols);
    double top = 0;
    for (std::size_t j = 0; j < cols; ++j) {
        c[j] = v(j) * colscale(j);
        top = std::max(top, std::abs(c[j]));
    }
    for (auto& x : c) x /= top;
    return BivarPolynomial(n, c);
}

VanishingResult vanishing_polynomial(const core::EntireFunction& f, int n) {
    if (n < 1) domain_error("bad-degree", "n must be at least 1");
    std::size_t big_n = BivarPolynomial::count(n);
    VanishingResult out;
    out.guaranteed_order = static_cast<int>(big_n) - 1;
    if (auto ex = f.taylor_exact(big_n - 1)) {
        out.poly = vanishing_from_taylor_exact(*ex, n);
        out.exact = true;
        ComposedFunction cf(out.poly, f, big_n + 40);
        out.verified_order = cf.exact_vanishing_order();
        if (out.verified_order < out.guaranteed_order)
            certificate_error("vanishing-failure", "exact vanishing order below (n^2+3n)/2");
    } else {
        out.poly = vanishing_from_taylor(f.taylor(big_n - 1), n);
    }
    return out;
}

BivarPolynomial zeta_reduction(const BivarPolynomial& p) {
    int n = p.degree();
    BivarPolynomial q(2 * n);
    // (z-1)^{n-j} expanded by the binomial theorem
    for (int j = 0; j <= n; ++j)
        for (int i = 0; i + j <= n; ++i) {
            Complex c = p.coeff(i, j);
            if (c == Complex(0)) continue;
            int e = n - j;
            double binom = 1;
            for (int t = 0; t <= e; ++t) {
                double sign = ((e - t) % 2) ? -1.0 : 1.0;
                Complex old = q.coeff(i + t, j);
                q.set(i + t, j, old + c * binom * sign);
                binom = binom * (e - t) / (t + 1);
            }
        }
    return q;
}

} // namespace tmlab::extremal
