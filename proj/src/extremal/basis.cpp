#include "tmlab/extremal/basis.hpp"

#include <cmath>

#include "tmlab/support/error.hpp"

namespace tmlab::extremal {

namespace {

MpComplex mp_point(Complex z) { return MpComplex(z); }

MpComplex mul_conj(const MpComplex& a, const MpComplex& b) {  // conj(a) * b
    return {a.re * b.re + a.im * b.im, a.re * b.im - a.im * b.re};
}

} // namespace

GraphBasis::GraphBasis(const core::EntireFunction& f, int n, int grid)
    : f_(f), n_(n), grid_(grid), count_(BivarPolynomial::count(n)) {
    if (n < 0) domain_error("bad-degree", "degree must be nonnegative");
    if (static_cast<std::size_t>(grid) < 2 * count_) domain_error("bad-grid", "circle grid too small for the degree");
    if (auto ex = f_.taylor_exact(64)) {
        exact_f_ = true;
        for (const auto& q : *ex) taylor_.emplace_back(q);
    }
    // Columns g_k(zeta_m), then modified Gram-Schmidt with one reorthogonalization pass.
    std::vector<std::vector<MpComplex>> q(count_, std::vector<MpComplex>(grid_));
    const MpReal two_pi = 2 * mp_pi();
    for (int m = 0; m < grid_; ++m) {
        MpComplex z = mp_polar(MpReal(1), two_pi * m / grid_);
        Complex zd = z.to_complex();
        auto g = monomials(zd, f_value(zd));
        for (std::size_t k = 0; k < count_; ++k) q[k][m] = g[k];
    }
    std::vector<std::vector<MpComplex>> r(count_, std::vector<MpComplex>(count_));
    const MpReal inv_k = MpReal(1) / grid_;
    for (std::size_t k = 0; k < count_; ++k) {
        for (int pass = 0; pass < 2; ++pass)
            for (std::size_t j = 0; j < k; ++j) {
                MpComplex dot;
                for (int m = 0; m < grid_; ++m) dot += mul_conj(q[j][m], q[k][m]);
                dot = dot * inv_k;
                for (int m = 0; m < grid_; ++m) q[k][m] -= q[j][m] * dot;
                r[j][k] += dot;
            }
        MpReal nrm;
        for (int m = 0; m < grid_; ++m) nrm += q[k][m].norm();
        nrm = sqrt(nrm * inv_k);
        if (nrm == 0) numeric_error("rank-deficiency-anomaly", "graph monomials dependent on the circle grid");
        r[k][k] = MpComplex(nrm);
        MpReal inv = 1 / nrm;
        for (int m = 0; m < grid_; ++m) q[k][m] = q[k][m] * inv;
    }
    // R^{-1} by back substitution, column by column.
    rinv_.assign(count_, std::vector<MpComplex>(count_));
    for (std::size_t k = 0; k < count_; ++k) {
        rinv_[k][k] = MpComplex(MpReal(1) / r[k][k].re);
        for (std::size_t i = k; i-- > 0;) {
            MpComplex s;
            for (std::size_t j = i + 1; j <= k; ++j) s += r[i][j] * rinv_[j][k];
            rinv_[i][k] = MpComplex(MpReal(0)) - s * (MpReal(1) / r[i][i].re);
        }
    }
    nodes_.resize(grid_, count_);
    for (int m = 0; m < grid_; ++m)
        for (std::size_t k = 0; k < count_; ++k) nodes_(m, k) = q[k][m].to_complex();
}

int GraphBasis::terms_for(double r) const {
    auto it = terms_.find(r);
    if (it != terms_.end()) return it->second;
    std::size_t t = 16;
    while (f_.tail_bound(t, r) > 1e-95 && t < 20000) t += 8;
    if (t > taylor_.size()) {
        auto ex = f_.taylor_exact(t + 64);
        taylor_.clear();
        for (const auto& q : *ex) taylor_.emplace_back(q);
    }
    terms_[r] = static_cast<int>(t);
    return static_cast<int>(t);
}

MpComplex GraphBasis::f_value(Complex z) const {
    if (!exact_f_) return MpComplex(f_.eval(z));
    std::lock_guard<std::mutex> lock(mutex_);
    int t = terms_for(std::abs(z));
    MpComplex zz = mp_point(z), s;
    for (int k = t; k-- > 0;) s = s * zz + taylor_[k];
    return s;
}

std::vector<MpComplex> GraphBasis::monomials(Complex z, const MpComplex& w) const {
    std::vector<MpComplex> g(count_);
    MpComplex zz = mp_point(z);
    std::vector<MpComplex> zp(n_ + 1), wp(n_ + 1);
    zp[0] = wp[0] = MpComplex(MpReal(1));
    for (int i = 1; i <= n_; ++i) {
        zp[i] = zp[i - 1] * zz;
        wp[i] = wp[i - 1] * w;
    }
    for (int j = 0; j <= n_; ++j)
        for (int i = 0; i + j <= n_; ++i) g[BivarPolynomial::index(i, j)] = zp[i] * wp[j];
    return g;
}

Eigen::VectorXcd GraphBasis::transform(const std::vector<MpComplex>& g) const {
    Eigen::VectorXcd out(count_);
    for (std::size_t k = 0; k < count_; ++k) {
        MpComplex s;
        for (std::size_t l = 0; l <= k; ++l) s += g[l] * rinv_[l][k];
        out(k) = s.to_complex();
    }
    return out;
}

Eigen::VectorXcd GraphBasis::values(Complex z) const { return transform(monomials(z, f_value(z))); }

Eigen::VectorXcd GraphBasis::torus_values(Complex z, Complex w) const { return transform(monomials(z, mp_point(w))); }

std::vector<MpComplex> GraphBasis::monomial_coeffs(const Eigen::VectorXcd& a) const {
    std::vector<MpComplex> c(count_);
    for (std::size_t k = 0; k < count_; ++k) {
        if (a(k) == Complex(0)) continue;
        MpComplex ak(a(k));
        for (std::size_t l = 0; l <= k; ++l) c[l] += rinv_[l][k] * ak;
    }
    return c;
}

MpComplex GraphBasis::eval_torus(const std::vector<MpComplex>& c, Complex z, Complex w) const {
    return eval_torus_mp(c, z, mp_point(w));
}

MpComplex GraphBasis::eval(const std::vector<MpComplex>& c, Complex z) const {
    return eval_torus_mp(c, z, f_value(z));
}

MpComplex GraphBasis::eval_torus_mp(const std::vector<MpComplex>& c, Complex z, const MpComplex& w) const {
    MpComplex zz = mp_point(z), out;
    for (int j = n_; j >= 0; --j) {
        MpComplex inner;
        for (int i = n_ - j; i >= 0; --i) inner = inner * zz + c[BivarPolynomial::index(i, j)];
        out = out * w + inner;
    }
    return out;
}

BivarPolynomial GraphBasis::to_polynomial(const std::vector<MpComplex>& c, const MpReal& scale) const {
    std::vector<Complex> d(count_);
    for (std::size_t k = 0; k < count_; ++k) d[k] = (c[k] * scale).to_complex();
    return BivarPolynomial(n_, std::move(d));
}

} // namespace tmlab::extremal
