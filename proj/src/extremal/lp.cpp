#include "tmlab/extremal/lp.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "tmlab/support/error.hpp"

namespace tmlab::extremal {

namespace {

constexpr double kPivotTol = 1e-9;
constexpr double kFeasTol = 1e-10;
constexpr double kCostTol = 1e-10;
constexpr int kRefactor = 64;
constexpr int kStallLimit = 150;

struct Simplex {
    const Eigen::MatrixXd& A;  // M x m, column j of the dual is row j of A
    Eigen::VectorXd sign;      // row flips making the right-hand side nonnegative
    Eigen::VectorXd rhs;
    int m, M;
    std::vector<int> basis;  // index < M: structural, M + i: artificial on row i
    Eigen::MatrixXd binv;
    Eigen::VectorXd xb;
    Eigen::VectorXd row_norm;
    int iterations = 0;

    Simplex(const Eigen::MatrixXd& a, const Eigen::VectorXd& c) : A(a), m(int(a.cols())), M(int(a.rows())) {
        sign = Eigen::VectorXd::Ones(m);
        for (int i = 0; i < m; ++i)
            if (c(i) < 0) sign(i) = -1;
        rhs = sign.cwiseProduct(c);
        basis.resize(m);
        for (int i = 0; i < m; ++i) basis[i] = M + i;
        binv = Eigen::MatrixXd::Identity(m, m);
        xb = rhs;
        row_norm = A.rowwise().norm();
    }

    Eigen::VectorXd column(int j) const {
        if (j >= M) return Eigen::VectorXd::Unit(m, j - M);
        return sign.cwiseProduct(A.row(j).transpose());
    }

    void refactor() {
        Eigen::MatrixXd b(m, m);
        for (int i = 0; i < m; ++i) b.col(i) = column(basis[i]);
        Eigen::PartialPivLU<Eigen::MatrixXd> lu(b);
        binv = lu.inverse();
        xb = binv * rhs;
        for (int i = 0; i < m; ++i)
            if (xb(i) < 0 && xb(i) > -1e-9) xb(i) = 0;
    }

    double cost(int j, bool phase1) const {
        if (j >= M) return phase1 ? 1.0 : 0.0;
        return phase1 ? 0.0 : 1.0;
    }

    double objective(bool phase1) const {
        double s = 0;
        for (int i = 0; i < m; ++i) s += cost(basis[i], phase1) * xb(i);
        return s;
    }

    void pivot(int p, int q, const Eigen::VectorXd& u) {
        double theta = xb(p) / u(p);
        xb -= theta * u;
        xb(p) = theta;
        Eigen::RowVectorXd prow = binv.row(p) / u(p);
        for (int i = 0; i < m; ++i)
            if (i != p && u(i) != 0) binv.row(i) -= u(i) * prow;
        binv.row(p) = prow;
        basis[p] = q;
        if (++iterations % kRefactor == 0) refactor();
    }

    // Returns false when the iteration budget runs out.
    bool run(bool phase1, int max_iterations) {
        std::vector<char> in_basis(M + m, 0);
        int stall = 0;
        double last = objective(phase1);
        while (iterations < max_iterations) {
            std::fill(in_basis.begin(), in_basis.end(), 0);
            for (int b : basis) in_basis[b] = 1;
            Eigen::VectorXd cb(m);
            for (int i = 0; i < m; ++i) cb(i) = cost(basis[i], phase1);
            Eigen::VectorXd pi = binv.transpose() * cb;
            Eigen::VectorXd d = Eigen::VectorXd::Constant(M, phase1 ? 0.0 : 1.0) - A * sign.cwiseProduct(pi);
            bool bland = stall > kStallLimit;
            int q = -1;
            double best = 0;
            for (int j = 0; j < M; ++j) {
                if (in_basis[j] || d(j) >= -kCostTol) continue;
                if (bland) { q = j; break; }
                double score = d(j) / std::max(row_norm(j), 1e-300);
                if (score < best) { best = score; q = j; }
            }
            if (phase1 && q < 0) {
                // artificial columns may also re-enter in phase 1
                for (int i = 0; i < m && q < 0; ++i)
                    if (!in_basis[M + i] && 1.0 - pi(i) < -kCostTol) q = M + i;
            }
            if (q < 0) return true;
            Eigen::VectorXd u = binv * column(q);
            // Harris two-pass ratio test
            double tmax = std::numeric_limits<double>::infinity();
            for (int i = 0; i < m; ++i)
                if (u(i) > kPivotTol) tmax = std::min(tmax, (xb(i) + kFeasTol) / u(i));
            if (!std::isfinite(tmax)) numeric_error("solver-unbounded", "dual ray: primal program infeasible");
            int p = -1;
            double piv = 0;
            for (int i = 0; i < m; ++i) {
                if (u(i) <= kPivotTol || xb(i) / u(i) > tmax) continue;
                bool take = bland ? (p < 0 || basis[i] < basis[p]) : u(i) > piv;
                if (take) { p = i; piv = u(i); }
            }
            if (xb(p) < 0) xb(p) = 0;
            pivot(p, q, u);
            double now = objective(phase1);
            if (now < last - 1e-12 * std::max(1.0, std::abs(last))) {
                stall = 0;
                last = now;
            } else {
                ++stall;
            }
        }
        return false;
    }
};

} // namespace

LpResult solve_lp(const Eigen::MatrixXd& A, const Eigen::VectorXd& c, int max_iterations) {
    if (A.cols() != c.size()) domain_error("dimension-mismatch", "objective and constraint widths differ");
    Simplex s(A, c);
    const int m = s.m, M = s.M;
    if (!s.run(true, max_iterations)) numeric_error("solver-nonconvergence", "phase 1 iteration budget exhausted");
    s.refactor();
    double infeas = s.objective(true);
    if (infeas > 1e-7 * std::max(1.0, s.rhs.lpNorm<1>()))
        numeric_error("solver-infeasible", "objective not in the dual cone: primal program unbounded");
    // Drive basic artificials out where a structural column can replace them.
    for (int p = 0; p < m; ++p) {
        if (s.basis[p] < M) continue;
        Eigen::RowVectorXd row = s.binv.row(p);
        Eigen::VectorXd alpha = A * s.sign.cwiseProduct(row.transpose());
        int q = -1;
        double best = 1e-7;
        for (int j = 0; j < M; ++j) {
            if (std::abs(alpha(j)) <= best) continue;
            if (std::find(s.basis.begin(), s.basis.end(), j) != s.basis.end()) continue;
            best = std::abs(alpha(j));
            q = j;
        }
        if (q < 0) continue;  // redundant row
        s.xb(p) = 0;
        s.pivot(p, q, s.binv * s.column(q));
    }
    s.refactor();
    if (!s.run(false, max_iterations)) numeric_error("solver-nonconvergence", "phase 2 iteration budget exhausted");
    s.refactor();

    LpResult out;
    Eigen::VectorXd cb(m);
    for (int i = 0; i < m; ++i) cb(i) = s.cost(s.basis[i], false);
    out.x = s.sign.cwiseProduct(s.binv.transpose() * cb);
    out.y = Eigen::VectorXd::Zero(M);
    for (int i = 0; i < m; ++i)
        if (s.basis[i] < M) out.y(s.basis[i]) = std::max(0.0, s.xb(i));
    out.value = c.dot(out.x);
    out.dual_value = out.y.sum();
    out.max_violation = (A * out.x).maxCoeff() - 1;
    out.iterations = s.iterations;
    return out;
}

} // namespace tmlab::extremal
