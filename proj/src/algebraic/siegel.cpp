#include "tmlab/algebraic/siegel.hpp"

#include <algorithm>
#include <cmath>

#include "tmlab/support/error.hpp"
#include "tmlab/support/format.hpp"

namespace tmlab::algebraic {

IntMatrix integer_kernel(const IntMatrix& M, std::size_t ncols) {
    std::size_t m = M.size();
    for (const auto& row : M)
        if (row.size() != ncols) domain_error("bad-matrix", "ragged matrix");
    // row i of the work matrix: (column i of M | e_i)
    IntMatrix W(ncols, IntVector(m + ncols, 0));
    for (std::size_t i = 0; i < ncols; ++i) {
        for (std::size_t r = 0; r < m; ++r) W[i][r] = M[r][i];
        W[i][m + i] = 1;
    }
    std::size_t pr = 0;
    for (std::size_t c = 0; c < m && pr < ncols; ++c) {
        for (;;) {
            std::size_t best = ncols;
            for (std::size_t i = pr; i < ncols; ++i)
                if (W[i][c] != 0 && (best == ncols || abs(W[i][c]) < abs(W[best][c]))) best = i;
            if (best == ncols) break;
            std::swap(W[pr], W[best]);
            bool done = true;
            for (std::size_t i = pr + 1; i < ncols; ++i) {
                if (W[i][c] == 0) continue;
                BigInt q = W[i][c] / W[pr][c];
                for (std::size_t k = c; k < m + ncols; ++k) W[i][k] -= q * W[pr][k];
                if (W[i][c] != 0) done = false;
            }
            if (done) {
                ++pr;
                break;
            }
        }
    }
    IntMatrix ker;
    for (std::size_t i = pr; i < ncols; ++i) ker.emplace_back(W[i].begin() + static_cast<long>(m), W[i].end());
    return ker;
}

namespace {

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

BigInt round_rational(const Rational& q) { return floor_rational(q + Rational(1, 2)); }

struct Gso {
    std::vector<std::vector<Rational>> bstar;
    std::vector<Rational> B;
    std::vector<std::vector<Rational>> mu;

    void recompute(const IntMatrix& b, std::size_t from) {
        std::size_t n = b.size();
        bstar.resize(n);
        B.resize(n);
        mu.resize(n, std::vector<Rational>(n));
        for (std::size_t i = from; i < n; ++i) {
            std::vector<Rational> bi(b[i].begin(), b[i].end());
            bstar[i] = bi;
            for (std::size_t j = 0; j < i; ++j) {
                mu[i][j] = B[j] == 0 ? Rational(0) : dot(bi, bstar[j]) / B[j];
                for (std::size_t t = 0; t < bi.size(); ++t) bstar[i][t] -= mu[i][j] * bstar[j][t];
            }
            B[i] = dot(bstar[i], bstar[i]);
        }
    }
};

} // namespace

IntMatrix lll_reduce(IntMatrix b, const Rational& delta) {
    std::size_t n = b.size();
    if (n < 2) return b;
    Gso g;
    g.recompute(b, 0);
    auto reduce = [&](std::size_t k, std::size_t l) {
        if (abs(g.mu[k][l]) * 2 <= 1) return;
        BigInt q = round_rational(g.mu[k][l]);
        for (std::size_t t = 0; t < b[k].size(); ++t) b[k][t] -= q * b[l][t];
        for (std::size_t j = 0; j < l; ++j) g.mu[k][j] -= Rational(q) * g.mu[l][j];
        g.mu[k][l] -= Rational(q);
    };
    std::size_t k = 1;
    while (k < n) {
        reduce(k, k - 1);
        if (g.B[k] < (delta - g.mu[k][k - 1] * g.mu[k][k - 1]) * g.B[k - 1]) {
            std::swap(b[k], b[k - 1]);
            g.recompute(b, k - 1);
            k = std::max<std::size_t>(k - 1, 1);
            continue;
        }
        for (std::size_t l = k - 1; l-- > 0;) reduce(k, l);
        ++k;
    }
    return b;
}

double siegel_constant(const NumberField& K) { return K.degree() * K.gamma2() / K.gamma1(); }

nlohmann::json SiegelSolution::to_json() const {
    auto cs = nlohmann::json::array();
    for (const auto& x : c) cs.push_back(x.to_json());
    return {{"coefficients", cs},           {"height", num_json(height)}, {"bound", num_json(bound)},
            {"C1", num_json(C1)},           {"C2", num_json(C2)},         {"entry_house", num_json(entry_house)},
            {"nu", nu},                     {"N", N},                     {"kernel_rank", kernel_rank},
            {"verified", verified}};
}

SiegelSolution siegel_solve(const SiegelProblem& pb) {
    const NumberField& K = pb.K;
    std::size_t nu = pb.rows.size();
    if (nu == 0) domain_error("bad-system", "no equations");
    std::size_t N = pb.rows[0].size();
    if (!(nu < N)) domain_error("precondition", "need nu < N (nu = " + std::to_string(nu) + ", N = " + std::to_string(N) + ")");
    MpReal E(1);
    for (const auto& row : pb.rows) {
        if (row.size() != N) domain_error("bad-system", "ragged system");
        for (const auto& a : row) {
            if (!(a.field() == K)) domain_error("field-mismatch", "entry outside " + K.name());
            if (!a.is_integral()) domain_error("bad-system", "entries must be algebraic integers, got " + a.str());
            E = std::max(E, a.house());
        }
    }
    int s = K.degree();
    std::vector<FieldElement> basis;
    basis.emplace_back(K, 1);
    if (s == 2) basis.push_back(FieldElement::from_coords(K, {BigInt(0), BigInt(1)}));

    // x_{u,t} is the coordinate of c_u on omega_t; each equation gives one integer condition per coordinate
    IntMatrix M(nu * s, IntVector(N * s, 0));
    for (std::size_t e = 0; e < nu; ++e)
        for (std::size_t u = 0; u < N; ++u)
            for (int t = 0; t < s; ++t) {
                auto co = (pb.rows[e][u] * basis[t]).coords();
                for (int r = 0; r < s; ++r) M[e * s + r][u * s + t] = co[r];
            }
    IntMatrix ker = lll_reduce(integer_kernel(M, N * s));
    if (ker.empty()) numeric_error("no-kernel", "integer kernel is trivial");

    SiegelSolution sol;
    sol.nu = nu;
    sol.N = N;
    sol.kernel_rank = ker.size();
    sol.C1 = sol.C2 = siegel_constant(K);
    sol.entry_house = pb.entry_house ? *pb.entry_house : E.convert_to<double>();
    double expo = double(nu) / double(N - nu);
    sol.bound = pb.target ? *pb.target : sol.C1 * std::pow(sol.C2 * double(N) * sol.entry_house, expo);

    std::optional<MpReal> best_h;
    const IntVector* best = nullptr;
    for (const auto& v : ker) {
        if (std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x == 0; })) continue;
        MpReal h(0);
        for (std::size_t u = 0; u < N; ++u) {
            std::vector<BigInt> p(v.begin() + static_cast<long>(u * s), v.begin() + static_cast<long>((u + 1) * s));
            h = std::max(h, FieldElement::from_coords(K, p).house());
        }
        if (!best_h || h < *best_h || (h == *best_h && v < *best)) {
            best_h = h;
            best = &v;
        }
    }
    for (std::size_t u = 0; u < N; ++u) {
        std::vector<BigInt> p(best->begin() + static_cast<long>(u * s), best->begin() + static_cast<long>((u + 1) * s));
        sol.c.push_back(FieldElement::from_coords(K, p));
    }
    sol.height = best_h->convert_to<double>();
    sol.verified = true;
    for (const auto& row : pb.rows) {
        FieldElement acc(K, 0);
        for (std::size_t u = 0; u < N; ++u) acc += row[u] * sol.c[u];
        sol.verified = sol.verified && acc.is_zero();
    }
    if (!sol.verified) certificate_error("siegel-not-exact", "reduced kernel vector fails an equation");
    if (sol.height > sol.bound * (1 + 1e-12))
        certificate_error("no-solution-within-bound",
                          "height " + num_str(sol.height) + " exceeds " + num_str(sol.bound) + "; C1 would need to be at least " +
                              num_str(sol.C1 * sol.height / sol.bound));
    return sol;
}

} // namespace tmlab::algebraic
