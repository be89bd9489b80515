#include "tmlab/extremal/solver.hpp"

#include <cmath>
#include <optional>

#include "tmlab/extremal/basis.hpp"
#include "tmlab/extremal/lp.hpp"
#include "tmlab/extremal/vanishing.hpp"
#include "tmlab/support/error.hpp"
#include "tmlab/support/format.hpp"
#include "tmlab/support/parallel.hpp"

namespace tmlab::extremal {

namespace {

struct Target {
    Complex z, w;
    Eigen::VectorXcd o;  // objective functional in the orthonormal basis
};

struct LpPick {
    double value = -1;
    std::size_t target = 0;
    double phase = 0;
    Eigen::VectorXcd a;
};

struct Candidate {
    std::string source;
    std::vector<MpComplex> coeffs;
    double log_num = 0;
    Complex z0{0}, w0{0};
    double phase = 0;
    int order = 0;  // known vanishing order at 0
};

struct Certificate {
    double sup_coarse = 0, sup_fine = 0, lipschitz = 0, delta = 0;
    double bound() const { return sup_fine + lipschitz; }
};

int default_grid(int n, const ExtremalOptions& opt) { return opt.circle_grid ? opt.circle_grid : 8 * (n + 1) * (n + 1); }

bool real_symmetric(const core::EntireFunction& f) {
    for (Complex c : f.taylor(32))
        if (c.imag() != 0) return false;
    return true;
}

Eigen::MatrixXd constraint_matrix(const Eigen::MatrixXcd& nodes, int phases) {
    const Eigen::Index k = nodes.rows(), n = nodes.cols();
    Eigen::MatrixXd a(k * phases, 2 * n);
    for (Eigen::Index m = 0; m < k; ++m)
        for (int j = 0; j < phases; ++j) {
            Complex rot = std::polar(1.0, 2 * kPi * j / phases);
            for (Eigen::Index c = 0; c < n; ++c) {
                Complex e = rot * nodes(m, c);
                a(m * phases + j, c) = e.real();
                a(m * phases + j, n + c) = -e.imag();
            }
        }
    return a;
}

LpPick solve_targets(const Eigen::MatrixXd& a, const std::vector<Target>& targets, const ExtremalOptions& opt) {
    const int ph = std::max(1, opt.objective_phases);
    const std::size_t tasks = targets.size() * ph;
    std::vector<LpPick> res(tasks);
    parallel_for(
        tasks,
        [&](std::size_t t) {
            const Target& tg = targets[t / ph];
            double phase = 2 * kPi / opt.phase_grid * static_cast<double>(t % ph) / ph;
            Complex rot = std::polar(1.0, phase);
            const Eigen::Index n = tg.o.size();
            Eigen::VectorXd c(2 * n);
            for (Eigen::Index k = 0; k < n; ++k) {
                Complex e = rot * tg.o(k);
                c(k) = e.real();
                c(n + k) = -e.imag();
            }
            double s = c.cwiseAbs().maxCoeff();
            if (s == 0) {
                res[t] = {0, t / ph, phase, Eigen::VectorXcd::Zero(n)};
                return;
            }
            LpResult lp = solve_lp(a, c / s);
            Eigen::VectorXcd x(n);
            for (Eigen::Index k = 0; k < n; ++k) x(k) = Complex(lp.x(k), lp.x(n + k));
            res[t] = {lp.value * s, t / ph, phase, x};
        },
        opt.workers);
    LpPick best = res[0];
    for (std::size_t t = 1; t < tasks; ++t)
        if (res[t].value > best.value * (1 + 1e-9)) best = res[t];
    return best;
}

double mp_abs(const MpComplex& z) { return z.abs().convert_to<double>(); }

Certificate certify(const GraphBasis& basis, const std::vector<MpComplex>& c, int fine_factor) {
    Certificate out;
    const int k = basis.grid(), fine = k * fine_factor;
    for (int m = 0; m < fine; ++m) {
        double v = mp_abs(basis.eval(c, std::polar(1.0, 2 * kPi * m / fine)));
        out.sup_fine = std::max(out.sup_fine, v);
        if (m % fine_factor == 0) out.sup_coarse = std::max(out.sup_coarse, v);
    }
    // Between refined nodes |F| grows by at most (h/2) max|F'|, and Cauchy on a disk of
    // radius delta gives max|F'| <= M(1 + delta)/delta; the sampled M is doubled for safety.
    const double h = 2 * kPi / fine;
    out.lipschitz = INFINITY;
    for (double delta = 0.5; delta >= 1.0 / 256; delta /= 2) {
        double mh = 0;
        for (int m = 0; m < k; ++m)
            mh = std::max(mh, mp_abs(basis.eval(c, std::polar(1 + delta, 2 * kPi * (m + 0.5) / k))));
        double corr = 2 * mh / delta * (h / 2);
        if (corr < out.lipschitz) {
            out.lipschitz = corr;
            out.delta = delta;
        }
    }
    return out;
}

struct Scored {
    Candidate cand;
    Certificate cert;
    double raw = 0, value = 0;
    bool collapsed = false;
};

Scored score(const GraphBasis& basis, Candidate cand, int fine_factor, double log_r) {
    Scored s{std::move(cand), {}, 0, 0, false};
    s.cert = certify(basis, s.cand.coeffs, fine_factor);
    double num = s.cand.log_num;
    if (s.cand.order > 0 && s.cert.sup_fine > 0)
        num = std::max(num, s.cand.order * log_r + std::log(s.cert.sup_fine));
    s.cand.log_num = num;
    s.raw = num - std::log(s.cert.sup_coarse);
    s.value = num - std::log(s.cert.bound());
    s.collapsed = !(s.raw > 0) || (s.raw - s.value) > 0.5 * s.raw;
    return s;
}

std::vector<MpComplex> vanishing_coeffs(const core::EntireFunction& f, int n) {
    VanishingResult v = vanishing_polynomial(f, n);
    std::vector<MpComplex> c;
    if (v.exact)
        for (const auto& q : *v.poly.exact_coeffs()) c.emplace_back(q);
    else
        for (Complex q : v.poly.coeffs()) c.emplace_back(q);
    return c;
}

ExtremalSolution trivial(const std::string& quantity, int n, double r, const core::EntireFunction& f) {
    ExtremalSolution s;
    s.quantity = quantity;
    s.n = n;
    s.r = r;
    BivarPolynomial one(std::max(n, 0));
    one.set(0, 0, 1);
    s.poly = one;
    s.source = "trivial";
    s.sup_fine = 1;
    s.exact_function = f.taylor_exact(1).has_value();
    return s;
}

ExtremalSolution finish(const std::string& quantity, int n, double r, const GraphBasis& basis,
                        std::vector<Scored> scored, const LpPick& lp, const ExtremalOptions& opt, int targets) {
    const Scored* best = nullptr;
    for (const auto& s : scored)
        if (!s.collapsed && (!best || s.value > best->value)) best = &s;
    if (!best) certificate_error("certification-collapse", "Lipschitz correction exceeds half of the raw value");
    ExtremalSolution out;
    out.quantity = quantity;
    out.n = n;
    out.r = r;
    double bound = best->cert.bound();
    out.poly = basis.to_polynomial(best->cand.coeffs, MpReal(1) / MpReal(bound));
    out.value = best->value;
    out.raw_value = best->raw;
    out.slack = best->raw - best->value;
    out.lp_value = lp.value > 0 ? std::log(lp.value) : 0;
    out.gap = std::max(0.0, out.lp_value - out.value);
    out.sup_fine = best->cert.sup_fine;
    out.lipschitz = best->cert.lipschitz;
    out.delta = best->cert.delta;
    out.z0 = best->cand.z0;
    out.w0 = best->cand.w0;
    out.phase = best->cand.phase;
    out.source = best->cand.source;
    out.exact_function = basis.exact_function();
    out.circle_grid = basis.grid();
    out.phase_grid = opt.phase_grid;
    out.fine_grid = basis.grid() * opt.fine_factor;
    out.targets = targets;
    return out;
}

void check(int n, const ExtremalOptions& opt) {
    if (n < 0) domain_error("bad-degree", "n must be nonnegative");
    if (opt.phase_grid < 3) domain_error("bad-grid", "phase grid needs at least 3 directions");
    if (opt.fine_factor < 1) domain_error("bad-grid", "refinement factor must be positive");
}

} // namespace

ExtremalSolution mn_lower(const core::EntireFunction& f, int n, double r, const ExtremalOptions& opt) {
    check(n, opt);
    if (!(r >= 1)) domain_error("bad-radius", "m_n(r) needs r >= 1");
    if (n == 0 || r == 1) return trivial("m_n", n, r, f);
    GraphBasis basis(f, n, default_grid(n, opt));
    Eigen::MatrixXd a = constraint_matrix(basis.node_values(), opt.phase_grid);

    std::vector<Target> targets;
    bool sym = real_symmetric(f);
    int nt = opt.target_grid ? opt.target_grid : (sym ? 17 : 32);
    for (int t = 0; t < nt; ++t) {
        double ang = sym ? (nt > 1 ? kPi * t / (nt - 1) : 0) : 2 * kPi * t / nt;
        Complex z = std::polar(r, ang);
        targets.push_back({z, 0, basis.values(z)});
    }
    LpPick lp = solve_targets(a, targets, opt);

    std::vector<Scored> scored;
    Candidate c_lp{"lp", basis.monomial_coeffs(lp.a), 0, targets[lp.target].z, 0, lp.phase, 0};
    c_lp.log_num = std::log(mp_abs(basis.eval(c_lp.coeffs, c_lp.z0)));
    scored.push_back(score(basis, std::move(c_lp), opt.fine_factor, std::log(r)));

    Candidate c_v{"vanishing", vanishing_coeffs(f, n), -INFINITY, 0, 0, 0,
                  static_cast<int>(BivarPolynomial::count(n)) - 1};
    for (const auto& t : targets) {
        double v = std::log(mp_abs(basis.eval(c_v.coeffs, t.z)));
        if (v > c_v.log_num) {
            c_v.log_num = v;
            c_v.z0 = t.z;
        }
    }
    scored.push_back(score(basis, std::move(c_v), opt.fine_factor, std::log(r)));
    return finish("m_n", n, r, basis, std::move(scored), lp, opt, nt);
}

ExtremalSolution en_lower(const core::EntireFunction& f, int n, const ExtremalOptions& opt) {
    check(n, opt);
    if (n == 0) return trivial("e_n", n, 1, f);
    GraphBasis basis(f, n, default_grid(n, opt));
    Eigen::MatrixXd a = constraint_matrix(basis.node_values(), opt.phase_grid);
    std::vector<Target> targets;
    const int tg = std::max(1, opt.torus_grid);
    for (int i = 0; i < tg; ++i)
        for (int j = 0; j < tg; ++j) {
            Complex z = std::polar(1.0, 2 * kPi * i / tg), w = std::polar(1.0, 2 * kPi * j / tg);
            targets.push_back({z, w, basis.torus_values(z, w)});
        }
    LpPick lp = solve_targets(a, targets, opt);

    std::vector<Scored> scored;
    const Target& t = targets[lp.target];
    Candidate c_lp{"lp", basis.monomial_coeffs(lp.a), 0, t.z, t.w, lp.phase, 0};
    c_lp.log_num = std::log(mp_abs(basis.eval_torus(c_lp.coeffs, t.z, t.w)));
    scored.push_back(score(basis, std::move(c_lp), opt.fine_factor, 0));

    Candidate c_v{"vanishing", vanishing_coeffs(f, n), -INFINITY, 0, 0, 0, 0};
    for (const auto& tt : targets) {
        double v = std::log(mp_abs(basis.eval_torus(c_v.coeffs, tt.z, tt.w)));
        if (v > c_v.log_num) {
            c_v.log_num = v;
            c_v.z0 = tt.z;
            c_v.w0 = tt.w;
        }
    }
    scored.push_back(score(basis, std::move(c_v), opt.fine_factor, 0));
    return finish("e_n", n, 1, basis, std::move(scored), lp, opt, tg * tg);
}

std::vector<WnSample> wn_profile(const core::EntireFunction& f, int n, const std::vector<Complex>& points,
                                 const ExtremalOptions& opt) {
    check(n, opt);
    std::vector<WnSample> out;
    std::optional<GraphBasis> basis;
    std::optional<Eigen::MatrixXd> a;
    std::vector<MpComplex> vc;
    for (Complex z : points) {
        WnSample s{z, 0, {}};
        if (n == 0 || std::abs(z) <= 1) {
            s.solution = trivial("W_n", n, std::abs(z), f);
            s.solution.z0 = z;
            out.push_back(std::move(s));
            continue;
        }
        if (!basis) {
            basis.emplace(f, n, default_grid(n, opt));
            a = constraint_matrix(basis->node_values(), opt.phase_grid);
            vc = vanishing_coeffs(f, n);
        }
        std::vector<Target> targets{{z, 0, basis->values(z)}};
        LpPick lp = solve_targets(*a, targets, opt);
        std::vector<Scored> scored;
        Candidate c_lp{"lp", basis->monomial_coeffs(lp.a), 0, z, 0, lp.phase, 0};
        c_lp.log_num = std::log(mp_abs(basis->eval(c_lp.coeffs, z)));
        scored.push_back(score(*basis, std::move(c_lp), opt.fine_factor, 0));
        Candidate c_v{"vanishing", vc, std::log(mp_abs(basis->eval(vc, z))), z, 0, 0, 0};
        scored.push_back(score(*basis, std::move(c_v), opt.fine_factor, 0));
        s.solution = finish("W_n", n, std::abs(z), *basis, std::move(scored), lp, opt, 1);
        s.value = s.solution.value / (double(n) * n);
        out.push_back(std::move(s));
    }
    return out;
}

nlohmann::json ExtremalSolution::to_json() const {
    nlohmann::json j;
    j["quantity"] = quantity;
    j["n"] = n;
    j["r"] = num_json(r);
    j["value"] = num_json(value);
    j["raw_value"] = num_json(raw_value);
    j["lp_value"] = num_json(lp_value);
    j["gap"] = num_json(gap);
    j["slack"] = num_json(slack);
    j["sup_fine"] = num_json(sup_fine);
    j["lipschitz_correction"] = num_json(lipschitz);
    j["cauchy_delta"] = num_json(delta);
    j["z0"] = {num_json(z0.real()), num_json(z0.imag())};
    j["w0"] = {num_json(w0.real()), num_json(w0.imag())};
    j["phase"] = num_json(phase);
    j["source"] = source;
    j["exact_function"] = exact_function;
    j["grid"] = {{"circle", circle_grid}, {"phases", phase_grid}, {"fine", fine_grid}, {"targets", targets}};
    j["polynomial"] = poly.to_json();
    j["precision_digits"] = kOutputDigits;
    return j;
}

} // namespace tmlab::extremal
