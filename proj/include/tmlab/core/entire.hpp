#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tmlab/core/scaled.hpp"
#include "tmlab/support/exact.hpp"

namespace tmlab::core {

// Bound on sum_{k>=n} |c_k| r^k.
using TailBound = std::function<double(std::size_t n, double r)>;

// p(z) e^{q(z)}; exact coefficient lists are optional.
struct ExpPolyTerm {
    std::vector<Complex> p;
    std::vector<Complex> q;
    std::optional<std::vector<QComplex>> p_exact;
    std::optional<std::vector<QComplex>> q_exact;
};

enum class FunctionKind { TaylorStream, ExpPolySum, GapSeries, ZetaTilde, Xi, Dilation, Shift };

struct EvalOptions {
    double rel_tol = 1e-15;
    std::size_t max_terms = 20000;
};

class EntireFunction {
public:
    struct Impl;

    static EntireFunction taylor_stream(std::function<Complex(std::size_t)> coef, TailBound tail, double radius,
                                        std::function<QComplex(std::size_t)> exact = {},
                                        std::string label = "taylor");
    // Finite coefficient list presented as a taylor-stream with zero tail.
    static EntireFunction polynomial_stream(std::vector<QComplex> coeffs);
    static EntireFunction exp_poly_sum(std::vector<ExpPolyTerm> terms, std::string label = "exp-poly-sum");
    static EntireFunction polynomial(std::vector<QComplex> coeffs);
    static EntireFunction constant(Complex c);
    static EntireFunction exp();
    // e^{q(z)} with exact polynomial q.
    static EntireFunction exp_of(std::vector<QComplex> q, std::string label);
    static EntireFunction gap_series(double tau, long long n1);
    static EntireFunction zeta_tilde();
    static EntireFunction xi();

    // Parses names such as "exp", "exp-z2", "zeta-tilde", "xi", "gap:3:2", "poly:1,0,1", "const:0.5".
    static EntireFunction parse(const std::string& spec);

    EntireFunction dilate(Complex s) const;
    EntireFunction shift(Complex w) const;

    FunctionKind kind() const;
    std::string describe() const;

    Complex eval(Complex z) const;
    Scaled eval_scaled(Complex z, int k = 0) const;
    Complex eval_deriv(Complex z, int k) const;

    std::vector<Complex> taylor(std::size_t count) const;
    std::optional<std::vector<QComplex>> taylor_exact(std::size_t count) const;
    // False when coefficients come from a discrete Cauchy transform (absolute, not relative, accuracy).
    bool taylor_direct() const;
    // Infinity when no bound is known.
    double tail_bound(std::size_t n, double r) const;
    // Radius of the disk where evaluation is allowed (infinity for entire kinds).
    double radius() const;
    // Degree if the function is a polynomial of known degree, else -1.
    int polynomial_degree() const;

    const EvalOptions& options() const;
    EntireFunction with_options(EvalOptions opts) const;

private:
    explicit EntireFunction(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

Complex eval(const EntireFunction& f, Complex z);
Complex eval_deriv(const EntireFunction& f, Complex z, int k);
double spherical_deriv(const EntireFunction& f, Complex z);
// rho_f from a scaled value and scaled derivative sharing no common scale.
double spherical_deriv(const Scaled& value, const Scaled& deriv);

} // namespace tmlab::core
