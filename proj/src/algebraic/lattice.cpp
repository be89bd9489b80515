#include "tmlab/algebraic/lattice.hpp"

#include <cmath>
#include <limits>

#include "tmlab/support/error.hpp"
#include "tmlab/support/format.hpp"
#include "tmlab/support/parallel.hpp"

namespace tmlab::algebraic {

namespace {

struct Box {
    long long B = 0;
    Rational house_bound, disk;  // in units of the integer lattice, i.e. scaled by d
    bool has_disk = false;
};

Box make_box(const NumberField& K, const BigInt& d, const Rational& A, const std::optional<Rational>& r,
             const EnumerationOptions& opt) {
    if (!(A > 0) || d < 1 || (r && !(*r > 0))) domain_error("bad-parameter", "need A, r > 0 and d >= 1");
    Box b;
    b.house_bound = Rational(d) * A;
    b.has_disk = r.has_value();
    if (r) b.disk = Rational(d) * *r;
    // the identity embedding is a conjugate unless K is real quadratic
    Rational reach = b.house_bound;
    if (r && K.kind() != FieldKind::RealQuadratic && b.disk < reach) reach = b.disk;
    // gamma1 is a numerical minimum; shrink it so the box never loses a point
    double g1 = K.gamma1() * (1 - 1e-6);
    long double side = std::floor(reach.convert_to<long double>() / g1) + 1;
    long double total = std::pow(2 * side + 1, static_cast<long double>(K.degree()));
    if (total > opt.budget)
        domain_error("enumeration-budget-exceeded",
                     "coordinate box of " + num_str(static_cast<double>(total)) + " points exceeds the budget " +
                         num_str(static_cast<double>(opt.budget)));
    b.B = static_cast<long long>(side);
    return b;
}

bool keep(const FieldElement& w, const Box& b) { return w.house_le(b.house_bound) && (!b.has_disk || w.abs_le(b.disk)); }

void scan(const NumberField& K, const Box& b, const EnumerationOptions& opt, std::vector<std::vector<FieldElement>>* out,
          std::vector<long long>* counts) {
    std::size_t slices = static_cast<std::size_t>(2 * b.B + 1);
    if (out) out->assign(slices, {});
    if (counts) counts->assign(slices, 0);
    parallel_for(
        slices,
        [&](std::size_t s) {
            long long p1 = static_cast<long long>(s) - b.B;
            auto take = [&](const FieldElement& w) {
                if (!keep(w, b)) return;
                if (out) (*out)[s].push_back(w);
                if (counts) ++(*counts)[s];
            };
            if (K.degree() == 1) {
                take(FieldElement::from_coords(K, {BigInt(p1)}));
                return;
            }
            for (long long p2 = -b.B; p2 <= b.B; ++p2) take(FieldElement::from_coords(K, {BigInt(p1), BigInt(p2)}));
        },
        opt.workers);
}

} // namespace

std::vector<FieldElement> enumerate_IK(const NumberField& K, const BigInt& d, const Rational& A,
                                       const std::optional<Rational>& r, const EnumerationOptions& opt) {
    Box b = make_box(K, d, A, r, opt);
    std::vector<std::vector<FieldElement>> parts;
    scan(K, b, opt, &parts, nullptr);
    std::vector<FieldElement> pts;
    Rational inv(1, d);
    for (auto& part : parts)
        for (auto& w : part) pts.push_back(inv * w);
    return pts;
}

long long count_IK(const NumberField& K, const BigInt& d, const Rational& A, const std::optional<Rational>& r,
                   const EnumerationOptions& opt) {
    Box b = make_box(K, d, A, r, opt);
    std::vector<long long> counts;
    scan(K, b, opt, nullptr, &counts);
    long long n = 0;
    for (auto c : counts) n += c;
    return n;
}

nlohmann::json NpFit::to_json() const {
    auto arr = [](const std::vector<double>& v) {
        auto a = nlohmann::json::array();
        for (double x : v) a.push_back(num_json(x));
        return a;
    };
    return {{"branch", branch}, {"A", arr(A)}, {"r", arr(r)}, {"counts", counts}, {"ratios", arr(ratios)},
            {"c1", num_json(c1)}, {"c2", num_json(c2)}};
}

NpFit np_fit(const NumberField& K, const BigInt& d, const std::vector<Rational>& A_list,
             const std::optional<Rational>& r_factor, const EnumerationOptions& opt) {
    if (A_list.empty()) domain_error("bad-grid", "no A values");
    NpFit fit;
    bool wide = !r_factor || *r_factor > 1;
    int s = K.degree();
    fit.branch = wide ? "r>A" : (K.is_real() ? "real r<=A" : "complex r<=A");
    fit.c1 = std::numeric_limits<double>::infinity();
    double dd = d.convert_to<double>();
    for (const auto& A : A_list) {
        std::optional<Rational> r;
        if (r_factor) r = *r_factor * A;
        long long n = count_IK(K, d, A, r, opt);
        double a = A.convert_to<double>(), rr = r ? r->convert_to<double>() : INFINITY;
        double norm;
        if (wide) norm = std::pow(dd * a, s);
        else if (K.is_real()) norm = std::pow(dd, s) * std::pow(a, s - 1) * rr;
        else norm = std::pow(dd, s) * std::pow(a, s - 2) * rr * rr;
        fit.A.push_back(a);
        fit.r.push_back(rr);
        fit.counts.push_back(n);
        fit.ratios.push_back(n / norm);
        fit.c1 = std::min(fit.c1, n / norm);
        fit.c2 = std::max(fit.c2, n / norm);
    }
    if (!(fit.c1 > 0 && std::isfinite(fit.c2)))
        numeric_error("fit-degenerate", "normalized counts must be positive and finite");
    return fit;
}

} // namespace tmlab::algebraic
