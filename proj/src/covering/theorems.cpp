#include "tmlab/covering/theorems.hpp"

#include <cmath>

#include "tmlab/core/characteristics.hpp"
#include "tmlab/covering/preimages.hpp"
#include "tmlab/support/error.hpp"
#include "tmlab/support/format.hpp"

namespace tmlab::covering {

namespace {

nlohmann::json points_json(const std::vector<Complex>& p) {
    auto arr = nlohmann::json::array();
    for (Complex z : p) arr.push_back({num_json(z.real()), num_json(z.imag())});
    return arr;
}

DiskCover best_cover(const std::vector<Complex>& pts, int n) {
    return pts.size() <= kExactLimit ? nth_diameter_exact(pts, n) : nth_diameter_greedy(pts, n);
}

} // namespace

nlohmann::json DnResult::to_json() const {
    return {{"value", num_json(value)}, {"diameter", num_json(diameter)}, {"points", points_json(points)},
            {"cover", cover.to_json()}};
}

DnResult dn_theta(const core::EntireFunction& f, double theta, double r, int n) {
    if (!(r >= 2)) domain_error("bad-radius", "dn(theta, r) needs r >= 2");
    auto pre = preimages(f, std::polar(1.0, theta), r);
    DnResult out;
    for (Complex z : pre.points())
        if (std::abs(z) >= 2) out.points.push_back(z);
    if (out.points.empty()) {
        out.cover.method = "exact";
        return out;
    }
    out.cover = best_cover(out.points, n);
    out.diameter = out.cover.total;
    out.value = std::min(1.0, out.diameter);
    return out;
}

TendReport tend_check(const core::EntireFunction& f, double R, double r, int n, Complex a, Complex b,
                      std::optional<double> surrogate_lambda) {
    if (std::abs(std::abs(a) - 1) > 1e-12 || std::abs(std::abs(b) - 1) > 1e-12)
        domain_error("bad-target", "a and b must lie on the unit circle");
    if (!(R > 0 && r > 0) || n < 1) domain_error("bad-parameter", "need R, r > 0 and n >= 1");
    TendReport rep;
    rep.R = R;
    rep.r = r;
    rep.n = n;
    rep.delta0 = growth::spherical_distance(a, b);
    if (!(rep.delta0 > 0)) domain_error("bad-target", "a and b must differ");
    rep.lambda = surrogate_lambda ? growth::LambdaSource::surrogate_value(*surrogate_lambda)
                                  : growth::LambdaSource::genuine(rep.delta0);
    rep.m2R = core::growth_m(f, 2 * R);
    rep.S = core::ahlfors_S(f, R, {}, R > 64 ? core::SMethod::Flux : core::SMethod::Area).value;
    rep.L = core::length_L(f, R).value;
    rep.length_hypothesis = rep.L <= rep.delta0 * rep.S / 6;
    rep.count_hypothesis = rep.S > 0 && std::log(double(n)) <= rep.lambda.log_times(rep.S);
    rep.lhs = std::log(3 * R / (4 * r));
    rep.rhs = rep.S > 0 ? 4 * n * rep.m2R / rep.S : INFINITY;
    rep.margin = rep.rhs - rep.lhs;
    rep.conclusion_asserted = rep.length_hypothesis && rep.count_hypothesis;
    rep.conclusion_holds = rep.margin >= 0;

    std::vector<Complex> e;
    for (Complex w : {a, b})
        for (Complex z : preimages(f, w, R + r).points()) e.push_back(z);
    rep.preimage_count = static_cast<int>(e.size());
    if (e.empty()) {
        rep.cover_witness = true;
    } else {
        auto cover = best_cover(e, n);
        double worst = 0;
        for (const auto& d : cover.disks) worst = std::max(worst, d.radius);
        rep.cover_witness = worst <= r;
    }
    rep.contradiction = rep.conclusion_asserted && rep.cover_witness && !rep.conclusion_holds;
    return rep;
}

nlohmann::json TendReport::to_json() const {
    nlohmann::json j;
    j["R"] = num_json(R);
    j["r"] = num_json(r);
    j["n"] = n;
    j["delta0"] = num_json(delta0);
    j["lambda"] = {{"source", lambda.label()}, {"log", num_json(lambda.log_value)}};
    j["m_2R"] = num_json(m2R);
    j["S_R"] = num_json(S);
    j["L_R"] = num_json(L);
    j["hypotheses"] = {{"length", length_hypothesis ? "pass" : "hypothesis-fail"},
                       {"count", count_hypothesis ? "pass" : "hypothesis-fail"}};
    j["lhs"] = num_json(lhs);
    j["rhs"] = num_json(rhs);
    j["margin"] = num_json(margin);
    j["conclusion_asserted"] = conclusion_asserted;
    j["conclusion_holds"] = conclusion_holds;
    j["preimage_count"] = preimage_count;
    j["cover_witness"] = cover_witness;
    j["contradiction"] = contradiction;
    j["precision_digits"] = kOutputDigits;
    return j;
}

} // namespace tmlab::covering
