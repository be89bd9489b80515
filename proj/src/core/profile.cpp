#include "tmlab/core/profile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tmlab/support/error.hpp"
#include "tmlab/support/format.hpp"

namespace tmlab::core {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

nlohmann::json est_json(const Estimate& e) { return {{"value", num_str(e.value)}, {"err", num_str(e.error)}}; }
Estimate est_from(const nlohmann::json& j) { return {num_from_json(j.at("value")), num_from_json(j.at("err"))}; }

} // namespace

const ProfileRecord* GrowthProfile::find(double r) const {
    auto it = std::lower_bound(records.begin(), records.end(), r * (1 - 1e-12),
                               [](const ProfileRecord& rec, double x) { return rec.r < x; });
    if (it != records.end() && std::abs(it->r - r) <= 1e-12 * r) return &*it;
    return nullptr;
}

const ProfileRecord& GrowthProfile::at(double r) const {
    auto p = find(r);
    if (!p) domain_error("profile-range-insufficient", "radius " + num_str(r) + " is not on the profile grid");
    return *p;
}

std::vector<double> GrowthProfile::radii() const {
    std::vector<double> out;
    for (const auto& rec : records) out.push_back(rec.r);
    return out;
}

nlohmann::json GrowthProfile::to_json() const {
    nlohmann::json recs = nlohmann::json::array();
    for (const auto& rec : records) {
        nlohmann::json j = {{"r", num_str(rec.r)}, {"M", est_json(rec.M)}, {"log_M", num_str(rec.log_M)},
                            {"m", est_json(rec.m)}, {"T", est_json(rec.T)}, {"m0", est_json(rec.m0)},
                            {"T0", est_json(rec.T0)}, {"S", est_json(rec.S)}, {"L", est_json(rec.L)}};
        if (rec.T0_radial) j["T0_radial"] = est_json(*rec.T0_radial);
        recs.push_back(j);
    }
    return {{"function", function}, {"log_plus_f0", num_str(log_plus_f0)}, {"precision_digits", kOutputDigits},
            {"records", recs}};
}

GrowthProfile GrowthProfile::from_json(const nlohmann::json& j) {
    GrowthProfile p;
    try {
        p.function = j.at("function").get<std::string>();
        p.log_plus_f0 = num_from_json(j.at("log_plus_f0"));
        for (const auto& rj : j.at("records")) {
            ProfileRecord rec;
            rec.r = num_from_json(rj.at("r"));
            rec.M = est_from(rj.at("M"));
            rec.log_M = rj.contains("log_M") ? num_from_json(rj.at("log_M")) : std::log(rec.M.value);
            rec.m = est_from(rj.at("m"));
            rec.T = est_from(rj.at("T"));
            rec.m0 = est_from(rj.at("m0"));
            rec.T0 = est_from(rj.at("T0"));
            rec.S = est_from(rj.at("S"));
            rec.L = est_from(rj.at("L"));
            if (rj.contains("T0_radial")) rec.T0_radial = est_from(rj.at("T0_radial"));
            p.records.push_back(rec);
        }
    } catch (const nlohmann::json::exception& e) {
        domain_error("file-format", std::string("bad profile JSON: ") + e.what());
    }
    for (std::size_t i = 1; i < p.records.size(); ++i)
        if (!(p.records[i].r > p.records[i - 1].r)) domain_error("file-format", "profile radii must increase");
    return p;
}

void GrowthProfile::validate() const {
    auto fail = [](const std::string& what) { certificate_error("profile-invariant", what); };
    for (const auto& rec : records) {
        for (auto [name, e] : {std::pair{"m", rec.m}, {"T", rec.T}, {"m0", rec.m0}, {"T0", rec.T0}, {"S", rec.S},
                               {"L", rec.L}})
            if (e.value + e.error < 0) fail(std::string(name) + " negative at r=" + num_str(rec.r));
        if (rec.T.value > rec.m.value + rec.T.error + rec.m.error + 1e-12)
            fail("T > m at r=" + num_str(rec.r));
    }
    for (std::size_t i = 1; i < records.size(); ++i) {
        const auto &a = records[i - 1], &b = records[i];
        auto mono = [&](const char* name, const Estimate& x, const Estimate& y) {
            if (y.value + y.error + x.error + 1e-12 * std::abs(x.value) < x.value)
                fail(std::string(name) + " decreases between r=" + num_str(a.r) + " and r=" + num_str(b.r));
        };
        if (b.log_M + 1e-12 * std::max(1.0, std::abs(a.log_M)) < a.log_M) fail("M decreases at r=" + num_str(b.r));
        mono("m", a.m, b.m);
        mono("T", a.T, b.T);
        mono("T0", a.T0, b.T0);
        mono("S", a.S, b.S);
    }
}

std::vector<double> geometric_grid(double r_min, double r_max, int count) {
    if (!(r_min > 0) || !(r_max >= r_min) || count < 1) domain_error("bad-grid", "need 0 < r_min <= r_max, count >= 1");
    std::vector<double> out;
    if (count == 1) return {r_min};
    double lr = std::log(r_max / r_min);
    for (int i = 0; i < count; ++i) out.push_back(i + 1 == count ? r_max : r_min * std::exp(lr * i / (count - 1)));
    return out;
}

std::vector<double> dyadic_grid(double r_min, double r_max, int per_dyad) {
    if (!(r_min > 0) || !(r_max >= r_min) || per_dyad < 1) domain_error("bad-grid", "bad dyadic grid parameters");
    std::vector<double> out;
    for (int j = 0;; ++j) {
        double r = r_min * std::exp2(static_cast<double>(j) / per_dyad);
        if (r > r_max * (1 + 1e-12)) break;
        out.push_back(r);
    }
    return out;
}

Estimate profile_S(const EntireFunction& f, double r, const ProfileOptions& opt) {
    bool area = opt.s_method == SChoice::Area || (opt.s_method == SChoice::Auto && r <= opt.area_max_radius);
    return ahlfors_S(f, r, opt.ch, area ? SMethod::Area : SMethod::Flux);
}

GrowthProfile build_profile(const EntireFunction& f, const std::vector<double>& radii, const ProfileOptions& opt) {
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (!(radii[i] > 0)) domain_error("bad-grid", "radii must be positive");
        if (i && !(radii[i] > radii[i - 1])) domain_error("bad-grid", "radii must be strictly increasing");
    }
    GrowthProfile p;
    p.function = f.describe();
    double l0 = f.eval_scaled(0).log_abs();
    p.log_plus_f0 = std::max(0.0, l0);
    p.records.resize(radii.size());
    for (std::size_t i = 0; i < radii.size(); ++i) {
        double r = radii[i];
        ProfileRecord& rec = p.records[i];
        rec.r = r;
        auto mm = max_modulus(f, r, opt.ch);
        rec.log_M = mm.log_M;
        rec.M = {mm.M, 1e-12 * mm.M};
        rec.m = {std::max(0.0, mm.log_M), 1e-12 * std::max(1.0, std::abs(mm.log_M))};
        rec.T = nevanlinna_T(f, r, opt.ch);
        rec.m0 = proximity_m0(f, r, opt.ch);
        rec.T0 = ahlfors_T0_identity(f, r, opt.ch);
        rec.S = profile_S(f, r, opt);
        rec.L = length_L(f, r, opt.ch);
        if (r <= opt.dual_t0_max_radius) {
            rec.T0_radial = ahlfors_T0_radial(f, r, opt.ch);
            if (std::abs(rec.T0_radial->value - rec.T0.value) > rec.T0_radial->error + rec.T0.error + 1e-12)
                numeric_error("cross-check-failure", "T0 paths disagree at r=" + num_str(r));
        }
    }
    return p;
}

int IdentityReport::violations(const std::string& name) const {
    int n = 0;
    for (const auto& c : checks)
        if (!c.pass && (name.empty() || c.name == name)) ++n;
    return n;
}

nlohmann::json IdentityReport::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks)
        arr.push_back({{"identity", c.name}, {"r", num_str(c.r)}, {"lhs", num_str(c.lhs)}, {"rhs", num_str(c.rhs)},
                       {"margin", num_str(c.margin)}, {"pass", c.pass}});
    return {{"checks", arr}, {"violations", violations()}};
}

IdentityReport verify_growth_identities(const GrowthProfile& p, double k) {
    if (!(k > 1)) domain_error("bad-parameter", "k must exceed 1");
    IdentityReport rep;
    auto add = [&](const std::string& name, double r, double lhs, double rhs, double allowance) {
        IdentityCheck c{name, r, lhs, rhs, rhs - lhs + allowance, false};
        c.pass = c.margin >= 0;
        rep.checks.push_back(c);
    };
    const double half_log2 = 0.5 * std::log(2.0);
    const auto& recs = p.records;
    for (std::size_t i = 0; i < recs.size(); ++i) {
        const auto& a = recs[i];
        add("tm", a.r, a.T.value, a.m.value, a.T.error + a.m.error);
        if (auto b = p.find(k * a.r)) {
            double factor = (b->r + a.r) / (b->r - a.r);
            add("tm", a.r, a.m.value, factor * b->T.value, a.m.error + factor * b->T.error);
            add("st0", a.r, a.S.value * std::log(k), b->T0.value, a.S.error * std::log(k) + b->T0.error);
        }
        add("tt0", a.r, std::abs(a.T.value - a.T0.value - p.log_plus_f0), half_log2, a.T.error + a.T0.error);
        if (i > 0 && i + 1 < recs.size()) {
            const auto &lo = recs[i - 1], &hi = recs[i + 1];
            double h = hi.r - lo.r;
            double sprime = (hi.S.value - lo.S.value) / h;
            // Discretization error estimated by the spread of one-sided differences.
            double fwd = (hi.S.value - a.S.value) / (hi.r - a.r), bwd = (a.S.value - lo.S.value) / (a.r - lo.r);
            double cd_err = 0.5 * std::abs(fwd - bwd) * std::min(hi.r - a.r, a.r - lo.r) / h;
            double s_err = (hi.S.error + lo.S.error) / h + cd_err;
            double rhs = 8 * kPi * kPi * a.r * sprime;
            double lhs = a.L.value * a.L.value;
            add("ls", a.r, lhs, 1.01 * rhs, 1.01 * 8 * kPi * kPi * a.r * s_err + 2 * a.L.value * a.L.error);
        }
    }
    return rep;
}

AdmissibleRadius find_admissible_radius(const EntireFunction& f, double r, double k, double eps,
                                        const ProfileOptions& opt) {
    if (!(k > 1) || !(eps > 0) || !(r > 0)) domain_error("bad-parameter", "need r > 0, k > 1, eps > 0");
    double need = 8 * kPi * kPi / (eps * eps * std::log(k));
    Estimate s0 = profile_S(f, r, opt);
    if (s0.value - s0.error < need)
        domain_error("precondition-violated", "S(r) = " + num_str(s0.value) + " is below " + num_str(need));
    for (int grid : {64, 256}) {
        for (int j = 1; j < grid; ++j) {
            double rp = r * std::pow(k, static_cast<double>(j) / grid);
            Estimate L = length_L(f, rp, opt.ch);
            Estimate S = profile_S(f, rp, opt);
            if (L.value + L.error <= eps * (S.value - S.error)) return {rp, L, S};
        }
    }
    numeric_error("scan-failure", "no radius found on the finest grid (256 points)");
}

} // namespace tmlab::core
