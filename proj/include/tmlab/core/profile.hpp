#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tmlab/core/characteristics.hpp"

namespace tmlab::core {

struct ProfileRecord {
    double r = 0;
    Estimate M, m, T, m0, T0, S, L;
    double log_M = 0;
    // Radial-path T0 when it was computed (dual-path self-check), else nullopt.
    std::optional<Estimate> T0_radial;
};

struct GrowthProfile {
    std::string function;
    double log_plus_f0 = 0;
    std::vector<ProfileRecord> records;

    const ProfileRecord* find(double r) const;
    const ProfileRecord& at(double r) const;  // throws profile-range-insufficient
    std::vector<double> radii() const;

    nlohmann::json to_json() const;
    static GrowthProfile from_json(const nlohmann::json& j);

    // Throws certificate-failure naming the first violated invariant.
    void validate() const;
};

enum class SChoice { Area, Flux, Auto };

struct ProfileOptions {
    CharOptions ch;
    SChoice s_method = SChoice::Auto;
    double area_max_radius = 64;   // Auto switches to the flux formula above this
    double dual_t0_max_radius = 64;  // radial T0 only computed up to this radius
};

std::vector<double> geometric_grid(double r_min, double r_max, int count);
// Grid with `per_dyad` points per doubling, containing r_min * 2^k exactly.
std::vector<double> dyadic_grid(double r_min, double r_max, int per_dyad);

GrowthProfile build_profile(const EntireFunction& f, const std::vector<double>& radii, const ProfileOptions& opt = {});
Estimate profile_S(const EntireFunction& f, double r, const ProfileOptions& opt);

struct IdentityCheck {
    std::string name;  // "tm", "tt0", "st0", "ls"
    double r = 0;
    double lhs = 0;
    double rhs = 0;
    double margin = 0;  // rhs - lhs (with error allowances)
    bool pass = true;
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;
    int violations(const std::string& name = "") const;
    nlohmann::json to_json() const;
};

// k is the ratio used for (e:tm) (R = k r) and (e:st0); (e:ls) uses a 1% slack.
IdentityReport verify_growth_identities(const GrowthProfile& p, double k);

struct AdmissibleRadius {
    double r_prime;
    Estimate L, S;
};
AdmissibleRadius find_admissible_radius(const EntireFunction& f, double r, double k, double eps,
                                        const ProfileOptions& opt = {});

} // namespace tmlab::core
