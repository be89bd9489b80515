#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "tmlab/core/entire.hpp"
#include "tmlab/core/profile.hpp"

namespace tmlab::growth {

// Guaranteed enclosure [lo, hi] of a profiled quantity.
struct Bracket {
    double lo = 0;
    double hi = 0;
    double mid() const { return 0.5 * (lo + hi); }
};

// S, m and T0 as functions of r. Three backings:
//  - a stored profile: between grid points the enclosure uses monotonicity of S, m, T0;
//  - live evaluation of an entire function inside [grid.front(), grid.back()];
//  - exact closed forms (synthetic growth laws).
class GrowthTable {
public:
    using Law = std::function<double(double)>;

    static GrowthTable from_profile(const core::GrowthProfile& p);
    static GrowthTable live(const core::EntireFunction& f, std::vector<double> grid,
                            const core::ProfileOptions& opt = {});
    // Laws are valid for every r > 0; T0 may be omitted.
    static GrowthTable synthetic(std::string label, Law S, Law m, std::vector<double> grid, Law T0 = {},
                                 double log_plus_f0 = 0);

    Bracket S(double r) const;
    Bracket m(double r) const;
    Bracket T0(double r) const;

    const std::string& label() const;
    const std::vector<double>& grid() const;  // radii visited by scans
    double r_min() const;
    double r_max() const;
    bool covers(double r) const;
    double log_plus_f0() const;
    bool exact() const;

    nlohmann::json to_json() const;

    struct Impl;

private:
    explicit GrowthTable(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

} // namespace tmlab::growth
