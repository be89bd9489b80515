#include "tmlab/growth/table.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tmlab/core/characteristics.hpp"
#include "tmlab/support/error.hpp"
#include "tmlab/support/format.hpp"

namespace tmlab::growth {

namespace {

enum class Backing { Profile, Live, Synthetic };

Bracket around(const core::Estimate& e) { return {e.value - e.error, e.value + e.error}; }

} // namespace

struct GrowthTable::Impl {
    Backing backing;
    std::string label;
    std::vector<double> grid;
    double lo = 0, hi = std::numeric_limits<double>::infinity();
    double log_plus_f0 = 0;

    // profile backing
    std::vector<core::Estimate> S, m, T0;
    // live backing
    std::optional<core::EntireFunction> f;
    core::ProfileOptions opt;
    // synthetic backing
    Law S_law, m_law, T0_law;

    void check(double r) const {
        if (!(r >= lo * (1 - 1e-14) && r <= hi * (1 + 1e-14)))
            numeric_error("profile-range-insufficient",
                          "r = " + num_str(r) + " outside [" + num_str(lo) + ", " + num_str(hi) + "]");
    }

    Bracket tabulated(const std::vector<core::Estimate>& v, double r) const {
        auto it = std::lower_bound(grid.begin(), grid.end(), r);
        std::size_t i = it - grid.begin();
        if (i < grid.size() && std::abs(grid[i] - r) <= 1e-14 * r) return around(v[i]);
        if (i > 0 && std::abs(grid[i - 1] - r) <= 1e-14 * r) return around(v[i - 1]);
        // strictly between grid[i-1] and grid[i]
        return {v[i - 1].value - v[i - 1].error, v[i].value + v[i].error};
    }
};

GrowthTable GrowthTable::from_profile(const core::GrowthProfile& p) {
    if (p.records.empty()) domain_error("empty-profile", "profile has no records");
    auto impl = std::make_shared<Impl>();
    impl->backing = Backing::Profile;
    impl->label = p.function;
    impl->log_plus_f0 = p.log_plus_f0;
    for (const auto& rec : p.records) {
        impl->grid.push_back(rec.r);
        impl->S.push_back(rec.S);
        impl->m.push_back(rec.m);
        impl->T0.push_back(rec.T0);
    }
    for (std::size_t i = 1; i < impl->grid.size(); ++i)
        if (!(impl->grid[i] > impl->grid[i - 1])) domain_error("bad-grid", "profile radii must increase");
    impl->lo = impl->grid.front();
    impl->hi = impl->grid.back();
    return GrowthTable(impl);
}

GrowthTable GrowthTable::live(const core::EntireFunction& f, std::vector<double> grid, const core::ProfileOptions& opt) {
    if (grid.empty()) domain_error("bad-grid", "grid is empty");
    std::sort(grid.begin(), grid.end());
    if (!(grid.front() > 0)) domain_error("bad-grid", "radii must be positive");
    auto impl = std::make_shared<Impl>();
    impl->backing = Backing::Live;
    impl->label = f.describe();
    impl->f = f;
    impl->opt = opt;
    impl->grid = std::move(grid);
    impl->lo = impl->grid.front();
    impl->hi = impl->grid.back();
    double a0 = std::abs(f.eval(0));
    impl->log_plus_f0 = a0 > 1 ? std::log(a0) : 0.0;
    return GrowthTable(impl);
}

GrowthTable GrowthTable::synthetic(std::string label, Law S, Law m, std::vector<double> grid, Law T0,
                                   double log_plus_f0) {
    if (!S || !m) domain_error("bad-law", "S and m laws are required");
    std::sort(grid.begin(), grid.end());
    auto impl = std::make_shared<Impl>();
    impl->backing = Backing::Synthetic;
    impl->label = std::move(label);
    impl->grid = std::move(grid);
    impl->lo = 0;
    impl->S_law = std::move(S);
    impl->m_law = std::move(m);
    impl->T0_law = std::move(T0);
    impl->log_plus_f0 = log_plus_f0;
    return GrowthTable(impl);
}

Bracket GrowthTable::S(double r) const {
    impl_->check(r);
    switch (impl_->backing) {
    case Backing::Profile: return impl_->tabulated(impl_->S, r);
    case Backing::Live: return around(core::profile_S(*impl_->f, r, impl_->opt));
    default: {
        double v = impl_->S_law(r);
        return {v, v};
    }
    }
}

Bracket GrowthTable::m(double r) const {
    impl_->check(r);
    switch (impl_->backing) {
    case Backing::Profile: return impl_->tabulated(impl_->m, r);
    case Backing::Live: {
        double v = core::growth_m(*impl_->f, r, impl_->opt.ch);
        double e = 1e-12 * std::max(1.0, v);
        return {std::max(0.0, v - e), v + e};
    }
    default: {
        double v = impl_->m_law(r);
        return {v, v};
    }
    }
}

Bracket GrowthTable::T0(double r) const {
    impl_->check(r);
    switch (impl_->backing) {
    case Backing::Profile: return impl_->tabulated(impl_->T0, r);
    case Backing::Live: return around(core::ahlfors_T0_identity(*impl_->f, r, impl_->opt.ch));
    default: {
        if (!impl_->T0_law) domain_error("missing-quantity", "synthetic table has no T0 law");
        double v = impl_->T0_law(r);
        return {v, v};
    }
    }
}

const std::string& GrowthTable::label() const { return impl_->label; }
const std::vector<double>& GrowthTable::grid() const { return impl_->grid; }
double GrowthTable::r_min() const { return impl_->lo; }
double GrowthTable::r_max() const { return impl_->hi; }
bool GrowthTable::covers(double r) const { return r >= impl_->lo * (1 - 1e-14) && r <= impl_->hi * (1 + 1e-14); }
double GrowthTable::log_plus_f0() const { return impl_->log_plus_f0; }
bool GrowthTable::exact() const { return impl_->backing == Backing::Synthetic; }

nlohmann::json GrowthTable::to_json() const {
    const char* kinds[] = {"profile", "live", "synthetic"};
    auto grid = nlohmann::json::array();
    for (double r : impl_->grid) grid.push_back(num_json(r));
    return {{"label", impl_->label},
            {"backing", kinds[static_cast<int>(impl_->backing)]},
            {"r_min", num_json(impl_->lo)},
            {"r_max", num_json(impl_->hi)},
            {"grid", grid}};
}

} // namespace tmlab::growth
