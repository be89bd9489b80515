#include "tmlab/cli/app.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "common.hpp"
#include "tmlab/core/entire.hpp"
#include "tmlab/core/order.hpp"
#include "tmlab/core/profile.hpp"
#include "tmlab/covering/diameter.hpp"
#include "tmlab/covering/preimages.hpp"
#include "tmlab/cli/svg.hpp"
#include "tmlab/extremal/composed.hpp"
#include "tmlab/extremal/solver.hpp"
#include "tmlab/extremal/vanishing.hpp"
#include "tmlab/extremal/zeros.hpp"
#include "tmlab/algebraic/bounds.hpp"
#include "tmlab/growth/admissible.hpp"
#include "tmlab/growth/classes.hpp"
#include "tmlab/growth/constants.hpp"
#include "tmlab/growth/table.hpp"
#include "tmlab/support/error.hpp"
#include "tmlab/support/format.hpp"
#include "tmlab/support/parallel.hpp"

namespace tmlab::cli {

using nlohmann::json;

nlohmann::json load_json(Context& ctx, const std::string& path) {
    std::ifstream in(path);
    if (!in) domain_error("file-format", "cannot read " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        domain_error("file-format", path + ": " + e.what());
    }
    ctx.manifest.add_input(path);
    if (j.is_object() && j.contains("manifest") && j.contains("result")) return j["result"];
    return j;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) domain_error("file-format", "cannot write " + path);
    out << text;
}

std::complex<double> parse_complex(const std::string& s) {
    // "x", "yi", "x+yi", "x-yi", "i"
    std::string t;
    for (char c : s)
        if (c != ' ') t += c;
    if (t.empty()) domain_error("bad-complex", "empty complex number");
    auto num = [&](const std::string& u) {
        if (u == "" || u == "+") return 1.0;
        if (u == "-") return -1.0;
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(u, &used);
        } catch (const std::exception&) {
            domain_error("bad-complex", "cannot parse '" + s + "'");
        }
        if (used != u.size()) domain_error("bad-complex", "cannot parse '" + s + "'");
        return v;
    };
    if (t.back() != 'i') return {num(t), 0};
    t.pop_back();
    // split at the last sign that is not an exponent sign
    for (std::size_t k = t.size(); k-- > 1;)
        if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') return {num(t.substr(0, k)), num(t.substr(k))};
    return {0, num(t)};
}

namespace {

json capture_parameters(const CLI::App* app) {
    json p = json::object();
    for (const CLI::Option* opt : app->get_options()) {
        if (opt->get_lnames().empty()) continue;
        const std::string& name = opt->get_lnames()[0];
        if (name == "help") continue;
        if (opt->get_items_expected_max() == 0) {
            p[name] = opt->count() > 0 ? "true" : "false";
        } else if (opt->count() > 0) {
            auto res = opt->results();
            if (opt->get_expected_max() > 1) p[name] = res;
            else p[name] = res.empty() ? std::string("true") : res.back();
        } else {
            p[name] = opt->get_default_str();
        }
    }
    return p;
}

core::EntireFunction fn_option(const std::string& s) { return core::EntireFunction::parse(s); }

void register_profile(CLI::App& root, Dispatch& d) {
    struct O {
        std::string fn = "exp", svg;
        double r_min = 1, r_max = 20, tol = 1e-8;
        int grid = 40;
        bool hi = false;
    };
    auto o = std::make_shared<O>();
    auto* sub = root.add_subcommand("profile", "growth profile of an entire function over a geometric r-grid");
    sub->add_option("--fn", o->fn, "function name")->capture_default_str();
    sub->add_option("--r-min", o->r_min)->capture_default_str();
    sub->add_option("--r-max", o->r_max)->capture_default_str();
    sub->add_option("--grid", o->grid, "number of radii")->capture_default_str()->check(CLI::PositiveNumber);
    sub->add_option("--tol", o->tol, "quadrature tolerance")->capture_default_str();
    sub->add_flag("--hi-prec", o->hi, "tighter quadrature (tol <= 1e-11, 4096-point max-modulus scan)");
    sub->add_option("--svg", o->svg, "write a plot of m, T0, S, L against log r");
    d.bind(sub, "profile", "double", [o](Context&) {
        core::ProfileOptions opt;
        opt.ch.tol = o->tol;
        if (o->hi) {
            opt.ch.tol = std::min(o->tol, 1e-11);
            opt.ch.samples = 4096;
            opt.ch.max_depth = 26;
        }
        if (!(o->r_min > 0 && o->r_max >= o->r_min)) domain_error("bad-grid", "need 0 < r-min <= r-max");
        auto f = fn_option(o->fn);
        auto p = core::build_profile(f, core::geometric_grid(o->r_min, o->r_max, o->grid), opt);
        if (!o->svg.empty()) {
            Series m{"m", {}, {}}, t0{"T0", {}, {}}, s{"S", {}, {}}, l{"L", {}, {}};
            for (const auto& rec : p.records) {
                double x = std::log(rec.r);
                for (auto [ser, v] : {std::pair{&m, rec.m.value}, {&t0, rec.T0.value}, {&s, rec.S.value}, {&l, rec.L.value}}) {
                    ser->x.push_back(x);
                    ser->y.push_back(std::log1p(std::max(0.0, v)));
                }
            }
            write_text(o->svg, line_chart("growth profile of " + p.function, "log r", "log(1 + value)", {m, t0, s, l}));
        }
        return p.to_json();
    });
}

void register_identities(CLI::App& root, Dispatch& d) {
    struct O {
        std::string file;
        double k = 2;
    };
    auto o = std::make_shared<O>();
    auto* sub = root.add_subcommand("identities", "check the growth identities and inequalities on a stored profile");
    sub->add_option("--profile", o->file, "profile JSON")->required();
    sub->add_option("--k", o->k, "radius ratio")->capture_default_str();
    d.bind(sub, "identities", "double", [o](Context& ctx) {
        auto p = core::GrowthProfile::from_json(load_json(ctx, o->file));
        auto rep = core::verify_growth_identities(p, o->k);
        json v;
        for (const char* n : {"tm", "tt0", "st0", "ls"}) v[n] = rep.violations(n);
        return json{{"function", p.function}, {"violations", v}, {"report", rep.to_json()}};
    });
}

void register_extremal(CLI::App& root, Dispatch& d) {
    struct O {
        std::string fn = "exp", quantity = "mn";
        std::vector<int> n{2};
        double r = std::exp(1.0);
        int circle = 0, phase = 16;
        std::vector<std::string> points;
    };
    auto o = std::make_shared<O>();
    auto* sub = root.add_subcommand("extremal", "certified lower bounds for m_n(r), e_n or W_n(z)");
    sub->add_option("--fn", o->fn)->capture_default_str();
    sub->add_option("--quantity", o->quantity, "mn, en or wn")->capture_default_str()->check(CLI::IsMember({"mn", "en", "wn"}));
    sub->add_option("--n", o->n, "degrees; several values run as a sweep")->capture_default_str();
    sub->add_option("--r", o->r, "radius for mn")->capture_default_str();
    sub->add_option("--circle-grid", o->circle, "0 picks 8 (n+1)^2")->capture_default_str();
    sub->add_option("--phase-grid", o->phase)->capture_default_str();
    sub->add_option("--points", o->points, "points for wn, as x+yi");
    d.bind(sub, "extremal", "mpfr100", [o](Context& ctx) {
        auto f = fn_option(o->fn);
        std::vector<std::complex<double>> pts;
        for (const auto& s : o->points) pts.push_back(parse_complex(s));
        if (o->quantity == "wn" && pts.empty()) domain_error("bad-parameter", "wn needs --points");
        extremal::ExtremalOptions opt;
        opt.circle_grid = o->circle;
        opt.phase_grid = o->phase;
        opt.workers = o->n.size() > 1 ? 1 : ctx.workers;
        std::vector<json> out(o->n.size());
        parallel_for(
            o->n.size(),
            [&](std::size_t t) {
                int n = o->n[t];
                if (o->quantity == "mn") out[t] = extremal::mn_lower(f, n, o->r, opt).to_json();
                else if (o->quantity == "en") out[t] = extremal::en_lower(f, n, opt).to_json();
                else {
                    json rows = json::array();
                    for (const auto& s : extremal::wn_profile(f, n, pts, opt))
                        rows.push_back({{"z", {num_json(s.z.real()), num_json(s.z.imag())}},
                                        {"value_over_n2", num_json(s.value)},
                                        {"solution", s.solution.to_json()}});
                    out[t] = {{"n", n}, {"samples", rows}};
                }
            },
            ctx.workers);
        return json{{"quantity", o->quantity}, {"function", f.describe()}, {"runs", out}};
    });
}

void register_vanish(CLI::App& root, Dispatch& d) {
    struct O {
        std::string fn = "exp";
        std::vector<int> n{2};
        double r = 1;
        double s = 0;
    };
    auto o = std::make_shared<O>();
    auto* sub = root.add_subcommand("vanish", "vanishing polynomial, zero count and doubling check");
    sub->add_option("--fn", o->fn)->capture_default_str();
    sub->add_option("--n", o->n, "degrees; several values run as a sweep")->capture_default_str();
    sub->add_option("--r", o->r, "zero-count radius")->capture_default_str();
    sub->add_option("--s", o->s, "outer radius of the doubling check (default 2r)");
    d.bind(sub, "vanish", "exact", [o](Context& ctx) {
        auto f = fn_option(o->fn);
        double s = o->s > 0 ? o->s : 2 * o->r;
        std::vector<json> out(o->n.size());
        parallel_for(
            o->n.size(),
            [&](std::size_t t) {
                int n = o->n[t];
                auto v = extremal::vanishing_polynomial(f, n);
                extremal::ComposedFunction F(v.poly, f);
                auto zc = extremal::zero_count(F, o->r);
                auto bp = extremal::bp_check([&](std::complex<double> z) { return F.value(z); }, o->r, s, zc.count);
                out[t] = {{"n", n},
                          {"polynomial", v.poly.to_json()},
                          {"exact", v.exact},
                          {"ord0_at_least", v.guaranteed_order},
                          {"ord0_verified", v.verified_order},
                          {"zeros", {{"count", zc.count}, {"winding", num_json(zc.winding)}, {"residual", num_json(zc.residual)},
                                     {"radius", num_json(zc.radius)}}},
                          {"bp", {{"r", num_json(o->r)}, {"s", num_json(s)}, {"lhs", num_json(bp.lhs)}, {"rhs", num_json(bp.rhs)},
                                  {"margin", num_json(bp.margin)}, {"pass", bp.pass}}},
                          {"doubling_ratio", num_json(extremal::doubling_ratio(F, o->r))},
                          {"markov_ratio", num_json(extremal::markov_ratio(F, o->r))}};
            },
            ctx.workers);
        return json{{"function", f.describe()}, {"runs", out}};
    });
}

void register_diameter(CLI::App& root, Dispatch& d) {
    struct O {
        std::string fn = "exp";
        double theta = 0, R = 7;
        int n = 1;
        bool exact = false, greedy = false;
    };
    auto o = std::make_shared<O>();
    auto* sub = root.add_subcommand("diameter", "preimages of e^{i theta} in 2 <= |z| <= R and their n-th diameter");
    sub->add_option("--fn", o->fn)->capture_default_str();
    sub->add_option("--theta", o->theta)->capture_default_str();
    sub->add_option("--annulus", o->R, "outer radius R of the annulus 2 <= |z| <= R")->capture_default_str();
    sub->add_option("--n", o->n)->capture_default_str()->check(CLI::PositiveNumber);
    auto* ex = sub->add_flag("--exact", o->exact, "exhaustive partition search");
    auto* gr = sub->add_flag("--greedy", o->greedy, "agglomerative upper bound");
    ex->excludes(gr);
    d.bind(sub, "diameter", "double", [o](Context&) {
        auto f = fn_option(o->fn);
        if (!(o->R >= 2)) domain_error("bad-radius", "annulus needs R >= 2");
        auto pre = covering::preimages(f, std::polar(1.0, o->theta), o->R);
        std::vector<std::complex<double>> pts;
        for (auto z : pre.points())
            if (std::abs(z) >= 2) pts.push_back(z);
        bool exact = o->exact || (!o->greedy && pts.size() <= covering::kExactLimit);
        covering::DiskCover cover;
        cover.method = exact ? "exact" : "greedy";
        if (!pts.empty()) cover = exact ? covering::nth_diameter_exact(pts, o->n) : covering::nth_diameter_greedy(pts, o->n);
        json ps = json::array();
        for (auto z : pts) ps.push_back({num_json(z.real()), num_json(z.imag())});
        return json{{"preimages", pre.to_json()},
                    {"annulus_points", ps},
                    {"cover", cover.to_json()},
                    {"diameter", num_json(cover.total)},
                    {"d_n", num_json(std::min(1.0, cover.total))}};
    });
}

void register_admissible(CLI::App& root, Dispatch& d) {
    struct O {
        std::string mode = "check", fn, synthetic;
        double R = 100, alpha = 1, beta = 0.1, gamma = 1, C = 1, R1 = 0, delta0 = 1, g_min = 1, g_max = 1000, rho = 0;
        long long n0 = 0;
        int grid = 64, terms = 5;
        std::optional<double> lambda;
    };
    auto o = std::make_shared<O>();
    auto* sub = root.add_subcommand("admissible", "admissible intervals, covering systems and fundamental sequences");
    sub->add_option("--mode", o->mode, "check, scan or sequence")->capture_default_str()->check(CLI::IsMember({"check", "scan", "sequence"}));
    auto* fn = sub->add_option("--fn", o->fn, "live entire function");
    auto* sy = sub->add_option("--synthetic", o->synthetic, "synthetic law: square (S = R^2, m = R^2/16, T0 = R^2/2)")
                   ->check(CLI::IsMember({"square"}));
    fn->excludes(sy);
    sub->add_option("--R", o->R)->capture_default_str();
    sub->add_option("--alpha", o->alpha)->capture_default_str();
    sub->add_option("--beta", o->beta)->capture_default_str();
    sub->add_option("--gamma", o->gamma)->capture_default_str();
    sub->add_option("--C", o->C)->capture_default_str();
    sub->add_option("--n0", o->n0)->capture_default_str();
    sub->add_option("--R1", o->R1)->capture_default_str();
    sub->add_option("--delta0", o->delta0)->capture_default_str();
    sub->add_option("--lambda-surrogate", o->lambda, "replace Lambda(delta0) by a value in (0, 1]");
    sub->add_option("--grid-min", o->g_min)->capture_default_str();
    sub->add_option("--grid-max", o->g_max)->capture_default_str();
    sub->add_option("--grid", o->grid, "geometric grid size")->capture_default_str();
    sub->add_option("--rho", o->rho, "order for sequence mode (0: estimate from the function)")->capture_default_str();
    sub->add_option("--terms", o->terms)->capture_default_str();
    d.bind(sub, "admissible", "exact", [o](Context&) {
        auto grid = core::geometric_grid(o->g_min, o->g_max, o->grid);
        std::optional<core::EntireFunction> f;
        growth::GrowthTable t = [&] {
            if (!o->fn.empty()) {
                f = fn_option(o->fn);
                return growth::GrowthTable::live(*f, grid);
            }
            if (o->synthetic.empty()) domain_error("bad-parameter", "give --fn or --synthetic");
            return growth::GrowthTable::synthetic(
                "square", [](double R) { return R * R; }, [](double R) { return R * R / 16; }, grid,
                [](double R) { return R * R / 2; });
        }();
        auto lam = o->lambda ? growth::LambdaSource::surrogate_value(*o->lambda) : growth::LambdaSource::genuine(o->delta0);
        growth::AdmissibleParams p{o->alpha, o->beta, o->gamma, o->C, o->n0, o->R1};
        if (o->mode == "check") return growth::admissible_check(t, o->R, p, lam).to_json();
        if (o->mode == "scan") {
            auto sys = growth::covering_scan(t, p, lam);
            auto j = sys.to_json();
            j["reverified"] = sys.empty() || growth::verify_covering_system(sys, p, lam);
            return j;
        }
        core::OrderEstimate est;
        if (o->rho > 0) est = core::OrderEstimate::constant(o->rho);
        else if (f) est = core::order_estimate(*f, o->g_max);
        else est = core::OrderEstimate::constant(2);
        return growth::fundamental_sequence(t, est, lam, o->terms, o->n0, o->R1).to_json();
    });
}

void register_bounds(CLI::App& root, Dispatch& d) {
    struct O {
        std::string name;
        std::vector<std::string> params;
        bool list = false;
    };
    auto o = std::make_shared<O>();
    auto* sub = root.add_subcommand("bounds", "evaluate a registered bound formula");
    sub->add_option("--name", o->name, "bound key");
    sub->add_option("--params", o->params, "key=value pairs");
    sub->add_flag("--list", o->list, "list every key with its formula");
    d.bind(sub, "bounds", "double", [o](Context&) {
        const auto& reg = algebraic::all_bounds();
        if (o->list || o->name.empty()) {
            json ks = json::array();
            for (const auto& k : reg.keys()) {
                const auto& s = reg.spec(k);
                ks.push_back({{"key", k}, {"statement", s.result}, {"formula", s.formula}, {"required", s.required},
                              {"optional", s.optional}});
            }
            return json{{"bounds", ks}};
        }
        growth::BoundParams p;
        for (const auto& kv : o->params) {
            auto eq = kv.find('=');
            if (eq == std::string::npos) domain_error("bad-parameter", "expected key=value, got '" + kv + "'");
            p[kv.substr(0, eq)] = parse_num(kv.substr(eq + 1));
        }
        const auto& s = reg.spec(o->name);
        auto j = reg.evaluate(o->name, p).to_json();
        j["formula"] = s.formula;
        j["statement"] = s.result;
        return j;
    });
}

int exit_code(const Error& e) {
    switch (e.kind()) {
    case ErrorKind::Domain: return 3;
    case ErrorKind::Numeric: return 4;
    case ErrorKind::Certificate: return 5;
    }
    return 4;
}

} // namespace

void register_core_commands(CLI::App& root, Dispatch& d) {
    register_profile(root, d);
    register_identities(root, d);
    register_extremal(root, d);
    register_vanish(root, d);
    register_diameter(root, d);
    register_admissible(root, d);
    register_bounds(root, d);
}

int run(int argc, char** argv) {
    CLI::App root{"tmlab: growth, extremal and algebraic-value experiments for entire functions"};
    root.require_subcommand(1);
    root.fallthrough();  // global flags may follow the subcommand
    root.set_config("--config", "", "TOML key/value file of defaults; flags override it");
    std::string out;
    std::uint64_t seed = 1;
    unsigned workers = 0;
    bool no_timing = false;
    root.add_option("--out", out, "write the JSON result here instead of stdout");
    root.add_option("--seed", seed, "seed for randomized subcommands")->capture_default_str();
    root.add_option("--workers", workers, "worker threads (0: TMLAB_WORKERS or hardware)")->capture_default_str();
    root.add_flag("--no-timing", no_timing, "omit wall-clock fields so reruns are byte-identical");
    Dispatch d;
    register_core_commands(root, d);
    register_algebraic_commands(root, d);
    register_report_command(root, d);
    try {
        root.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = root.exit(e);
        return rc == 0 ? 0 : 2;
    }
    if (!d.action) return 2;

    Context ctx;
    ctx.seed = seed;
    ctx.workers = worker_count(workers);
    ctx.manifest.command = d.command;
    ctx.manifest.precision = d.precision;
    ctx.manifest.seed = seed;
    ctx.manifest.workers = ctx.workers;
    ctx.manifest.timing = !no_timing;
    ctx.manifest.started = utc_now();
    json params = capture_parameters(d.app);
    for (auto* parent = d.app->get_parent(); parent && parent != &root; parent = parent->get_parent())
        if (auto pp = capture_parameters(parent); !pp.empty()) params["_" + parent->get_name()] = pp;
    ctx.manifest.parameters = params;
    auto t0 = std::chrono::steady_clock::now();
    try {
        json result = d.action(ctx);
        ctx.manifest.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        json doc{{"manifest", ctx.manifest.to_json()}, {"result", result}};
        std::string text = doc.dump(2) + "\n";
        if (out.empty()) std::cout << text;
        else write_text(out, text);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e);
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error [file-format]: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error [numeric]: " << e.what() << "\n";
        return 4;
    }
    return 0;
}

} // namespace tmlab::cli
