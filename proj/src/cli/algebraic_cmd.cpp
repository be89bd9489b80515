#include <random>

#include "common.hpp"
#include "tmlab/algebraic/jets.hpp"
#include "tmlab/algebraic/lattice.hpp"
#include "tmlab/algebraic/measure.hpp"
#include "tmlab/algebraic/siegel.hpp"
#include "tmlab/core/order.hpp"
#include "tmlab/support/error.hpp"
#include "tmlab/support/format.hpp"

namespace tmlab::cli {

using nlohmann::json;
using namespace tmlab::algebraic;

namespace {

std::vector<Rational> rationals(const std::vector<std::string>& xs) {
    std::vector<Rational> out;
    for (const auto& s : xs) out.push_back(parse_rational(s));
    return out;
}

FieldElement element(const NumberField& K, const json& j) {
    if (j.is_object()) {
        auto e = FieldElement::from_json(j);
        if (!(e.field() == K)) domain_error("field-mismatch", "element outside " + K.name());
        return e;
    }
    if (j.is_number_integer()) return FieldElement(K, Rational(j.get<long long>()));
    if (j.is_string()) return FieldElement(K, parse_rational(j.get<std::string>()));
    domain_error("file-format", "field element must be an object, integer or rational string");
}

// list of jets: objects {"z0", "values"} or arrays [z0, f(z0), f'(z0), ...]
std::vector<ValueJet> load_jets(Context& ctx, const std::string& path, const NumberField& K) {
    json j = load_json(ctx, path);
    if (!j.is_array()) domain_error("file-format", path + ": expected a list of jets");
    std::vector<ValueJet> out;
    for (const auto& item : j) {
        if (item.is_object()) {
            out.push_back(ValueJet::from_json(item));
            if (!(out.back().field() == K)) domain_error("field-mismatch", "jet outside " + K.name());
            continue;
        }
        if (!item.is_array() || item.empty()) domain_error("file-format", path + ": a jet needs at least z0");
        ValueJet jet{element(K, item[0]), {}};
        for (std::size_t t = 1; t < item.size(); ++t) jet.values.push_back(element(K, item[t]));
        out.push_back(jet);
    }
    return out;
}

struct FieldOpt {
    std::string name = "Q";
    NumberField get() const { return NumberField::parse(name); }
};

void add_field(CLI::App* sub, FieldOpt& f) {
    sub->add_option("--field", f.name, "Q, Q(i), Q(sqrtD) or quad:D")->capture_default_str();
}

} // namespace

void register_algebraic_commands(CLI::App& root, Dispatch& d) {
    auto* alg = root.add_subcommand("algebraic", "number-field lattices, Siegel polynomials, jets and algebraic measures");
    alg->require_subcommand(1);

    {
        struct O {
            FieldOpt f;
            std::string d = "1", A = "2";
            std::optional<std::string> r;
            bool points = false;
        };
        auto o = std::make_shared<O>();
        auto* sub = alg->add_subcommand("enumerate", "I_K(d, A) within an optional disk");
        add_field(sub, o->f);
        sub->add_option("--d", o->d)->capture_default_str();
        sub->add_option("--A", o->A, "house bound (rational)")->capture_default_str();
        sub->add_option("--r", o->r, "disk radius (rational)");
        sub->add_flag("--points", o->points, "list the points");
        d.bind(sub, "algebraic enumerate", "exact", [o](Context& ctx) {
            auto K = o->f.get();
            BigInt dd(o->d);
            std::optional<Rational> r;
            if (o->r) r = parse_rational(*o->r);
            EnumerationOptions opt;
            opt.workers = ctx.workers;
            json j{{"field", K.to_json()}, {"d", o->d}, {"A", o->A}, {"r", o->r ? json(*o->r) : json(nullptr)}};
            if (o->points) {
                auto pts = enumerate_IK(K, dd, parse_rational(o->A), r, opt);
                json ps = json::array();
                for (const auto& z : pts) ps.push_back(z.str());
                j["count"] = pts.size();
                j["points"] = ps;
            } else {
                j["count"] = count_IK(K, dd, parse_rational(o->A), r, opt);
            }
            return j;
        });
    }
    {
        struct O {
            FieldOpt f;
            std::string d = "1";
            std::vector<std::string> A{"5", "10", "20", "40"};
            std::optional<std::string> factor;
        };
        auto o = std::make_shared<O>();
        auto* sub = alg->add_subcommand("np-fit", "normalized lattice counts over a list of A");
        add_field(sub, o->f);
        sub->add_option("--d", o->d)->capture_default_str();
        sub->add_option("--A", o->A)->capture_default_str();
        sub->add_option("--r-factor", o->factor, "r = factor * A (no disk when absent)");
        d.bind(sub, "algebraic np-fit", "exact", [o](Context& ctx) {
            std::optional<Rational> fac;
            if (o->factor) fac = parse_rational(*o->factor);
            EnumerationOptions opt;
            opt.workers = ctx.workers;
            return np_fit(o->f.get(), BigInt(o->d), rationals(o->A), fac, opt).to_json();
        });
    }
    {
        struct O {
            FieldOpt f;
            std::string system;
            int N = 10, nu = 5, emax = 9, count = 1;
        };
        auto o = std::make_shared<O>();
        auto* sub = alg->add_subcommand("siegel", "small integral solution of a linear system over I_K");
        add_field(sub, o->f);
        sub->add_option("--system", o->system, "JSON {field, rows, target}; random integer systems when absent");
        sub->add_option("--N", o->N, "unknowns (random mode)")->capture_default_str();
        sub->add_option("--nu", o->nu, "equations (random mode)")->capture_default_str();
        sub->add_option("--entry-max", o->emax, "entries drawn from 0..entry-max (random mode)")->capture_default_str();
        sub->add_option("--count", o->count, "instances (random mode)")->capture_default_str();
        d.bind(sub, "algebraic siegel", "exact", [o](Context& ctx) {
            std::vector<SiegelProblem> problems;
            if (!o->system.empty()) {
                json j = load_json(ctx, o->system);
                NumberField K = j.contains("field") ? (j["field"].is_string() ? NumberField::parse(j["field"].get<std::string>())
                                                                              : NumberField::from_json(j["field"]))
                                                    : o->f.get();
                SiegelProblem pb{K, {}, std::nullopt, std::nullopt};
                for (const auto& row : j.at("rows")) {
                    std::vector<FieldElement> r;
                    for (const auto& e : row) r.push_back(element(K, e));
                    pb.rows.push_back(r);
                }
                if (j.contains("target")) pb.target = j["target"].get<double>();
                problems.push_back(pb);
            } else {
                if (o->N < 2 || o->nu < 1 || o->emax < 1 || o->count < 1) domain_error("bad-parameter", "random systems need N >= 2, nu, entry-max, count >= 1");
                auto K = o->f.get();
                std::mt19937_64 rng(ctx.seed);
                std::uniform_int_distribution<long> ent(0, o->emax);
                for (int c = 0; c < o->count; ++c) {
                    SiegelProblem pb{K, {}, std::nullopt, std::nullopt};
                    for (int e = 0; e < o->nu; ++e) {
                        std::vector<FieldElement> r;
                        for (int u = 0; u < o->N; ++u) r.emplace_back(K, Rational(ent(rng)));
                        pb.rows.push_back(r);
                    }
                    problems.push_back(pb);
                }
            }
            json sols = json::array();
            for (const auto& pb : problems) {
                json rows = json::array();
                for (const auto& row : pb.rows) {
                    json r = json::array();
                    for (const auto& e : row) r.push_back(e.str());
                    rows.push_back(r);
                }
                auto s = siegel_solve(pb);
                sols.push_back({{"system", rows}, {"solution", s.to_json()}});
            }
            return json{{"instances", sols}};
        });
    }
    {
        struct O {
            FieldOpt f;
            std::string jets;
            int exp_m = 0, imax = 3, jmax = 3;
        };
        auto o = std::make_shared<O>();
        auto* sub = alg->add_subcommand("jet-bounds", "exact derivatives of z^i f^j against A^{i+j}(i+j)^k");
        add_field(sub, o->f);
        sub->add_option("--jets", o->jets, "jet file");
        sub->add_option("--exp-jet", o->exp_m, "use the e^z jet at 0 with this many values");
        sub->add_option("--i-max", o->imax)->capture_default_str();
        sub->add_option("--j-max", o->jmax)->capture_default_str();
        d.bind(sub, "algebraic jet-bounds", "exact", [o](Context& ctx) {
            auto K = o->f.get();
            std::vector<ValueJet> jets;
            if (!o->jets.empty()) jets = load_jets(ctx, o->jets, K);
            if (o->exp_m > 0) jets.push_back(exp_jet_at_zero(K, o->exp_m));
            if (jets.empty()) domain_error("bad-parameter", "give --jets or --exp-jet");
            json out = json::array();
            double worst = INFINITY;
            for (const auto& jet : jets) {
                json rows = json::array();
                for (int i = 0; i <= o->imax; ++i)
                    for (int j = 0; j <= o->jmax; ++j)
                        for (int k = 0; k < jet.multiplicity(); ++k) {
                            auto b = jet_norm_bounds(jet, i, j, k);
                            worst = std::min(worst, b.margin);
                            rows.push_back(b.to_json());
                        }
                out.push_back({{"jet", jet.to_json()}, {"bounds", rows}});
            }
            return json{{"jets", out}, {"min_margin", num_json(worst)}, {"violations", 0}};
        });
    }
    {
        struct O {
            FieldOpt f;
            std::string jets, fn;
            int n = 1;
            std::vector<double> t;
        };
        auto o = std::make_shared<O>();
        auto* sub = alg->add_subcommand("aux", "auxiliary polynomial vanishing on the given jets");
        add_field(sub, o->f);
        sub->add_option("--jets", o->jets, "jet file")->required();
        sub->add_option("--n", o->n)->capture_default_str();
        sub->add_option("--fn", o->fn, "function for the sup-norm decay record");
        sub->add_option("--t", o->t, "decay radii t >= 2r");
        d.bind(sub, "algebraic aux", "exact", [o](Context& ctx) {
            auto jets = load_jets(ctx, o->jets, o->f.get());
            std::optional<core::EntireFunction> f;
            if (!o->fn.empty()) f = core::EntireFunction::parse(o->fn);
            return auxiliary_polynomial(jets, o->n, f ? &*f : nullptr, o->t).to_json();
        });
    }
    {
        struct O {
            FieldOpt f;
            std::string jets;
            int m = 1;
        };
        auto o = std::make_shared<O>();
        auto* sub = alg->add_subcommand("measure", "algebraic measure of order m");
        add_field(sub, o->f);
        sub->add_option("--jets", o->jets, "jet file")->required();
        sub->add_option("--m", o->m)->capture_default_str();
        d.bind(sub, "algebraic measure", "exact", [o](Context& ctx) {
            return algebraic_measure(load_jets(ctx, o->jets, o->f.get()), o->m).to_json();
        });
    }
    {
        struct O {
            FieldOpt f;
            std::string jets;
            int n = 8;
            double r = 1, rho = 1, r_n = 0;
            std::optional<int> z_upper;
        };
        auto o = std::make_shared<O>();
        auto* sub = alg->add_subcommand("geap", "growth inequality for the algebraic measure");
        add_field(sub, o->f);
        sub->add_option("--jets", o->jets, "jet file")->required();
        sub->add_option("--n", o->n)->capture_default_str();
        sub->add_option("--r", o->r)->capture_default_str();
        sub->add_option("--rho", o->rho, "constant order used to solve r_n^rho = n")->capture_default_str();
        sub->add_option("--r-n", o->r_n, "r_n directly (overrides --rho)");
        sub->add_option("--z-upper", o->z_upper, "cap on the zero count mu");
        d.bind(sub, "algebraic geap", "exact", [o](Context& ctx) {
            auto E = load_jets(ctx, o->jets, o->f.get());
            double rn = o->r_n > 0 ? o->r_n : core::solve_rn(core::OrderEstimate::constant(o->rho), o->n);
            auto rec = geap_bound(E, o->n, o->r, rn, o->z_upper);
            auto pg = pgeap_check(E, o->n, o->r, rn, rec.z_upper);
            return json{{"geap", rec.to_json()}, {"cardinality_test", pg.to_json()}};
        });
    }
    {
        struct O {
            FieldOpt f;
            std::string fn = "exp";
            std::vector<std::string> A{"2", "4", "8"};
            double rho = 1, tol = 1e-9;
        };
        auto o = std::make_shared<O>();
        auto* sub = alg->add_subcommand("proportion", "share of I_K(A) mapped into I_K(exp A^rho)");
        o->f.name = "Q(i)";
        add_field(sub, o->f);
        sub->add_option("--fn", o->fn)->capture_default_str();
        sub->add_option("--A", o->A)->capture_default_str();
        sub->add_option("--rho", o->rho, "constant order of the envelope")->capture_default_str();
        sub->add_option("--tol", o->tol, "membership tolerance")->capture_default_str();
        d.bind(sub, "algebraic proportion", "double", [o](Context& ctx) {
            return proportion_experiment(o->f.get(), core::EntireFunction::parse(o->fn), rationals(o->A),
                                         core::OrderEstimate::constant(o->rho), o->tol, ctx.workers)
                .to_json();
        });
    }
}

} // namespace tmlab::cli
