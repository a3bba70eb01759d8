// Command-line front end: verification suites, bound pipelines, the
// parameter optimizer, and coefficient-cache generation, with JSON reports.

#include "cbt/btpipeline.hpp"
#include "cbt/density.hpp"
#include "cbt/errors.hpp"
#include "cbt/forms.hpp"
#include "cbt/ltpipeline.hpp"
#include "cbt/optimizer.hpp"
#include "cbt/report.hpp"
#include "cbt/suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <optional>
#include <string>

namespace {

using cbt::report::RunReport;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecision = 3;

struct GlobalOpts {
    bool json = false;
    std::string out;
    std::string config;
};

nlohmann::json load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw cbt::bounds_error("cannot open config file " + path);
    nlohmann::json j;
    f >> j;
    return j;
}

// flags win over config values; config fills only unset options
template <typename T>
void fill_from_config(const CLI::App& app, const nlohmann::json& cfg,
                      const std::string& key, T& value) {
    if (!cfg.contains(key)) return;
    const CLI::Option* opt = app.get_option_no_throw("--" + key);
    if (opt && opt->count() > 0) return;
    value = cfg.at(key).get<T>();
}

int emit(const RunReport& rep, const GlobalOpts& g) {
    if (g.json)
        std::printf("%s\n", rep.to_json().c_str());
    else
        rep.print(stdout);
    if (!g.out.empty()) {
        std::ofstream f(g.out);
        if (!f) throw cbt::bounds_error("cannot open output file " + g.out);
        f << rep.to_json() << "\n";
    }
    return rep.failed() ? kExitFail : kExitPass;
}

int run_verify(const std::string& suite, const GlobalOpts& g) {
    RunReport rep;
    if (suite == "all")
        rep = cbt::suites::all_suites();
    else if (suite == "primes")
        rep = cbt::suites::primes_suite();
    else if (suite == "bt")
        rep = cbt::suites::bt_suite();
    else if (suite == "lt")
        rep = cbt::suites::lt_suite();
    else if (suite == "density")
        rep = cbt::suites::density_suite();
    else if (suite == "forms")
        rep = cbt::suites::forms_suite();
    else {
        std::fprintf(stderr, "unknown suite '%s' (expected all|bt|lt|density|forms|primes)\n",
                     suite.c_str());
        return kExitUsage;
    }
    return emit(rep, g);
}

int run_bt(unsigned nk, double dk, double q, std::optional<double> logx,
           std::optional<cbt::btpipeline::SieveParams> custom, const GlobalOpts& g) {
    cbt::fieldparams::AbelianExtensionData field{nk, dk, q, {}, {}};
    RunReport rep;
    rep.command = "bt";
    rep.inputs = {{"nk", std::to_string(nk)},
                  {"dk", cbt::report::format_double(dk)},
                  {"q", cbt::report::format_double(q)}};
    if (custom) {
        auto table = cbt::primes::sieve_primes(1000);
        double b = 1.0 / (2.0 * std::log1p(std::pow(400.0, -custom->delta)));
        double zm = cbt::fieldparams::zm_log_bound(nk, dk, q, custom->delta, 400.0, b, table);
        double degLK = cbt::fieldparams::degree_bound(nk, dk, q, 1.0);
        auto rg = cbt::btpipeline::bt_ugly(field, *custom, degLK, zm);
        rep.add_value("leading constant", "bt.param.constant", rg.constant);
        rep.add_value("log range", "bt.param.range", rg.log_range);
        for (const auto& [k, v] : rg.components) rep.add_value(k, "bt.param." + k, v);
    } else {
        auto ab = cbt::btpipeline::bt_abelian(field);
        rep.add_value("leading constant", "bt.abelian.constant", ab.constant);
        rep.add_value("log range", "bt.abelian.range", ab.log_range);
        rep.add_check("computed constant <= 11.29", "bt.abelian.constant.computed",
                      ab.component("computed_constant"), ab.component("constant_majorant_holds") == 1.0);
        rep.add_check("nu <= 4.189", "bt.abelian.nu", ab.component("nu"),
                      ab.component("nu_majorant_holds") == 1.0);
        rep.add_check("closed form dominates pipeline range", "bt.abelian.dominance",
                      ab.component("ugly_log_range"), ab.component("closed_form_dominates") == 1.0);
        if (logx) {
            auto gen = cbt::btpipeline::bt_general(field, *logx);
            rep.add_check("general bound valid at log x", "bt.general.valid", *logx, gen.valid);
            rep.add_value("general constant", "bt.general.constant", gen.constant);
        }
    }
    return emit(rep, g);
}

int run_lt(const std::string& form, const std::string& a, double logx, double r,
           double theta, const GlobalOpts& g) {
    cbt::ltpipeline::NewformProfile prof;
    bool a_zero = (a == "zero");
    if (form == "delta")
        prof = a_zero ? cbt::ltpipeline::NewformProfile::weight12_zero_trace()
                      : cbt::ltpipeline::NewformProfile::weight12_general();
    else if (form == "11a")
        prof = cbt::ltpipeline::NewformProfile::level11_weight2();
    else {
        std::fprintf(stderr, "unknown form '%s' (expected delta|11a)\n", form.c_str());
        return kExitUsage;
    }
    if (a != "zero" && a != "general") {
        std::fprintf(stderr, "unknown trace class '%s' (expected zero|general)\n", a.c_str());
        return kExitUsage;
    }
    RunReport rep;
    rep.command = "lt";
    rep.inputs = {{"form", form}, {"a", a},
                  {"logx", cbt::report::format_double(logx)},
                  {"r", cbt::report::format_double(r)},
                  {"theta", cbt::report::format_double(theta)}};
    double lx_target = cbt::ltpipeline::ell_of_x(logx, theta);
    std::uint64_t ell1 = cbt::primes::largest_admissible_prime(lx_target, prof.k_f - 1, prof.q);
    auto mb = cbt::ltpipeline::main_bound(prof, logx, r, ell1, a_zero);
    rep.add_value("ell(x)", "lt.ellofx", lx_target);
    rep.add_value("ell1", "lt.ell1", (double)ell1);
    rep.add_check("condition A (admissible prime)", "lt.condA", (double)ell1, mb.conditions.condA);
    rep.add_check("condition B (range)", "lt.condB", mb.conditions.tower_log_range, mb.conditions.condB);
    rep.add_check("condition C (prime size)", "lt.condC", (double)mb.conditions.t, mb.conditions.condC);
    rep.add_check("condition D (interval primes)", "lt.condD",
                  (double)mb.conditions.interval_count, mb.conditions.condD);
    rep.add_text("condition D certification", "lt.condD.method", mb.conditions.condD_method);
    rep.add_value("main coefficient", "lt.coef.main", mb.coef_main);
    rep.add_value("secondary coefficient", "lt.coef.tail", mb.coef_tail);
    rep.add_value("log bound", "lt.bound.log", mb.log_bound);
    rep.add_value("headline coefficient", "lt.coefficient",
                  cbt::ltpipeline::asymptotic_coefficient(prof, theta, r, 0.5));
    return emit(rep, g);
}

int run_density(const std::string& form, const GlobalOpts& g) {
    cbt::density::DensityInputs d;
    if (form == "delta")
        d = cbt::density::DensityInputs::weight12();
    else if (form == "11a")
        d = cbt::density::DensityInputs::level11();
    else {
        std::fprintf(stderr, "unknown form '%s' (expected delta|11a)\n", form.c_str());
        return kExitUsage;
    }
    RunReport rep;
    rep.command = "density";
    rep.inputs = {{"form", form}};
    auto mid = cbt::density::middle_integral(d);
    auto bound = cbt::density::density_lower_bound(d);
    rep.add_value("middle integral upper", "density.middle", mid.total);
    rep.add_value("middle exceptional (exact form)", "density.middle.exceptional", mid.exceptional_exact);
    rep.add_value("middle exceptional (simple form)", "density.middle.exceptional.simple",
                  mid.exceptional_simple);
    rep.add_value("tail integral upper", "density.tail", bound.tail);
    if (form == "delta") {
        rep.add_check("middle <= 1.1358e-12", "density.middle.budget", mid.total, mid.total <= 1.1358e-12);
        rep.add_check("tail < 9.824e-15", "density.tail.budget", bound.tail, bound.tail < 9.824e-15);
        rep.add_check("density > 1 - 1.15e-12", "density.lower", bound.complement_upper,
                      bound.complement_upper < 1.15e-12);
    } else {
        rep.add_check("middle < 4.898", "density.middle.budget", mid.total, mid.total < 4.898);
        rep.add_check("tail < 0.281", "density.tail.budget", bound.tail, bound.tail < 0.281);
        rep.add_check("density > 0.004769", "density.lower", bound.lower, bound.lower > 0.004769);
    }
    return emit(rep, g);
}

int run_optimize(const GlobalOpts& g) {
    cbt::optimizer::ObjectiveSpec spec;
    spec.field = {1, 1.0, 1.0, {}, {}};
    if (!g.config.empty()) {
        auto cfg = load_config(g.config);
        std::string target = cfg.value("target", "leading_constant");
        if (target == "leading_constant") spec.target = cbt::optimizer::Target::leading_constant;
        else if (target == "dq_exponent") spec.target = cbt::optimizer::Target::dq_exponent;
        else if (target == "n_exponent") spec.target = cbt::optimizer::Target::n_exponent;
        else if (target == "log_range_at") spec.target = cbt::optimizer::Target::log_range_at;
        else throw cbt::domain_error("optimize: unknown target " + target);
        if (cfg.contains("caps")) {
            auto& c = cfg["caps"];
            if (c.contains("constant")) spec.caps.constant = c["constant"].get<double>();
            if (c.contains("dq_exp")) spec.caps.dq_exp = c["dq_exp"].get<double>();
            if (c.contains("n_exp")) spec.caps.n_exp = c["n_exp"].get<double>();
            if (c.contains("log_range")) spec.caps.log_range = c["log_range"].get<double>();
        }
        auto axis = [&](const char* name, cbt::optimizer::GridAxis& ax) {
            if (!cfg.contains("grid") || !cfg["grid"].contains(name)) return;
            auto& a = cfg["grid"][name];
            ax.lo = a.at(0).get<double>();
            ax.hi = a.at(1).get<double>();
            ax.steps = a.at(2).get<unsigned>();
        };
        axis("delta", spec.delta);
        axis("eta", spec.eta);
        axis("epsilon", spec.epsilon);
        axis("omega", spec.omega);
        axis("gamma", spec.gamma);
        spec.refine_rounds = cfg.value("refine_rounds", 2u);
        spec.M = cfg.value("M", 400.0);
        if (cfg.contains("field")) {
            spec.field.n_K = cfg["field"].value("nk", 1u);
            spec.field.D_K = cfg["field"].value("dk", 1.0);
            spec.field.Q = cfg["field"].value("q", 1.0);
        }
    }
    auto res = cbt::optimizer::optimize(spec);
    RunReport rep;
    rep.command = "optimize";
    rep.add_value("best delta", "opt.best.delta", res.best.delta);
    rep.add_value("best eta", "opt.best.eta", res.best.eta);
    rep.add_value("best epsilon", "opt.best.epsilon", res.best.epsilon);
    rep.add_value("best omega", "opt.best.omega", res.best.omega);
    rep.add_value("best gamma", "opt.best.gamma", res.best.gamma);
    rep.add_value("objective value", "opt.value", res.value);
    rep.add_value("constant", "opt.figures.constant", res.figures.constant);
    rep.add_value("dq exponent", "opt.figures.dq", res.figures.dq_exp);
    rep.add_value("n exponent", "opt.figures.n", res.figures.n_exp);
    rep.add_value("log range", "opt.figures.range", res.figures.log_range);
    rep.add_value("evaluations", "opt.trace.size", (double)res.trace.size());
    return emit(rep, g);
}

int run_coeffs(const std::string& form, std::uint64_t n, const std::string& out_path) {
    if (out_path.empty()) {
        std::fprintf(stderr, "coeffs: --out PATH is required\n");
        return kExitUsage;
    }
    cbt::forms::QSeries s;
    if (form == "delta")
        s = cbt::forms::tau_series(n);
    else if (form == "11a")
        s = cbt::forms::f11_series(n);
    else {
        std::fprintf(stderr, "unknown form '%s' (expected delta|11a)\n", form.c_str());
        return kExitUsage;
    }
    cbt::forms::write_coefficient_cache(out_path, s);
    std::printf("wrote %llu coefficients to %s\n", (unsigned long long)s.N, out_path.c_str());
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified bound pipelines and verification suites"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    GlobalOpts g;
    app.add_flag("--json", g.json, "print the machine-readable report");
    app.add_option("--out", g.out, "write the JSON report to a file");
    app.add_option("--config", g.config, "JSON config file (flags win on conflict)");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite = "all";
    verify->add_option("suite", suite, "all|bt|lt|density|forms|primes");

    auto* bt = app.add_subcommand("bt", "abelian/general bound pipeline");
    unsigned nk = 1;
    double dk = 1.0, qv = 1.0;
    double logx = 0.0, rr = 4.0, theta = 0.0;
    double pd = 0, pe = 0, pp = 0, po = 0, pg = 0;
    bt->add_option("--nk", nk, "degree of the base field");
    bt->add_option("--dk", dk, "absolute discriminant");
    bt->add_option("--q", qv, "maximal conductor norm");
    auto* o_logx = bt->add_option("--logx", logx, "evaluate validity at this log x");
    auto* o_pd = bt->add_option("--delta", pd, "custom sieve delta");
    auto* o_pe = bt->add_option("--eta", pe, "custom sieve eta");
    auto* o_pp = bt->add_option("--epsilon", pp, "custom sieve epsilon");
    auto* o_po = bt->add_option("--omega", po, "custom sieve omega");
    auto* o_pg = bt->add_option("--gamma", pg, "custom sieve gamma");

    auto* lt = app.add_subcommand("lt", "coefficient-bound conditions and coefficients");
    std::string form = "delta", aclass = "zero";
    lt->add_option("--form", form, "delta|11a");
    lt->add_option("--a", aclass, "zero|general");
    auto* lt_logx = lt->add_option("--logx", logx, "log x (defaults per form)");
    auto* lt_r = lt->add_option("--r", rr, "sieve exponent r");
    auto* lt_theta = lt->add_option("--theta", theta, "prime-size parameter theta");

    auto* density = app.add_subcommand("density", "nonvanishing density pipeline");
    density->add_option("--form", form, "delta|11a");

    app.add_subcommand("optimize", "search sieve parameters (spec via --config)");

    auto* coeffs = app.add_subcommand("coeffs", "write a coefficient cache file");
    std::uint64_t ncoe = 1000;
    coeffs->add_option("--form", form, "delta|11a");
    coeffs->add_option("--n", ncoe, "truncation length");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        nlohmann::json cfg;
        if (!g.config.empty() && !app.got_subcommand("optimize")) cfg = load_config(g.config);

        if (app.got_subcommand(verify)) return run_verify(suite, g);
        if (app.got_subcommand(bt)) {
            fill_from_config(*bt, cfg, "nk", nk);
            fill_from_config(*bt, cfg, "dk", dk);
            fill_from_config(*bt, cfg, "q", qv);
            std::optional<double> lx;
            if (o_logx->count() > 0 || cfg.contains("logx")) {
                fill_from_config(*bt, cfg, "logx", logx);
                lx = logx;
            }
            std::optional<cbt::btpipeline::SieveParams> custom;
            if (o_pd->count() || o_pe->count() || o_pp->count() || o_po->count() || o_pg->count()) {
                auto ref = cbt::btpipeline::SieveParams::reference();
                custom = cbt::btpipeline::SieveParams{
                    o_pd->count() ? pd : ref.delta, o_pe->count() ? pe : ref.eta,
                    o_pp->count() ? pp : ref.epsilon, o_po->count() ? po : ref.omega,
                    o_pg->count() ? pg : ref.gamma};
            }
            return run_bt(nk, dk, qv, lx, custom, g);
        }
        if (app.got_subcommand(lt)) {
            fill_from_config(*lt, cfg, "form", form);
            fill_from_config(*lt, cfg, "a", aclass);
            bool is11 = (form == "11a");
            if (!lt_logx->count() && !cfg.contains("logx")) logx = std::exp(is11 ? 13.0 : 16.0);
            else fill_from_config(*lt, cfg, "logx", logx);
            if (!lt_r->count() && !cfg.contains("r")) rr = is11 ? 2.0 : 4.0;
            else fill_from_config(*lt, cfg, "r", rr);
            if (!lt_theta->count() && !cfg.contains("theta"))
                theta = is11 ? 0.055 : (aclass == "zero" ? 0.04 : 0.06);
            else fill_from_config(*lt, cfg, "theta", theta);
            return run_lt(form, aclass, logx, rr, theta, g);
        }
        if (app.got_subcommand(density)) {
            fill_from_config(*density, cfg, "form", form);
            return run_density(form, g);
        }
        if (app.got_subcommand("optimize")) return run_optimize(g);
        if (app.got_subcommand(coeffs)) {
            fill_from_config(*coeffs, cfg, "form", form);
            return run_coeffs(form, ncoe, g.out);
        }
    } catch (const cbt::bounds_error& e) {
        std::fprintf(stderr, "bounds error: %s\n", e.what());
        return kExitPrecision;
    } catch (const cbt::precision_error& e) {
        std::fprintf(stderr, "precision error: %s\n", e.what());
        return kExitPrecision;
    } catch (const cbt::domain_error& e) {
        std::fprintf(stderr, "domain error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitFail;
    }
    return kExitUsage;
}
