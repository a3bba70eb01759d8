#include "cbt/optimizer.hpp"

#include "cbt/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>

namespace cbt::optimizer {

namespace {

const primes::PrimeTable& local_table() {
    static const primes::PrimeTable t = primes::sieve_primes(2000);
    return t;
}

double canonical_b(double M, double delta) {
    return 1.0 / (2.0 * std::log1p(std::pow(M, -delta)));
}

double pipeline_log_range(const btpipeline::SieveParams& p, double M, double b,
                          const fieldparams::AbelianExtensionData& field) {
    double zm = fieldparams::zm_log_bound(field.n_K, field.D_K, field.Q, p.delta, M, b, local_table());
    double degLK = fieldparams::degree_bound(field.n_K, field.D_K, field.Q, 1.0);
    return btpipeline::bt_ugly(field, p, degLK, zm).log_range;
}

std::array<double, 5> as_array(const btpipeline::SieveParams& p) {
    return {p.delta, p.eta, p.epsilon, p.omega, p.gamma};
}

bool lex_less(const btpipeline::SieveParams& a, const btpipeline::SieveParams& b) {
    return as_array(a) < as_array(b);
}

double objective_value(Target t, const PointFigures& f) {
    switch (t) {
    case Target::leading_constant: return f.constant;
    case Target::dq_exponent: return f.dq_exp;
    case Target::n_exponent: return f.n_exp;
    case Target::log_range_at: return f.log_range;
    }
    return f.constant;
}

bool within_caps(const Caps& c, const PointFigures& f) {
    if (c.constant && f.constant > *c.constant) return false;
    if (c.dq_exp && f.dq_exp > *c.dq_exp) return false;
    if (c.n_exp && f.n_exp > *c.n_exp) return false;
    if (c.log_range && f.log_range > *c.log_range) return false;
    return true;
}

} // namespace

PointFigures evaluate_point(const btpipeline::SieveParams& p, double M, double b,
                            const fieldparams::AbelianExtensionData& field) {
    PointFigures f;
    if (!p.valid()) return f; // infeasible point, all-zero figures
    if (b <= 0.0) b = canonical_b(M, p.delta);
    f.constant = 1.01 + 2.0 * std::exp(p.epsilon) / p.omega;
    f.log_range = pipeline_log_range(p, M, b, field);

    // slope of the log-range in log(D_K Q) across three decades
    fieldparams::AbelianExtensionData big = field;
    big.Q = field.Q * 1e3;
    double lr_big = pipeline_log_range(p, M, b, big);
    f.dq_exp = (lr_big - f.log_range) / (3.0 * std::log(10.0));

    // n log n coefficient through n, 2n, 4n
    unsigned n0 = std::max(field.n_K, 10u);
    std::array<double, 3> ns = {(double)n0, 2.0 * n0, 4.0 * n0};
    std::array<double, 3> ls{};
    for (int i = 0; i < 3; ++i) {
        fieldparams::AbelianExtensionData fd = field;
        fd.n_K = (unsigned)ns[i];
        ls[i] = pipeline_log_range(p, M, b, fd);
    }
    // solve L = A + B n + C n log n for C
    double x1 = ns[0], x2 = ns[1], x3 = ns[2];
    double w1 = x1 * std::log(x1), w2 = x2 * std::log(x2), w3 = x3 * std::log(x3);
    double d21 = ls[1] - ls[0], d31 = ls[2] - ls[0];
    double det = (x2 - x1) * (w3 - w1) - (x3 - x1) * (w2 - w1);
    f.n_exp = ((x2 - x1) * d31 - (x3 - x1) * d21) / det;

    f.feasible = true;
    return f;
}

OptimizeResult optimize(const ObjectiveSpec& spec) {
    for (const GridAxis* ax : {&spec.delta, &spec.eta, &spec.epsilon, &spec.omega, &spec.gamma}) {
        if (!(ax->lo > 0.0 && ax->hi < 0.5 && ax->lo <= ax->hi) || ax->steps < 1)
            throw domain_error("optimize: grid axes must sit inside (0, 1/2) with >= 1 step");
    }
    auto axis_values = [](const GridAxis& a) {
        std::vector<double> v;
        if (a.steps == 1) {
            v.push_back(0.5 * (a.lo + a.hi));
            return v;
        }
        for (unsigned i = 0; i < a.steps; ++i)
            v.push_back(a.lo + (a.hi - a.lo) * (double)i / (double)(a.steps - 1));
        return v;
    };
    auto vd = axis_values(spec.delta), ve = axis_values(spec.eta), vp = axis_values(spec.epsilon),
         vo = axis_values(spec.omega), vg = axis_values(spec.gamma);
    std::uint64_t total = (std::uint64_t)vd.size() * ve.size() * vp.size() * vo.size() * vg.size();
    if (total > 300'000) throw bounds_error("optimize: grid too large");

    OptimizeResult best;
    bool have = false;
    std::vector<std::string> trace;
    auto consider = [&](const btpipeline::SieveParams& p, const char* tag) {
        PointFigures f = evaluate_point(p, spec.M, -1.0, spec.field);
        if (!f.feasible || !within_caps(spec.caps, f)) return;
        double v = objective_value(spec.target, f);
        char buf[160];
        std::snprintf(buf, sizeof buf, "%s d=%.6f h=%.6f e=%.6f w=%.6f g=%.6f -> %.6f",
                      tag, p.delta, p.eta, p.epsilon, p.omega, p.gamma, v);
        trace.push_back(buf);
        if (!have || v < best.value || (v == best.value && lex_less(p, best.best))) {
            have = true;
            best.best = p;
            best.figures = f;
            best.value = v;
        }
    };

    for (double d : vd)
        for (double h : ve)
            for (double e : vp)
                for (double w : vo)
                    for (double g : vg) consider({d, h, e, w, g}, "grid");
    consider(btpipeline::SieveParams::reference(), "seed");

    if (!have) throw not_found_error("optimize: no feasible point in the grid");

    // coordinatewise bisection refinement around the incumbent
    std::array<double, 5> step = {
        vd.size() > 1 ? (vd[1] - vd[0]) : 0.05,
        ve.size() > 1 ? (ve[1] - ve[0]) : 0.05,
        vp.size() > 1 ? (vp[1] - vp[0]) : 0.05,
        vo.size() > 1 ? (vo[1] - vo[0]) : 0.05,
        vg.size() > 1 ? (vg[1] - vg[0]) : 0.05,
    };
    for (unsigned round = 0; round < spec.refine_rounds; ++round) {
        for (int coord = 0; coord < 5; ++coord) {
            double delta_step = step[coord] / (double)(2u << round);
            for (double sgn : {-1.0, 1.0}) {
                auto arr = as_array(best.best);
                arr[coord] += sgn * delta_step;
                if (!(arr[coord] > 0.0 && arr[coord] < 0.5)) continue;
                consider({arr[0], arr[1], arr[2], arr[3], arr[4]}, "refine");
            }
        }
    }
    best.trace = std::move(trace);
    return best;
}

} // namespace cbt::optimizer
