#include "cbt/btpipeline.hpp"

#include "cbt/certified.hpp"
#include "cbt/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace cbt::btpipeline {

namespace {

const primes::PrimeTable& small_prime_table() {
    static const primes::PrimeTable table = primes::sieve_primes(1000);
    return table;
}

double reference_zm_log(const fieldparams::AbelianExtensionData& field) {
    const double delta = 0.1, M = 400.0;
    double b = 1.0 / (2.0 * std::log1p(std::pow(M, -delta)));
    return fieldparams::zm_log_bound(field.n_K, field.D_K, field.Q, delta, M, b, small_prime_table());
}

double reference_degree_bound(const fieldparams::AbelianExtensionData& field) {
    return fieldparams::degree_bound(field.n_K, field.D_K, field.Q, 1.0);
}

} // namespace

bool SieveParams::in_box() const {
    for (double v : {delta, eta, epsilon, omega, gamma})
        if (!(v > 0.0 && v < 0.5)) return false;
    return true;
}

void SieveParams::require_valid() const {
    if (!in_box()) throw domain_error("SieveParams: parameters must lie strictly inside (0, 1/2)");
    if (!(slack() > 0.0)) throw domain_error("SieveParams: slack 1 - delta - 2 omega (1+gamma) must be positive");
}

SieveParams SieveParams::reference() {
    return SieveParams{0.1, 1.0 / 21.0, 0.25, 0.25, 0.2};
}

double BoundReport::component(const std::string& name) const {
    auto it = components.find(name);
    if (it == components.end()) throw not_found_error("BoundReport: missing component " + name);
    return it->second;
}

double log_error_term_E(const fieldparams::AbelianExtensionData& field,
                        const SieveParams& p, double zm_log) {
    field.validate();
    if (!p.in_box()) throw domain_error("log_error_term_E: sieve parameters out of range");
    double n = (double)field.n_K;
    double d = p.delta, e = p.epsilon;
    double v = zm_log
        + std::log(8.0 / (3.0 * M_PI))
        + std::log((1.0 + d) / (d * (1.0 - d)))
        + n * std::log1p(1.0 / d)
        + d * e
        + 0.5 * (field.log_DQ() - n * std::log(2.0 * M_PI))
        + 0.5 * n * std::log(2.0)
        + (0.5 * n + 1.0) * std::log((2.0 / e) * (1.0 + e))
        + 0.5 * n * std::log(n);
    return cert::up(v);
}

double error_term_E(const fieldparams::AbelianExtensionData& field,
                    const SieveParams& p, double zm_log, double x) {
    if (!(x > 0.0)) throw domain_error("error_term_E: x must be positive");
    double lv = log_error_term_E(field, p, zm_log) + p.delta * std::log(x);
    if (lv > 700.0) throw bounds_error("error_term_E: value overflows; use log_error_term_E");
    return cert::up(std::exp(lv));
}

VConstants v_lower_constants(const SieveParams& p) {
    p.require_valid();
    double ew = p.epsilon * p.omega;
    double logB = std::log((1.0 / ew) * (1.0 + ew) * (1.0 + std::exp(p.epsilon)));
    double c11 = 0.5 * std::log(2.0) - 0.5 - std::log(M_PI)
        + std::log((p.eta + 1.0) / (p.eta * (1.0 - p.eta)))
        + ew / 2.0 + 1.5 * logB;
    double c12 = 0.5 - 0.5 * std::log(M_PI)
        + std::log((p.eta + 1.0) / p.eta) + 0.5 * logB;
    return {cert::up(c11), cert::up(c12)};
}

double v_range_threshold(const fieldparams::AbelianExtensionData& field, const SieveParams& p) {
    field.validate();
    auto [c11, c12] = v_lower_constants(p);
    double n = (double)field.n_K;
    double v = p.epsilon + 2.0 / ((1.0 - p.eta) * p.omega)
        * (c11 + c12 * n + 0.5 * n * std::log(n) + 0.5 * std::log(field.D_K));
    return cert::up(v);
}

double v_oracle(const fieldparams::OracleField& f, double z) {
    if (!(z >= 0.0)) throw domain_error("v_oracle: z must be >= 0");
    if (z > 1e7) throw bounds_error("v_oracle: z exceeds 1e7 ceiling");
    std::uint64_t fz = (std::uint64_t)std::floor(z);
    long double sum = 0.0L;
    if (f.tag == fieldparams::OracleTag::RationalField) {
        for (std::uint64_t n = 1; n <= fz; ++n) sum += 1.0L / (long double)n;
        return (double)sum;
    }
    // sum_{n<=z} r(n)/n = sum_{d odd} chi(d)/d * H(floor(z/d))
    for (std::uint64_t d = 1; d <= fz; d += 2) {
        std::uint64_t K = fz / d;
        long double H = 0.0L;
        for (std::uint64_t k = 1; k <= K; ++k) H += 1.0L / (long double)k;
        if ((d & 3u) == 1)
            sum += H / (long double)d;
        else
            sum -= H / (long double)d;
    }
    return (double)sum;
}

SelbergBound selberg_bound(const fieldparams::AbelianExtensionData& field,
                           const SieveParams& p, double x, double degLK, double E) {
    p.require_valid();
    if (!(x >= 3.0)) throw domain_error("selberg_bound: x must be >= 3");
    if (!(degLK >= 1.0)) throw domain_error("selberg_bound: [L:K] must be >= 1");
    double n = (double)field.n_K;
    double lx = std::log(x);
    double t1 = 2.52 * n * std::sqrt(x) / lx;
    double t2 = 2.0 * std::exp(p.epsilon) * x / (p.omega * degLK * lx);
    double sq = std::exp(n * std::log1p(1.0 / p.gamma) + p.omega * (1.0 + p.gamma) * lx);
    double t3 = E * sq * sq;
    SelbergBound out;
    out.value = cert::up(t1 + t2 + t3);
    out.valid = lx >= v_range_threshold(field, p);
    return out;
}

double log_C_factor(const fieldparams::AbelianExtensionData& field,
                    const SieveParams& p, double degLK, double zm_log) {
    if (!(degLK >= 1.0)) throw domain_error("log_C_factor: [L:K] must be >= 1");
    double v = log_error_term_E(field, p, zm_log)
        + 2.0 * (double)field.n_K * std::log1p(1.0 / p.gamma)
        + std::log(degLK);
    return cert::up(v);
}

double nu_exponent(const SieveParams& p, double log_C) {
    p.require_valid();
    double s = p.slack();
    double y = log_C - std::log(s);
    if (!(y > 0.0)) throw domain_error("nu_exponent: requires C/slack > 1");
    return cert::up((1.0 / s) * (1.0 + std::sqrt(2.0 / y)));
}

BoundReport bt_ugly(const fieldparams::AbelianExtensionData& field, const SieveParams& p,
                    double degLK, double zm_log) {
    field.validate();
    BoundReport r;
    if (!p.valid()) {
        r.valid = false;
        r.constant = 0.0;
        r.log_range = std::numeric_limits<double>::infinity();
        return r;
    }
    double n = (double)field.n_K;
    auto [c11, c12] = v_lower_constants(p);
    double logC = log_C_factor(field, p, degLK, zm_log);
    double nu = nu_exponent(p, logC);
    double th1 = v_range_threshold(field, p);
    double th2 = cert::up(2.0 * std::log(252.0 * n * degLK));
    double th3 = cert::up(nu * (logC - std::log(p.slack())));
    r.constant = cert::up(1.01 + 2.0 * std::exp(p.epsilon) / p.omega);
    r.log_range = std::max({th1, th2, th3});
    r.valid = true;
    r.components = {
        {"c11", c11},
        {"c12", c12},
        {"log_E_at_x1", log_error_term_E(field, p, zm_log)},
        {"log_C", logC},
        {"nu", nu},
        {"threshold_v", th1},
        {"threshold_small_primes", th2},
        {"threshold_error_term", th3},
    };
    r.trail = {
        {"leading-constant", "bt.param.constant", r.constant},
        {"log-range", "bt.param.range", r.log_range},
    };
    return r;
}

BoundReport bt_abelian(const fieldparams::AbelianExtensionData& field) {
    field.validate();
    SieveParams p = SieveParams::reference();
    double zm = reference_zm_log(field);
    double degLK = reference_degree_bound(field);
    BoundReport ugly = bt_ugly(field, p, degLK, zm);

    double n = (double)field.n_K;
    double closed = cert::up(36.0 + 92.0 * n + 8.4 * field.log_DQ() + 4.2 * n * std::log(n));
    double computed_constant = ugly.constant;
    double nu = ugly.component("nu");

    BoundReport r;
    r.constant = 11.29;
    r.log_range = closed;
    r.valid = true;
    r.components = ugly.components;
    r.components["computed_constant"] = computed_constant;
    r.components["constant_majorant_holds"] = computed_constant <= 11.29 ? 1.0 : 0.0;
    r.components["nu_majorant_holds"] = nu <= 4.189 ? 1.0 : 0.0;
    r.components["ugly_log_range"] = ugly.log_range;
    r.components["closed_form_dominates"] = ugly.log_range <= closed ? 1.0 : 0.0;
    r.components["zm_log"] = zm;
    r.components["degree_bound"] = degLK;
    r.trail = {
        {"leading-constant", "bt.abelian.constant", r.constant},
        {"computed-constant", "bt.abelian.constant.computed", computed_constant},
        {"log-range", "bt.abelian.range", r.log_range},
        {"pipeline-log-range", "bt.param.range", ugly.log_range},
    };
    return r;
}

BaseChangeChecks base_change_checks_log(const fieldparams::AbelianExtensionData& field,
                                        double degLK, double log_x) {
    field.validate();
    if (!(log_x >= std::log(3.0))) throw domain_error("base_change_checks: x must be >= 3");
    if (!(degLK >= 1.0)) throw domain_error("base_change_checks: [L:K] must be >= 1");
    BaseChangeChecks out;
    // right side x/(200 log x), in logs, rounded downward
    double rhs = cert::down(log_x - std::log(200.0) - std::log(log_x));
    double lhs1 = cert::up(std::log((double)field.n_K * degLK) + 0.5 * log_x);
    out.degree_term = lhs1 <= rhs;
    double cond = (2.0 / std::log(2.0)) * (std::log(field.D_K) + degLK * std::log(field.Q));
    if (cond <= 0.0)
        out.conductor_term = true;
    else
        out.conductor_term = cert::up(std::log(cond)) <= rhs;
    return out;
}

BaseChangeChecks base_change_checks(const fieldparams::AbelianExtensionData& field,
                                    double degLK, double x) {
    if (!(x >= 3.0)) throw domain_error("base_change_checks: x must be >= 3");
    return base_change_checks_log(field, degLK, std::log(x));
}

BoundReport bt_general(const fieldparams::AbelianExtensionData& field, double log_x) {
    BoundReport ab = bt_abelian(field);
    double degLK = ab.component("degree_bound");
    BoundReport r;
    r.constant = 11.3;
    r.log_range = ab.log_range;
    r.components = ab.components;
    r.components["class_fraction_slot"] = 1.0;
    bool in_range = log_x >= ab.log_range;
    BaseChangeChecks bc = base_change_checks_log(field, degLK, log_x);
    r.components["base_change_degree_ok"] = bc.degree_term ? 1.0 : 0.0;
    r.components["base_change_conductor_ok"] = bc.conductor_term ? 1.0 : 0.0;
    r.valid = in_range && bc.degree_term && bc.conductor_term;
    r.trail = {
        {"leading-constant", "bt.general.constant", r.constant},
        {"log-range", "bt.general.range", r.log_range},
        {"valid-at-logx", "bt.general.valid", r.valid ? 1.0 : 0.0},
    };
    return r;
}

} // namespace cbt::btpipeline
