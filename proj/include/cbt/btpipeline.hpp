#pragma once

#include "cbt/fieldparams.hpp"

#include <map>
#include <string>
#include <vector>

namespace cbt::btpipeline {

// The five sieve tuning parameters, each strictly inside (0, 1/2).  The
// derived slack 1 - delta - 2 omega (1 + gamma) must be positive for the
// range machinery to close.
struct SieveParams {
    double delta;
    double eta;
    double epsilon;
    double omega;
    double gamma;

    double slack() const { return 1.0 - delta - 2.0 * omega * (1.0 + gamma); }
    bool in_box() const;
    bool valid() const { return in_box() && slack() > 0.0; }
    void require_valid() const;

    // delta = 1/10, eta = 1/21, epsilon = omega = 1/4, gamma = 1/5
    static SieveParams reference();
};

struct TrailEntry {
    std::string name;
    std::string anchor;
    double value;
};

// A computed certified bound: leading constant (on x/([L:K] log x) or
// x/log x), minimal valid log x, named intermediate quantities, and the
// evaluation trail.
struct BoundReport {
    double constant = 0.0;
    double log_range = 0.0;
    std::map<std::string, double> components;
    bool valid = false;
    std::vector<TrailEntry> trail;

    double component(const std::string& name) const;
};

// log of the x-independent part of the smoothing error term E(x); the full
// term is exp(log_E + delta log x).
double log_error_term_E(const fieldparams::AbelianExtensionData& field,
                        const SieveParams& p, double zm_log);

// E(x) itself, for desk-scale x (throws on overflow-scale inputs).
double error_term_E(const fieldparams::AbelianExtensionData& field,
                    const SieveParams& p, double zm_log, double x);

struct VConstants {
    double c11;
    double c12;
};

// The two ideal-density constants, as logs of their displayed products,
// rounded upward.
VConstants v_lower_constants(const SieveParams& p);

// Threshold log x beyond which V(x^omega) >= kappa_K omega/2 * log x:
//   epsilon + (2/((1-eta) omega)) (c11 + c12 n + (n/2) log n + (1/2) log D_K).
double v_range_threshold(const fieldparams::AbelianExtensionData& field, const SieveParams& p);

// Exact partial sum V(z) = sum_{N(a) <= z} 1/N(a) for an oracle field,
// z <= 1e7.
double v_oracle(const fieldparams::OracleField& f, double z);

struct SelbergBound {
    double value = 0.0;
    bool valid = false; // x reached the V(z) range threshold
};

// Three-term sieve output bound
//   2.52 n sqrt(x)/log x + 2 e^eps x/(omega [L:K] log x)
//     + E(x) ((1+1/gamma)^n x^{omega(1+gamma)})^2.
SelbergBound selberg_bound(const fieldparams::AbelianExtensionData& field,
                           const SieveParams& p, double x, double degLK, double E);

// log of the x-free product C(delta, eps, gamma) = E(x)(1+1/gamma)^{2n}[L:K]x^{-delta}.
double log_C_factor(const fieldparams::AbelianExtensionData& field,
                    const SieveParams& p, double degLK, double zm_log);

// nu = (1/s)(1 + sqrt(2/log(C/s))), s the slack; takes log C to survive
// astronomically large C.  Requires s > 0 and C/s > 1.
double nu_exponent(const SieveParams& p, double log_C);

// Parameterized Brun-Titchmarsh report: constant 1.01 + 2e^eps/omega, range
// the maximum of the V(z) threshold, 2 log(252 n [L:K]) and nu log(C/s).
BoundReport bt_ugly(const fieldparams::AbelianExtensionData& field, const SieveParams& p,
                    double degLK, double zm_log);

// Fixed-parameter abelian bound: constant 11.29, closed-form log range
// 36 + 92 n + 8.4 log(D_K Q) + 4.2 n log n, with the reference-parameter
// pipeline recomputed and compared against the stated majorants.  The
// comparison outcomes ride along as components (value 1 = holds).
BoundReport bt_abelian(const fieldparams::AbelianExtensionData& field);

struct BaseChangeChecks {
    bool degree_term = false;     // n_K [L:K] sqrt(x) <= x/(200 log x)
    bool conductor_term = false;  // (2/log 2)(log D_K + [L:K] log Q) <= x/(200 log x)
};

BaseChangeChecks base_change_checks(const fieldparams::AbelianExtensionData& field,
                                    double degLK, double x);
BaseChangeChecks base_change_checks_log(const fieldparams::AbelianExtensionData& field,
                                        double degLK, double log_x);

// General (nonabelian) bound report: constant 11.3 on |C|/|G| x/log x with
// the class fraction left as a multiplier slot, valid when log x clears the
// abelian closed form and both base-change absorptions hold.
BoundReport bt_general(const fieldparams::AbelianExtensionData& field, double log_x);

} // namespace cbt::btpipeline
