#pragma once

#include "cbt/btpipeline.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cbt::optimizer {

// Figures of merit of one sieve-parameter point: the leading constant, the
// numerically extracted exponents of D_K*Q and of n^n in the log-range, and
// the log-range at the supplied field point.
struct PointFigures {
    double constant = 0.0;
    double dq_exp = 0.0;
    double n_exp = 0.0;
    double log_range = 0.0;
    bool feasible = false;
};

enum class Target { leading_constant, dq_exponent, n_exponent, log_range_at };

struct Caps {
    std::optional<double> constant;
    std::optional<double> dq_exp;
    std::optional<double> n_exp;
    std::optional<double> log_range;
};

struct GridAxis {
    double lo = 0.05;
    double hi = 0.45;
    unsigned steps = 4;
};

struct ObjectiveSpec {
    Target target = Target::leading_constant;
    Caps caps;
    GridAxis delta, eta, epsilon, omega, gamma;
    unsigned refine_rounds = 2;
    double M = 400.0; // candidate list {50, 100, 400, 1000}
    fieldparams::AbelianExtensionData field;
};

// Evaluates the full pipeline at one parameter point.  b <= 0 requests the
// canonical choice b = 1/(2 log(1 + M^-delta)).  dq_exp is the log-range
// slope in log(D_K Q) between the field point and 1000x it; n_exp is the
// n log n coefficient fitted through n, 2n, 4n.
PointFigures evaluate_point(const btpipeline::SieveParams& p, double M, double b,
                            const fieldparams::AbelianExtensionData& field);

struct OptimizeResult {
    btpipeline::SieveParams best{};
    PointFigures figures;
    double value = 0.0;
    std::vector<std::string> trace;
};

// Deterministic grid search over the axis box, the reference parameter
// point added as a candidate, followed by refine_rounds of coordinatewise
// bisection.  Ties break lexicographically on (delta, eta, epsilon, omega,
// gamma).  Throws not_found_error when no feasible point exists.
OptimizeResult optimize(const ObjectiveSpec& spec);

} // namespace cbt::optimizer
