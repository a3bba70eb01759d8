#pragma once

#include <cmath>
#include <cstdint>

// Directed-rounding substitute.  Every bound-producing operation in this
// library inflates (or deflates) its result by a fixed factor per arithmetic
// stage instead of switching the FPU rounding mode.  The factor 2^-40 is
// ~5e5 times larger than one double ulp, so it swallows the worst-case
// accumulated rounding error of the short closed-form formulas used here
// while staying far below every tolerance the verification suites assert.

namespace cbt::cert {

inline constexpr double kStageEps = 0x1p-40; // 2^-40 ~ 9.09e-13

// Upper-rounded value: up(x) >= x for all finite x.
inline double up(double x) {
    return x >= 0 ? x * (1.0 + kStageEps) : x * (1.0 - kStageEps);
}

// Lower-rounded value: down(x) <= x.
inline double down(double x) {
    return x >= 0 ? x * (1.0 - kStageEps) : x * (1.0 + kStageEps);
}

// Inflation for a value produced by n accumulation stages (e.g. a cell sum).
// Long-double accumulation keeps the raw error below n * 2^-63 * |sum|;
// one extra kStageEps absorbs the final conversion.
inline double up_sum(long double x, std::uint64_t stages) {
    long double f = 1.0L + (long double)stages * 0x1p-60L + (long double)kStageEps;
    return (double)(x >= 0 ? x * f : x / f);
}

inline double down_sum(long double x, std::uint64_t stages) {
    long double f = 1.0L + (long double)stages * 0x1p-60L + (long double)kStageEps;
    return (double)(x >= 0 ? x / f : x * f);
}

} // namespace cbt::cert
