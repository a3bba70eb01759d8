#pragma once

#include "cbt/galoisdata.hpp"

#include <cstdint>
#include <string>

namespace cbt::ltpipeline {

// Invariants of a newform driving the tower pipelines: even weight k_f,
// level N_f, the surjectivity threshold ell0 for the residual
// representations, the auxiliary congruence modulus q with its class count
// |S|, and quantities derived from N_f and q.
struct NewformProfile {
    unsigned k_f = 12;
    std::uint64_t N_f = 1;
    std::uint64_t ell0 = 691;
    std::uint64_t q = 1;
    std::uint64_t S_size = 1;
    unsigned omega_Nf = 0;
    std::uint64_t rad_Nf = 1;
    std::uint64_t phi_q = 1;

    void validate() const;

    // weight 12, level 1, general trace value: q = 1, |S| = 1
    static NewformProfile weight12_general();
    // weight 12, level 1, trace 0: q = 3488033912832000, |S| = 33
    static NewformProfile weight12_zero_trace();
    // weight 2, level 11 (q = 5 congruence, |S| = 1)
    static NewformProfile level11_weight2();
};

NewformProfile make_profile(unsigned k_f, std::uint64_t N_f, std::uint64_t ell0,
                            std::uint64_t q, std::uint64_t S_size);

// Four-term sieve tail sqrt(2) x/2^{t/2} + sqrt(2) 2^{t/2} l_t^t + 2^t + 70/2^t,
// upward rounded (the l_t^t power goes through logs).
double sieve_tail(double x, unsigned t, std::uint64_t ell_t);

struct CorTail {
    unsigned t;
    double tail;
};

// t = ceil((2r/log 2) log log x) together with the consolidated tail
// x sqrt(2)/(log x)^r + 2 sqrt(x)/(log x)^r + 2 (log x)^{2r} + 35.
CorTail cor_tail(double x, double r);

// Coefficient 2r/log 2 + 1/log 272 that majorizes (t+1)/log log x once
// x >= e^272.
double cor_coefficient(double r);

struct LTConditions {
    bool condA = false; // ell admissible: > max(ell0, 5), gcd conditions
    bool condB = false; // log x clears the tower range for ell
    bool condC = false; // ell < (1/2) exp(log x / (2t))
    bool condD = false; // at least t admissible primes in [ell, 2 ell)
    unsigned t = 0;
    std::uint64_t ell1 = 0;
    double r = 0.0;
    double tower_log_range = 0.0; // the condB threshold
    std::uint64_t interval_count = 0; // certified admissible-prime count (condD)
    std::string condD_method;         // "enumeration" or "analytic"

    bool all() const { return condA && condB && condC && condD; }
};

// Evaluates conditions (A)-(D) at log x.  The tower range uses the U-case
// constants in general and the H-case constants when the target trace is 0.
LTConditions check_conditions(const NewformProfile& p, double log_x, double r,
                              std::uint64_t ell1, bool a_zero);

struct MainBound {
    double coef_main = 0.0; // 34.7 r |S| / (phi(q)(ell1 - 1))
    double coef_tail = 1.42;
    double log_bound = 0.0; // log of the evaluated right side
    LTConditions conditions;
    bool valid = false;
};

// Bound coefficients and log-space evaluation of
//   34.7 r |S|/(phi(q)(ell1-1)) x log log x/log x + 1.42 x/(log x)^r.
MainBound main_bound(const NewformProfile& p, double log_x, double r,
                     std::uint64_t ell1, bool a_zero);

// Margin (in logs) by which the reduction's correction terms stay below
// 0.01 x/(phi(q)(ell1-1) log x); positive means absorbed.
double correction_absorption_margin(const NewformProfile& p, double log_x,
                                    std::uint64_t ell1, bool a_zero);

// l(x) = theta log x / log log x.
double ell_of_x(double log_x, double theta);

// Headline coefficient 34.7 r |S| / (phi(q) ell_fraction theta) on
// x (log log x)^2 / (log x)^2.
double asymptotic_coefficient(const NewformProfile& p, double theta, double r,
                              double ell_fraction);

// Headline coefficient with the 1.42-term absorbed at the threshold log X1,
// upward rounded; feeds the density pipeline.
double density_coefficient(const NewformProfile& p, double theta, double r,
                           double ell_fraction, double log_X1);

// Computed counterpart 11.3 (2r/log2 + 1/log 272)/r of the main-term
// constant; the stated 34.7 must dominate it.
double thm_constant_check(double r);

} // namespace cbt::ltpipeline
