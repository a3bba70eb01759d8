#pragma once

#include "cbt/primes.hpp"

#include <cstdint>
#include <optional>

namespace cbt::fieldparams {

// Invariants of an abelian extension L/K that feed every range and constant:
// degree n_K of K over the rationals, absolute discriminant D_K, the maximal
// conductor norm Q, and optionally the known relative degree [L:K] and the
// number of prime divisors of the conductor.  D_K and Q are carried as reals
// and consumed through their logarithms; pipeline thresholds can exceed any
// fixed-width integer.
struct AbelianExtensionData {
    unsigned n_K = 1;
    double D_K = 1.0;
    double Q = 1.0;
    std::optional<double> deg_LK;
    std::optional<unsigned> omega_m;

    double log_DQ() const;
    void validate() const; // throws domain_error on nonsense inputs
};

enum class OracleTag { RationalField, GaussianField };

// The two fields with exactly countable ideals: the rationals (kappa = 1)
// and the Gaussian field (kappa = pi/4, from the class number formula; an
// external fact, not derived here).
struct OracleField {
    OracleTag tag = OracleTag::RationalField;

    unsigned n_K() const;
    double D_K() const;
    double kappa() const;
};

// Upper bound (1 + 1/gamma)^{n_K} x^{1+gamma} for the ideal count, rounded
// upward.  Requires 0 < gamma <= 1.
double ideal_count_bound(unsigned n_K, double x, double gamma);

// Exact #{ideals of norm <= x} for an oracle field, x <= 1e7.  The rational
// count is floor(x); the Gaussian count is sum_{n<=x} sum_{d|n} chi_{-4}(d).
std::uint64_t ideal_count_oracle(const OracleField& f, double x);

// Number of ideals of exact norm n in the Gaussian field.
std::uint64_t gaussian_ideals_of_norm(std::uint64_t n);

// Degree bound for L/K from the field invariants alone.  eps = 1 uses the
// closed numeric form 14.779 * 0.7169^{n_K} * D_K * Q; other eps in (0,1]
// use the general product.  Rounded upward.
double degree_bound(unsigned n_K, double D_K, double Q, double eps);

// The two eps = 1 constants regenerated from the general form:
// prefactor 2e^2 and base 2 * 3^{2/3} * 4 / (e^2 pi).
struct DegreeBoundConstants {
    double prefactor;
    double base;
};
DegreeBoundConstants degree_bound_eps1_constants();

// Bound 2 e^{1+2/b} n_K + b log(D_K Q) on the number of prime divisors of
// the conductor, rounded upward.  Requires b > 0.
double omega_m_bound(unsigned n_K, double D_K, double Q, double b);

// Upper bound on log Z_m(sigma), Z_m(sigma) = prod_{p | m} (1 + Np^-sigma):
//   n_K [ log(1+M^-sigma)(2e^{1+2/b} - pi(M-1)) + sum_{p<M} log(1+p^-sigma) ]
//     + b log(1+M^-sigma) log(D_K Q),
// rounded upward.  The prime table must cover every prime below M.
double zm_log_bound(unsigned n_K, double D_K, double Q, double sigma, double M,
                    double b, const primes::PrimeTable& table);

// Trivial alternative log Z_m <= omega(m) log 2.
double zm_log_trivial(unsigned omega_m);

} // namespace cbt::fieldparams
