#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace cbt::primes {

// Ascending table of all primes <= limit.
struct PrimeTable {
    std::uint64_t limit = 0;
    std::vector<std::uint64_t> primes;

    // pi(x) for x <= limit (x is floored; pi counts p <= x).
    std::uint64_t count_below(double x) const;
};

// Complete prime table for 2 <= limit <= 1e9.  Plain sieve for small limits,
// segmented sieve above 1e7 so memory stays O(sqrt(limit) + segment).
PrimeTable sieve_primes(std::uint64_t limit);

// All primes in [lo, hi], segmented; hi <= 1e18, hi - lo <= 1e9.
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

// Deterministic Miller-Rabin, valid for all n < 2^64.
bool is_prime(std::uint64_t n);

struct Factorization {
    std::uint64_t n = 1;
    std::vector<std::pair<std::uint64_t, unsigned>> factors; // (prime, exponent), ascending
};

// Exact factorization for 1 <= n <= 1e18 (trial division to 1e6, then
// Brent-Pollard rho).  n = 0 is a domain error.
Factorization factorize(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);
std::uint64_t radical(std::uint64_t n);
unsigned omega(std::uint64_t n);

// Exact pi(x; q, d) = #{p <= x prime : p = d (mod q)}.  q = 1 counts all
// primes regardless of d.  Requires gcd(d, q) = 1 otherwise.
std::uint64_t count_primes_in_ap(double x, std::uint64_t q, std::uint64_t d);

// Montgomery-Vaughan upper bound 2y/(phi(q) log(y/q)) for the count of
// primes in (x, x+y] congruent to d mod q.  Requires y > q >= 1 and
// gcd(d, q) = 1.  Rounded upward.
double mv_bt_bound(double x, double y, std::uint64_t q, std::uint64_t d);

// Exact count of primes in (y, 2y] with p != d (mod q); q = 1 disables the
// exclusion and counts every prime in the interval.
std::uint64_t count_interval_excluding_class(double y, std::uint64_t q, std::uint64_t d);

// Largest prime l < upper with gcd(l - 1, kf_minus_1) = 1 and gcd(l, q) = 1.
// Throws not_found_error when no admissible prime exists above 5.
std::uint64_t largest_admissible_prime(double upper, std::uint64_t kf_minus_1, std::uint64_t q);

} // namespace cbt::primes
