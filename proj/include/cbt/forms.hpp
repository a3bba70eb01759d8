#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cbt::forms {

using int128 = __int128;

// Truncated integer coefficient sequence, 1-indexed: coeffs[n] is the n-th
// Fourier coefficient, exact.  Values fit 128 bits throughout the documented
// truncation ceiling (1e6); every arithmetic step is overflow-checked.
struct QSeries {
    std::uint64_t N = 0;
    std::vector<int128> coeffs; // size N+1, index 0 unused

    int128 at(std::uint64_t n) const;
};

// Weight-12 level-1 coefficients tau(1..N) from the 24th power of the
// pentagonal-number sparse series, N <= 1e6.
QSeries tau_series(std::uint64_t N);

// Independent path: the cube identity gives the sparse series directly,
// then the 8th power.  Used as the cross-check oracle.
QSeries tau_series_cube_path(std::uint64_t N);

// Weight-2 level-11 coefficients a_E(1..N) from eta(z)^2 eta(11z)^2.
QSeries f11_series(std::uint64_t N);

// Trace of Frobenius at p for y^2 - y = x^3 - x^2 via the character sum
// -sum_x chi_p(4x^3 - 4x^2 + 1) (direct enumeration at p = 2).  p != 11,
// p <= 1e7, p prime.
long long ec_trace(std::uint64_t p);

// Exact #{p <= x prime : p does not divide N_f, coeffs[p] = a}.
std::uint64_t pi_f_count(const QSeries& s, double x, long long a, std::uint64_t N_f);

// Exact #{p <= x : p not dividing N_f, a_f(p) = a (mod ell),
// ((a^2 - 4 p^{k_f-1})/ell) = +1}, Legendre symbol by Euler's criterion.
std::uint64_t pi_f_ell_count(const QSeries& s, double x, long long a,
                             std::uint64_t ell, unsigned k_f, std::uint64_t N_f);

// Legendre symbol via a quadratic-residue table; second route for the
// dual-oracle comparison.
int legendre_table(std::uint64_t a, std::uint64_t ell);

struct SieveCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    bool pass = false;
};

// Checks pi_f(x, a) <= sum_j pi_f(x, a; ell_j) + sieve tail for a set of
// admissible odd primes.
SieveCheck verify_sieve_inequality(const QSeries& s, double x, long long a,
                                   const std::vector<std::uint64_t>& ells,
                                   unsigned k_f, std::uint64_t N_f);

// Coefficient cache: magic "QS1\0" then little-endian records (u64 n,
// i128 value) for n = 1..N.
void write_coefficient_cache(const std::string& path, const QSeries& s);
QSeries read_coefficient_cache(const std::string& path);

} // namespace cbt::forms
