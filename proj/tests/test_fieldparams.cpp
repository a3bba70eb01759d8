#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cbt/errors.hpp"
#include "cbt/fieldparams.hpp"
#include "oracles.hpp"

#include <cmath>

using namespace cbt;

namespace {
const fieldparams::OracleField kRat{fieldparams::OracleTag::RationalField};
const fieldparams::OracleField kGauss{fieldparams::OracleTag::GaussianField};
} // namespace

TEST_CASE("ideal count bound") {
    CHECK(fieldparams::ideal_count_bound(1, 100, 1.0) == doctest::Approx(20000.0).epsilon(1e-10));
    double g = fieldparams::ideal_count_bound(2, 10, 0.5);
    CHECK(g == doctest::Approx(9.0 * std::pow(10.0, 1.5)).epsilon(1e-10));
    CHECK(g >= (double)fieldparams::ideal_count_oracle(kGauss, 10));

    // gamma -> 0+ diverges like 1/gamma per unit degree
    CHECK(fieldparams::ideal_count_bound(1, 10, 1e-6) > 1e6);
    CHECK(fieldparams::ideal_count_bound(1, 10, 1e-4)
          > 50.0 * fieldparams::ideal_count_bound(1, 10, 1e-2));
    CHECK_THROWS_AS(fieldparams::ideal_count_bound(1, 10, 0.0), domain_error);
    CHECK_THROWS_AS(fieldparams::ideal_count_bound(1, 10, 1.5), domain_error);
}

TEST_CASE("ideal count oracles") {
    CHECK(fieldparams::ideal_count_oracle(kRat, 100.5) == 100);
    CHECK(fieldparams::ideal_count_oracle(kGauss, 5) == 5);
    CHECK(fieldparams::ideal_count_oracle(kGauss, 1) == 1);
    CHECK_THROWS_AS(fieldparams::ideal_count_oracle(kGauss, 2e7), bounds_error);

    // norm-n ideal counts against direct lattice enumeration
    std::uint64_t cum = 0;
    for (std::uint64_t n = 1; n <= 3000; ++n) {
        std::uint64_t r = fieldparams::gaussian_ideals_of_norm(n);
        CHECK(r == oracle::lattice_r2(n) / 4);
        cum += r;
        if (n % 500 == 0) CHECK(fieldparams::ideal_count_oracle(kGauss, (double)n) == cum);
    }
}

TEST_CASE("bound dominates oracle counts across the gamma grid") {
    // cumulative oracle counts, then the domination property
    for (auto f : {kRat, kGauss}) {
        for (double gamma = 0.1; gamma <= 1.0; gamma += 0.1) {
            for (double x : {1.0, 10.0, 100.0, 5000.0, 100000.0}) {
                CHECK((double)fieldparams::ideal_count_oracle(f, x)
                      <= fieldparams::ideal_count_bound(f.n_K(), x, gamma));
            }
        }
    }
}

TEST_CASE("degree bound") {
    double v = fieldparams::degree_bound(1, 1, 1, 1.0);
    CHECK(v == doctest::Approx(14.779 * 0.7169).epsilon(1e-10));
    auto c = fieldparams::degree_bound_eps1_constants();
    CHECK(c.prefactor <= 14.779);
    CHECK(c.prefactor > 14.778);
    CHECK(c.base <= 0.7169);
    CHECK(c.base > 0.7168);
    // linear in Q
    CHECK(fieldparams::degree_bound(2, 3, 10, 1.0)
          == doctest::Approx(10.0 * fieldparams::degree_bound(2, 3, 1, 1.0)).epsilon(1e-10));
    // the general form at eps = 1 is dominated by the numeric form
    for (unsigned n : {1u, 2u, 5u, 11u}) {
        double general = std::exp(n * std::log(2.0) + std::log(2.0) + 2.0 * (1.0 + std::log((double)n))
                                  + n * std::log(4.0 / (std::exp(2.0) * M_PI)));
        CHECK(general <= fieldparams::degree_bound(n, 1, 1, 1.0) * (1.0 + 1e-12));
    }
    CHECK_THROWS_AS(fieldparams::degree_bound(1, 1, 1, 0.0), domain_error);
}

TEST_CASE("conductor divisor bound") {
    CHECK(fieldparams::omega_m_bound(1, 1, 1, 1.0)
          == doctest::Approx(2.0 * std::exp(3.0)).epsilon(1e-10));
    // b -> infinity limit of the first term
    CHECK(fieldparams::omega_m_bound(1, 1, 1, 1e9)
          == doctest::Approx(2.0 * std::exp(1.0)).epsilon(1e-6));
    CHECK(fieldparams::omega_m_bound(3, 1, 1, 2.0)
          == doctest::Approx(6.0 * std::exp(2.0)).epsilon(1e-10));
    CHECK_THROWS_AS(fieldparams::omega_m_bound(1, 1, 1, 0.0), domain_error);
}

TEST_CASE("Euler factor product bound") {
    auto table = primes::sieve_primes(1000);
    // M = 2 leaves no primes below M
    double v = fieldparams::zm_log_bound(1, 1, 1, 1.0, 2.0, 1.0, table);
    CHECK(v == doctest::Approx(std::log(1.5) * 2.0 * std::exp(3.0)).epsilon(1e-10));

    // the reference choice of b makes the conductor exponent exactly 1/2
    double M = 400.0, delta = 0.1;
    double b = 1.0 / (2.0 * std::log1p(std::pow(M, -delta)));
    double z1 = fieldparams::zm_log_bound(1, 1.0, 1.0, delta, M, b, table);
    double z2 = fieldparams::zm_log_bound(1, 1.0, std::exp(2.0), delta, M, b, table);
    CHECK(z2 - z1 == doctest::Approx(1.0).epsilon(1e-9)); // (1/2) log(e^2)

    auto small = primes::sieve_primes(100);
    CHECK_THROWS_AS(fieldparams::zm_log_bound(1, 1, 1, 1.0, 400.0, 1.0, small), bounds_error);

    CHECK(fieldparams::zm_log_trivial(0) == 0.0);
    CHECK(fieldparams::zm_log_trivial(7) == doctest::Approx(7.0 * std::log(2.0)).epsilon(1e-10));
}

TEST_CASE("bounds monotone in the field invariants") {
    for (double gamma : {0.2, 0.7}) {
        CHECK(fieldparams::ideal_count_bound(2, 50, gamma) >= fieldparams::ideal_count_bound(1, 50, gamma));
    }
    auto table = primes::sieve_primes(1000);
    double prev = 0.0;
    for (double dq : {1.0, 10.0, 1e4, 1e12}) {
        double z = fieldparams::zm_log_bound(2, dq, 1.0, 0.1, 400.0, 1.0, table);
        CHECK(z >= prev);
        prev = z;
    }
    CHECK(fieldparams::omega_m_bound(2, 100, 1, 1.0) >= fieldparams::omega_m_bound(2, 10, 1, 1.0));
    CHECK(fieldparams::degree_bound(2, 100, 1, 1.0) >= fieldparams::degree_bound(2, 10, 1, 1.0));
}
