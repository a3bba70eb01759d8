#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cbt/errors.hpp"
#include "cbt/forms.hpp"
#include "cbt/primes.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>

using namespace cbt;
using forms::int128;

TEST_CASE("weight-12 coefficients") {
    auto tau = forms::tau_series(10000);
    long long first[6] = {0, 1, -24, 252, -1472, 4830};
    for (int n = 1; n <= 5; ++n) CHECK(tau.at(n) == (int128)first[n]);

    // Hecke multiplicativity on coprime pairs and prime squares
    for (auto [m, n] : {std::pair<int, int>{2, 3}, {2, 5}, {3, 5}, {4, 9}, {8, 27}, {25, 49}})
        CHECK(tau.at((std::uint64_t)m * n) == tau.at(m) * tau.at(n));
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
        int128 pw = 1;
        for (int i = 0; i < 11; ++i) pw *= (int128)p;
        CHECK(tau.at(p * p) == tau.at(p) * tau.at(p) - pw);
    }

    // the two construction paths agree exactly
    auto tau2 = forms::tau_series_cube_path(10000);
    for (std::uint64_t n = 1; n <= 10000; ++n) CHECK(tau.at(n) == tau2.at(n));

    // coefficient size bound
    for (std::uint64_t n = 1; n <= 10000; ++n) {
        int128 v = tau.at(n);
        long double av = (long double)(v < 0 ? -v : v);
        CHECK((double)av <= (double)oracle::divisor_count(n) * std::pow((double)n, 5.5));
    }

    CHECK_THROWS_AS(forms::tau_series(2'000'000), bounds_error);
    CHECK_THROWS_AS(tau.at(0), bounds_error);
    CHECK_THROWS_AS(tau.at(10001), bounds_error);
}

TEST_CASE("level-11 coefficients and point counts") {
    auto f = forms::f11_series(2000);
    CHECK(f.at(1) == 1);
    CHECK(f.at(2) == -2);
    CHECK(f.at(3) == -1);
    CHECK(f.at(5) == 1);
    CHECK(f.at(11) == 1);

    CHECK(forms::ec_trace(2) == -2);
    CHECK(forms::ec_trace(3) == -1);

    for (std::uint64_t p : primes::sieve_primes(1000).primes) {
        if (p == 11) continue;
        CHECK((int128)forms::ec_trace(p) == f.at(p));
    }

    // Hasse envelope and the mod-5 congruence
    for (std::uint64_t p : primes::sieve_primes(20000).primes) {
        if (p == 11) continue;
        long long a = forms::ec_trace(p);
        CHECK((double)std::llabs(a) <= 2.0 * std::sqrt((double)p));
        CHECK(((a - (long long)p - 1) % 5 + 5) % 5 == 0);
    }

    CHECK_THROWS_AS(forms::ec_trace(11), domain_error);
    CHECK_THROWS_AS(forms::ec_trace(15), domain_error);
    CHECK_THROWS_AS(forms::ec_trace(20'000'000), bounds_error);
}

TEST_CASE("coefficient-level prime counting") {
    auto tau = forms::tau_series(10000);
    auto f11 = forms::f11_series(100);
    CHECK(forms::pi_f_count(tau, 1e4, 0, 1) == 0);
    CHECK(forms::pi_f_count(tau, 2, -24, 1) == 1);
    CHECK(forms::pi_f_count(f11, 11, 1, 11) == 1);
    CHECK_THROWS_AS(forms::pi_f_count(tau, 1e6, 0, 1), bounds_error);

    // Legendre-filtered count against a per-prime recount with the
    // table-based symbol (tau(p) reduced in 128-bit arithmetic; it
    // overflows 64 bits well before p = 1e4)
    std::uint64_t got = forms::pi_f_ell_count(tau, 1e4, 0, 13, 12, 1);
    std::uint64_t direct = 0;
    for (std::uint64_t p : primes::sieve_primes(10000).primes) {
        long long ap13 = (long long)(tau.at(p) % 13);
        if ((ap13 % 13 + 13) % 13 != 0) continue;
        // disc = a^2 - 4 p^{11} mod 13 with a = 0
        std::uint64_t det = 1;
        for (int i = 0; i < 11; ++i) det = det * (p % 13) % 13;
        std::uint64_t disc = (13 - 4 * det % 13) % 13;
        if (disc != 0 && forms::legendre_table(disc, 13) == 1) ++direct;
    }
    CHECK(got == direct);

    // containment sanity: the filtered count never exceeds the plain
    // congruence count
    std::uint64_t cong = 0;
    for (std::uint64_t p : primes::sieve_primes(10000).primes)
        if (((tau.at(p) % 13) % 13 + 13) % 13 == 0) ++cong;
    CHECK(got <= cong);

    CHECK_THROWS_AS(forms::pi_f_ell_count(tau, 1e4, 0, 15, 12, 1), domain_error);
}

TEST_CASE("sieve inequality") {
    auto tau = forms::tau_series(10000);
    auto a = forms::verify_sieve_inequality(tau, 1e4, 0, {13}, 12, 1);
    CHECK(a.pass);
    auto b = forms::verify_sieve_inequality(tau, 1e4, -24, {13, 17, 19}, 12, 1);
    CHECK(b.pass);

    CHECK_THROWS_AS(forms::verify_sieve_inequality(tau, 1e4, 0, {}, 12, 1), domain_error);
    CHECK_THROWS_AS(forms::verify_sieve_inequality(tau, 1e4, 0, {23}, 12, 1), domain_error);

    // randomized battery, fixed seed
    std::mt19937_64 rng(98765);
    std::vector<std::uint64_t> admissible;
    for (std::uint64_t l : primes::sieve_primes(200).primes)
        if (l % 2 == 1 && std::gcd(l - 1, 11ull) == 1) admissible.push_back(l);
    for (int trial = 0; trial < 10; ++trial) {
        double x = 500.0 + (double)(rng() % 9500);
        long long av = (long long)(rng() % 101) - 50;
        unsigned t = 1 + rng() % 3;
        std::vector<std::uint64_t> ells;
        while (ells.size() < t) {
            std::uint64_t l = admissible[rng() % admissible.size()];
            if (std::find(ells.begin(), ells.end(), l) == ells.end() && (double)l < x)
                ells.push_back(l);
        }
        std::sort(ells.begin(), ells.end());
        CHECK(forms::verify_sieve_inequality(tau, x, av, ells, 12, 1).pass);
    }
}

TEST_CASE("coefficient cache round trip") {
    auto tau = forms::tau_series(500);
    std::string path = "tau500.qs";
    forms::write_coefficient_cache(path, tau);
    auto back = forms::read_coefficient_cache(path);
    CHECK(back.N == 500);
    for (std::uint64_t n = 1; n <= 500; ++n) CHECK(back.at(n) == tau.at(n));
    std::remove(path.c_str());

    std::FILE* f = std::fopen("bad.qs", "wb");
    std::fwrite("XX", 1, 2, f);
    std::fclose(f);
    CHECK_THROWS_AS(forms::read_coefficient_cache("bad.qs"), bounds_error);
    std::remove("bad.qs");
}
