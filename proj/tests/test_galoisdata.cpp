#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cbt/errors.hpp"
#include "cbt/galoisdata.hpp"
#include "cbt/primes.hpp"

#include <cmath>
#include <numeric>

using namespace cbt;

TEST_CASE("tower orders") {
    auto o = galoisdata::tower_orders(7);
    CHECK(o.order_G == 2016);
    CHECK(o.order_G == (49 - 1) * (49 - 7)); // |GL2(F_7)| by the column count
    CHECK(o.order_B == 7 * 36);
    CHECK(o.order_H == 42);
    CHECK(o.order_U == 6);
    CHECK(o.deg_LB_Q == 8);
    CHECK(o.deg_LH_LB == 6);
    CHECK(o.deg_LU_LH == 7);
    CHECK(o.ratio_Cpp == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
    CHECK(o.bound_Cp == 7);

    CHECK_THROWS_AS(galoisdata::tower_orders(9), domain_error);
    CHECK_THROWS_AS(galoisdata::tower_orders(5), domain_error);

    for (std::uint64_t l : primes::sieve_primes(9999).primes) {
        if (l < 7) continue;
        auto t = galoisdata::tower_orders(l);
        CHECK(t.order_G == t.order_B * (l + 1));
        CHECK(t.deg_LB_Q * t.deg_LH_LB * t.deg_LU_LH * (l - 1) == t.order_G);
        CHECK(t.order_G == (l * l - 1) * (l * l - l));
    }
}

TEST_CASE("ramification quantity and the root-discriminant bound") {
    CHECK(galoisdata::M_quantity(1, 1, {}) == 2.0);
    CHECK(galoisdata::M_quantity(2, 1, {3}) == 12.0);

    CHECK(galoisdata::serre_root_disc_bound(7, 0, 1) == doctest::Approx(56.0).epsilon(1e-10));
    CHECK(galoisdata::serre_root_disc_bound(7, 1, 1) > galoisdata::serre_root_disc_bound(7, 0, 1));
    // level-11 substitution: 11 l (l+1)^2
    CHECK(galoisdata::serre_root_disc_bound(13, 1, 11)
          == doctest::Approx(11.0 * 13.0 * 14.0 * 14.0).epsilon(1e-10));
}

TEST_CASE("ramification bounds along the tower") {
    auto t = galoisdata::make_tower_data(11, 1, 0, 1);
    auto b = galoisdata::M_bounds(t);
    CHECK(b.log_mH == doctest::Approx(std::log(2.0 * 12.0 * 12.0 * 12.0)).epsilon(1e-10));
    CHECK(b.log_mU == doctest::Approx(std::log(2.0 * 12.0 * 12.0 * 12.0 * 12.0)).epsilon(1e-10));
    CHECK(b.log_mU - b.log_mH == doctest::Approx(std::log(12.0)).epsilon(1e-10));

    auto t11 = galoisdata::make_tower_data(13, 5, 1, 11);
    auto b11 = galoisdata::M_bounds(t11);
    CHECK(b11.log_mU
          == doctest::Approx(std::log(2.0) + 5.0 * std::log(14.0) + std::log(121.0 * 4.0 * 5.0))
                 .epsilon(1e-10));

    CHECK_THROWS_AS(galoisdata::make_tower_data(5, 10, 0, 1), domain_error); // gcd(q, ell) != 1
    CHECK_THROWS_AS(galoisdata::make_tower_data(8, 1, 0, 1), domain_error);
}

TEST_CASE("conductor product from the ramification quantity") {
    CHECK(galoisdata::dkq_from_M(2.0, 5.0) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(galoisdata::dkq_from_M(2.0 * std::exp(1.0), 3.0) == doctest::Approx(6.0).epsilon(1e-10));
    CHECK_THROWS_AS(galoisdata::dkq_from_M(1.5, 2.0), domain_error);

    // composition with the tower bound reproduces the intermediate chain
    for (std::uint64_t l : primes::sieve_primes(997).primes) {
        if (l < 7 || l == 5) continue;
        for (std::uint64_t q : {1ull, 5ull}) {
            if (std::gcd(l, q) != 1) continue;
            auto t = galoisdata::make_tower_data(l, q, 0, 1);
            auto mb = galoisdata::M_bounds(t);
            double got = galoisdata::dkq_from_M_log(mb.log_mH, (double)(l + 1));
            double want = 2.0 * (double)(l + 1)
                * (3.0 * std::log((double)l + 1.0)
                   + std::log((double)t.phi_q) + std::log((double)t.rad_q));
            CHECK(got == doctest::Approx(want).epsilon(1e-10));
        }
    }
}

TEST_CASE("tilde correction") {
    double v = galoisdata::tilde_correction(1, 4.0, 2.0);
    CHECK(v == doctest::Approx(3.15546 * 2.0 / std::log(4.0) + std::log(2.0)).epsilon(1e-10));
    CHECK(galoisdata::tilde_correction(3, 4.0, 2.0) == doctest::Approx(3.0 * v).epsilon(1e-10));
    // vanishes relative to x/log x
    double x = 1e12;
    CHECK(galoisdata::tilde_correction(1, x, 2.0) / (x / std::log(x)) < 1e-5);
    CHECK_THROWS_AS(galoisdata::tilde_correction(1, 3.0, 2.0), domain_error);
}

TEST_CASE("range constants for the tower pipelines") {
    // zero-trace reference data
    auto tz = galoisdata::make_tower_data(22193, 3488033912832000ull, 0, 1);
    auto h = galoisdata::cheb_constants(tz, galoisdata::TowerCase::H_case);
    CHECK(h.cA == doctest::Approx(156.0).epsilon(0.004));
    CHECK(h.cB == doctest::Approx(252.0).epsilon(0.004));
    CHECK(h.cC == doctest::Approx(14.7).epsilon(1e-10));

    // general level-1 data
    auto tgen = galoisdata::make_tower_data(33317, 1, 0, 1);
    auto u = galoisdata::cheb_constants(tgen, galoisdata::TowerCase::U_case);
    CHECK(u.cA == doctest::Approx(62.0).epsilon(1e-10));
    CHECK(u.cB == doctest::Approx(42.0).epsilon(1e-10));
    CHECK(u.cC == doctest::Approx(18.9).epsilon(1e-10));

    // level-11 data: the H case reproduces the published integers, the
    // computed U case sits higher
    auto t11 = galoisdata::make_tower_data(1871, 5, 1, 11);
    auto h11 = galoisdata::cheb_constants(t11, galoisdata::TowerCase::H_case);
    CHECK(std::fabs(h11.cA - 72.0) < 0.5);
    CHECK(std::fabs(h11.cB - 46.0) < 0.5);
    CHECK(std::fabs(h11.cC - 18.9) < 1e-10);
    auto u11 = galoisdata::cheb_constants(t11, galoisdata::TowerCase::U_case);
    CHECK(u11.cA == doctest::Approx(62.0 + 4.2 * std::log(11.0)).epsilon(1e-10));
    CHECK(u11.cB == doctest::Approx(49.8757).epsilon(1e-4));
    CHECK(u11.cC == doctest::Approx(23.1).epsilon(1e-10));

    // log range shape
    CHECK(h.log_range(22193)
          == doctest::Approx(h.cA + h.cB * 22194.0 + h.cC * 22194.0 * std::log(22194.0))
                 .epsilon(1e-12));

    // H-case range never exceeds the U-case range when the max branches
    // coincide (large rad(N_f), q = 1)
    auto tbig = galoisdata::make_tower_data(13, 1, 1, 1000003);
    auto hb = galoisdata::cheb_constants(tbig, galoisdata::TowerCase::H_case);
    auto ub = galoisdata::cheb_constants(tbig, galoisdata::TowerCase::U_case);
    CHECK(hb.cA == ub.cA);
    CHECK(hb.cB == ub.cB);
    for (std::uint64_t l : {7ull, 11ull, 101ull, 997ull})
        CHECK(hb.log_range(l) <= ub.log_range(l));
}

TEST_CASE("leading coefficient") {
    auto t = galoisdata::make_tower_data(22193, 3488033912832000ull, 0, 1);
    double c = galoisdata::cheb_leading_coefficient(t, 33);
    CHECK(c == doctest::Approx(11.29 * 33.0 / (761497583616000.0 * 22192.0)).epsilon(1e-12));
}
