// Acceptance gate: runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion.  Exit code is the number of failures.
//
// Criterion 1 contains two sub-checks that compare recomputed pipeline
// quantities against published majorants; the recomputation shows the
// published constants are understated in a corner of the grid, and those
// sub-checks report FAIL rather than being loosened.  Details print below
// the criterion line.

#include "cbt/analysis.hpp"
#include "cbt/btpipeline.hpp"
#include "cbt/density.hpp"
#include "cbt/fieldparams.hpp"
#include "cbt/forms.hpp"
#include "cbt/galoisdata.hpp"
#include "cbt/ltpipeline.hpp"
#include "cbt/optimizer.hpp"
#include "cbt/primes.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdio>
#include <numeric>
#include <random>
#include <string>
#include <vector>

using namespace cbt;

namespace {

int failures = 0;

struct Sub {
    std::string text;
    bool ok;
};

std::vector<Sub> subs;

void check(bool ok, const char* fmt, ...) {
    char buf[256];
    va_list ap;
    va_start(ap, fmt);
    std::vsnprintf(buf, sizeof buf, fmt, ap);
    va_end(ap);
    subs.push_back({buf, ok});
}

template <typename F>
void criterion(int id, const char* name, double budget_s, F body) {
    subs.clear();
    auto t0 = std::chrono::steady_clock::now();
    body();
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = secs < budget_s;
    for (const auto& s : subs) ok = ok && s.ok;
    std::printf("criterion %d [%s]: %s (%.2f s, budget %.0f s)\n", id, name,
                ok ? "PASS" : "FAIL", secs, budget_s);
    for (const auto& s : subs)
        if (!s.ok) std::printf("    FAIL %s\n", s.text.c_str());
    if (secs >= budget_s) std::printf("    FAIL runtime budget exceeded\n");
    if (!ok) ++failures;
}

double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

} // namespace

static void criterion1() {
    fieldparams::AbelianExtensionData rational{1, 1.0, 1.0, {}, {}};
    auto ab = btpipeline::bt_abelian(rational);
    check(ab.component("computed_constant") <= 11.29 && rel(ab.component("computed_constant"), 11.2822) < 1e-4,
          "constant 1.01 + 8e^{1/4} = %.6f <= 11.29", ab.component("computed_constant"));
    double numax = 0, cworst = -1e300, dworst = -1e300;
    bool nu_ok = true, cmaj_ok = true, dom_ok = true;
    for (unsigned n = 1; n <= 40; ++n) {
        for (double dq : {1.0, 1e3, 1e9}) {
            fieldparams::AbelianExtensionData f{n, 1.0, dq, {}, {}};
            auto r = btpipeline::bt_abelian(f);
            numax = std::max(numax, r.component("nu"));
            nu_ok = nu_ok && r.component("nu") <= 4.189;
            double excess = r.component("log_C")
                - (7.36 + 22.85 * n + 2.0 * std::log(dq) + 0.5 * n * std::log((double)n));
            cworst = std::max(cworst, excess);
            cmaj_ok = cmaj_ok && excess <= 0;
            double dexcess = r.component("ugly_log_range") - r.log_range;
            dworst = std::max(dworst, dexcess);
            dom_ok = dom_ok && dexcess <= 0;
        }
    }
    check(nu_ok, "nu <= 4.189 over the grid (max %.4f)", numax);
    check(cmaj_ok, "log C within e^{7.36} e^{22.85n} (DQ)^2 n^{n/2}: worst excess %.3f", cworst);
    check(dom_ok, "pipeline range within 36 + 92n + 8.4 log DQ + 4.2 n log n: worst excess %.3f", dworst);
}

static void criterion2() {
    auto dz = ltpipeline::NewformProfile::weight12_zero_trace();
    auto dgen = ltpipeline::NewformProfile::weight12_general();
    auto e11 = ltpipeline::NewformProfile::level11_weight2();
    double lx16 = std::exp(16.0), lx13 = std::exp(13.0);

    std::uint64_t lz = primes::largest_admissible_prime(ltpipeline::ell_of_x(lx16, 0.04), 11, dz.q);
    auto h = galoisdata::cheb_constants(galoisdata::make_tower_data(lz, dz.q, dz.omega_Nf, dz.rad_Nf),
                                        galoisdata::TowerCase::H_case);
    check(std::fabs(h.cA - 156.0) < 0.5 && std::fabs(h.cB - 252.0) < 0.5 && std::fabs(h.cC - 14.7) < 0.5,
          "zero-trace constants (%.2f, %.2f, %.2f) within 0.5 of (156, 252, 14.7)", h.cA, h.cB, h.cC);
    std::uint64_t l11 = primes::largest_admissible_prime(ltpipeline::ell_of_x(lx13, 0.055), 1, 5);
    auto h11 = galoisdata::cheb_constants(galoisdata::make_tower_data(l11, e11.q, e11.omega_Nf, e11.rad_Nf),
                                          galoisdata::TowerCase::H_case);
    check(std::fabs(h11.cA - 72.0) < 0.5 && std::fabs(h11.cB - 46.0) < 0.5 && std::fabs(h11.cC - 18.9) < 0.5,
          "level-11 constants (%.2f, %.2f, %.2f) within 0.5 of (72, 46, 18.9)", h11.cA, h11.cB, h11.cC);

    double a1 = ltpipeline::asymptotic_coefficient(dgen, 0.06, 4.0, 0.5);
    double a2 = ltpipeline::asymptotic_coefficient(dz, 0.04, 4.0, 0.5);
    double a3 = ltpipeline::asymptotic_coefficient(e11, 0.055, 2.0, 0.5);
    check(rel(a1, 4626.7) < 5e-4, "coefficient %.4f within 0.05%% of 4626.7", a1);
    check(rel(a2, 3.007e-10) < 5e-4, "coefficient %.6e within 0.05%% of 3.007e-10", a2);
    check(rel(a3, 630.91) < 5e-4, "coefficient %.4f within 0.05%% of 630.91", a3);
}

static void criterion3() {
    auto dw = density::DensityInputs::weight12();
    auto dl = density::DensityInputs::level11();
    auto mw = density::middle_integral(dw);
    check(mw.total <= 1.1358e-12, "weight-12 middle %.6e <= 1.1358e-12", mw.total);
    auto ml = density::middle_integral(dl);
    check(ml.total < 4.898, "level-11 middle %.6f < 4.898", ml.total);
    double tw = density::tail_integral(dw.lt_coefficient, dw.log_X1);
    check(tw < 9.824e-15, "weight-12 tail %.6e < 9.824e-15", tw);
    double tl = density::tail_integral(dl.lt_coefficient, dl.log_X1);
    check(tl < 0.281, "level-11 tail %.6f < 0.281", tl);
    auto bw = density::density_lower_bound(dw);
    check(bw.complement_upper < 1.15e-12, "density lower bound 1 - %.6e > 1 - 1.15e-12",
          bw.complement_upper);
    auto bl = density::density_lower_bound(dl);
    check(bl.lower > 0.004769, "density lower bound %.6f > 0.004769", bl.lower);
}

static void criterion4() {
    auto tau = forms::tau_series(100000);
    long long first[6] = {0, 1, -24, 252, -1472, 4830};
    bool ok5 = true;
    for (int n = 1; n <= 5; ++n) ok5 = ok5 && tau.at(n) == (forms::int128)first[n];
    check(ok5, "tau(1..5) = (1, -24, 252, -1472, 4830)");

    auto f11 = forms::f11_series(1001);
    bool okpc = true;
    for (std::uint64_t p : primes::sieve_primes(1000).primes) {
        if (p == 11) continue;
        okpc = okpc && f11.at(p) == (forms::int128)forms::ec_trace(p);
    }
    check(okpc, "series coefficients match point counts for p <= 1e3");

    bool okcong = true;
    for (std::uint64_t p : primes::sieve_primes(100000).primes) {
        if (p == 11) continue;
        long long a = forms::ec_trace(p);
        okcong = okcong && ((a - (long long)p - 1) % 5 + 5) % 5 == 0;
    }
    check(okcong, "a_E(p) = p + 1 mod 5 for p <= 1e5");

    bool okd = true;
    for (std::uint64_t n = 1; n <= 10000; ++n) {
        std::uint64_t d = 0;
        for (std::uint64_t k = 1; k * k <= n; ++k)
            if (n % k == 0) d += (k * k == n) ? 1 : 2;
        forms::int128 v = tau.at(n);
        long double av = (long double)(v < 0 ? -v : v);
        okd = okd && (double)av <= (double)d * std::pow((double)n, 5.5);
    }
    check(okd, "|tau(n)| <= d(n) n^{11/2} for n <= 1e4");
}

static void criterion5() {
    auto tau = forms::tau_series(10000);
    std::mt19937_64 rng(424242);
    std::vector<std::uint64_t> admissible;
    for (std::uint64_t l : primes::sieve_primes(300).primes)
        if (l >= 3 && std::gcd(l - 1, 11ull) == 1) admissible.push_back(l);
    int passed = 0;
    for (int trial = 0; trial < 50; ++trial) {
        double x = 400.0 + (double)(rng() % 9600);
        long long a = (long long)(rng() % 101) - 50;
        unsigned t = 1 + rng() % 3;
        std::vector<std::uint64_t> ells;
        while (ells.size() < t) {
            std::uint64_t l = admissible[rng() % admissible.size()];
            if ((double)l < x && std::find(ells.begin(), ells.end(), l) == ells.end())
                ells.push_back(l);
        }
        std::sort(ells.begin(), ells.end());
        if (forms::verify_sieve_inequality(tau, x, a, ells, 12, 1).pass) ++passed;
    }
    check(passed == 50, "sieve inequality holds on %d/50 randomized draws", passed);
}

static void criterion6() {
    auto table = primes::sieve_primes(2'000'000);
    const auto& ps = table.primes;
    auto count_range = [&](double lo, double hi) {
        auto a = std::upper_bound(ps.begin(), ps.end(), (std::uint64_t)std::floor(lo));
        auto b = std::upper_bound(ps.begin(), ps.end(), (std::uint64_t)std::floor(hi));
        return std::make_pair(a, b);
    };

    // interval bound vs exact counts, >= 1000 sample points
    std::mt19937_64 rng(777);
    int mv_samples = 0;
    bool mv_ok = true;
    while (mv_samples < 1000) {
        std::uint64_t q = 2 + rng() % 40;
        std::uint64_t d = rng() % q;
        if (std::gcd(d, q) != 1) continue;
        double y = (double)q * 2.0 + (double)(rng() % 1000000);
        double x0 = (double)(rng() % 1000000);
        if (x0 + y > 2'000'000) continue;
        auto [a, b] = count_range(x0, x0 + y);
        std::uint64_t cnt = 0;
        for (auto it = a; it != b; ++it)
            if (*it % q == d) ++cnt;
        if ((double)cnt > primes::mv_bt_bound(x0, y, q, d)) mv_ok = false;
        ++mv_samples;
    }
    check(mv_ok, "interval AP bound dominates on %d samples", mv_samples);

    int n72 = 0;
    bool ok72 = true;
    for (double y = 20.5; y <= 1e6; y *= 1.0105) {
        auto [a, b] = count_range(y, 2.0 * y);
        if (!((double)(b - a) > 0.6 * y / std::log(y))) ok72 = false;
        ++n72;
    }
    check(ok72 && n72 >= 1000, "pi(2y) - pi(y) > 0.6 y/log y on %d points", n72);

    std::vector<std::uint64_t> avoid;
    for (auto p : ps)
        if (p % 11 != 1) avoid.push_back(p);
    int n73 = 0;
    bool ok73 = true;
    for (double y = 2000.0; y <= 1e6; y *= 1.006) {
        auto a = std::upper_bound(avoid.begin(), avoid.end(), (std::uint64_t)std::floor(y));
        auto b = std::upper_bound(avoid.begin(), avoid.end(), (std::uint64_t)std::floor(2.0 * y));
        if (!((double)(b - a) > 0.3 * y / std::log(y))) ok73 = false;
        ++n73;
    }
    check(ok73 && n73 >= 1000, "excluded-class count > 0.3 y/log y on %d points", n73);
}

static void criterion7() {
    std::uint64_t points = 0;
    bool bounds_ok = true, f0_ok = true;
    for (double x : {10.0, 1e3, 1e6}) {
        for (double eps : {0.05, 0.25, 0.45}) {
            for (unsigned ell : {1u, 2u, 8u}) {
                analysis::TestFnParams p(x, eps, ell);
                double lx = std::log(x);
                double f0 = analysis::laplace_F(p, 0.0).real();
                f0_ok = f0_ok && rel(f0, 0.5 + eps / lx) < 1e-12;
                for (double sigma : {-3.0, -2.4, -2.0, -1.5, -1.0, -0.5, -0.2, -0.1, -0.02,
                                     0.02, 0.1, 0.2, 0.5, 1.0, 1.5, 2.0, 2.4, 3.0}) {
                    for (double t : {0.0, 0.1, 0.3, 0.7, 1.5, 3.0, 6.0, 11.0, 23.0, 47.0,
                                     91.0, 139.0, 211.0, 431.0, 700.0, 1000.0}) {
                        std::complex<double> s(sigma, t);
                        double fv = std::abs(analysis::laplace_F(p, -s * lx));
                        if (sigma > 0) {
                            for (double alpha : {0.0, 0.5 * ell, (double)ell}) {
                                bounds_ok = bounds_ok
                                    && fv <= analysis::F_bound(p, s, alpha,
                                                               analysis::FBoundRegime::positive_sigma);
                                ++points;
                            }
                        } else {
                            bounds_ok = bounds_ok
                                && fv <= analysis::F_bound(p, s, 0.0,
                                                           analysis::FBoundRegime::nonpositive_sigma);
                            ++points;
                            if (sigma < 0 && std::abs(s) < 2.0 * ell / eps) {
                                bounds_ok = bounds_ok
                                    && fv <= analysis::F_bound(p, s, 0.0,
                                                               analysis::FBoundRegime::small_disk);
                                ++points;
                            }
                        }
                    }
                }
            }
        }
    }
    check(bounds_ok && points >= 10000, "|F(-s log x)| <= regime bounds on %llu points",
          (unsigned long long)points);
    check(f0_ok, "F(0) = 1/2 + eps/log x to 1e-12 on the parameter grid");
}

static void criterion8() {
    // cumulative exact ideal counts to 1e5
    const std::uint64_t N = 100000;
    std::vector<std::int32_t> r(N + 1, 0);
    for (std::uint64_t d = 1; d <= N; d += 2) {
        std::int32_t s = (d & 3u) == 1 ? 1 : -1;
        for (std::uint64_t m = d; m <= N; m += d) r[m] += s;
    }
    bool dom = true;
    fieldparams::OracleField gauss{fieldparams::OracleTag::GaussianField};
    std::uint64_t cum = 0;
    std::vector<std::uint64_t> gcount(N + 1, 0);
    for (std::uint64_t n = 1; n <= N; ++n) {
        cum += (std::uint64_t)r[n];
        gcount[n] = cum;
    }
    for (double gamma = 0.1; gamma <= 1.0001; gamma += 0.1) {
        for (std::uint64_t x = 1; x <= N; ++x) {
            if ((double)x > fieldparams::ideal_count_bound(1, (double)x, gamma)) dom = false;
            if ((double)gcount[x] > fieldparams::ideal_count_bound(2, (double)x, gamma)) dom = false;
        }
    }
    check(dom, "ideal-count bound dominates both oracles to 1e5 across the gamma grid");

    // spot agreement between the cumulative array and the oracle op
    bool agree = fieldparams::ideal_count_oracle(gauss, 50000.0) == gcount[50000];
    check(agree, "cumulative Gaussian counts match the oracle op");

    auto p = btpipeline::SieveParams::reference();
    fieldparams::AbelianExtensionData rational{1, 1.0, 1.0, {}, {}};
    fieldparams::OracleField rat{fieldparams::OracleTag::RationalField};
    double th = btpipeline::v_range_threshold(rational, p);
    double v = btpipeline::v_oracle(rat, 1e6);
    check(v >= rat.kappa() * p.omega / 2.0 * th,
          "V(1e6) = %.4f clears kappa omega/2 log x = %.4f (rational, monotone)", v,
          rat.kappa() * p.omega / 2.0 * th);
    bool zform = true;
    for (double z : {100.0, 1e3, 1e4, 1e5, 1e6})
        zform = zform && btpipeline::v_oracle(gauss, z) >= gauss.kappa() / 2.0 * std::log(z);
    check(zform, "V(z) >= kappa/2 log z at desk scale (Gaussian)");
}

static void criterion9() {
    fieldparams::AbelianExtensionData rational{1, 1.0, 1.0, {}, {}};
    auto ref = btpipeline::SieveParams::reference();
    auto fig = optimizer::evaluate_point(ref, 400.0, -1.0, rational);
    check(fig.feasible, "reference parameter point is feasible");

    optimizer::ObjectiveSpec spec;
    spec.field = rational;
    spec.target = optimizer::Target::leading_constant;
    spec.caps.dq_exp = 8.4;
    spec.delta = {0.05, 0.45, 3};
    spec.eta = {0.05, 0.45, 3};
    spec.epsilon = {0.05, 0.45, 3};
    spec.omega = {0.05, 0.45, 3};
    spec.gamma = {0.05, 0.45, 3};
    spec.refine_rounds = 1;
    auto r1 = optimizer::optimize(spec);
    check(r1.value <= fig.constant + 1e-12,
          "optimized constant %.6f <= reference %.6f under matching caps", r1.value, fig.constant);
    auto r2 = optimizer::optimize(spec);
    check(r1.value == r2.value && r1.best.delta == r2.best.delta && r1.best.eta == r2.best.eta
              && r1.best.epsilon == r2.best.epsilon && r1.best.omega == r2.best.omega
              && r1.best.gamma == r2.best.gamma,
          "optimizer is deterministic across runs");
}

int main() {
    std::printf("acceptance run\n");
    criterion(1, "constant-pipeline", 5.0, criterion1);
    criterion(2, "tower-constants", 1.0, criterion2);
    criterion(3, "density", 30.0, criterion3);
    criterion(4, "coefficient-oracles", 60.0, criterion4);
    criterion(5, "sieve-battery", 60.0, criterion5);
    criterion(6, "prime-lemmas", 60.0, criterion6);
    criterion(7, "test-function", 30.0, criterion7);
    criterion(8, "ideal-counts", 30.0, criterion8);
    criterion(9, "optimizer", 120.0, criterion9);
    std::printf("failed criteria: %d\n", failures);
    return failures;
}
