#include "cbt/ltpipeline.hpp"

#include "cbt/certified.hpp"
#include "cbt/errors.hpp"
#include "cbt/primes.hpp"

#include <cmath>
#include <numeric>

namespace cbt::ltpipeline {

void NewformProfile::validate() const {
    if (k_f < 2 || (k_f & 1)) throw domain_error("NewformProfile: weight must be even and >= 2");
    if (N_f == 0 || q == 0 || S_size == 0) throw domain_error("NewformProfile: N_f, q, |S| must be positive");
    if (q > 1 && N_f > 1 && std::gcd(q, N_f) != 1) throw domain_error("NewformProfile: q must be coprime to N_f");
}

NewformProfile make_profile(unsigned k_f, std::uint64_t N_f, std::uint64_t ell0,
                            std::uint64_t q, std::uint64_t S_size) {
    NewformProfile p;
    p.k_f = k_f;
    p.N_f = N_f;
    p.ell0 = ell0;
    p.q = q;
    p.S_size = S_size;
    p.omega_Nf = primes::omega(N_f);
    p.rad_Nf = primes::radical(N_f);
    p.phi_q = primes::euler_phi(q);
    p.validate();
    return p;
}

NewformProfile NewformProfile::weight12_general() {
    return make_profile(12, 1, 691, 1, 1);
}

NewformProfile NewformProfile::weight12_zero_trace() {
    return make_profile(12, 1, 691, 3488033912832000ull, 33);
}

NewformProfile NewformProfile::level11_weight2() {
    return make_profile(2, 11, 5, 5, 1);
}

double sieve_tail(double x, unsigned t, std::uint64_t ell_t) {
    if (t < 1) throw domain_error("sieve_tail: t must be >= 1");
    if (!((double)ell_t < x)) throw domain_error("sieve_tail: requires ell_t < x");
    double pw = std::pow(2.0, 0.5 * (double)t);
    double power_term = std::exp((double)t * std::log((double)ell_t)); // l_t^t via logs
    double v = std::sqrt(2.0) * x / pw + std::sqrt(2.0) * pw * power_term
             + std::pow(2.0, (double)t) + 70.0 / std::pow(2.0, (double)t);
    return cert::up(v);
}

CorTail cor_tail(double x, double r) {
    if (!(x > std::exp(1.0))) throw domain_error("cor_tail: x must exceed e");
    if (!(r > 1.0)) throw domain_error("cor_tail: r must exceed 1");
    double lx = std::log(x);
    CorTail out;
    out.t = (unsigned)std::ceil(2.0 * r / std::log(2.0) * std::log(lx));
    double lr = std::pow(lx, r);
    out.tail = cert::up(x * std::sqrt(2.0) / lr + 2.0 * std::sqrt(x) / lr
                        + 2.0 * std::pow(lx, 2.0 * r) + 35.0);
    return out;
}

double cor_coefficient(double r) {
    return cert::up(2.0 * r / std::log(2.0) + 1.0 / std::log(272.0));
}

namespace {

// Certified count of primes in [ell, 2 ell) with gcd(p-1, k_f-1) = 1 and
// gcd(p, q) = 1.  Enumerates below 1e8; above that the interval lower
// bounds 0.3 y/log y (weight-12 congruence filter) or 0.6 y/log y (no
// filter) stand in, minus omega(q) for the finitely many primes dividing q.
std::pair<std::uint64_t, std::string> admissible_in_interval(const NewformProfile& p, std::uint64_t ell) {
    if (ell <= 100'000'000ull) {
        std::uint64_t count = 0;
        for (std::uint64_t v : primes::primes_in_range(ell, 2 * ell - 1)) {
            if (std::gcd(v - 1, (std::uint64_t)p.k_f - 1) != 1) continue;
            if (p.q > 1 && std::gcd(v, p.q) != 1) continue;
            ++count;
        }
        return {count, "enumeration"};
    }
    double y = (double)ell;
    double lower;
    if (p.k_f == 12) {
        if (y < 2000.0) throw bounds_error("admissible_in_interval: analytic path needs y >= 2000");
        lower = 0.3 * y / std::log(y);
    } else if (p.k_f == 2) {
        if (y < 20.5) throw bounds_error("admissible_in_interval: analytic path needs y >= 20.5");
        lower = 0.6 * y / std::log(y);
    } else {
        throw bounds_error("admissible_in_interval: no analytic bound for this weight");
    }
    double adj = cert::down(lower) - (double)primes::omega(p.q);
    return {adj <= 0.0 ? 0 : (std::uint64_t)std::floor(adj), "analytic"};
}

} // namespace

LTConditions check_conditions(const NewformProfile& p, double log_x, double r,
                              std::uint64_t ell1, bool a_zero) {
    p.validate();
    if (!(log_x > 1.0)) throw domain_error("check_conditions: x must exceed e");
    if (!(r > 1.0)) throw domain_error("check_conditions: r must exceed 1");
    LTConditions c;
    c.r = r;
    c.ell1 = ell1;
    c.t = (unsigned)std::ceil(2.0 * r / std::log(2.0) * std::log(log_x));

    c.condA = primes::is_prime(ell1)
        && ell1 > std::max<std::uint64_t>(p.ell0, 5)
        && std::gcd(ell1 - 1, (std::uint64_t)p.k_f - 1) == 1
        && (p.q == 1 || std::gcd(ell1, p.q) == 1);

    if (c.condA) {
        auto t = galoisdata::make_tower_data(ell1, p.q, p.omega_Nf, p.rad_Nf);
        auto cc = galoisdata::cheb_constants(t, a_zero ? galoisdata::TowerCase::H_case
                                                       : galoisdata::TowerCase::U_case);
        c.tower_log_range = cc.log_range(ell1);
        c.condB = log_x >= c.tower_log_range;

        c.condC = std::log((double)ell1) < log_x / (2.0 * (double)c.t) - std::log(2.0);

        auto [count, method] = admissible_in_interval(p, ell1);
        c.interval_count = count;
        c.condD_method = method;
        c.condD = count >= c.t;
    }
    return c;
}

MainBound main_bound(const NewformProfile& p, double log_x, double r,
                     std::uint64_t ell1, bool a_zero) {
    MainBound m;
    m.conditions = check_conditions(p, log_x, r, ell1, a_zero);
    m.valid = m.conditions.all();
    if (ell1 < 2) throw domain_error("main_bound: ell1 must be a prime >= 7");
    m.coef_main = cert::up(34.7 * r * (double)p.S_size / ((double)p.phi_q * (double)(ell1 - 1)));
    double ll = std::log(log_x);
    double inner = m.coef_main * ll / log_x + 1.42 * std::exp(-r * std::log(log_x));
    m.log_bound = cert::up(log_x + std::log(inner));
    return m;
}

double correction_absorption_margin(const NewformProfile& p, double log_x,
                                    std::uint64_t ell1, bool a_zero) {
    double l1 = (double)ell1 + 1.0;
    auto t = galoisdata::make_tower_data(ell1, p.q, p.omega_Nf, p.rad_Nf);
    auto mb = galoisdata::M_bounds(t);
    double log_m = a_zero ? mb.log_mH : mb.log_mU;
    // corrections: 3.15546 (l+1) sqrt(x)/log x  +  (l+1) log M  +  1,
    // all in logs, combined by log-sum-exp
    double term1 = std::log(3.15546 * l1) + 0.5 * log_x - std::log(log_x);
    double term2 = std::log(l1 * log_m);
    double term3 = 0.0; // log(1)
    double hi = std::max({term1, term2, term3});
    double corr = hi + std::log(std::exp(term1 - hi) + std::exp(term2 - hi) + std::exp(term3 - hi));
    double budget = std::log(0.01) - std::log((double)p.phi_q * (double)(ell1 - 1))
        + log_x - std::log(log_x);
    return cert::down(budget - corr);
}

double ell_of_x(double log_x, double theta) {
    if (!(log_x > 1.0)) throw domain_error("ell_of_x: x must exceed e^e");
    if (theta < 0.0) throw domain_error("ell_of_x: theta must be >= 0");
    return theta * log_x / std::log(log_x);
}

double asymptotic_coefficient(const NewformProfile& p, double theta, double r,
                              double ell_fraction) {
    if (!(theta > 0.0)) throw domain_error("asymptotic_coefficient: theta must be positive");
    if (!(ell_fraction > 0.0 && ell_fraction <= 1.0))
        throw domain_error("asymptotic_coefficient: ell_fraction must lie in (0, 1]");
    return cert::up(34.7 * r * (double)p.S_size / ((double)p.phi_q * ell_fraction * theta));
}

double density_coefficient(const NewformProfile& p, double theta, double r,
                           double ell_fraction, double log_X1) {
    double base = asymptotic_coefficient(p, theta, r, ell_fraction);
    double ll = std::log(log_X1);
    double absorbed = 1.42 * std::exp(-(r - 2.0) * std::log(log_X1)) / (ll * ll);
    return cert::up(base + absorbed);
}

double thm_constant_check(double r) {
    if (!(r > 1.0)) throw domain_error("thm_constant_check: r must exceed 1");
    return cert::up(11.3 * cor_coefficient(r) / r);
}

} // namespace cbt::ltpipeline
