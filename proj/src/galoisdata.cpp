#include "cbt/galoisdata.hpp"

#include "cbt/certified.hpp"
#include "cbt/errors.hpp"
#include "cbt/primes.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace cbt::galoisdata {

TowerData make_tower_data(std::uint64_t ell, std::uint64_t q, unsigned omega_Nf, std::uint64_t rad_Nf) {
    if (!primes::is_prime(ell)) throw domain_error("make_tower_data: ell must be prime");
    if (q == 0) throw domain_error("make_tower_data: q must be positive");
    if (std::gcd(q, ell) != 1) throw domain_error("make_tower_data: q must be coprime to ell");
    TowerData t;
    t.ell = ell;
    t.q = q;
    t.omega_Nf = omega_Nf;
    t.rad_Nf = rad_Nf;
    t.omega_q = primes::omega(q);
    t.rad_q = primes::radical(q);
    t.phi_q = primes::euler_phi(q);
    return t;
}

TowerOrders tower_orders(std::uint64_t ell) {
    if (!primes::is_prime(ell)) throw domain_error("tower_orders: ell must be prime");
    if (ell < 7) throw domain_error("tower_orders: ell must be >= 7");
    TowerOrders o;
    std::uint64_t m1 = ell - 1;
    o.order_G = m1 * m1 * (ell + 1) * ell;
    o.order_B = m1 * m1 * ell;
    o.order_H = m1 * ell;
    o.order_U = m1;
    o.deg_LB_Q = ell + 1;
    o.deg_LH_LB = ell - 1;
    o.deg_LU_LH = ell;
    o.ratio_Cpp = 1.0 / (double)m1;
    o.bound_Cp = ell;
    return o;
}

double M_quantity(double degLK, double root_disc, const std::vector<std::uint64_t>& ramified) {
    if (!(degLK >= 1.0)) throw domain_error("M_quantity: [L:K] must be >= 1");
    if (!(root_disc >= 1.0)) throw domain_error("M_quantity: root discriminant must be >= 1");
    double v = 2.0 * degLK * root_disc;
    for (std::uint64_t p : ramified) v *= (double)p;
    return v;
}

double serre_root_disc_bound_log(std::uint64_t ell, unsigned omega_Nf, std::uint64_t rad_Nf) {
    if (ell < 2) throw domain_error("serre_root_disc_bound: ell must be >= 2");
    double l = (double)ell;
    double v = std::log((double)rad_Nf) + std::log(l) + ((double)omega_Nf + 1.0) * std::log(l + 1.0);
    return cert::up(v);
}

double serre_root_disc_bound(std::uint64_t ell, unsigned omega_Nf, std::uint64_t rad_Nf) {
    return cert::up(std::exp(serre_root_disc_bound_log(ell, omega_Nf, rad_Nf)));
}

MBounds M_bounds(const TowerData& t) {
    double l1 = (double)t.ell + 1.0;
    double common = std::log(2.0) + 2.0 * std::log((double)t.rad_Nf)
        + std::log((double)t.phi_q) + std::log((double)t.rad_q);
    MBounds b;
    b.log_mU = cert::up(common + ((double)t.omega_Nf + 4.0) * std::log(l1));
    b.log_mH = cert::up(common + ((double)t.omega_Nf + 3.0) * std::log(l1));
    return b;
}

double dkq_from_M_log(double log_m, double degK) {
    if (!(log_m >= std::log(2.0))) throw domain_error("dkq_from_M: M must be >= 2");
    if (!(degK >= 1.0)) throw domain_error("dkq_from_M: [K:Q] must be >= 1");
    return cert::up(2.0 * degK * (log_m - std::log(2.0)));
}

double dkq_from_M(double m, double degK) {
    if (!(m >= 2.0)) throw domain_error("dkq_from_M: M must be >= 2");
    return dkq_from_M_log(std::log(m), degK);
}

double tilde_correction(unsigned n_K, double x, double m) {
    if (!(x >= 4.0)) throw domain_error("tilde_correction: x must be >= 4");
    if (!(m >= 1.0)) throw domain_error("tilde_correction: M quantity must be >= 1");
    double v = 3.15546 * (double)n_K * std::sqrt(x) / std::log(x) + (double)n_K * std::log(m);
    return cert::up(v);
}

double ChebConstants::log_range(std::uint64_t ell) const {
    double l1 = (double)ell + 1.0;
    return cert::up(cA + cB * l1 + cC * l1 * std::log(l1));
}

ChebConstants cheb_constants(const TowerData& t, TowerCase c) {
    double log_phi = std::log((double)t.phi_q);
    double log_radq = std::log((double)t.rad_q);
    double log_radN = std::log((double)t.rad_Nf);
    double omega_sum = (double)(1 + t.omega_q + t.omega_Nf);
    ChebConstants k;
    k.tower_case = c;
    double a_shift = (c == TowerCase::H_case) ? 2.9 : 0.9;
    double b_shift = (c == TowerCase::H_case) ? 5.8 : 6.8;
    double c_shift = (c == TowerCase::H_case) ? 3.5 : 4.5;
    k.cA = cert::up(std::max(62.0 + 4.2 * log_radN, 4.2 * (a_shift + log_phi)));
    k.cB = cert::up(std::max(42.0, 4.2 * (b_shift + log_phi + log_radq + std::log(2.0) * omega_sum)));
    k.cC = cert::up(4.2 * ((double)t.omega_Nf + c_shift));
    return k;
}

double cheb_leading_coefficient(const TowerData& t, std::uint64_t S_size) {
    if (t.ell < 3) throw domain_error("cheb_leading_coefficient: ell too small");
    return cert::up(11.29 * (double)S_size / ((double)t.phi_q * (double)(t.ell - 1)));
}

} // namespace cbt::galoisdata
