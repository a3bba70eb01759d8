#pragma once

#include <cstdint>
#include <vector>

namespace cbt::galoisdata {

// Inputs for the mod-l representation tower attached to a newform: the
// sieving prime l, the auxiliary congruence modulus q (coprime to l), and
// the level invariants omega(N_f), rad(N_f).  Quantities derived from q are
// filled by make_tower_data.
struct TowerData {
    std::uint64_t ell = 7;
    std::uint64_t q = 1;
    unsigned omega_Nf = 0;
    std::uint64_t rad_Nf = 1;
    unsigned omega_q = 0;
    std::uint64_t rad_q = 1;
    std::uint64_t phi_q = 1;
};

TowerData make_tower_data(std::uint64_t ell, std::uint64_t q, unsigned omega_Nf, std::uint64_t rad_Nf);

// Orders and indices along {1} < U < H < B < G = GL_2(F_l), plus the two
// class-fraction figures consumed downstream.  |U| is recorded as l - 1,
// matching the degree bookkeeping that feeds the pipelines ([L^U(zeta_q):L^B]
// = phi(q) l (l-1)); the standard unipotent order l is not what is consumed.
struct TowerOrders {
    std::uint64_t order_G;
    std::uint64_t order_B;
    std::uint64_t order_H;
    std::uint64_t order_U;
    std::uint64_t deg_LB_Q;   // l + 1
    std::uint64_t deg_LH_LB;  // l - 1
    std::uint64_t deg_LU_LH;  // l
    double ratio_Cpp;         // |C''|/|B/H| = 1/(l-1)
    std::uint64_t bound_Cp;   // |C'| <= l
};

// Requires ell prime, >= 7.
TowerOrders tower_orders(std::uint64_t ell);

// M(L/K) = 2 [L:K] D_K^{1/[K:Q]} prod_{ramified p} p.
double M_quantity(double degLK, double root_disc, const std::vector<std::uint64_t>& ramified);

// Root-discriminant bound rad(N_f) l (l+1)^{omega(N_f)+1} for the degree
// l+1 layer; log form available for large l.
double serre_root_disc_bound(std::uint64_t ell, unsigned omega_Nf, std::uint64_t rad_Nf);
double serre_root_disc_bound_log(std::uint64_t ell, unsigned omega_Nf, std::uint64_t rad_Nf);

struct MBounds {
    double log_mU; // log of 2 (l+1)^{omega(N_f)+4} rad(N_f)^2 phi(q) rad(q)
    double log_mH; // same with exponent omega(N_f)+3
};

MBounds M_bounds(const TowerData& t);

// log(D_K Q) <= 2 [K:Q] log(M/2) from an M-quantity bound; takes log M.
double dkq_from_M_log(double log_m, double degK);
// value-level convenience used by desk-scale callers
double dkq_from_M(double m, double degK);

// Correction 3.15546 n_K sqrt(x)/log x + n_K log M, upward rounded; x >= 4.
double tilde_correction(unsigned n_K, double x, double m);

enum class TowerCase { H_case, U_case };

// Range/constant factory for the tower pipelines.  H case:
//   cA = max(62 + 4.2 log rad(N_f), 4.2 (2.9 + log phi(q)))
//   cB = max(42, 4.2 (5.8 + log phi(q) + log rad(q) + (log 2)(1 + omega(q) + omega(N_f))))
//   cC = 4.2 (omega(N_f) + 3.5)
// U case: 2.9 -> 0.9, 5.8 -> 6.8, 3.5 -> 4.5.  The range in log x is
// cA + cB (l+1) + cC (l+1) log(l+1); the leading constant multiplies
// |S| x / (phi(q) (l-1) log x).
struct ChebConstants {
    double cA;
    double cB;
    double cC;
    TowerCase tower_case;

    double log_range(std::uint64_t ell) const;
};

ChebConstants cheb_constants(const TowerData& t, TowerCase c);

// Leading coefficient 11.29 |S| / (phi(q) (l-1)) of the tower bound.
double cheb_leading_coefficient(const TowerData& t, std::uint64_t S_size);

} // namespace cbt::galoisdata
