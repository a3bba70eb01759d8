#pragma once

#include <cstdint>
#include <string>

namespace cbt::density {

// Inputs of a nonvanishing-density lower bound: census cutoff X0 with its
// exceptional-prime count and partial Euler product (kept as a decimal
// string so 25 significant digits survive), the crossover X1 (as log X1),
// the congruence data, and the asymptotic coefficient taking over past X1.
// The partial product excludes the rational prefactor (1 for the weight-12
// form; 14/15 for the level-11 curve, whose published combined constant
// 0.8465247961 factors as (14/15) * 0.90699085296428571...).
struct DensityInputs {
    double X0 = 0.0;
    double log_X1 = 0.0;
    std::uint64_t exceptional_count = 0;
    std::string partial_product;
    std::uint64_t q = 1;
    std::uint64_t classes = 1;
    double lt_coefficient = 0.0;
    unsigned prefactor_num = 1;
    unsigned prefactor_den = 1;
    double quadrature_tol = 1e-4;

    static DensityInputs weight12();  // X0 = 1e23, 1810 exceptional primes
    static DensityInputs level11();   // X0 = 1e11, 17857 exceptional primes
};

// Closed-form upper bound coeff ((log log X1)^2 + 2 log log X1 + 2)/log X1
// for the integral of coeff (log log x)^2/(x (log x)^2) beyond X1.
double tail_integral(double coeff, double log_X1);

struct MiddleIntegral {
    double total = 0.0;               // certified upper bound
    double exceptional_exact = 0.0;   // count * log(1 + 1/X0)
    double exceptional_simple = 0.0;  // count / X0
    double quadrature_value = 0.0;    // upper enclosure of the kernel integral
    std::uint64_t cells = 0;
};

// Certified upper bound for the integral of the counting bound between X0
// and X1: the exceptional-count term plus (2 classes/phi(q)) times the
// substituted kernel integral of x/((x + X0/q - 2)^2 log x) over
// [2, X1/q].  The tighter of the two exceptional-term bounds enters the
// total; both are reported.
MiddleIntegral middle_integral(const DensityInputs& d);
double middle_integral_upper(const DensityInputs& d);

struct DensityBound {
    double lower = 0.0;            // certified lower bound for the density
    double complement_upper = 1.0; // certified upper bound for 1 - density
    double middle = 0.0;
    double tail = 0.0;
};

// prefactor * partial_product * exp(-middle - tail), downward rounded.
// When the product sits within 1e-9 of 1 the bound is formed in complement
// space so the 1e-19-scale gap survives double precision.
DensityBound density_lower_bound(const DensityInputs& d);

// Decimal-string utilities for the stored partial products.
double parse_decimal(const std::string& s);
double decimal_complement(const std::string& s); // 1 - value, exact digitwise

} // namespace cbt::density
