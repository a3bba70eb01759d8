#pragma once

#include <cstdint>
#include <string>

namespace cbt::quadrature {

// Two-sided enclosure of an integral.
struct Enclosure {
    double lower = 0.0;
    double upper = 0.0;
    std::uint64_t cells = 0;
};

// Registered integrand family.  Each member factors as N(x)/D(x) with N and
// D nondecreasing on its domain, so on a cell [a,b]
//     N(a)/D(b) * (b-a)  <=  integral  <=  N(b)/D(a) * (b-a),
// and each supplies a closed-form enclosure of its far tail so the engine
// can certify integrals whose upper limit only fits in log space.
enum class Kind {
    reciprocal,            // 1/x                        on x > 0
    inv_x_xplus1,          // 1/(x(x+1))                 on x > 0
    shifted_log_kernel,    // x/((x+c)^2 log x)          on x > 1, c >= 0
    loglog_sq_kernel,      // (log log x)^2/(x (log x)^2) on x >= e
};

struct Integrand {
    Kind kind = Kind::reciprocal;
    double c = 0.0; // shift parameter for shifted_log_kernel

    double value(double x) const;
    std::string name() const;
};

// Certified enclosure of the integral of `f` over [lo, e^{log_hi}].
// Postcondition: lower <= integral <= upper and (upper-lower) <= tol*upper.
// The engine refines geometric cells to an internal target well inside tol
// and hands the region beyond a switchover point to the integrand's
// closed-form tail enclosure.  Throws precision_error if the cell budget
// cannot reach the tolerance.
Enclosure integrate_log_hi(const Integrand& f, double lo, double log_hi, double tol);

// Convenience wrapper for ordinary finite upper limits.
Enclosure integrate(const Integrand& f, double lo, double hi, double tol);

// Upper bound alone, as most call sites consume it.
double upper(const Integrand& f, double lo, double hi, double tol);

} // namespace cbt::quadrature
