#include "cbt/density.hpp"

#include "cbt/certified.hpp"
#include "cbt/errors.hpp"
#include "cbt/primes.hpp"
#include "cbt/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace cbt::density {

DensityInputs DensityInputs::weight12() {
    DensityInputs d;
    d.X0 = 1e23;
    d.log_X1 = std::exp(16.0);
    d.exceptional_count = 1810;
    d.partial_product = "0.99999999999999999980399";
    d.q = 3488033912832000ull;
    d.classes = 33;
    d.lt_coefficient = 3.01e-10;
    d.prefactor_num = 1;
    d.prefactor_den = 1;
    return d;
}

DensityInputs DensityInputs::level11() {
    DensityInputs d;
    d.X0 = 1e11;
    d.log_X1 = std::exp(13.0);
    d.exceptional_count = 17857;
    d.partial_product = "0.9069908529642857142857142"; // (15/14) * 0.8465247961, truncated down
    d.q = 5;
    d.classes = 1;
    d.lt_coefficient = 631.0;
    d.prefactor_num = 14;
    d.prefactor_den = 15;
    return d;
}

double parse_decimal(const std::string& s) {
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0') throw domain_error("parse_decimal: malformed decimal string");
    return v;
}

double decimal_complement(const std::string& s) {
    auto dot = s.find('.');
    if (dot == std::string::npos || s.substr(0, dot) != "0")
        throw domain_error("decimal_complement: expected a string of the form 0.ddd...");
    std::string frac = s.substr(dot + 1);
    if (frac.empty()) throw domain_error("decimal_complement: empty fraction");
    // digitwise 10^n - d1...dn, borrow running right to left
    std::string comp(frac.size(), '0');
    int borrow = 0;
    for (std::size_t i = frac.size(); i-- > 0;) {
        if (!std::isdigit((unsigned char)frac[i])) throw domain_error("decimal_complement: non-digit");
        int d = frac[i] - '0' + borrow;
        if (d == 0) {
            comp[i] = '0';
            borrow = 0;
        } else {
            comp[i] = (char)('0' + (10 - d));
            borrow = 1;
        }
    }
    if (borrow == 0) return 1.0; // the fraction was all zeros
    return parse_decimal("0." + comp);
}

double tail_integral(double coeff, double log_X1) {
    if (!(coeff >= 0.0)) throw domain_error("tail_integral: coefficient must be >= 0");
    if (!(log_X1 > std::exp(1.0))) throw domain_error("tail_integral: log X1 must exceed e");
    double ll = std::log(log_X1);
    return cert::up(coeff * (ll * ll + 2.0 * ll + 2.0) / log_X1);
}

MiddleIntegral middle_integral(const DensityInputs& d) {
    if (!(d.X0 > 2.0 * (double)d.q)) throw domain_error("middle_integral: requires X0 > 2q");
    MiddleIntegral out;
    out.exceptional_exact = cert::up((double)d.exceptional_count * std::log1p(1.0 / d.X0));
    out.exceptional_simple = cert::up((double)d.exceptional_count / d.X0);
    quadrature::Integrand f;
    f.kind = quadrature::Kind::shifted_log_kernel;
    f.c = d.X0 / (double)d.q - 2.0;
    double log_hi = d.log_X1 - std::log((double)d.q);
    auto enc = quadrature::integrate_log_hi(f, 2.0, log_hi, d.quadrature_tol);
    out.quadrature_value = enc.upper;
    out.cells = enc.cells;
    double coef = 2.0 * (double)d.classes / (double)primes::euler_phi(d.q);
    out.total = cert::up(std::min(out.exceptional_exact, out.exceptional_simple)
                         + cert::up(coef * enc.upper));
    return out;
}

double middle_integral_upper(const DensityInputs& d) {
    return middle_integral(d).total;
}

DensityBound density_lower_bound(const DensityInputs& d) {
    DensityBound out;
    out.middle = middle_integral_upper(d);
    out.tail = tail_integral(d.lt_coefficient, d.log_X1);
    double I = cert::up(out.middle + out.tail);
    double pp = parse_decimal(d.partial_product);
    double pref = (double)d.prefactor_num / (double)d.prefactor_den;
    double total_product = pref * pp;
    if (total_product > 1.0 - 1e-9) {
        // complement space: 1 - P e^{-I} <= (1 - P) + I
        double comp_p = decimal_complement(d.partial_product); // prefactor is 1 here
        if (d.prefactor_num != d.prefactor_den)
            throw domain_error("density_lower_bound: near-1 path expects unit prefactor");
        out.complement_upper = cert::up(comp_p + I);
        out.lower = 1.0 - out.complement_upper;
    } else {
        out.lower = cert::down(pref * cert::down(pp) * cert::down(std::exp(-I)));
        out.complement_upper = cert::up(1.0 - out.lower);
    }
    return out;
}

} // namespace cbt::density
