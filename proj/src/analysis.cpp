#include "cbt/analysis.hpp"

#include "cbt/certified.hpp"
#include "cbt/errors.hpp"

#include <cmath>

namespace cbt::analysis {

namespace {

using cplx = std::complex<double>;

// (1 - e^w)/(-w), entire with value 1 at w = 0.  Series below |w| = 1/4
// (term 20 is < 1e-26 there), expm1-style direct formula elsewhere; the
// direct branch never sees the cancellation region.
cplx one_minus_exp_over(cplx w) {
    if (std::abs(w) < 0.25) {
        // sum_{k>=0} w^k/(k+1)!
        cplx sum = 0.0, term = 1.0;
        for (int k = 0; k < 20; ++k) {
            sum += term;
            term *= w / (double)(k + 2);
        }
        return sum;
    }
    // complex expm1: e^w - 1 with stable real part
    double er = std::expm1(w.real());
    double c = std::cos(w.imag()), s = std::sin(w.imag());
    cplx em1(er * c - 2.0 * std::sin(w.imag() / 2.0) * std::sin(w.imag() / 2.0), (er + 1.0) * s);
    return em1 / w; // (1 - e^w)/(-w) = (e^w - 1)/w
}

} // namespace

TestFnParams::TestFnParams(double x_, double epsilon_, unsigned ell_)
    : x(x_), epsilon(epsilon_), ell(ell_) {
    if (!(x >= 3.0)) throw domain_error("TestFnParams: x must be >= 3");
    if (!(epsilon > 0.0 && epsilon < 0.5)) throw domain_error("TestFnParams: epsilon must lie in (0, 1/2)");
    if (ell < 1) throw domain_error("TestFnParams: ell must be >= 1");
    A = epsilon / (2.0 * (double)ell * std::log(x));
}

double TestFnParams::log_x() const { return std::log(x); }

std::complex<double> laplace_F(const TestFnParams& p, std::complex<double> z) {
    double lA = (double)p.ell * p.A;
    cplx head = std::exp(-(1.0 + 2.0 * lA) * z);
    cplx first = (0.5 + 2.0 * lA) * one_minus_exp_over((0.5 + 2.0 * lA) * z);
    cplx g = one_minus_exp_over(2.0 * p.A * z);
    cplx gl = 1.0;
    for (unsigned k = 0; k < p.ell; ++k) gl *= g;
    return head * first * gl;
}

double F_bound(const TestFnParams& p, std::complex<double> s, double alpha, FBoundRegime regime) {
    double sigma = s.real();
    double mod_s = std::abs(s);
    double lx = p.log_x();
    double l = (double)p.ell, eps = p.epsilon;
    if (mod_s == 0.0) throw domain_error("F_bound: s = 0 not in any bound regime");
    switch (regime) {
    case FBoundRegime::positive_sigma: {
        if (!(sigma > 0.0)) throw domain_error("F_bound: positive_sigma regime needs sigma > 0");
        if (!(alpha >= 0.0 && alpha <= l)) throw domain_error("F_bound: alpha must lie in [0, ell]");
        double v = std::exp(sigma * eps) * std::pow(p.x, sigma) / (mod_s * lx)
                 * (1.0 + std::pow(p.x, -sigma / 2.0))
                 * std::pow(2.0 * l / (eps * mod_s), alpha);
        return cert::up(v);
    }
    case FBoundRegime::nonpositive_sigma: {
        if (!(sigma <= 0.0)) throw domain_error("F_bound: nonpositive_sigma regime needs sigma <= 0");
        double v = 2.0 * std::pow(p.x, sigma / 2.0) / (mod_s * lx)
                 * std::pow(l * (1.0 + std::exp(-eps * sigma)) / (eps * mod_s), l);
        return cert::up(v);
    }
    case FBoundRegime::small_disk: {
        if (!(sigma < 0.0)) throw domain_error("F_bound: small_disk regime needs sigma < 0");
        double r = mod_s * eps / l;
        if (!(r < 2.0)) throw domain_error("F_bound: small_disk regime needs |s| < 2 ell/epsilon");
        double v = 2.0 * std::pow(p.x, sigma / 2.0) / (mod_s * lx)
                 * std::pow(2.0 / (2.0 - r), l);
        return cert::up(v);
    }
    }
    throw domain_error("F_bound: unknown regime");
}

double hecke_L_bound(const LBoundQuery& q) {
    if (!(q.delta > 0.0)) throw domain_error("hecke_L_bound: delta must be positive");
    if (!(-q.delta < q.sigma && q.sigma < 1.0)) throw domain_error("hecke_L_bound: sigma outside (-delta, 1)");
    if (!(q.D_chi >= 1.0)) throw domain_error("hecke_L_bound: D_chi must be >= 1");
    double expo = (1.0 + q.delta - q.sigma) / 2.0;
    double s1 = std::hypot(q.sigma + 1.0, q.t);
    double logb = (double)q.n_K * std::log1p(1.0 / q.delta)
                + expo * (std::log(q.D_chi) + (double)q.n_K * (std::log(s1) - std::log(2.0 * M_PI)));
    if (q.is_principal) logb += std::log((q.delta + 1.0) / (1.0 - q.sigma));
    return cert::up(std::exp(logb));
}

double lambert_range_threshold_log(double a, double b) {
    if (!(a > 0.0 && b > 0.0)) throw domain_error("lambert_range_threshold: a, b must be positive");
    double lab = std::log(a) + std::log(b);
    if (!(lab > 0.0)) throw domain_error("lambert_range_threshold: requires ab > 1");
    return cert::up(a * (std::sqrt(2.0 / lab) + 1.0) * lab);
}

double lambert_range_threshold(double a, double b) {
    return cert::up(std::exp(lambert_range_threshold_log(a, b)));
}

} // namespace cbt::analysis
