#pragma once

#include <complex>

namespace cbt::analysis {

// Parameters of the smoothed indicator of [1/2, 1] whose Laplace transform
// drives every contour estimate: x >= 3, epsilon in (0, 1/2), ell >= 1,
// and the derived width A = epsilon / (2 ell log x).
struct TestFnParams {
    double x;
    double epsilon;
    unsigned ell;
    double A;

    TestFnParams(double x_, double epsilon_, unsigned ell_);
    double log_x() const;
};

// Entire Laplace transform
//   F(z) = e^{-(1+2lA)z} * (1 - e^{(1/2+2lA)z})/(-z) * ((1 - e^{2Az})/(-2Az))^l,
// with the removable singularity at z = 0 evaluated by series.
std::complex<double> laplace_F(const TestFnParams& p, std::complex<double> z);

enum class FBoundRegime {
    positive_sigma,   // sigma > 0, needs alpha in [0, ell]
    nonpositive_sigma, // sigma <= 0
    small_disk,       // sigma < 0 and |s| < 2 ell / epsilon
};

// Certified upper bound for |F(-s log x)| in the requested regime,
// rounded upward.  alpha is used only by positive_sigma.
double F_bound(const TestFnParams& p, std::complex<double> s, double alpha, FBoundRegime regime);

struct LBoundQuery {
    unsigned n_K;
    double D_chi;      // D_K * N(f_chi) >= 1
    double delta;      // > 0
    double sigma;      // -delta < sigma < 1
    double t;
    bool is_principal;
};

// Phragmen-Lindelof bound for a primitive ray class L-function inside the
// strip -delta < sigma < 1, rounded upward:
//   ((delta+1)/(1-sigma))^{principal} (1+1/delta)^{n_K}
//     * (D_chi |s+1|^{n_K} / (2 pi)^{n_K})^{(1+delta-sigma)/2}.
double hecke_L_bound(const LBoundQuery& q);

// Smallest closed-form T = (ab)^{a(sqrt(2/log(ab)) + 1)} guaranteeing
// x^{1/a}/log x >= b for all x >= T.  Requires ab > 1.  Rounded upward.
double lambert_range_threshold(double a, double b);

// Same threshold in log form, safe when T overflows a double.
double lambert_range_threshold_log(double a, double b);

} // namespace cbt::analysis
