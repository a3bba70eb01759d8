#include "cbt/quadrature.hpp"

#include "cbt/certified.hpp"
#include "cbt/errors.hpp"

#include <algorithm>
#include <cmath>

namespace cbt::quadrature {

namespace {

constexpr double kE = 2.718281828459045;
constexpr std::uint64_t kCellBudget = 80'000'000;

double domain_min(const Integrand& f) {
    switch (f.kind) {
    case Kind::reciprocal: return 1e-300;
    case Kind::inv_x_xplus1: return 1e-300;
    case Kind::shifted_log_kernel: return 1.0 + 1e-9;
    case Kind::loglog_sq_kernel: return kE;
    }
    return 0.0;
}

double numer(const Integrand& f, double x) {
    switch (f.kind) {
    case Kind::reciprocal: return 1.0;
    case Kind::inv_x_xplus1: return 1.0;
    case Kind::shifted_log_kernel: return x;
    case Kind::loglog_sq_kernel: {
        double ll = std::log(std::log(x));
        return ll * ll;
    }
    }
    return 0.0;
}

double denom(const Integrand& f, double x, double log_x) {
    switch (f.kind) {
    case Kind::reciprocal: return x;
    case Kind::inv_x_xplus1: return x * (x + 1.0);
    case Kind::shifted_log_kernel: return (x + f.c) * (x + f.c) * log_x;
    case Kind::loglog_sq_kernel: return x * log_x * log_x;
    }
    return 1.0;
}

// Closed-form enclosure of the integral over [T, e^{log_hi}].
Enclosure tail_enclosure(const Integrand& f, double T, double log_hi) {
    Enclosure e;
    double log_T = std::log(T);
    switch (f.kind) {
    case Kind::reciprocal: {
        double v = log_hi - log_T;
        e.lower = cert::down(v);
        e.upper = cert::up(v);
        return e;
    }
    case Kind::inv_x_xplus1: {
        // log((T+1)/T) - log((H+1)/H); the H part lies in [0, e^{-log_hi}]
        double head = std::log1p(1.0 / T);
        double hinv = log_hi > 700.0 ? 0.0 : std::exp(-log_hi);
        e.upper = cert::up(head);
        e.lower = std::max(0.0, cert::down(head - std::log1p(hinv)));
        return e;
    }
    case Kind::shifted_log_kernel: {
        // x/((x+c)^2 log x) = (x/(x+c))^2 / (x log x), and x/(x+c) climbs
        // from T/(T+c) toward 1, so log log brackets the tail.
        double v = std::log(log_hi) - std::log(log_T);
        double shrink = (T / (T + f.c)) * (T / (T + f.c));
        e.upper = cert::up(v);
        e.lower = cert::down(v * shrink);
        return e;
    }
    case Kind::loglog_sq_kernel: {
        // exact antiderivative: -((log log x)^2 + 2 log log x + 2)/log x
        auto G = [](double lg) {
            double ll = std::log(lg);
            return (ll * ll + 2.0 * ll + 2.0) / lg;
        };
        double v = G(log_T) - G(log_hi);
        e.upper = cert::up(v);
        e.lower = cert::down(v);
        return e;
    }
    }
    return e;
}

// Switchover point beyond which the closed-form tail is tight enough for
// the requested gap target.
double pick_switchover(const Integrand& f, double lo, double target) {
    switch (f.kind) {
    case Kind::shifted_log_kernel:
        return std::max({lo * 4.0, 64.0, std::min(64.0 * f.c / target, 1e17)});
    default:
        return std::max(lo * 4.0, 1e15);
    }
}

// Sharper cell enclosure for the shifted kernel: write
//   x/((x+c)^2 log x) = m(x) / (x log x),  m(x) = (x/(x+c))^2,
// integrate 1/(x log x) exactly across the cell (log log difference) and
// bracket the nondecreasing factor m at the endpoints.  The m-increments
// telescope, so the summed gap stays below one log-log cell width no
// matter how many cells there are; the generic N(b)/D(a) rule cannot
// reach 1e-6 tolerances on this kernel within any sane cell budget.
struct ShiftedCell {
    double m_lo, m_hi, g_exact;
};

ShiftedCell shifted_cell(double a, double b, double log_a, double c) {
    double ra = a / (a + c), rb = b / (b + c);
    double g = std::log1p(std::log(b / a) / log_a);
    return {ra * ra, rb * rb, g};
}

} // namespace

double Integrand::value(double x) const {
    if (x < domain_min(*this)) throw domain_error("Integrand::value: x below domain");
    return numer(*this, x) / denom(*this, x, std::log(x));
}

std::string Integrand::name() const {
    switch (kind) {
    case Kind::reciprocal: return "1/x";
    case Kind::inv_x_xplus1: return "1/(x(x+1))";
    case Kind::shifted_log_kernel: return "x/((x+c)^2 log x)";
    case Kind::loglog_sq_kernel: return "(log log x)^2/(x (log x)^2)";
    }
    return "?";
}

Enclosure integrate_log_hi(const Integrand& f, double lo, double log_hi, double tol) {
    if (!(tol > 0.0 && tol < 1.0)) throw domain_error("integrate: tol must lie in (0,1)");
    if (!(lo >= domain_min(f))) throw domain_error("integrate: lower limit below integrand domain");
    if (f.kind == Kind::shifted_log_kernel && f.c < 0.0)
        throw domain_error("integrate: shift parameter must be >= 0");
    Enclosure out;
    if (!(log_hi > std::log(lo))) return out; // empty or degenerate range -> 0

    // the telescoping cell rule for the shifted kernel has absolute gap
    // ~1.4 h, so its cell width scales with the integral's magnitude; a
    // coarse probe estimates that magnitude first
    double magnitude = 0.0;
    if (f.kind == Kind::shifted_log_kernel) {
        double T = pick_switchover(f, lo, 1e-3);
        bool has_tail = log_hi > std::log(T);
        double hi_cells = has_tail ? T : std::exp(log_hi);
        double a = lo, log_a = std::log(lo);
        long double sum = 0.0L;
        while (a < hi_cells) {
            double b = std::min(a * 1.001, hi_cells);
            ShiftedCell sc = shifted_cell(a, b, log_a, f.c);
            sum += (long double)(sc.m_lo * sc.g_exact);
            a = b;
            log_a = std::log(a);
        }
        if (has_tail) sum += (long double)tail_enclosure(f, hi_cells, log_hi).lower;
        magnitude = (double)sum;
    }

    double target = tol / 8.0;
    for (int attempt = 0; attempt < 8; ++attempt, target /= 4.0) {
        double T = pick_switchover(f, lo, target);
        bool has_tail = log_hi > std::log(T);
        double hi_cells = has_tail ? T : std::exp(log_hi);

        double h = target / 4.5;
        if (f.kind == Kind::shifted_log_kernel && magnitude > 0.0) {
            // telescoped cell gap is ~1.44 h absolute; aim it at a quarter
            // of the permitted gap tol * magnitude
            double cur_tol = target * 8.0;
            h = std::max(h, std::min(0.25, cur_tol * magnitude / 6.0));
        }
        double span = std::log(hi_cells) - std::log(lo);
        std::uint64_t ncells = (std::uint64_t)std::ceil(span / std::log1p(h)) + 1;
        if (ncells > kCellBudget)
            throw precision_error("integrate: cell budget exhausted before tolerance");

        long double up_sum = 0.0L, lo_sum = 0.0L;
        double a = lo, log_a = std::log(lo);
        std::uint64_t used = 0;
        while (a < hi_cells) {
            double b = std::min(a * (1.0 + h), hi_cells);
            double log_b = std::log(b);
            double w = b - a;
            if (f.kind == Kind::shifted_log_kernel) {
                ShiftedCell sc = shifted_cell(a, b, log_a, f.c);
                up_sum += (long double)(sc.m_hi * sc.g_exact);
                lo_sum += (long double)(sc.m_lo * sc.g_exact);
            } else {
                up_sum += (long double)(numer(f, b) / denom(f, a, log_a) * w);
                lo_sum += (long double)(numer(f, a) / denom(f, b, log_b) * w);
            }
            a = b;
            log_a = log_b;
            ++used;
        }
        Enclosure total;
        total.cells = used;
        if (has_tail) {
            Enclosure t = tail_enclosure(f, hi_cells, log_hi);
            up_sum += (long double)t.upper;
            lo_sum += (long double)t.lower;
        }
        total.upper = cert::up_sum(up_sum, used + 1);
        total.lower = std::max(0.0, cert::down_sum(lo_sum, used + 1));
        if (total.upper <= 0.0 || total.upper - total.lower <= tol * total.upper)
            return total;
    }
    throw precision_error("integrate: tolerance not reached within refinement budget");
}

Enclosure integrate(const Integrand& f, double lo, double hi, double tol) {
    if (hi <= lo) return Enclosure{};
    return integrate_log_hi(f, lo, std::log(hi), tol);
}

double upper(const Integrand& f, double lo, double hi, double tol) {
    return integrate(f, lo, hi, tol).upper;
}

} // namespace cbt::quadrature
