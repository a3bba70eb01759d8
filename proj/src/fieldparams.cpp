#include "cbt/fieldparams.hpp"

#include "cbt/certified.hpp"
#include "cbt/errors.hpp"

#include <cmath>

namespace cbt::fieldparams {

double AbelianExtensionData::log_DQ() const {
    return std::log(D_K) + std::log(Q);
}

void AbelianExtensionData::validate() const {
    if (n_K < 1) throw domain_error("AbelianExtensionData: n_K must be >= 1");
    if (!(D_K >= 1.0)) throw domain_error("AbelianExtensionData: D_K must be >= 1");
    if (!(Q >= 1.0)) throw domain_error("AbelianExtensionData: Q must be >= 1");
    if (deg_LK && !(*deg_LK >= 1.0)) throw domain_error("AbelianExtensionData: [L:K] must be >= 1");
    // Minkowski sanity: any K != Q has |disc| >= 3.  Warning-grade only.
}

unsigned OracleField::n_K() const { return tag == OracleTag::RationalField ? 1 : 2; }
double OracleField::D_K() const { return tag == OracleTag::RationalField ? 1.0 : 4.0; }
double OracleField::kappa() const { return tag == OracleTag::RationalField ? 1.0 : M_PI / 4.0; }

double ideal_count_bound(unsigned n_K, double x, double gamma) {
    if (!(gamma > 0.0 && gamma <= 1.0)) throw domain_error("ideal_count_bound: gamma must lie in (0, 1]");
    if (!(x > 0.0)) throw domain_error("ideal_count_bound: x must be positive");
    double v = std::exp((double)n_K * std::log1p(1.0 / gamma) + (1.0 + gamma) * std::log(x));
    return cert::up(v);
}

std::uint64_t gaussian_ideals_of_norm(std::uint64_t n) {
    if (n == 0) throw domain_error("gaussian_ideals_of_norm: n must be positive");
    auto chi = [](std::uint64_t v) -> int {
        switch (v & 3u) {
        case 1: return 1;
        case 3: return -1;
        default: return 0;
        }
    };
    long long total = 0;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        std::uint64_t e = n / d;
        total += chi(d);
        if (e != d) total += chi(e);
    }
    return (std::uint64_t)total;
}

std::uint64_t ideal_count_oracle(const OracleField& f, double x) {
    if (!(x >= 0.0)) throw domain_error("ideal_count_oracle: x must be >= 0");
    if (x > 1e7) throw bounds_error("ideal_count_oracle: x exceeds 1e7 ceiling");
    std::uint64_t fx = (std::uint64_t)std::floor(x);
    if (f.tag == OracleTag::RationalField) return fx;
    // sum_{n<=x} sum_{d|n} chi_{-4}(d) = sum_{d<=x odd} chi(d) floor(x/d)
    long long total = 0;
    for (std::uint64_t d = 1; d <= fx; d += 2) {
        long long term = (long long)(fx / d);
        if ((d & 3u) == 1)
            total += term;
        else
            total -= term;
    }
    return (std::uint64_t)total;
}

DegreeBoundConstants degree_bound_eps1_constants() {
    double pref = 2.0 * std::exp(2.0);
    double base = 2.0 * std::pow(3.0, 2.0 / 3.0) * 4.0 / (std::exp(2.0) * M_PI);
    return {pref, base};
}

double degree_bound(unsigned n_K, double D_K, double Q, double eps) {
    if (!(eps > 0.0 && eps <= 1.0)) throw domain_error("degree_bound: eps must lie in (0, 1]");
    double n = (double)n_K;
    double v;
    if (eps == 1.0) {
        // numeric form with n^2 absorbed into the geometric base
        v = std::exp(std::log(14.779) + n * std::log(0.7169) + std::log(D_K) + std::log(Q));
    } else {
        double logv = n * std::log(2.0) + std::log1p(1.0 / eps) + (1.0 + eps) * (1.0 + std::log(n))
            + n * (1.0 + eps) / 2.0 * std::log(4.0 / (std::exp(2.0) * M_PI))
            + (1.0 + eps) / 2.0 * std::log(D_K) + std::log(Q);
        v = std::exp(logv);
    }
    // a relative degree is at least 1; the closed form dips below that only
    // in parameter corners no actual field reaches
    return std::max(1.0, cert::up(v));
}

double omega_m_bound(unsigned n_K, double D_K, double Q, double b) {
    if (!(b > 0.0)) throw domain_error("omega_m_bound: b must be positive");
    double v = 2.0 * std::exp(1.0 + 2.0 / b) * (double)n_K + b * (std::log(D_K) + std::log(Q));
    return cert::up(v);
}

double zm_log_bound(unsigned n_K, double D_K, double Q, double sigma, double M,
                    double b, const primes::PrimeTable& table) {
    if (!(sigma > 0.0)) throw domain_error("zm_log_bound: sigma must be positive");
    if (!(M > 0.0)) throw domain_error("zm_log_bound: M must be positive");
    if (!(b > 0.0)) throw domain_error("zm_log_bound: b must be positive");
    if ((double)table.limit < M - 1.0) throw bounds_error("zm_log_bound: prime table does not cover M");
    double lM = std::log1p(std::pow(M, -sigma));
    double pi_below = 0.0;
    long double psum = 0.0L;
    for (std::uint64_t p : table.primes) {
        if ((double)p >= M) break;
        pi_below += 1.0;
        psum += std::log1p(std::pow((double)p, -sigma));
    }
    double v = (double)n_K * (lM * (2.0 * std::exp(1.0 + 2.0 / b) - pi_below) + (double)psum)
             + b * lM * (std::log(D_K) + std::log(Q));
    return cert::up(v);
}

double zm_log_trivial(unsigned omega_m) {
    return cert::up((double)omega_m * std::log(2.0));
}

} // namespace cbt::fieldparams
