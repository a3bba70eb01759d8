#include "cbt/forms.hpp"

#include "cbt/errors.hpp"
#include "cbt/ltpipeline.hpp"
#include "cbt/primes.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <numeric>

namespace cbt::forms {

namespace {

constexpr std::uint64_t kSeriesCeiling = 1'000'000;

struct SparseTerm {
    std::uint32_t exp;
    long long coef;
};

// prod_{n>=1} (1 - q^n) truncated at degree N: 1 + sum_k (-1)^k
// (q^{k(3k-1)/2} + q^{k(3k+1)/2}).
std::vector<SparseTerm> pentagonal_series(std::uint64_t N, std::uint64_t dilation = 1) {
    std::vector<SparseTerm> out;
    out.push_back({0u, 1});
    for (std::uint64_t k = 1;; ++k) {
        std::uint64_t g1 = k * (3 * k - 1) / 2 * dilation;
        std::uint64_t g2 = k * (3 * k + 1) / 2 * dilation;
        long long s = (k & 1) ? -1 : 1;
        if (g1 > N) break;
        out.push_back({(std::uint32_t)g1, s});
        if (g2 <= N) out.push_back({(std::uint32_t)g2, s});
    }
    std::sort(out.begin(), out.end(), [](auto a, auto b) { return a.exp < b.exp; });
    return out;
}

// (prod (1 - q^n))^3 = sum_{k>=0} (-1)^k (2k+1) q^{k(k+1)/2}.
std::vector<SparseTerm> cube_series(std::uint64_t N) {
    std::vector<SparseTerm> out;
    for (std::uint64_t k = 0;; ++k) {
        std::uint64_t g = k * (k + 1) / 2;
        if (g > N) break;
        long long c = (long long)(2 * k + 1);
        out.push_back({(std::uint32_t)g, (k & 1) ? -c : c});
    }
    return out;
}

void checked_addmul(int128& acc, int128 v, long long c) {
    int128 prod;
    if (__builtin_mul_overflow(v, (int128)c, &prod))
        throw bounds_error("q-series: coefficient overflowed 128 bits");
    if (__builtin_add_overflow(acc, prod, &acc))
        throw bounds_error("q-series: coefficient overflowed 128 bits");
}

// dense *= sparse, truncated at degree N (dense is (N+1)-long, degree-indexed)
void sparse_multiply(std::vector<int128>& dense, const std::vector<SparseTerm>& sparse,
                     std::uint64_t N, std::vector<int128>& scratch) {
    scratch.assign(N + 1, 0);
    for (const auto& t : sparse) {
        for (std::uint64_t j = t.exp; j <= N; ++j)
            checked_addmul(scratch[j], dense[j - t.exp], t.coef);
    }
    dense.swap(scratch);
}

QSeries shift_to_series(std::vector<int128>& dense, std::uint64_t N) {
    QSeries s;
    s.N = N;
    s.coeffs.assign(N + 1, 0);
    for (std::uint64_t n = 1; n <= N; ++n) s.coeffs[n] = dense[n - 1];
    return s;
}

void require_truncation(std::uint64_t N) {
    if (N < 1) throw bounds_error("q-series: truncation must be >= 1");
    if (N > kSeriesCeiling) throw bounds_error("q-series: truncation exceeds 1e6 ceiling");
}

} // namespace

int128 QSeries::at(std::uint64_t n) const {
    if (n < 1 || n > N) throw bounds_error("QSeries: index outside truncation");
    return coeffs[n];
}

QSeries tau_series(std::uint64_t N) {
    require_truncation(N);
    std::uint64_t D = N - 1; // Delta = q * P^24, so work at degree N-1
    auto P = pentagonal_series(D);
    std::vector<int128> dense(D + 1, 0), scratch;
    dense[0] = 1;
    for (int i = 0; i < 24; ++i) sparse_multiply(dense, P, D, scratch);
    return shift_to_series(dense, N);
}

QSeries tau_series_cube_path(std::uint64_t N) {
    require_truncation(N);
    std::uint64_t D = N - 1;
    auto C = cube_series(D);
    std::vector<int128> dense(D + 1, 0), scratch;
    dense[0] = 1;
    for (int i = 0; i < 8; ++i) sparse_multiply(dense, C, D, scratch);
    return shift_to_series(dense, N);
}

QSeries f11_series(std::uint64_t N) {
    require_truncation(N);
    std::uint64_t D = N - 1; // f = q * P(q)^2 * P(q^11)^2
    auto P1 = pentagonal_series(D);
    auto P11 = pentagonal_series(D, 11);
    std::vector<int128> dense(D + 1, 0), scratch;
    dense[0] = 1;
    sparse_multiply(dense, P1, D, scratch);
    sparse_multiply(dense, P1, D, scratch);
    sparse_multiply(dense, P11, D, scratch);
    sparse_multiply(dense, P11, D, scratch);
    return shift_to_series(dense, N);
}

long long ec_trace(std::uint64_t p) {
    if (p == 11) throw domain_error("ec_trace: bad reduction at 11");
    if (p > 10'000'000) throw bounds_error("ec_trace: p exceeds 1e7 ceiling");
    if (!primes::is_prime(p)) throw domain_error("ec_trace: p must be prime");
    if (p == 2) {
        // y^2 - y = x^3 - x^2 over F_2: every (x, y) satisfies 0 = 0 or not
        long long affine = 0;
        for (std::uint64_t x = 0; x < 2; ++x)
            for (std::uint64_t y = 0; y < 2; ++y)
                if (((y * y + 2 - y) % 2) == ((x * x * x + 2 - x * x) % 2)) ++affine;
        return (long long)p + 1 - (affine + 1);
    }
    // chi table from squares
    std::vector<std::uint8_t> qr(p, 0);
    for (std::uint64_t x = 1; x <= (p - 1) / 2; ++x) qr[x * x % p] = 1;
    long long sum = 0;
    for (std::uint64_t x = 0; x < p; ++x) {
        std::uint64_t x2 = x * x % p;
        std::uint64_t x3 = x2 * x % p;
        std::uint64_t v = (4 * x3 % p + p - 4 * x2 % p + 1) % p;
        if (v == 0) continue;
        sum += qr[v] ? 1 : -1;
    }
    return -sum;
}

std::uint64_t pi_f_count(const QSeries& s, double x, long long a, std::uint64_t N_f) {
    if (!(x >= 0.0)) throw domain_error("pi_f_count: x must be >= 0");
    if (x > (double)s.N) throw bounds_error("pi_f_count: x exceeds series truncation");
    std::uint64_t fx = (std::uint64_t)std::floor(x);
    if (fx < 2) return 0;
    std::uint64_t count = 0;
    for (std::uint64_t p : primes::primes_in_range(2, fx)) {
        if (N_f > 1 && N_f % p == 0) continue;
        if (s.coeffs[p] == (int128)a) ++count;
    }
    return count;
}

namespace {

std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = (std::uint64_t)((unsigned __int128)r * a % m);
        a = (std::uint64_t)((unsigned __int128)a * a % m);
        e >>= 1;
    }
    return r;
}

// Legendre((a^2 - 4 p^{k-1})/ell) by Euler's criterion
int legendre_disc(long long a, std::uint64_t p, unsigned k_f, std::uint64_t ell) {
    std::uint64_t am = (std::uint64_t)(((a % (long long)ell) + (long long)ell) % (long long)ell);
    std::uint64_t det = powmod64(p % ell, k_f - 1, ell);
    std::uint64_t disc = (am * am % ell + ell - 4 * det % ell) % ell;
    if (disc == 0) return 0;
    std::uint64_t e = powmod64(disc, (ell - 1) / 2, ell);
    return e == 1 ? 1 : -1;
}

} // namespace

int legendre_table(std::uint64_t a, std::uint64_t ell) {
    if (ell < 3 || !primes::is_prime(ell)) throw domain_error("legendre_table: ell must be an odd prime");
    a %= ell;
    if (a == 0) return 0;
    for (std::uint64_t x = 1; x <= (ell - 1) / 2; ++x)
        if (x * x % ell == a) return 1;
    return -1;
}

std::uint64_t pi_f_ell_count(const QSeries& s, double x, long long a,
                             std::uint64_t ell, unsigned k_f, std::uint64_t N_f) {
    if (ell < 3 || (ell & 1) == 0 || !primes::is_prime(ell))
        throw domain_error("pi_f_ell_count: ell must be an odd prime");
    if (x > (double)s.N) throw bounds_error("pi_f_ell_count: x exceeds series truncation");
    std::uint64_t fx = (std::uint64_t)std::floor(x);
    if (fx < 2) return 0;
    long long am = ((a % (long long)ell) + (long long)ell) % (long long)ell;
    std::uint64_t count = 0;
    for (std::uint64_t p : primes::primes_in_range(2, fx)) {
        if (N_f > 1 && N_f % p == 0) continue;
        long long cp = (long long)(s.coeffs[p] % (int128)ell);
        cp = ((cp % (long long)ell) + (long long)ell) % (long long)ell;
        if (cp != am) continue;
        if (legendre_disc(a, p, k_f, ell) == 1) ++count;
    }
    return count;
}

SieveCheck verify_sieve_inequality(const QSeries& s, double x, long long a,
                                   const std::vector<std::uint64_t>& ells,
                                   unsigned k_f, std::uint64_t N_f) {
    if (ells.empty()) throw domain_error("verify_sieve_inequality: need t >= 1 primes");
    for (std::uint64_t l : ells) {
        if ((l & 1) == 0 || !primes::is_prime(l) || !(l < (std::uint64_t)x))
            throw domain_error("verify_sieve_inequality: primes must be odd and < x");
        if (std::gcd(l - 1, (std::uint64_t)k_f - 1) != 1)
            throw domain_error("verify_sieve_inequality: prime fails admissibility gcd");
    }
    SieveCheck out;
    out.lhs = (double)pi_f_count(s, x, a, N_f);
    double sum = 0;
    std::uint64_t lt = 0;
    for (std::uint64_t l : ells) {
        sum += (double)pi_f_ell_count(s, x, a, l, k_f, N_f);
        lt = std::max(lt, l);
    }
    out.rhs = sum + ltpipeline::sieve_tail(x, (unsigned)ells.size(), lt);
    out.pass = out.lhs <= out.rhs;
    return out;
}

void write_coefficient_cache(const std::string& path, const QSeries& s) {
    static_assert(std::endian::native == std::endian::little,
                  "cache records are defined little-endian");
    std::ofstream f(path, std::ios::binary);
    if (!f) throw bounds_error("write_coefficient_cache: cannot open " + path);
    f.write("QS1\0", 4);
    for (std::uint64_t n = 1; n <= s.N; ++n) {
        std::uint64_t le_n = n;
        unsigned __int128 v = (unsigned __int128)s.coeffs[n];
        std::uint64_t lo = (std::uint64_t)v, hi = (std::uint64_t)(v >> 64);
        f.write(reinterpret_cast<const char*>(&le_n), 8);
        f.write(reinterpret_cast<const char*>(&lo), 8);
        f.write(reinterpret_cast<const char*>(&hi), 8);
    }
}

QSeries read_coefficient_cache(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw bounds_error("read_coefficient_cache: cannot open " + path);
    char magic[4];
    f.read(magic, 4);
    if (f.gcount() != 4 || std::memcmp(magic, "QS1\0", 4) != 0)
        throw bounds_error("read_coefficient_cache: bad magic");
    std::vector<std::pair<std::uint64_t, int128>> rec;
    while (true) {
        std::uint64_t n, lo, hi;
        f.read(reinterpret_cast<char*>(&n), 8);
        if (f.gcount() == 0) break;
        f.read(reinterpret_cast<char*>(&lo), 8);
        f.read(reinterpret_cast<char*>(&hi), 8);
        if (f.gcount() != 8) throw bounds_error("read_coefficient_cache: truncated record");
        int128 v = (int128)(((unsigned __int128)hi << 64) | lo);
        rec.emplace_back(n, v);
    }
    QSeries s;
    for (auto& [n, v] : rec) s.N = std::max(s.N, n);
    s.coeffs.assign(s.N + 1, 0);
    for (auto& [n, v] : rec) s.coeffs[n] = v;
    return s;
}

} // namespace cbt::forms
