#include "cbt/primes.hpp"

#include "cbt/certified.hpp"
#include "cbt/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace cbt::primes {

namespace {

constexpr std::uint64_t kSieveCeiling = 1'000'000'000ull;
constexpr std::uint64_t kSegmentSize = 1u << 18;

std::vector<char> flag_sieve(std::uint64_t limit) {
    std::vector<char> comp(limit + 1, 0);
    for (std::uint64_t i = 2; i * i <= limit; ++i)
        if (!comp[i])
            for (std::uint64_t j = i * i; j <= limit; j += i) comp[j] = 1;
    return comp;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return (std::uint64_t)((unsigned __int128)a * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

std::uint64_t PrimeTable::count_below(double x) const {
    if (x < 2.0) return 0;
    std::uint64_t fx = (std::uint64_t)std::floor(x);
    if (fx > limit) throw bounds_error("PrimeTable::count_below: x exceeds table limit");
    auto it = std::upper_bound(primes.begin(), primes.end(), fx);
    return (std::uint64_t)(it - primes.begin());
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // Sinclair's 7-base set, deterministic below 2^64.
    for (std::uint64_t a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
        std::uint64_t x = powmod(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

PrimeTable sieve_primes(std::uint64_t limit) {
    if (limit < 2) throw bounds_error("sieve_primes: limit must be >= 2");
    if (limit > kSieveCeiling) throw bounds_error("sieve_primes: limit exceeds 1e9 ceiling");
    PrimeTable t;
    t.limit = limit;
    if (limit <= 10'000'000) {
        auto comp = flag_sieve(limit);
        for (std::uint64_t i = 2; i <= limit; ++i)
            if (!comp[i]) t.primes.push_back(i);
        return t;
    }
    std::uint64_t root = (std::uint64_t)std::sqrt((double)limit) + 1;
    auto comp = flag_sieve(root);
    std::vector<std::uint64_t> base;
    for (std::uint64_t i = 2; i <= root; ++i)
        if (!comp[i]) {
            base.push_back(i);
            t.primes.push_back(i);
        }
    std::vector<char> seg(kSegmentSize);
    for (std::uint64_t low = root + 1; low <= limit; low += kSegmentSize) {
        std::uint64_t high = std::min(low + kSegmentSize - 1, limit);
        std::fill(seg.begin(), seg.begin() + (high - low + 1), 0);
        for (std::uint64_t p : base) {
            if (p * p > high) break;
            std::uint64_t start = std::max(p * p, (low + p - 1) / p * p);
            for (std::uint64_t j = start; j <= high; j += p) seg[j - low] = 1;
        }
        for (std::uint64_t i = low; i <= high; ++i)
            if (!seg[i - low]) t.primes.push_back(i);
    }
    return t;
}

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    if (hi < 2 || hi < lo) return out;
    lo = std::max<std::uint64_t>(lo, 2);
    if (hi - lo > kSieveCeiling) throw bounds_error("primes_in_range: window exceeds 1e9");
    std::uint64_t root = (std::uint64_t)std::sqrt((double)hi) + 1;
    auto comp = flag_sieve(root);
    std::vector<std::uint64_t> base;
    for (std::uint64_t i = 2; i <= root; ++i)
        if (!comp[i]) base.push_back(i);
    std::vector<char> seg(kSegmentSize);
    for (std::uint64_t low = lo; low <= hi; low += kSegmentSize) {
        std::uint64_t high = std::min(low + kSegmentSize - 1, hi);
        std::fill(seg.begin(), seg.begin() + (high - low + 1), 0);
        for (std::uint64_t p : base) {
            if (p * p > high) break;
            std::uint64_t start = std::max(p * p, (low + p - 1) / p * p);
            for (std::uint64_t j = start; j <= high; j += p) seg[j - low] = 1;
        }
        for (std::uint64_t i = low; i <= high; ++i)
            if (!seg[i - low]) out.push_back(i);
        if (high == hi) break; // avoid wrap when hi is near 2^64
    }
    return out;
}

namespace {

std::uint64_t pollard_rho(std::uint64_t n) {
    if ((n & 1) == 0) return 2;
    std::uint64_t c = 1;
    while (true) {
        std::uint64_t x = 2, y = 2, d = 1;
        auto f = [&](std::uint64_t v) { return (mulmod(v, v, n) + c) % n; };
        std::uint64_t q = 1;
        int step = 0;
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            std::uint64_t diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            q = mulmod(q, diff, n);
            if (++step % 64 == 0) {
                d = std::gcd(q, n);
                if (d != 1 && d != n) return d;
                if (d == n) break;
            }
        }
        d = std::gcd(q, n);
        if (d != 1 && d != n) return d;
        ++c;
    }
}

void factor_rec(std::uint64_t n, std::vector<std::uint64_t>& out) {
    if (n == 1) return;
    if (is_prime(n)) { out.push_back(n); return; }
    std::uint64_t d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

} // namespace

Factorization factorize(std::uint64_t n) {
    if (n == 0) throw domain_error("factorize: n must be positive");
    Factorization f;
    f.n = n;
    std::vector<std::uint64_t> ps;
    for (std::uint64_t p = 2; p <= 1'000'000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) { ps.push_back(p); n /= p; }
    }
    factor_rec(n, ps);
    std::sort(ps.begin(), ps.end());
    for (std::uint64_t p : ps) {
        if (!f.factors.empty() && f.factors.back().first == p)
            ++f.factors.back().second;
        else
            f.factors.emplace_back(p, 1u);
    }
    return f;
}

std::uint64_t euler_phi(std::uint64_t n) {
    auto f = factorize(n);
    std::uint64_t phi = 1;
    for (auto [p, e] : f.factors) {
        phi *= p - 1;
        for (unsigned i = 1; i < e; ++i) phi *= p;
    }
    return phi;
}

std::uint64_t radical(std::uint64_t n) {
    auto f = factorize(n);
    std::uint64_t r = 1;
    for (auto [p, e] : f.factors) r *= p;
    return r;
}

unsigned omega(std::uint64_t n) {
    return (unsigned)factorize(n).factors.size();
}

std::uint64_t count_primes_in_ap(double x, std::uint64_t q, std::uint64_t d) {
    if (x < 0) throw domain_error("count_primes_in_ap: x must be >= 0");
    if (q == 0) throw domain_error("count_primes_in_ap: q must be positive");
    if (q > 1) {
        d %= q;
        if (std::gcd(d, q) != 1) throw domain_error("count_primes_in_ap: residue class not coprime to modulus");
    }
    if (x < 2) return 0;
    std::uint64_t fx = (std::uint64_t)std::floor(x);
    std::uint64_t count = 0;
    for (std::uint64_t p : primes_in_range(2, fx))
        if (q == 1 || p % q == d) ++count;
    return count;
}

double mv_bt_bound(double /*x*/, double y, std::uint64_t q, std::uint64_t d) {
    if (q < 1) throw domain_error("mv_bt_bound: q must be >= 1");
    if (!(y > (double)q)) throw domain_error("mv_bt_bound: undefined unless y > q");
    if (q > 1 && std::gcd(d % q, q) != 1) throw domain_error("mv_bt_bound: residue class not coprime to modulus");
    double phi = (double)euler_phi(q);
    return cert::up(2.0 * y / (phi * std::log(y / (double)q)));
}

std::uint64_t count_interval_excluding_class(double y, std::uint64_t q, std::uint64_t d) {
    if (y < 2) throw domain_error("count_interval_excluding_class: y must be >= 2");
    std::uint64_t lo = (std::uint64_t)std::floor(y) + 1; // primes strictly above y
    std::uint64_t hi = (std::uint64_t)std::floor(2.0 * y);
    if (q > 1) d %= q;
    std::uint64_t count = 0;
    for (std::uint64_t p : primes_in_range(lo, hi))
        if (q == 1 || p % q != d) ++count;
    return count;
}

std::uint64_t largest_admissible_prime(double upper, std::uint64_t kf_minus_1, std::uint64_t q) {
    if (upper < 7) throw domain_error("largest_admissible_prime: upper must be >= 7");
    std::uint64_t start = (std::uint64_t)std::ceil(upper) - 1;
    if ((double)start >= upper) --start; // strict l < upper
    for (std::uint64_t l = start; l > 5; --l) {
        if (!is_prime(l)) continue;
        if (std::gcd(l - 1, kf_minus_1) != 1) continue;
        if (q > 1 && std::gcd(l, q) != 1) continue;
        return l;
    }
    throw not_found_error("largest_admissible_prime: no admissible prime above 5");
}

} // namespace cbt::primes
