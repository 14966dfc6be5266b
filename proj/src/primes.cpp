#include "gbound/primes.hpp"

#include <numeric>
#include <stdexcept>

namespace gbound {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) {
    return static_cast<u64>((u128)a * b % m);
}

u64 gcd_u64(u64 a, u64 b) {
    while (b != 0) {
        u64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

constexpr u64 kTrialLimit = 1000000;

const std::vector<u64>& small_primes() {
    static const std::vector<u64> table = primes_upto(kTrialLimit);
    return table;
}

// Pollard-Brent rho; n must be odd, composite, with no factor <= 10^6.
u64 pollard_brent(u64 n) {
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1;
        u64 q = 1;
        int iter = 0;
        while (d == 1) {
            x = (mul_mod(x, x, n) + c) % n;
            y = (mul_mod(y, y, n) + c) % n;
            y = (mul_mod(y, y, n) + c) % n;
            q = mul_mod(q, x > y ? x - y : y - x, n);
            if (++iter % 64 == 0 || q == 0) {
                d = gcd_u64(q == 0 ? (x > y ? x - y : y - x) : q, n);
                q = 1;
            }
            if (iter > 1 << 22)
                break;
        }
        if (d != 1 && d != n)
            return d;
    }
}

} // namespace

u64 pow_mod_u64(u64 base, u64 exp, u64 mod) {
    u64 r = 1 % mod;
    base %= mod;
    while (exp > 0) {
        if (exp & 1u)
            r = mul_mod(r, base, mod);
        base = mul_mod(base, base, mod);
        exp >>= 1u;
    }
    return r;
}

bool is_prime(u64 n) {
    if (n < 2)
        return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0)
            return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1u) == 0) {
        d >>= 1u;
        ++s;
    }
    // Deterministic witness set for n < 2^64 (Sorenson-Webster).
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = pow_mod_u64(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

std::vector<u64> primes_upto(u64 limit) {
    std::vector<u64> out;
    if (limit < 2)
        return out;
    std::vector<bool> sieve(limit + 1, true);
    for (u64 i = 2; i * i <= limit; ++i)
        if (sieve[i])
            for (u64 j = i * i; j <= limit; j += i)
                sieve[j] = false;
    for (u64 i = 2; i <= limit; ++i)
        if (sieve[i])
            out.push_back(i);
    return out;
}

std::map<u64, unsigned> factor_u64(u64 n) {
    if (n == 0)
        throw std::domain_error("factorization of zero undefined");
    std::map<u64, unsigned> out;
    for (u64 p : small_primes()) {
        if (p * p > n)
            break;
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    if (n == 1)
        return out;
    if (is_prime(n)) {
        ++out[n];
        return out;
    }
    // Composite cofactor with no small factor: split recursively.
    std::vector<u64> stack{n};
    while (!stack.empty()) {
        u64 m = stack.back();
        stack.pop_back();
        if (is_prime(m)) {
            ++out[m];
            continue;
        }
        u64 d = pollard_brent(m);
        stack.push_back(d);
        stack.push_back(m / d);
    }
    return out;
}

std::map<u64, unsigned> factor_big(const BigInt& n) {
    if (n <= 0)
        throw std::domain_error("factorization requires a positive integer");
    if (n <= BigInt(~0ull))
        return factor_u64(static_cast<u64>(n));
    BigInt rest = n;
    std::map<u64, unsigned> out;
    for (u64 p : small_primes()) {
        if (BigInt(p) * p > rest)
            break;
        while (rest % p == 0) {
            ++out[p];
            rest /= p;
        }
    }
    if (rest == 1)
        return out;
    if (rest > BigInt(~0ull))
        throw std::domain_error("cofactor exceeds 64-bit factorization range");
    for (auto& [p, e] : factor_u64(static_cast<u64>(rest)))
        out[p] += e;
    return out;
}

bool is_prime_power(u64 q, u64& p, unsigned& e) {
    if (q < 2)
        return false;
    auto f = factor_u64(q);
    if (f.size() != 1)
        return false;
    p = f.begin()->first;
    e = f.begin()->second;
    return true;
}

u64 euler_phi(u64 t) {
    if (t == 0)
        throw std::domain_error("totient of zero undefined");
    u64 result = t;
    for (auto& [p, e] : factor_u64(t)) {
        result -= result / p;
        (void)e;
    }
    return result;
}

u64 multiplicative_order(u64 a, u64 n) {
    a %= n;
    if (gcd_u64(a, n) != 1)
        throw std::domain_error("multiplicative order requires a unit");
    u64 group = euler_phi(n);
    u64 order = group;
    for (auto& [p, e] : factor_u64(group)) {
        for (unsigned i = 0; i < e; ++i) {
            if (pow_mod_u64(a, order / p, n) == 1)
                order /= p;
            else
                break;
        }
    }
    return order;
}

} // namespace gbound
