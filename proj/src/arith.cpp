#include "gbound/arith.hpp"

namespace gbound {

long v_ell(const BigInt& n, std::uint64_t ell) {
    if (n == 0)
        throw std::domain_error("valuation of zero undefined");
    BigInt a = abs(n);
    const BigInt p = ell;
    long v = 0;
    while (a % p == 0) {
        a /= p;
        ++v;
    }
    return v;
}

long v_ell(const BigRational& x, std::uint64_t ell) {
    if (x == 0)
        throw std::domain_error("valuation of zero undefined");
    return v_ell(numerator(x), ell) - v_ell(denominator(x), ell);
}

long v_ell(std::int64_t n, std::uint64_t ell) {
    return v_ell(BigInt(n), ell);
}

BigInt bigint_pow(const BigInt& base, unsigned exp) {
    BigInt r = 1;
    BigInt b = base;
    while (exp > 0) {
        if (exp & 1u)
            r *= b;
        b *= b;
        exp >>= 1u;
    }
    return r;
}

long factorial_valuation(long n, std::uint64_t p) {
    if (n < 0)
        throw std::invalid_argument("factorial of a negative integer");
    long v = 0;
    std::uint64_t q = p;
    while (q <= static_cast<std::uint64_t>(n)) {
        v += n / static_cast<long>(q);
        if (q > static_cast<std::uint64_t>(n) / p)
            break; // next power would overflow
        q *= p;
    }
    return v;
}

} // namespace gbound
