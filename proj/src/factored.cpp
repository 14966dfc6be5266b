#include "gbound/factored.hpp"

#include <stdexcept>

#include "gbound/primes.hpp"

namespace gbound {

FactoredInteger FactoredInteger::from_integer(const BigInt& n) {
    if (n < 1)
        throw std::domain_error("FactoredInteger requires a positive integer");
    FactoredInteger out;
    for (auto& [p, e] : factor_big(n))
        out.factors_[p] = e;
    return out;
}

FactoredInteger FactoredInteger::prime_power(std::uint64_t p, unsigned e) {
    if (!is_prime(p))
        throw std::invalid_argument("prime_power: base is not prime");
    FactoredInteger out;
    if (e > 0)
        out.factors_[p] = e;
    return out;
}

FactoredInteger FactoredInteger::factorial(long n) {
    if (n < 0)
        throw std::invalid_argument("factorial of a negative integer");
    FactoredInteger out;
    for (std::uint64_t p : primes_upto(static_cast<std::uint64_t>(n))) {
        long v = factorial_valuation(n, p);
        if (v > 0)
            out.factors_[p] = static_cast<unsigned>(v);
    }
    return out;
}

void FactoredInteger::multiply_prime_power(std::uint64_t p, long e) {
    if (e == 0)
        return;
    if (!is_prime(p))
        throw std::invalid_argument("multiply_prime_power: base is not prime");
    long cur = exponent(p) + e;
    if (cur < 0)
        throw std::domain_error("FactoredInteger division is not exact");
    if (cur == 0)
        factors_.erase(p);
    else
        factors_[p] = static_cast<unsigned>(cur);
}

FactoredInteger& FactoredInteger::operator*=(const FactoredInteger& rhs) {
    for (auto& [p, e] : rhs.factors_)
        factors_[p] += e;
    return *this;
}

FactoredInteger& FactoredInteger::operator/=(const FactoredInteger& rhs) {
    for (auto& [p, e] : rhs.factors_) {
        auto it = factors_.find(p);
        if (it == factors_.end() || it->second < e)
            throw std::domain_error("FactoredInteger division is not exact");
        it->second -= e;
        if (it->second == 0)
            factors_.erase(it);
    }
    return *this;
}

BigInt FactoredInteger::value() const {
    BigInt v = 1;
    for (auto& [p, e] : factors_)
        v *= bigint_pow(BigInt(p), e);
    return v;
}

long FactoredInteger::exponent(std::uint64_t p) const {
    auto it = factors_.find(p);
    return it == factors_.end() ? 0 : static_cast<long>(it->second);
}

std::string FactoredInteger::to_string() const {
    if (factors_.empty())
        return "1";
    std::string out;
    for (auto& [p, e] : factors_) {
        if (!out.empty())
            out += "·";
        out += std::to_string(p);
        if (e > 1) {
            out += '^';
            out += std::to_string(e);
        }
    }
    return out;
}

} // namespace gbound
