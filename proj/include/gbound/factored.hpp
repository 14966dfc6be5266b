#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "gbound/arith.hpp"

namespace gbound {

/// Positive integer held as a prime -> exponent map, so products of bound
/// factors never overflow and render directly in factored form.
class FactoredInteger {
public:
    FactoredInteger() = default; // represents 1

    /// Exact factorization of n >= 1.
    static FactoredInteger from_integer(const BigInt& n);

    /// p must be prime, e >= 0.
    static FactoredInteger prime_power(std::uint64_t p, unsigned e);

    static FactoredInteger factorial(long n);

    void multiply_prime_power(std::uint64_t p, long e);

    FactoredInteger& operator*=(const FactoredInteger& rhs);
    friend FactoredInteger operator*(FactoredInteger lhs, const FactoredInteger& rhs) {
        lhs *= rhs;
        return lhs;
    }

    /// Exact division; throws std::domain_error if rhs does not divide *this.
    FactoredInteger& operator/=(const FactoredInteger& rhs);
    friend FactoredInteger operator/(FactoredInteger lhs, const FactoredInteger& rhs) {
        lhs /= rhs;
        return lhs;
    }

    bool operator==(const FactoredInteger& rhs) const { return factors_ == rhs.factors_; }

    BigInt value() const;
    long exponent(std::uint64_t p) const;
    bool is_one() const { return factors_.empty(); }
    const std::map<std::uint64_t, unsigned>& factors() const { return factors_; }

    /// "2^15·3^5·5^2·7"; "1" for the empty product.
    std::string to_string() const;

private:
    std::map<std::uint64_t, unsigned> factors_;
};

} // namespace gbound
