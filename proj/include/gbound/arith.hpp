#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>

namespace gbound {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Raised when a finite-precision computation cannot certify a value.
struct precision_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// ell-adic valuation of a nonzero integer.
long v_ell(const BigInt& n, std::uint64_t ell);

/// ell-adic valuation of a nonzero rational; negative for denominators.
long v_ell(const BigRational& x, std::uint64_t ell);

long v_ell(std::int64_t n, std::uint64_t ell);

BigInt bigint_pow(const BigInt& base, unsigned exp);

/// Legendre's formula: v_p(n!) = sum of [n/p^k].
long factorial_valuation(long n, std::uint64_t p);

} // namespace gbound
