#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "gbound/arith.hpp"

namespace gbound {

/// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime(std::uint64_t n);

/// Primes in [2, limit], sieved.
std::vector<std::uint64_t> primes_upto(std::uint64_t limit);

/// Prime factorization of a 64-bit integer >= 1.
/// Trial division up to 10^6, then Miller-Rabin / Pollard-Brent rho.
std::map<std::uint64_t, unsigned> factor_u64(std::uint64_t n);

/// Factorization of an arbitrary-precision integer >= 1. Splits off all
/// prime factors <= 10^6 by trial division; a remaining cofactor must fit
/// in 64 bits (desk-scale inputs only), otherwise throws std::domain_error.
std::map<std::uint64_t, unsigned> factor_big(const BigInt& n);

/// True iff q = p^e for a prime p (e >= 1); reports p and e.
bool is_prime_power(std::uint64_t q, std::uint64_t& p, unsigned& e);

/// Euler totient, by factorization.
std::uint64_t euler_phi(std::uint64_t t);

/// Multiplicative order of a modulo n, gcd(a, n) = 1.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n);

std::uint64_t pow_mod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

} // namespace gbound
