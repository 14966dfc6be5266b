#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "gbound/arith.hpp"

namespace gbound {

/// An element of Z_ell known to precision K: its residue mod ell^K.
/// Arithmetic is exact at the minimum precision of the operands; a zero
/// residue never produces a numeric valuation, only the floor "at least K".
class PadicApprox {
public:
    PadicApprox(std::uint64_t ell, int precision, BigInt residue);

    std::uint64_t ell() const { return ell_; }
    int precision() const { return precision_; }
    const BigInt& residue() const { return residue_; }
    BigInt modulus() const;

    bool is_unit() const;

    PadicApprox operator+(const PadicApprox& rhs) const;
    PadicApprox operator-(const PadicApprox& rhs) const;
    PadicApprox operator*(const PadicApprox& rhs) const;
    PadicApprox pow(const BigInt& exp) const;

    /// Multiplicative inverse of a unit.
    PadicApprox inverse() const;

    bool operator==(const PadicApprox& rhs) const;

    /// Exact valuation when the residue is nonzero (then v < K);
    /// nullopt means "valuation >= K".
    std::optional<int> valuation() const;

    std::string to_string() const;

private:
    std::uint64_t ell_;
    int precision_;
    BigInt residue_;
};

/// The Teichmueller representative: x == c (mod ell), x^(ell-1) == 1
/// (mod ell^K), computed by iterating x <- x^ell to its fixed point.
/// ell must be an odd prime and c a unit mod ell.
PadicApprox teichmuller(std::uint64_t c, std::uint64_t ell, int precision);

} // namespace gbound
