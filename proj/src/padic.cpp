#include "gbound/padic.hpp"

#include <stdexcept>

#include "gbound/primes.hpp"

namespace gbound {

namespace {

BigInt mod_floor(BigInt x, const BigInt& m) {
    x %= m;
    if (x < 0)
        x += m;
    return x;
}

// Extended Euclid inverse of a mod m, gcd(a, m) = 1.
BigInt inverse_mod(const BigInt& a, const BigInt& m) {
    BigInt old_r = mod_floor(a, m), r = m;
    BigInt old_s = 1, s = 0;
    while (r != 0) {
        BigInt q = old_r / r;
        BigInt t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1)
        throw std::domain_error("not a unit: no inverse modulo ell^K");
    return mod_floor(old_s, m);
}

} // namespace

PadicApprox::PadicApprox(std::uint64_t ell, int precision, BigInt residue)
    : ell_(ell), precision_(precision), residue_(std::move(residue)) {
    if (!is_prime(ell_))
        throw std::invalid_argument("PadicApprox: ell must be prime");
    if (precision_ < 1)
        throw std::invalid_argument("PadicApprox: precision must be >= 1");
    residue_ = mod_floor(residue_, modulus());
}

BigInt PadicApprox::modulus() const {
    return bigint_pow(BigInt(ell_), static_cast<unsigned>(precision_));
}

bool PadicApprox::is_unit() const {
    return residue_ % ell_ != 0;
}

PadicApprox PadicApprox::operator+(const PadicApprox& rhs) const {
    if (ell_ != rhs.ell_)
        throw std::invalid_argument("PadicApprox: mismatched primes");
    int k = std::min(precision_, rhs.precision_);
    return PadicApprox(ell_, k, residue_ + rhs.residue_);
}

PadicApprox PadicApprox::operator-(const PadicApprox& rhs) const {
    if (ell_ != rhs.ell_)
        throw std::invalid_argument("PadicApprox: mismatched primes");
    int k = std::min(precision_, rhs.precision_);
    return PadicApprox(ell_, k, residue_ - rhs.residue_);
}

PadicApprox PadicApprox::operator*(const PadicApprox& rhs) const {
    if (ell_ != rhs.ell_)
        throw std::invalid_argument("PadicApprox: mismatched primes");
    int k = std::min(precision_, rhs.precision_);
    return PadicApprox(ell_, k, residue_ * rhs.residue_);
}

PadicApprox PadicApprox::pow(const BigInt& exp) const {
    if (exp < 0)
        return inverse().pow(-exp);
    BigInt m = modulus();
    BigInt r = 1, b = residue_, e = exp;
    while (e > 0) {
        if ((e & 1) != 0)
            r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return PadicApprox(ell_, precision_, r);
}

PadicApprox PadicApprox::inverse() const {
    if (!is_unit())
        throw std::domain_error("PadicApprox: inverse of a non-unit");
    return PadicApprox(ell_, precision_, inverse_mod(residue_, modulus()));
}

bool PadicApprox::operator==(const PadicApprox& rhs) const {
    if (ell_ != rhs.ell_)
        return false;
    int k = std::min(precision_, rhs.precision_);
    BigInt m = bigint_pow(BigInt(ell_), static_cast<unsigned>(k));
    return mod_floor(residue_, m) == mod_floor(rhs.residue_, m);
}

std::optional<int> PadicApprox::valuation() const {
    if (residue_ == 0)
        return std::nullopt;
    return static_cast<int>(v_ell(residue_, ell_));
}

std::string PadicApprox::to_string() const {
    return residue_.str() + " mod " + std::to_string(ell_) + "^" + std::to_string(precision_);
}

PadicApprox teichmuller(std::uint64_t c, std::uint64_t ell, int precision) {
    if (!is_prime(ell) || ell == 2)
        throw std::invalid_argument("teichmuller: ell must be an odd prime");
    if (c % ell == 0)
        throw std::domain_error("teichmuller: c must be a unit mod ell");
    PadicApprox x(ell, precision, BigInt(c % ell));
    for (int i = 0; i < precision + 1; ++i) {
        PadicApprox next = x.pow(BigInt(ell));
        if (next == x)
            break;
        x = next;
    }
    return x;
}

} // namespace gbound
