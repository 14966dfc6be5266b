#include "gbound/mass.hpp"

#include <stdexcept>

#include "gbound/bernoulli.hpp"
#include "gbound/bounds.hpp"
#include "gbound/invariants.hpp"

namespace gbound {

BigRational zeta_neg(int d) {
    if (d < 2 || d % 2 != 0)
        throw std::domain_error("zeta(1-d) needs even d >= 2; the term is zero otherwise");
    return -bernoulli(d) / d;
}

BigRational mass(const RootSystem& root) {
    BigRational product = 1;
    for (int d : degrees(root)) {
        if (d % 2 != 0)
            throw std::domain_error("mass formula needs all degrees even; degree " +
                                    std::to_string(d) + " is odd");
        product *= zeta_neg(d) / 2;
    }
    return product;
}

std::pair<long, long> mass_denominator_exponent(const RootSystem& root, std::uint64_t ell) {
    BigRational value = mass(root);
    long den_exp = v_ell(denominator(value), ell);
    long bound = m_bound(root, invariants(Rationals{}, ell), ell).finite();
    return {den_exp, bound};
}

BigRational euler_characteristic(const RootSystem& root, const FactoredInteger& c) {
    return BigRational(c.value()) * mass(root);
}

FactoredInteger e8_euler_index() {
    return FactoredInteger::prime_power(3, 3) * FactoredInteger::prime_power(5, 1);
}

} // namespace gbound
