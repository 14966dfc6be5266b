#pragma once

#include <cstdint>
#include <utility>

#include "gbound/arith.hpp"
#include "gbound/factored.hpp"
#include "gbound/root_data.hpp"

namespace gbound {

/// zeta(1-d) = -B_d/d for even d >= 2; odd arguments are rejected
/// (the corresponding term is zero).
BigRational zeta_neg(int d);

/// prod_i zeta(1-d_i)/2 over the degrees of R, all of which must be even.
BigRational mass(const RootSystem& root);

/// (v_ell of the mass denominator, the m-bound exponent over Q). The two
/// agree unless ell divides one of the zeta numerators.
std::pair<long, long> mass_denominator_exponent(const RootSystem& root, std::uint64_t ell);

/// c * mass(R); the caller supplies the index factor c = |W|/|W_K|.
BigRational euler_characteristic(const RootSystem& root, const FactoredInteger& c);

/// The index factor c = |W|/|W_K| for the split E8 over Z: 3^3 * 5.
FactoredInteger e8_euler_index();

} // namespace gbound
