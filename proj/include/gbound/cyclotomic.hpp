#pragma once

#include <vector>

#include "gbound/arith.hpp"
#include "gbound/padic.hpp"

namespace gbound {

/// Coefficients of the d-th cyclotomic polynomial, constant term first.
/// Computed by recursive exact division of X^d - 1 by the lower ones.
const std::vector<BigInt>& cyclotomic_coefficients(int d);

/// Phi_d evaluated at x, exact mod ell^K.
PadicApprox cyclotomic_value(int d, const PadicApprox& x);

} // namespace gbound
