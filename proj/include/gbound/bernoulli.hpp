#pragma once

#include "gbound/arith.hpp"

namespace gbound {

/// B_d in the convention B_1 = -1/2, B_2 = 1/6; zero for odd d > 1.
BigRational bernoulli(int d);

} // namespace gbound
