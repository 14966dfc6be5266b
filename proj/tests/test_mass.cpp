#include <doctest.h>

#include "gbound/bernoulli.hpp"
#include "gbound/bounds.hpp"
#include "gbound/mass.hpp"
#include "gbound/oracle.hpp"

using namespace gbound;

namespace {
const RootSystem kE8{RootType::E8, 8};
const RootSystem kF4{RootType::F4, 4};
const RootSystem kG2{RootType::G2, 2};
} // namespace

TEST_CASE("zeta at negative integers") {
    CHECK(zeta_neg(2) == BigRational(-1, 12));
    CHECK(zeta_neg(6) == BigRational(-1, 252));
    // -B_12/12 = -(-691/2730)/12; the 691 numerator carries into the F4 mass
    CHECK(zeta_neg(12) == BigRational(691, 32760));
    CHECK(zeta_neg(12) == -bernoulli(12) / 12);
    CHECK_THROWS_AS(zeta_neg(3), std::domain_error);
    CHECK_THROWS_AS(zeta_neg(0), std::domain_error);
}

TEST_CASE("mass values for G2, F4, E8") {
    CHECK(mass(kG2) == BigRational(1, 12096));
    BigInt f4_den = bigint_pow(BigInt(2), 15) * bigint_pow(BigInt(3), 6) * 25 * 49 * 13;
    CHECK(mass(kF4) == BigRational(691, f4_den));

    FactoredInteger e8_bound;
    for (std::uint64_t ell : relevant_primes_over_q(kE8, BoundSource::m_bound))
        e8_bound.multiply_prime_power(ell, m_bound(kE8, invariants(Rationals{}, ell), ell).finite());
    CHECK(denominator(mass(kE8)) == e8_bound.value());

    CHECK_THROWS_WITH_AS(mass(RootSystem{RootType::A, 2}),
                         "mass formula needs all degrees even; degree 3 is odd",
                         std::domain_error);
}

TEST_CASE("mass sign follows the count of degrees = 2 mod 4") {
    // zeta(1-d) < 0 exactly for d = 2 (mod 4), so the sign of the product
    // is determined; it is positive for every type the formula measures,
    // G2, F4 and E8 included.
    for (const RootSystem& root : catalogue()) {
        bool all_even = true;
        int negative_factors = 0;
        for (int d : degrees(root)) {
            all_even = all_even && d % 2 == 0;
            if (d % 4 == 2)
                ++negative_factors;
        }
        if (!all_even)
            continue;
        CAPTURE(root_to_string(root));
        CHECK((mass(root) > 0) == (negative_factors % 2 == 0));
    }
    CHECK(mass(kG2) > 0);
    CHECK(mass(kF4) > 0);
    CHECK(mass(kE8) > 0);
}

TEST_CASE("the F4 two-class identity") {
    BigInt class1 = bigint_pow(BigInt(2), 15) * bigint_pow(BigInt(3), 6) * 25 * 7;
    BigInt class2 = bigint_pow(BigInt(2), 12) * bigint_pow(BigInt(3), 5) * 49 * 13;
    CHECK(BigRational(1, class1) + BigRational(1, class2) == mass(kF4));
}

TEST_CASE("mass denominator exponents against the m-bound") {
    CHECK(mass_denominator_exponent(kE8, 5) == std::pair<long, long>{5, 5});
    CHECK(mass_denominator_exponent(kF4, 13) == std::pair<long, long>{1, 1});
    CHECK(mass_denominator_exponent(kF4, 691) == std::pair<long, long>{0, 0});

    // the coordinates agree at every prime dividing the denominator: no
    // zeta numerator in this range is divisible by such a prime
    for (const RootSystem& root : {kG2, kF4, kE8}) {
        FactoredInteger den = FactoredInteger::from_integer(denominator(mass(root)));
        for (auto& [p, e] : den.factors()) {
            (void)e;
            auto [den_exp, bound_exp] = mass_denominator_exponent(root, p);
            CHECK(den_exp == bound_exp);
        }
    }
    // 691 divides the F4 numerator and is the only numerator prime here
    CHECK(numerator(mass(kF4)) == 691);
}

TEST_CASE("euler characteristics are scaled masses") {
    CHECK(euler_characteristic(kE8, e8_euler_index()) ==
          BigRational(e8_euler_index().value()) * mass(kE8));
    CHECK(euler_characteristic(kG2, FactoredInteger{}) == mass(kG2));
    BigInt f4_double_den =
        bigint_pow(BigInt(2), 14) * bigint_pow(BigInt(3), 6) * 25 * 49 * 13;
    CHECK(euler_characteristic(kF4, FactoredInteger::from_integer(2)) ==
          BigRational(691, f4_double_den));
}

TEST_CASE("mass(G2) inverts the order of the Chevalley group over F_2") {
    FactoredInteger order = chevalley_order(kG2, 2);
    CHECK(order.value() == 12096);
    CHECK(mass(kG2) == BigRational(1, order.value()));
}
