#include <doctest.h>

#include <random>
#include <vector>

#include "gbound/arith.hpp"
#include "gbound/bernoulli.hpp"
#include "gbound/cyclotomic.hpp"
#include "gbound/factored.hpp"
#include "gbound/padic.hpp"
#include "gbound/primes.hpp"

using namespace gbound;

namespace {

// Independent valuation oracle: repeated trial division of numerator and
// denominator separately, no shared code with v_ell.
long valuation_by_trial_division(BigInt num, BigInt den, std::uint64_t ell) {
    long v = 0;
    num = abs(num);
    while (num % ell == 0) {
        num /= ell;
        ++v;
    }
    while (den % ell == 0) {
        den /= ell;
        --v;
    }
    return v;
}

// Independent Bernoulli oracle: the Akiyama-Tanigawa triangle. Row zero is
// 1/(k+1); each later row takes (k+1)(a_k - a_{k+1}); B_n is the first
// entry of row n, in the B_1 = +1/2 convention, so odd-index signs flip.
BigRational bernoulli_akiyama_tanigawa(int n) {
    std::vector<BigRational> row(n + 1);
    for (int k = 0; k <= n; ++k)
        row[k] = BigRational(1, k + 1);
    for (int i = 1; i <= n; ++i)
        for (int k = 0; k <= n - i; ++k)
            row[k] = BigRational(k + 1) * (row[k] - row[k + 1]);
    if (n == 1)
        return -row[0]; // switch to the B_1 = -1/2 convention
    return row[0];
}

} // namespace

TEST_CASE("v_ell on integers and rationals") {
    CHECK(v_ell(BigInt(12), 2) == 2);
    CHECK(v_ell(BigRational(5, 8), 2) == -3);
    CHECK(v_ell(BigInt(2400), 5) == valuation_by_trial_division(2400, 1, 5));
    CHECK(v_ell(BigInt(2400), 5) == 2);
    CHECK(v_ell(BigInt(7), 7) == 1);
    CHECK_THROWS_AS(v_ell(BigRational(0), 3), std::domain_error);
}

TEST_CASE("v_ell is additive on products") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 300; ++i) {
        std::uint64_t ell = std::vector<std::uint64_t>{2, 3, 5, 7, 11}[rng() % 5];
        BigRational x(static_cast<long>(rng() % 5000) + 1, static_cast<long>(rng() % 5000) + 1);
        BigRational y(static_cast<long>(rng() % 5000) + 1, static_cast<long>(rng() % 5000) + 1);
        CHECK(v_ell(x * y, ell) == v_ell(x, ell) + v_ell(y, ell));
    }
}

TEST_CASE("factored integers round-trip and track integer arithmetic") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        std::uint64_t a = rng() % 1000000 + 1;
        std::uint64_t b = rng() % 1000000 + 1;
        FactoredInteger fa = FactoredInteger::from_integer(a);
        FactoredInteger fb = FactoredInteger::from_integer(b);
        CHECK(fa.value() == a);
        CHECK((fa * fb).value() == BigInt(a) * b);
        CHECK(((fa * fb) / fb).value() == a);
    }
    CHECK(FactoredInteger::from_integer(1).is_one());
    CHECK(FactoredInteger::from_integer(1).to_string() == "1");
    CHECK_THROWS_AS(FactoredInteger::from_integer(12) / FactoredInteger::from_integer(5),
                    std::domain_error);
}

TEST_CASE("factored integers handle 64-bit scale inputs") {
    BigInt big = BigInt(1) << 62;
    CHECK(FactoredInteger::from_integer(big).value() == big);
    // A smooth value above 2^64 still factors by trial division.
    BigInt smooth = bigint_pow(BigInt(30), 15);
    CHECK(FactoredInteger::from_integer(smooth).value() == smooth);
    // Semiprimes past the trial-division range exercise the rho splitter.
    BigInt semiprime = BigInt(1000003) * 999999937;
    FactoredInteger f = FactoredInteger::from_integer(semiprime);
    CHECK(f.value() == semiprime);
    CHECK(f.exponent(1000003) == 1);
    std::mt19937_64 rng(2718281828);
    for (int i = 0; i < 20; ++i) {
        std::uint64_t x = (rng() % (1ull << 55)) + (1ull << 40);
        CHECK(FactoredInteger::from_integer(x).value() == x);
    }
}

TEST_CASE("factorial factorization uses Legendre's formula") {
    CHECK(FactoredInteger::factorial(10).value() == BigInt(3628800));
    CHECK(FactoredInteger::factorial(0).is_one());
    CHECK(factorial_valuation(10, 2) == 8);
}

TEST_CASE("bernoulli base values") {
    CHECK(bernoulli(0) == BigRational(1));
    CHECK(bernoulli(1) == BigRational(-1, 2));
    CHECK(bernoulli(2) == BigRational(1, 6));
    CHECK(bernoulli(3) == BigRational(0));
    CHECK(bernoulli(12) == BigRational(-691, 2730));
}

TEST_CASE("bernoulli agrees with the Akiyama-Tanigawa oracle") {
    for (int d = 0; d <= 40; ++d)
        CHECK(bernoulli(d) == bernoulli_akiyama_tanigawa(d));
}

TEST_CASE("bernoulli satisfies the defining recurrence up to 60") {
    for (int d = 1; d <= 60; ++d) {
        BigRational sum = 0;
        BigInt binom = 1;
        for (int j = 0; j <= d; ++j) {
            sum += BigRational(binom) * bernoulli(j);
            binom = binom * (d + 1 - j) / (j + 1);
        }
        CHECK(sum == BigRational(0));
    }
}

TEST_CASE("euler phi") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(16) == 8);
    // oracle: count units directly
    for (std::uint64_t t : {10, 16, 36, 97}) {
        std::uint64_t count = 0;
        for (std::uint64_t u = 1; u <= t; ++u) {
            std::uint64_t a = u, b = t;
            while (b) {
                std::uint64_t r = a % b;
                a = b;
                b = r;
            }
            if (a == 1)
                ++count;
        }
        CHECK(euler_phi(t) == count);
    }
}

TEST_CASE("padic arithmetic is exact at the minimum precision") {
    PadicApprox a(5, 4, BigInt(123));
    PadicApprox b(5, 3, BigInt(99));
    CHECK((a * b).precision() == 3);
    CHECK((a * b).residue() == BigInt(123 * 99 % 125));
    CHECK((a + b).residue() == BigInt((123 + 99) % 125));
    CHECK(a.pow(BigInt(3)).residue() == BigInt(123) * 123 * 123 % 625);
    CHECK(PadicApprox(5, 4, BigInt(0)).valuation() == std::nullopt);
    CHECK(PadicApprox(5, 4, BigInt(50)).valuation() == 2);
    CHECK_THROWS_AS(PadicApprox(5, 3, BigInt(10)).inverse(), std::domain_error);
}

TEST_CASE("cyclotomic values at padic points") {
    CHECK(cyclotomic_value(1, PadicApprox(3, 5, BigInt(2))).residue() == 1);
    CHECK(cyclotomic_value(2, PadicApprox(5, 4, BigInt(2))).residue() == 3);
    CHECK(cyclotomic_value(4, PadicApprox(2, 10, BigInt(7))).residue() == 50);
}

TEST_CASE("cyclotomic polynomials multiply back to x^n - 1") {
    std::mt19937_64 rng(99);
    for (int n = 1; n <= 60; ++n) {
        std::uint64_t ell = std::vector<std::uint64_t>{2, 3, 5, 7}[rng() % 4];
        int precision = 8;
        PadicApprox x(ell, precision, BigInt(rng() % 1000));
        PadicApprox product(ell, precision, BigInt(1));
        for (int d = 1; d <= n; ++d)
            if (n % d == 0)
                product = product * cyclotomic_value(d, x);
        PadicApprox expected = x.pow(BigInt(n)) - PadicApprox(ell, precision, BigInt(1));
        CHECK(product == expected);
    }
}

TEST_CASE("teichmuller representatives") {
    CHECK(teichmuller(1, 5, 6).residue() == 1);
    CHECK(teichmuller(4, 5, 2).residue() == 24);

    PadicApprox x = teichmuller(2, 7, 3);
    CHECK(x.residue() % 7 == 2);
    CHECK(x.pow(BigInt(6)).residue() == 1);

    CHECK_THROWS_AS(teichmuller(10, 5, 4), std::domain_error);
}

TEST_CASE("teichmuller output has order dividing ell - 1") {
    for (std::uint64_t ell : {3, 5, 7, 11, 13})
        for (std::uint64_t c = 1; c < ell; ++c) {
            PadicApprox x = teichmuller(c, ell, 6);
            CHECK(x.pow(BigInt(ell - 1)).residue() == 1);
            // and the order is exactly the order of c mod ell
            std::uint64_t order = multiplicative_order(c, ell);
            CHECK(x.pow(BigInt(order)).residue() == 1);
            for (auto& [q, e] : factor_u64(order)) {
                (void)e;
                CHECK(x.pow(BigInt(order / q)).residue() != 1);
            }
        }
}

TEST_CASE("prime machinery") {
    CHECK(is_prime(2));
    CHECK(is_prime(691));
    CHECK(!is_prime(1));
    CHECK(!is_prime(561)); // Carmichael
    std::uint64_t p;
    unsigned e;
    CHECK(is_prime_power(9, p, e));
    CHECK(p == 3);
    CHECK(e == 2);
    CHECK(!is_prime_power(12, p, e));
    CHECK(multiplicative_order(7, 5) == 4);
    auto f = factor_u64(2400);
    CHECK(f[2] == 5);
    CHECK(f[3] == 1);
    CHECK(f[5] == 2);
}
