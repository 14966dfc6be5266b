#include "gbound/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "gbound/bounds.hpp"
#include "gbound/cyclotomic.hpp"
#include "gbound/padic.hpp"
#include "gbound/primes.hpp"

namespace gbound {

FactoredInteger gl_order(int n, std::uint64_t q) {
    if (n < 1)
        throw std::invalid_argument("n must be >= 1");
    std::uint64_t p;
    unsigned e;
    if (!is_prime_power(q, p, e))
        throw std::invalid_argument("q must be a prime power");
    FactoredInteger out = FactoredInteger::prime_power(p, e * static_cast<unsigned>(n) *
                                                              static_cast<unsigned>(n - 1) / 2);
    BigInt qi = 1;
    for (int i = 1; i <= n; ++i) {
        qi *= q;
        out *= FactoredInteger::from_integer(qi - 1);
    }
    return out;
}

FactoredInteger o_order(int n, std::uint64_t p, int eps) {
    if (n < 1)
        throw std::invalid_argument("n must be >= 1");
    if (!is_prime(p) || p == 2)
        throw std::domain_error("orthogonal order formulas are stated for odd primes");
    const int r = n / 2;
    FactoredInteger out = FactoredInteger::prime_power(2, 1);
    if (n % 2 == 1) {
        out *= FactoredInteger::prime_power(p, static_cast<unsigned>(r) * r);
    } else {
        if (eps != 1 && eps != -1)
            throw std::invalid_argument("even-dimensional orthogonal order needs eps = +-1");
        out *= FactoredInteger::prime_power(p, static_cast<unsigned>(r) * (r - 1));
    }
    BigInt p2i = 1;
    for (int i = 1; i <= r; ++i) {
        p2i *= BigInt(p) * p;
        out *= FactoredInteger::from_integer(p2i - 1);
    }
    if (n % 2 == 0 && r >= 1) {
        BigInt pr = bigint_pow(BigInt(p), static_cast<unsigned>(r));
        out /= FactoredInteger::from_integer(pr + eps);
    }
    return out;
}

FactoredInteger chevalley_order(const RootSystem& root, std::uint64_t q) {
    std::uint64_t p;
    unsigned e;
    if (!is_prime_power(q, p, e))
        throw std::invalid_argument("q must be a prime power");
    const std::vector<int> d = degrees(root);
    long exponent = 0;
    for (int di : d)
        exponent += di - 1;
    FactoredInteger out =
        FactoredInteger::prime_power(p, e * static_cast<unsigned>(exponent));
    for (int di : d)
        out *= FactoredInteger::from_integer(bigint_pow(BigInt(q), static_cast<unsigned>(di)) - 1);
    return out;
}

long sylow_exponent_formula(int n, std::uint64_t q, std::uint64_t ell) {
    if (!is_prime(ell))
        throw std::invalid_argument("ell must be prime");
    if (q % ell == 0)
        throw std::domain_error("formula requires ell prime to q");
    long sum = 0;
    BigInt qi = 1;
    for (int i = 1; i <= n; ++i) {
        qi *= q;
        sum += v_ell(BigInt(qi - 1), ell);
    }
    return sum;
}

long enumerate_gl2_sylow(std::uint64_t p, std::uint64_t ell) {
    if (!is_prime(p))
        throw std::invalid_argument("p must be prime");
    if (p > 7)
        throw std::invalid_argument("enumeration budget is capped at p <= 7");
    if (ell == p)
        throw std::domain_error("ell must differ from p");
    long count = 0;
    for (std::uint64_t a = 0; a < p; ++a)
        for (std::uint64_t b = 0; b < p; ++b)
            for (std::uint64_t c = 0; c < p; ++c)
                for (std::uint64_t d = 0; d < p; ++d)
                    if ((a * d % p + p - b * c % p) % p != 0)
                        ++count;
    return v_ell(BigInt(count), ell);
}

WreathWitness wreath_witness(int n, std::uint64_t ell) {
    if (n < 1)
        throw std::invalid_argument("n must be >= 1");
    if (!is_prime(ell))
        throw std::invalid_argument("ell must be prime");
    const long r = n / static_cast<long>(ell - 1);
    if (r == 0)
        return {FactoredInteger{}, 0}; // trivial witness below ell - 1
    FactoredInteger ell_factorial = FactoredInteger::factorial(static_cast<long>(ell));
    FactoredInteger order;
    for (long i = 0; i < r; ++i)
        order *= ell_factorial;
    order *= FactoredInteger::factorial(r);
    return {order, order.exponent(ell)};
}

SchurWitness schur_witness(int big_n, const CycloInvariants& inv) {
    if (big_n < 1)
        throw std::invalid_argument("N must be >= 1");
    if (inv.ell == 2)
        throw std::domain_error("witness arithmetic covers odd ell only");
    if (inv.m.is_infinite())
        throw std::domain_error("witness arithmetic requires finite m");
    const long m = inv.m.value();
    const long vfact = factorial_valuation(big_n, inv.ell);
    return {m * big_n + vfact, m * (big_n - 1) + vfact};
}

SmithForm smith_form(IntMatrix a) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != cols)
            throw std::invalid_argument("ragged matrix");
    SmithForm out;
    int s = 0;
    const int limit = std::min(rows, cols);
    while (s < limit) {
        // Pivot: smallest nonzero |entry| in the trailing block.
        int pr = -1, pc = -1;
        BigInt best;
        for (int i = s; i < rows; ++i)
            for (int j = s; j < cols; ++j)
                if (a[i][j] != 0 && (pr < 0 || abs(a[i][j]) < best)) {
                    best = abs(a[i][j]);
                    pr = i;
                    pc = j;
                }
        if (pr < 0)
            break; // trailing block is zero
        std::swap(a[s], a[pr]);
        for (int i = 0; i < rows; ++i)
            std::swap(a[i][s], a[i][pc]);
        bool clean = true;
        for (int i = s + 1; i < rows; ++i) {
            BigInt f = a[i][s] / a[s][s];
            if (f != 0)
                for (int j = s; j < cols; ++j)
                    a[i][j] -= f * a[s][j];
            if (a[i][s] != 0)
                clean = false;
        }
        for (int j = s + 1; j < cols; ++j) {
            BigInt f = a[s][j] / a[s][s];
            if (f != 0)
                for (int i = s; i < rows; ++i)
                    a[i][j] -= f * a[i][s];
            if (a[s][j] != 0)
                clean = false;
        }
        if (!clean)
            continue; // smaller remainders now exist; repick the pivot
        out.divisors.push_back(abs(a[s][s]));
        ++s;
    }
    out.rank = static_cast<int>(out.divisors.size());
    // Normalize to the divisibility chain s_1 | s_2 | ...
    for (std::size_t i = 0; i < out.divisors.size(); ++i)
        for (std::size_t j = i + 1; j < out.divisors.size(); ++j) {
            BigInt g = gcd(out.divisors[i], out.divisors[j]);
            BigInt l = out.divisors[i] / g * out.divisors[j];
            out.divisors[i] = g;
            out.divisors[j] = l;
        }
    return out;
}

std::optional<long> kernel_valuation(const IntMatrix& u, std::uint64_t ell, int level) {
    if (level < 1)
        throw std::invalid_argument("level must be >= 1");
    if (!is_prime(ell))
        throw std::invalid_argument("ell must be prime");
    const int n = static_cast<int>(u.size());
    for (const auto& row : u)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("kernel valuation needs a square matrix");
    SmithForm snf = smith_form(u);
    if (snf.rank < n)
        return std::nullopt; // det = 0: the kernel contains a divisible group
    long sum = 0;
    for (const BigInt& s : snf.divisors)
        sum += std::min<long>(v_ell(s, ell), level);
    return sum;
}

long phi_valuation(int d, const CycloInvariants& inv, std::uint64_t ell, int precision) {
    if (d < 1)
        throw std::invalid_argument("d must be >= 1");
    if (ell == 2 || inv.ell != ell)
        throw std::invalid_argument("phi valuation table covers odd ell");
    if (inv.m.is_infinite())
        throw std::domain_error("requires finite m");
    if (precision <= inv.m.value() + 2)
        throw std::invalid_argument("precision must exceed m + 2");
    std::uint64_t g = 2;
    while (multiplicative_order(g, ell) != ell - 1)
        ++g;
    std::uint64_t c = pow_mod_u64(g, (ell - 1) / static_cast<std::uint64_t>(inv.t), ell);
    PadicApprox zt = teichmuller(c, ell, precision);
    BigInt u = 1 + bigint_pow(BigInt(ell), static_cast<unsigned>(inv.m.value()));
    PadicApprox x = zt * PadicApprox(ell, precision, u);
    auto v = cyclotomic_value(d, x).valuation();
    if (!v)
        throw precision_error("inconclusive precision");
    return *v;
}

std::uint64_t least_generator_prime(std::uint64_t ell) {
    if (!is_prime(ell) || ell == 2)
        throw std::invalid_argument("odd ell required");
    const std::uint64_t group = ell * ell;
    for (std::uint64_t p = 2;; ++p) {
        if (!is_prime(p) || p == ell)
            continue;
        if (multiplicative_order(p % group, group) == euler_phi(group))
            return p;
    }
}

} // namespace gbound
