#include "gbound/bounds.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "gbound/padic.hpp"
#include "gbound/primes.hpp"

namespace gbound {

std::string bound_source_tag(BoundSource source) {
    switch (source) {
    case BoundSource::minkowski:
        return "Minkowski";
    case BoundSource::schur:
        return "Schur";
    case BoundSource::torus:
        return "Torus";
    case BoundSource::s_bound:
        return "S";
    case BoundSource::m_bound:
        return "M";
    case BoundSource::achievable:
        return "Achievable";
    case BoundSource::corank:
        return "Corank";
    }
    throw std::logic_error("unreachable");
}

long minkowski_exponent(long n, std::uint64_t ell) {
    if (n < 1)
        throw std::invalid_argument("n must be >= 1");
    if (!is_prime(ell))
        throw std::invalid_argument("ell must be prime");
    long sum = 0;
    BigInt q = BigInt(ell) - 1;
    while (q <= n) {
        sum += static_cast<long>(BigInt(n) / q);
        q *= ell;
    }
    return sum;
}

FactoredInteger minkowski_bound(long n) {
    if (n < 1)
        throw std::invalid_argument("n must be >= 1");
    FactoredInteger out;
    for (std::uint64_t ell : primes_upto(static_cast<std::uint64_t>(n) + 1)) {
        long e = minkowski_exponent(n, ell);
        if (e > 0)
            out.multiply_prime_power(ell, e);
    }
    return out;
}

long schur_exponent(long n, std::uint64_t ell, const CycloInvariants& inv) {
    if (n < 1)
        throw std::invalid_argument("n must be >= 1");
    if (inv.ell != ell)
        throw std::invalid_argument("invariants were computed for a different prime");
    if (inv.m.is_infinite())
        throw std::domain_error("Schur bound requires finite m");
    const long t = inv.t;
    const long m = inv.m.value();
    long tail = 0;
    BigInt q = BigInt(ell) * t;
    while (q <= n) {
        tail += static_cast<long>(BigInt(n) / q);
        q *= ell;
    }
    if (ell == 2) {
        long m_prime = inv.two_type == TwoType::b ? m + 1 : m;
        return n + (m_prime - 1) * (n / t) + tail;
    }
    return m * (n / t) + tail;
}

BoundValue torus_bound(long dim, const CycloInvariants& inv) {
    if (dim < 1)
        throw std::invalid_argument("torus dimension must be >= 1");
    long floor = dim / static_cast<long>(euler_phi(static_cast<std::uint64_t>(inv.t)));
    if (inv.m.is_infinite()) {
        if (floor >= 1)
            return {std::nullopt, BoundSource::torus};
        return {0, BoundSource::torus};
    }
    return {inv.m.value() * floor, BoundSource::torus};
}

BoundValue s_bound(const RootSystem& root, const CycloInvariants& inv, std::uint64_t ell) {
    if (inv.ell != ell)
        throw std::invalid_argument("invariants were computed for a different prime");
    long weyl_v = weyl_order(root).exponent(ell);
    long floor = root.rank / static_cast<long>(euler_phi(static_cast<std::uint64_t>(inv.t)));
    if (inv.m.is_infinite()) {
        if (floor >= 1)
            return {std::nullopt, BoundSource::s_bound};
        return {weyl_v, BoundSource::s_bound};
    }
    return {inv.m.value() * floor + weyl_v, BoundSource::s_bound};
}

bool s_torsion_free(const RootSystem& root, const CycloInvariants& inv) {
    return static_cast<std::uint64_t>(root.rank) < euler_phi(static_cast<std::uint64_t>(inv.t));
}

BoundValue m_bound(const RootSystem& root, const CycloInvariants& inv, std::uint64_t ell) {
    if (inv.ell != ell)
        throw std::invalid_argument("invariants were computed for a different prime");
    const std::vector<int> d = degrees(root);
    const long t = inv.t;
    const int at = a_t(root, t);

    if (inv.m.is_infinite()) {
        if (at >= 1)
            return {std::nullopt, BoundSource::m_bound};
        if (ell == 2 && t == 2) {
            // Image is just {1, -1}: each odd degree contributes v_2(-2) = 1.
            auto [even, odd] = parity_counts(root);
            (void)even;
            return {static_cast<long>(odd), BoundSource::m_bound};
        }
        return {0, BoundSource::m_bound};
    }

    const long m = inv.m.value();
    if (ell == 2 && t == 2) {
        if (!inv.two_type)
            throw std::invalid_argument("ell = 2 with t = 2 requires a two-adic type");
        auto [even, odd] = parity_counts(root);
        long v2w = 0;
        for (int di : d)
            v2w += v_ell(static_cast<std::int64_t>(di), 2);
        return {odd + m * even + v2w, BoundSource::m_bound};
    }
    long sum = 0;
    for (int di : d)
        if (di % t == 0)
            sum += m + v_ell(static_cast<std::int64_t>(di), ell);
    return {sum, BoundSource::m_bound};
}

bool m_torsion_free(const RootSystem& root, const CycloInvariants& inv) {
    return a_t(root, inv.t) == 0;
}

namespace {

// sum_i v_ell(x^{d_i} - 1) if every term is certifiable below precision.
std::optional<long> valuation_sum(const PadicApprox& x, const std::vector<int>& degs) {
    long sum = 0;
    for (int d : degs) {
        PadicApprox term = x.pow(BigInt(d)) - PadicApprox(x.ell(), x.precision(), BigInt(1));
        auto v = term.valuation();
        if (!v)
            return std::nullopt;
        sum += *v;
    }
    return sum;
}

} // namespace

long m_bound_direct(const RootSystem& root, const CycloInvariants& inv, std::uint64_t ell,
                    int precision, int samples) {
    if (inv.ell != ell)
        throw std::invalid_argument("invariants were computed for a different prime");
    if (inv.m.is_infinite())
        throw std::domain_error("direct evaluation requires finite m");
    const long m = inv.m.value();
    const std::vector<int> degs = degrees(root);
    const BoundValue closed = m_bound(root, inv, ell);

    if (precision == 0)
        precision = static_cast<int>(closed.finite()) + 6;
    long max_dv = 0;
    for (int d : degs)
        max_dv = std::max(max_dv, v_ell(static_cast<std::int64_t>(d), ell));
    if (precision <= closed.finite() + max_dv + 2)
        throw std::invalid_argument("precision too small for a certified minimum");

    const BigInt modulus = bigint_pow(BigInt(ell), static_cast<unsigned>(precision));
    const BigInt unit_step = bigint_pow(BigInt(ell), static_cast<unsigned>(m));

    std::optional<PadicApprox> zt; // order-t torsion element (odd ell)
    if (ell != 2 && inv.t > 1) {
        std::uint64_t g = 2;
        while (multiplicative_order(g, ell) != ell - 1)
            ++g;
        std::uint64_t c = pow_mod_u64(g, (ell - 1) / static_cast<std::uint64_t>(inv.t), ell);
        zt = teichmuller(c, ell, precision);
    }

    // The minimizing elements of the character image, per its shape.
    std::vector<BigInt> deterministic;
    if (ell == 2) {
        switch (*inv.two_type) {
        case TwoType::a:
            deterministic.push_back(1 + unit_step);
            break;
        case TwoType::b:
            deterministic.push_back(modulus - 1 + unit_step);
            break;
        case TwoType::c:
            deterministic.push_back(modulus - 1 + unit_step);
            deterministic.push_back(1 + unit_step);
            break;
        }
    } else {
        BigInt x = 1 + unit_step;
        if (zt)
            x = x * zt->residue() % modulus;
        deterministic.push_back(x);
    }

    std::optional<long> best;
    for (const BigInt& r : deterministic) {
        auto v = valuation_sum(PadicApprox(ell, precision, r), degs);
        if (!v)
            throw precision_error("inconclusive precision");
        best = best ? std::min(*best, *v) : *v;
    }

    // Random further elements of the image. They can only confirm, never
    // lower, the certified minimum; samples whose terms hit the precision
    // ceiling are skipped, since their true sum exceeds any certified value.
    std::mt19937_64 rng(0x5eedULL * ell + 1000003ULL * static_cast<std::uint64_t>(inv.t) +
                        static_cast<std::uint64_t>(m));
    const BigInt unit_count = bigint_pow(BigInt(ell), static_cast<unsigned>(precision - m));
    auto random_unit = [&]() { // 1 + ell^m s, uniform over the unit part
        BigInt s = 0;
        for (int w = 0; w < precision; ++w)
            s = s * ell + static_cast<long>(rng() % ell);
        return (1 + unit_step * (s % unit_count)) % modulus;
    };
    const PadicApprox type_b_generator(ell, precision, modulus - 1 + unit_step);
    for (int i = 0; i < samples; ++i) {
        BigInt x;
        if (ell == 2 && inv.two_type == TwoType::b) {
            BigInt e = 0; // a power of the single generator -1 + 2^m
            for (int w = 0; w < precision; ++w)
                e = e * 2 + static_cast<long>(rng() % 2);
            x = type_b_generator.pow(e).residue();
        } else {
            x = random_unit();
            if (ell == 2 && inv.two_type == TwoType::c && rng() % 2 == 0)
                x = modulus - x;
            else if (zt)
                x = x * zt->pow(BigInt(rng() % static_cast<std::uint64_t>(inv.t))).residue() %
                    modulus;
        }
        if (x == 1)
            continue;
        auto v = valuation_sum(PadicApprox(ell, precision, x), degs);
        if (v)
            best = std::min(*best, *v);
    }
    return *best;
}

AchievableValue achievable_exponent(const RootSystem& root, const CycloInvariants& inv,
                                    std::uint64_t ell) {
    if (root.is_gl())
        throw std::domain_error("achievable exponents cover irreducible types only");
    if (inv.m.is_infinite())
        throw std::domain_error("m is infinite; the achievable size is corank_bound");
    const BoundValue bound = m_bound(root, inv, ell);
    if (ell == 2 && inv.two_type == TwoType::c) {
        auto [even, odd] = parity_counts(root);
        long value = inv.m.value() * even + weyl_order(root).exponent(2);
        return {value, odd == 0};
    }
    return {bound.finite(), true};
}

long corank_bound(const RootSystem& root, const CycloInvariants& inv) {
    if (!inv.m.is_infinite())
        throw std::domain_error("corank bound applies only when m is infinite");
    return a_t(root, inv.t);
}

std::vector<std::uint64_t> relevant_primes_over_q(const RootSystem& root, BoundSource kind) {
    const std::vector<int> d = degrees(root);
    const long r = root.rank;
    std::vector<std::uint64_t> out;
    // phi(ell-1) <= r forces ell-1 <= 2 r^2; the Weyl-order part is bounded
    // by the largest degree.
    std::uint64_t limit = static_cast<std::uint64_t>(
        std::max<long>(2 * r * r + 2, coxeter_number(root) + 2));
    for (std::uint64_t ell : primes_upto(limit)) {
        CycloInvariants inv = invariants(Rationals{}, ell);
        long value = 0;
        switch (kind) {
        case BoundSource::m_bound:
            value = m_bound(root, inv, ell).finite();
            break;
        case BoundSource::s_bound:
            value = s_bound(root, inv, ell).finite();
            break;
        case BoundSource::achievable:
            value = achievable_exponent(root, inv, ell).value;
            break;
        default:
            throw std::invalid_argument("prime enumeration covers s, m and achievable bounds");
        }
        if (value > 0)
            out.push_back(ell);
    }
    return out;
}

} // namespace gbound
