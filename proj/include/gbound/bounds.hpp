#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gbound/factored.hpp"
#include "gbound/invariants.hpp"
#include "gbound/root_data.hpp"

namespace gbound {

enum class BoundSource { minkowski, schur, torus, s_bound, m_bound, achievable, corank };

std::string bound_source_tag(BoundSource source);

/// An ell-exponent bound: finite value, or infinite exactly when the
/// producing rule's infinitude criterion holds.
struct BoundValue {
    std::optional<long> value; // nullopt = infinite
    BoundSource source;

    bool is_infinite() const { return !value.has_value(); }
    long finite() const {
        if (!value)
            throw std::domain_error("bound is infinite");
        return *value;
    }
    std::string to_string() const { return value ? std::to_string(*value) : "inf"; }
};

/// M(n, ell) = [n/(ell-1)] + [n/ell(ell-1)] + ...
long minkowski_exponent(long n, std::uint64_t ell);

/// M(n) = prod over ell of ell^M(n, ell); only primes with ell-1 <= n occur.
FactoredInteger minkowski_bound(long n);

/// The number-field exponent: for odd ell, m[n/t] + sum_j [n/(ell^j t)];
/// for ell = 2, n + (m'-1)[n/t] + sum_j [n/(2^j t)] with m' = m+1 in
/// type (b) and m otherwise. Requires finite m.
long schur_exponent(long n, std::uint64_t ell, const CycloInvariants& inv);

/// m[dim/phi(t)]; infinite iff m is infinite and the floor is positive.
BoundValue torus_bound(long dim, const CycloInvariants& inv);

/// m[r/phi(t)] + v_ell(|W|); infinite iff m is infinite and the floor is
/// positive. Irreducible types only.
BoundValue s_bound(const RootSystem& root, const CycloInvariants& inv, std::uint64_t ell);

/// r < phi(t): the group has no ell-torsion at all.
bool s_torsion_free(const RootSystem& root, const CycloInvariants& inv);

/// The sharp bound: sum over t | d_i of (m + v_ell(d_i)) for odd ell or
/// ell = 2 type (a); r1 + m r0 + v_2(prod d_i) for ell = 2, t = 2.
/// Infinite exactly when m is infinite and a(t) >= 1.
BoundValue m_bound(const RootSystem& root, const CycloInvariants& inv, std::uint64_t ell);

/// The defining minimum inf_x sum v_ell(x^{d_i} - 1), evaluated at the
/// known minimizing element of the character image plus `samples` random
/// elements, at precision ell^K (precision 0 picks m_bound + 6). Throws
/// precision_error when a term cannot be certified.
long m_bound_direct(const RootSystem& root, const CycloInvariants& inv, std::uint64_t ell,
                    int precision, int samples);

/// a(t) = 0: no degree is divisible by t, so the bound is an empty sum.
bool m_torsion_free(const RootSystem& root, const CycloInvariants& inv);

struct AchievableValue {
    long value;
    bool optimal; // value meets the m-bound
};

/// Largest exponent attained by a known construction: the m-bound itself
/// except for ell = 2 type (c), where it is r0 m + v_2(W) (optimal iff
/// there is no odd degree). Requires finite m and an irreducible type.
AchievableValue achievable_exponent(const RootSystem& root, const CycloInvariants& inv,
                                    std::uint64_t ell);

/// For m infinite: the largest a with a divisible subgroup of corank a,
/// namely a(t). Requires infinite m.
long corank_bound(const RootSystem& root, const CycloInvariants& inv);

/// Primes with a nonzero exponent for the given bound kind over Q; used to
/// assemble full factored bounds. Only the rationals admit a finite,
/// desk-scale enumeration.
std::vector<std::uint64_t> relevant_primes_over_q(const RootSystem& root, BoundSource kind);

} // namespace gbound
