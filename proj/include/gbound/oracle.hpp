#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gbound/factored.hpp"
#include "gbound/invariants.hpp"
#include "gbound/root_data.hpp"

namespace gbound {

/// |GL_n(F_q)| = q^{n(n-1)/2} (q-1)(q^2-1)...(q^n-1), factored.
FactoredInteger gl_order(int n, std::uint64_t q);

/// |O_n(F_p)| for odd p: 2 p^{r^2} (p^2-1)...(p^{2r}-1) for odd n, and
/// 2 p^{r(r-1)} (p^2-1)...(p^{2r}-1)/(p^r + eps) for even n, r = [n/2].
FactoredInteger o_order(int n, std::uint64_t p, int eps);

/// |G(F_q)| = q^N prod (q^{d_i} - 1) with N = sum (d_i - 1); covers the
/// GL pseudo-type, where the formula reduces to gl_order.
FactoredInteger chevalley_order(const RootSystem& root, std::uint64_t q);

/// sum_{i=1..n} v_ell(q^i - 1), the prime-to-q part of v_ell(|GL_n(F_q)|).
long sylow_exponent_formula(int n, std::uint64_t q, std::uint64_t ell);

/// Counts GL_2(F_p) by enumerating all p^4 matrices; p <= 7 only.
long enumerate_gl2_sylow(std::uint64_t p, std::uint64_t ell);

struct WreathWitness {
    FactoredInteger order; // (ell!)^r * r!, r = [n/(ell-1)]
    long v;                // its ell-valuation, = M(n, ell)
};

WreathWitness wreath_witness(int n, std::uint64_t ell);

struct SchurWitness {
    long v_full; // v_ell of the full wreath unit group: mN + v_ell(N!)
    long v_det1; // v_ell of its determinant-one kernel: m(N-1) + v_ell(N!)
};

/// Requires odd ell and finite m.
SchurWitness schur_witness(int big_n, const CycloInvariants& inv);

using IntMatrix = std::vector<std::vector<BigInt>>;

/// Size exponent of ker(u) acting on (ell^{-e} Z/Z)^n, via the Smith normal
/// form: sum of min(v_ell(s_i), e). nullopt when det(u) = 0 (infinite
/// kernel). Equals v_ell(det u) once e clears every elementary divisor.
std::optional<long> kernel_valuation(const IntMatrix& u, std::uint64_t ell, int level);

/// Elementary divisors (nonzero diagonal of the Smith form), plus the rank.
struct SmithForm {
    std::vector<BigInt> divisors;
    int rank;
};

SmithForm smith_form(IntMatrix a);

/// v_ell(Phi_d(z_t u)) at the generic element z_t (1 + ell^m): m for d = t,
/// 1 for d = t ell^alpha with alpha >= 1, 0 otherwise. Odd ell only.
long phi_valuation(int d, const CycloInvariants& inv, std::uint64_t ell, int precision);

/// Least prime whose class generates (Z/ell^2 Z)*; odd ell.
std::uint64_t least_generator_prime(std::uint64_t ell);

} // namespace gbound
