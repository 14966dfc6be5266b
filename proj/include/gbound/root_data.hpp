#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gbound/factored.hpp"

namespace gbound {

enum class RootType { A, B, C, D, E6, E7, E8, F4, G2, GL };

/// An irreducible root system label, or the GL_n pseudo-type whose
/// "degrees" are 1..n and whose "Weyl order" is n!.
struct RootSystem {
    RootType type;
    int rank;

    bool is_gl() const { return type == RootType::GL; }
    bool operator==(const RootSystem&) const = default;
};

/// Grammar: A:<r> | B:<r> | C:<r> | D:<r> | E6 | E7 | E8 | F4 | G2 | GL:<n>
RootSystem parse_root(const std::string& text);
std::string root_to_string(const RootSystem& root);

/// Invariant degrees d_1 <= ... <= d_r.
std::vector<int> degrees(const RootSystem& root);

/// |W| = prod d_i, factored. Rejects GL (whose analogue n! is
/// factorial_order below).
FactoredInteger weyl_order(const RootSystem& root);

/// n! for the GL_n pseudo-type.
FactoredInteger factorial_order(int n);

/// Number of degrees divisible by t.
int a_t(const RootSystem& root, long t);

/// (even-degree count, odd-degree count).
std::pair<int, int> parity_counts(const RootSystem& root);

/// Lehrer-Springer test: t is regular iff as many degrees are = 0 as are
/// = 2 modulo t.
bool regular_number(const RootSystem& root, long t);

/// N = |R|/2 = sum (d_i - 1). Irreducible types only.
int positive_root_count(const RootSystem& root);

/// Largest degree d_r (the Coxeter number for irreducible types).
int coxeter_number(const RootSystem& root);

/// The fixed roster of irreducible systems the test grids run over.
const std::vector<RootSystem>& catalogue();

} // namespace gbound
