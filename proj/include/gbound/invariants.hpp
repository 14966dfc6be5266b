#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gbound/arith.hpp"

namespace gbound {

/// The invariant m: a finite positive integer or infinite.
class MValue {
public:
    static MValue finite(long v) {
        if (v < 1)
            throw std::invalid_argument("finite m must be >= 1");
        MValue m;
        m.v_ = v;
        return m;
    }
    static MValue infinite() { return MValue{}; }

    bool is_infinite() const { return !v_.has_value(); }
    long value() const {
        if (!v_)
            throw std::domain_error("m is infinite");
        return *v_;
    }
    bool operator==(const MValue&) const = default;
    std::string to_string() const { return v_ ? std::to_string(*v_) : "inf"; }

private:
    std::optional<long> v_;
};

enum class TwoType { a, b, c };

char two_type_letter(TwoType t);

/// Image of the ell-cyclotomic character: the torsion order t, the level m
/// of the principal-unit part, and for ell = 2 the shape (a), (b) or (c).
struct CycloInvariants {
    std::uint64_t ell;
    long t;
    MValue m;
    std::optional<TwoType> two_type; // present iff ell == 2

    bool operator==(const CycloInvariants&) const = default;
    std::string to_string() const;
};

/// Validates the structural invariants (t | ell-1 for odd ell; t in {1,2},
/// m >= 2 and a type for ell = 2, with (b) canonical when m is infinite).
CycloInvariants make_invariants(std::uint64_t ell, long t, MValue m,
                                std::optional<TwoType> two_type = std::nullopt);

struct Rationals {};
struct RealField {};
struct SeparablyClosed {};
struct FiniteField {
    std::uint64_t q;
};
struct PadicField {
    std::uint64_t p;
};
struct CyclotomicField {
    std::uint64_t n;
};
struct ExplicitInvariants {
    long t;
    MValue m;
    std::optional<TwoType> two_type;
};

using FieldDescriptor = std::variant<Rationals, RealField, SeparablyClosed, FiniteField,
                                     PadicField, CyclotomicField, ExplicitInvariants>;

/// Grammar: Q | R | Qbar | F:<q> | Qp:<p> | QzN:<N> |
/// explicit:t=<t>,m=<m|inf>[,type=<a|b|c>]
FieldDescriptor parse_field(const std::string& text);
std::string field_to_string(const FieldDescriptor& field);

/// The invariants of the field at the prime ell.
CycloInvariants invariants(const FieldDescriptor& field, std::uint64_t ell);

/// Invariants extracted from a finite-level image of the cyclotomic
/// character: the subgroup of (Z/ell^K)* generated by the given units.
/// m is conclusive only up to K-2; at the ceiling it is reported as the
/// lower bound K-1, and for ell = 2 types (b)/(c) become indistinguishable.
struct SubgroupInvariants {
    long t;
    long m;
    bool m_is_lower_bound;
    enum class Type { none, a, b, c, b_or_c } two_type;

    std::string to_string() const;
};

SubgroupInvariants invariants_from_subgroup(const std::vector<BigInt>& generators,
                                            std::uint64_t ell, int precision);

/// True when the subgroup extraction is conclusive and matches inv exactly.
bool subgroup_matches(const SubgroupInvariants& got, const CycloInvariants& inv);

} // namespace gbound
