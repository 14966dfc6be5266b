#include "gbound/invariants.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "gbound/padic.hpp"
#include "gbound/primes.hpp"

namespace gbound {

char two_type_letter(TwoType t) {
    switch (t) {
    case TwoType::a:
        return 'a';
    case TwoType::b:
        return 'b';
    case TwoType::c:
        return 'c';
    }
    throw std::logic_error("unreachable");
}

std::string CycloInvariants::to_string() const {
    std::string out = "t=" + std::to_string(t) + " m=" + m.to_string();
    if (two_type)
        out += std::string(" type=") + two_type_letter(*two_type);
    return out;
}

CycloInvariants make_invariants(std::uint64_t ell, long t, MValue m,
                                std::optional<TwoType> two_type) {
    if (!is_prime(ell))
        throw std::invalid_argument("ell must be prime");
    if (ell == 2) {
        if (t != 1 && t != 2)
            throw std::invalid_argument("for ell = 2, t must be 1 or 2");
        if (!m.is_infinite() && m.value() < 2)
            throw std::invalid_argument("for ell = 2, m must be >= 2");
        if (t == 1) {
            if (two_type && *two_type != TwoType::a)
                throw std::invalid_argument("t = 1 forces type (a)");
            two_type = TwoType::a;
        } else {
            if (m.is_infinite())
                two_type = TwoType::b; // (b) and (c) coincide at m = inf
            else if (!two_type)
                throw std::invalid_argument("t = 2 with finite m requires a type (b or c)");
            else if (*two_type == TwoType::a)
                throw std::invalid_argument("type (a) forces t = 1");
        }
        return CycloInvariants{ell, t, m, two_type};
    }
    if (two_type)
        throw std::invalid_argument("two-adic type is only defined for ell = 2");
    if (t < 1 || static_cast<std::uint64_t>(ell - 1) % static_cast<std::uint64_t>(t) != 0)
        throw std::invalid_argument("t must divide ell - 1");
    return CycloInvariants{ell, t, m, std::nullopt};
}

namespace {

CycloInvariants rationals_invariants(std::uint64_t ell) {
    if (ell == 2)
        return make_invariants(2, 2, MValue::finite(2), TwoType::c);
    return make_invariants(ell, static_cast<long>(ell - 1), MValue::finite(1));
}

CycloInvariants finite_field_invariants(std::uint64_t q, std::uint64_t ell) {
    if (q % ell == 0)
        throw std::domain_error("finite field characteristic divides ell");
    if (ell == 2) {
        if (q % 4 == 1)
            return make_invariants(2, 1, MValue::finite(v_ell(BigInt(BigInt(q) - 1), 2)), TwoType::a);
        return make_invariants(2, 2, MValue::finite(v_ell(BigInt(BigInt(q) + 1), 2)), TwoType::b);
    }
    long t = static_cast<long>(multiplicative_order(q % ell, ell));
    long m = v_ell(BigInt(bigint_pow(BigInt(q), static_cast<unsigned>(t)) - 1), ell);
    return make_invariants(ell, t, MValue::finite(m));
}

CycloInvariants cyclotomic_field_invariants(std::uint64_t n, std::uint64_t ell) {
    if (n < 1)
        throw std::invalid_argument("cyclotomic field index must be >= 1");
    if (ell == 2) {
        while (n % 4 == 2)
            n /= 2; // Q(z_2M) = Q(z_M) for odd M
        long a = n % 2 == 0 ? v_ell(BigInt(n), 2) : 0;
        if (a <= 1)
            return make_invariants(2, 2, MValue::finite(2), TwoType::c);
        return make_invariants(2, 1, MValue::finite(a), TwoType::a);
    }
    long a = n % ell == 0 ? v_ell(BigInt(n), ell) : 0;
    if (a == 0)
        return rationals_invariants(ell);
    return make_invariants(ell, 1, MValue::finite(a));
}

} // namespace

CycloInvariants invariants(const FieldDescriptor& field, std::uint64_t ell) {
    if (!is_prime(ell))
        throw std::invalid_argument("ell must be prime");
    return std::visit(
        [&](const auto& f) -> CycloInvariants {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, Rationals>) {
                return rationals_invariants(ell);
            } else if constexpr (std::is_same_v<T, RealField>) {
                if (ell == 2)
                    return make_invariants(2, 2, MValue::infinite());
                return make_invariants(ell, 2, MValue::infinite());
            } else if constexpr (std::is_same_v<T, SeparablyClosed>) {
                return make_invariants(ell, 1, MValue::infinite(),
                                       ell == 2 ? std::optional<TwoType>(TwoType::a)
                                                : std::nullopt);
            } else if constexpr (std::is_same_v<T, FiniteField>) {
                std::uint64_t p;
                unsigned e;
                if (!is_prime_power(f.q, p, e))
                    throw std::invalid_argument("finite field size must be a prime power");
                return finite_field_invariants(f.q, ell);
            } else if constexpr (std::is_same_v<T, PadicField>) {
                if (!is_prime(f.p))
                    throw std::invalid_argument("p-adic field requires a prime p");
                if (f.p == ell)
                    return rationals_invariants(ell);
                // Unramified cyclotomic tower: the image is the closure of <p>,
                // exactly the finite-field rule.
                return finite_field_invariants(f.p, ell);
            } else if constexpr (std::is_same_v<T, CyclotomicField>) {
                return cyclotomic_field_invariants(f.n, ell);
            } else {
                static_assert(std::is_same_v<T, ExplicitInvariants>);
                return make_invariants(ell, f.t, f.m, f.two_type);
            }
        },
        field);
}

std::string SubgroupInvariants::to_string() const {
    std::string out = "t=" + std::to_string(t);
    out += " m=";
    if (m_is_lower_bound)
        out += ">=";
    out += std::to_string(m);
    switch (two_type) {
    case Type::none:
        break;
    case Type::a:
        out += " type=a";
        break;
    case Type::b:
        out += " type=b";
        break;
    case Type::c:
        out += " type=c";
        break;
    case Type::b_or_c:
        out += " type=b|c";
        break;
    }
    return out;
}

namespace {

// Shared analysis over the enumerated subgroup. Element access is through
// callbacks so the closure can run in 64-bit when the modulus allows it.
SubgroupInvariants classify_subgroup(std::uint64_t ell, int precision,
                                     const std::vector<std::uint64_t>& elements_u64,
                                     const std::vector<BigInt>& elements_big) {
    const bool small = !elements_u64.empty();
    const std::size_t count = small ? elements_u64.size() : elements_big.size();
    auto element = [&](std::size_t i) {
        return small ? BigInt(elements_u64[i]) : elements_big[i];
    };
    const BigInt modulus = bigint_pow(BigInt(ell), static_cast<unsigned>(precision));

    SubgroupInvariants out{};
    out.two_type = SubgroupInvariants::Type::none;
    long min_v = precision; // "nothing below the ceiling seen yet"

    if (ell == 2) {
        bool has_minus_one = false;
        bool t_two = false;
        for (std::size_t i = 0; i < count; ++i) {
            BigInt h = element(i);
            if (h == modulus - 1)
                has_minus_one = true;
            if (h % 4 == 3) {
                t_two = true;
                h = modulus - h; // -h = 1 (mod 4)
            }
            if (h != 1)
                min_v = std::min(min_v, v_ell(BigInt(h - 1), 2));
        }
        out.t = t_two ? 2 : 1;
        bool ceiling = min_v >= precision - 1;
        out.m = ceiling ? std::max(precision - 1, 2) : min_v;
        out.m_is_lower_bound = ceiling;
        if (out.t == 1)
            out.two_type = SubgroupInvariants::Type::a;
        else if (!has_minus_one)
            out.two_type = SubgroupInvariants::Type::b;
        else
            out.two_type = ceiling ? SubgroupInvariants::Type::b_or_c
                                   : SubgroupInvariants::Type::c;
        return out;
    }

    // ell odd: t is the order of the image in (Z/ell)*; the principal-unit
    // part of h is h times the inverse Teichmueller lift of its class.
    std::set<std::uint64_t> classes;
    for (std::size_t i = 0; i < count; ++i)
        classes.insert(static_cast<std::uint64_t>(element(i) % ell));
    out.t = static_cast<long>(classes.size());

    std::map<std::uint64_t, BigInt> inverse_torsion;
    for (std::uint64_t c : classes)
        inverse_torsion[c] = teichmuller(c, ell, precision).inverse().residue();

    for (std::size_t i = 0; i < count; ++i) {
        BigInt h = element(i);
        BigInt u = h * inverse_torsion.at(static_cast<std::uint64_t>(h % ell)) % modulus;
        if (u != 1)
            min_v = std::min(min_v, v_ell(BigInt(u - 1), ell));
    }
    bool ceiling = min_v >= precision - 1;
    out.m = ceiling ? precision - 1 : min_v;
    out.m_is_lower_bound = ceiling;
    return out;
}

} // namespace

SubgroupInvariants invariants_from_subgroup(const std::vector<BigInt>& generators,
                                            std::uint64_t ell, int precision) {
    if (!is_prime(ell))
        throw std::invalid_argument("ell must be prime");
    if (precision < 2)
        throw std::invalid_argument("precision must be >= 2");
    const BigInt modulus = bigint_pow(BigInt(ell), static_cast<unsigned>(precision));

    std::vector<BigInt> gens;
    for (const BigInt& g : generators) {
        BigInt r = g % modulus;
        if (r < 0)
            r += modulus;
        if (r % ell == 0)
            throw std::domain_error("generator is not a unit mod ell^K");
        gens.push_back(r);
    }

    // Closure under multiplication: the subgroup generated mod ell^K.
    // In 64-bit when products cannot overflow, arbitrary precision otherwise.
    if (modulus <= BigInt(1) << 32) {
        const std::uint64_t mod64 = static_cast<std::uint64_t>(modulus);
        std::vector<std::uint64_t> gens64;
        gens64.reserve(gens.size());
        for (const BigInt& g : gens)
            gens64.push_back(static_cast<std::uint64_t>(g));
        std::unordered_set<std::uint64_t> subgroup{1};
        std::vector<std::uint64_t> work{1};
        while (!work.empty()) {
            std::uint64_t h = work.back();
            work.pop_back();
            for (std::uint64_t g : gens64) {
                std::uint64_t next = h * g % mod64;
                if (subgroup.insert(next).second)
                    work.push_back(next);
            }
        }
        std::vector<std::uint64_t> elements(subgroup.begin(), subgroup.end());
        return classify_subgroup(ell, precision, elements, {});
    }

    std::set<BigInt> subgroup{BigInt(1)};
    std::vector<BigInt> work{BigInt(1)};
    while (!work.empty()) {
        BigInt h = work.back();
        work.pop_back();
        for (const BigInt& g : gens) {
            BigInt next = h * g % modulus;
            if (subgroup.insert(next).second)
                work.push_back(next);
        }
    }
    std::vector<BigInt> elements(subgroup.begin(), subgroup.end());
    return classify_subgroup(ell, precision, {}, elements);
}

bool subgroup_matches(const SubgroupInvariants& got, const CycloInvariants& inv) {
    if (inv.m.is_infinite() || got.m_is_lower_bound)
        return false;
    if (got.t != inv.t || got.m != inv.m.value())
        return false;
    if (inv.ell != 2)
        return got.two_type == SubgroupInvariants::Type::none;
    switch (*inv.two_type) {
    case TwoType::a:
        return got.two_type == SubgroupInvariants::Type::a;
    case TwoType::b:
        return got.two_type == SubgroupInvariants::Type::b;
    case TwoType::c:
        return got.two_type == SubgroupInvariants::Type::c;
    }
    return false;
}

namespace {

std::uint64_t parse_u64(const std::string& text) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("expected an unsigned integer, got '" + text + "'");
    return std::stoull(text);
}

} // namespace

FieldDescriptor parse_field(const std::string& text) {
    if (text == "Q")
        return Rationals{};
    if (text == "R")
        return RealField{};
    if (text == "Qbar")
        return SeparablyClosed{};
    if (text.rfind("F:", 0) == 0)
        return FiniteField{parse_u64(text.substr(2))};
    if (text.rfind("Qp:", 0) == 0)
        return PadicField{parse_u64(text.substr(3))};
    if (text.rfind("QzN:", 0) == 0)
        return CyclotomicField{parse_u64(text.substr(4))};
    if (text.rfind("explicit:", 0) == 0) {
        std::optional<long> t;
        std::optional<MValue> m;
        std::optional<TwoType> type;
        std::string rest = text.substr(9);
        while (!rest.empty()) {
            auto comma = rest.find(',');
            std::string item = rest.substr(0, comma);
            rest = comma == std::string::npos ? "" : rest.substr(comma + 1);
            auto eq = item.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("bad explicit field item '" + item + "'");
            std::string key = item.substr(0, eq), value = item.substr(eq + 1);
            if (key == "t") {
                t = static_cast<long>(parse_u64(value));
            } else if (key == "m") {
                m = value == "inf" ? MValue::infinite()
                                   : MValue::finite(static_cast<long>(parse_u64(value)));
            } else if (key == "type") {
                if (value == "a")
                    type = TwoType::a;
                else if (value == "b")
                    type = TwoType::b;
                else if (value == "c")
                    type = TwoType::c;
                else
                    throw std::invalid_argument("bad two-adic type '" + value + "'");
            } else {
                throw std::invalid_argument("bad explicit field key '" + key + "'");
            }
        }
        if (!t || !m)
            throw std::invalid_argument("explicit field needs t=<t>,m=<m|inf>");
        return ExplicitInvariants{*t, *m, type};
    }
    throw std::invalid_argument("unknown field descriptor '" + text + "'");
}

std::string field_to_string(const FieldDescriptor& field) {
    return std::visit(
        [](const auto& f) -> std::string {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, Rationals>)
                return "Q";
            else if constexpr (std::is_same_v<T, RealField>)
                return "R";
            else if constexpr (std::is_same_v<T, SeparablyClosed>)
                return "Qbar";
            else if constexpr (std::is_same_v<T, FiniteField>)
                return "F:" + std::to_string(f.q);
            else if constexpr (std::is_same_v<T, PadicField>)
                return "Qp:" + std::to_string(f.p);
            else if constexpr (std::is_same_v<T, CyclotomicField>)
                return "QzN:" + std::to_string(f.n);
            else {
                std::string out = "explicit:t=" + std::to_string(f.t) + ",m=" + f.m.to_string();
                if (f.two_type)
                    out += std::string(",type=") + two_type_letter(*f.two_type);
                return out;
            }
        },
        field);
}

} // namespace gbound
