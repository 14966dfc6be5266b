#include "gbound/root_data.hpp"

#include <algorithm>
#include <stdexcept>

namespace gbound {

namespace {

int min_rank(RootType type) {
    switch (type) {
    case RootType::A:
        return 1;
    case RootType::B:
    case RootType::C:
        return 2;
    case RootType::D:
        return 3; // D_3 = A_3 keeps the low-rank identities testable
    case RootType::E6:
        return 6;
    case RootType::E7:
        return 7;
    case RootType::E8:
        return 8;
    case RootType::F4:
        return 4;
    case RootType::G2:
        return 2;
    case RootType::GL:
        return 1;
    }
    throw std::logic_error("unreachable");
}

void validate(const RootSystem& root) {
    int lo = min_rank(root.type);
    bool fixed = root.type == RootType::E6 || root.type == RootType::E7 ||
                 root.type == RootType::E8 || root.type == RootType::F4 ||
                 root.type == RootType::G2;
    if (root.rank < lo || (fixed && root.rank != lo))
        throw std::invalid_argument("invalid rank for root system " + root_to_string(root));
}

} // namespace

RootSystem parse_root(const std::string& text) {
    auto with_rank = [&](RootType type, std::size_t prefix) {
        std::string num = text.substr(prefix);
        if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad rank in root system '" + text + "'");
        RootSystem root{type, static_cast<int>(std::stoul(num))};
        validate(root);
        return root;
    };
    if (text == "E6")
        return RootSystem{RootType::E6, 6};
    if (text == "E7")
        return RootSystem{RootType::E7, 7};
    if (text == "E8")
        return RootSystem{RootType::E8, 8};
    if (text == "F4")
        return RootSystem{RootType::F4, 4};
    if (text == "G2")
        return RootSystem{RootType::G2, 2};
    if (text.rfind("A:", 0) == 0)
        return with_rank(RootType::A, 2);
    if (text.rfind("B:", 0) == 0)
        return with_rank(RootType::B, 2);
    if (text.rfind("C:", 0) == 0)
        return with_rank(RootType::C, 2);
    if (text.rfind("D:", 0) == 0)
        return with_rank(RootType::D, 2);
    if (text.rfind("GL:", 0) == 0)
        return with_rank(RootType::GL, 3);
    throw std::invalid_argument("unknown root system '" + text + "'");
}

std::string root_to_string(const RootSystem& root) {
    switch (root.type) {
    case RootType::A:
        return "A:" + std::to_string(root.rank);
    case RootType::B:
        return "B:" + std::to_string(root.rank);
    case RootType::C:
        return "C:" + std::to_string(root.rank);
    case RootType::D:
        return "D:" + std::to_string(root.rank);
    case RootType::E6:
        return "E6";
    case RootType::E7:
        return "E7";
    case RootType::E8:
        return "E8";
    case RootType::F4:
        return "F4";
    case RootType::G2:
        return "G2";
    case RootType::GL:
        return "GL:" + std::to_string(root.rank);
    }
    throw std::logic_error("unreachable");
}

std::vector<int> degrees(const RootSystem& root) {
    validate(root);
    const int r = root.rank;
    std::vector<int> d;
    switch (root.type) {
    case RootType::A:
        for (int i = 2; i <= r + 1; ++i)
            d.push_back(i);
        break;
    case RootType::B:
    case RootType::C:
        for (int i = 2; i <= 2 * r; i += 2)
            d.push_back(i);
        break;
    case RootType::D:
        for (int i = 2; i <= 2 * r - 2; i += 2)
            d.push_back(i);
        d.push_back(r);
        std::sort(d.begin(), d.end());
        break;
    case RootType::G2:
        d = {2, 6};
        break;
    case RootType::F4:
        d = {2, 6, 8, 12};
        break;
    case RootType::E6:
        d = {2, 5, 6, 8, 9, 12};
        break;
    case RootType::E7:
        d = {2, 6, 8, 10, 12, 14, 18};
        break;
    case RootType::E8:
        d = {2, 8, 12, 14, 18, 20, 24, 30};
        break;
    case RootType::GL:
        for (int i = 1; i <= r; ++i)
            d.push_back(i);
        break;
    }
    return d;
}

FactoredInteger weyl_order(const RootSystem& root) {
    if (root.is_gl())
        throw std::domain_error("Weyl order of GL_n is n!; use factorial_order");
    FactoredInteger w;
    for (int d : degrees(root))
        w *= FactoredInteger::from_integer(d);
    return w;
}

FactoredInteger factorial_order(int n) {
    return FactoredInteger::factorial(n);
}

int a_t(const RootSystem& root, long t) {
    if (t < 1)
        throw std::invalid_argument("t must be >= 1");
    int count = 0;
    for (int d : degrees(root))
        if (d % t == 0)
            ++count;
    return count;
}

std::pair<int, int> parity_counts(const RootSystem& root) {
    int even = 0, odd = 0;
    for (int d : degrees(root))
        (d % 2 == 0 ? even : odd)++;
    return {even, odd};
}

bool regular_number(const RootSystem& root, long t) {
    if (t < 1)
        throw std::invalid_argument("t must be >= 1");
    int zeros = 0, twos = 0;
    for (int d : degrees(root)) {
        if (d % t == 0)
            ++zeros;
        if (d % t == 2 % t)
            ++twos;
    }
    return zeros == twos;
}

int positive_root_count(const RootSystem& root) {
    if (root.is_gl())
        throw std::domain_error("positive roots are defined for irreducible types only");
    int n = 0;
    for (int d : degrees(root))
        n += d - 1;
    return n;
}

int coxeter_number(const RootSystem& root) {
    return degrees(root).back();
}

const std::vector<RootSystem>& catalogue() {
    static const std::vector<RootSystem> table = {
        {RootType::A, 1},  {RootType::A, 2},  {RootType::A, 3},  {RootType::A, 4},
        {RootType::A, 5},  {RootType::B, 2},  {RootType::B, 3},  {RootType::B, 4},
        {RootType::C, 2},  {RootType::C, 3},  {RootType::C, 4},  {RootType::D, 3},
        {RootType::D, 4},  {RootType::D, 5},  {RootType::G2, 2}, {RootType::F4, 4},
        {RootType::E6, 6}, {RootType::E7, 7}, {RootType::E8, 8},
    };
    return table;
}

} // namespace gbound
