#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "gbound/root_data.hpp"

using namespace gbound;

namespace {
const RootSystem kA1{RootType::A, 1};
const RootSystem kA2{RootType::A, 2};
const RootSystem kE6{RootType::E6, 6};
const RootSystem kE8{RootType::E8, 8};
const RootSystem kF4{RootType::F4, 4};
const RootSystem kG2{RootType::G2, 2};
} // namespace

TEST_CASE("degree tables") {
    CHECK(degrees(kE8) == std::vector<int>{2, 8, 12, 14, 18, 20, 24, 30});
    CHECK(degrees(kG2) == std::vector<int>{2, 6});
    CHECK(degrees(kA1) == std::vector<int>{2});
    CHECK(degrees(kE6) == std::vector<int>{2, 5, 6, 8, 9, 12});
    CHECK(degrees(RootSystem{RootType::B, 3}) == std::vector<int>{2, 4, 6});
    CHECK(degrees(RootSystem{RootType::D, 4}) == std::vector<int>{2, 4, 4, 6});
    CHECK(degrees(RootSystem{RootType::GL, 4}) == std::vector<int>{1, 2, 3, 4});
    // D_3 = A_3
    CHECK(degrees(RootSystem{RootType::D, 3}) == degrees(RootSystem{RootType::A, 3}));
    CHECK_THROWS_AS(degrees(RootSystem{RootType::D, 2}), std::invalid_argument);
    CHECK_THROWS_AS(degrees(RootSystem{RootType::B, 1}), std::invalid_argument);
    CHECK_THROWS_AS(degrees(RootSystem{RootType::E8, 7}), std::invalid_argument);
}

TEST_CASE("weyl orders") {
    CHECK(weyl_order(kE8).to_string() == "2^14·3^5·5^2·7");
    CHECK(weyl_order(kA1).value() == 2);
    CHECK(weyl_order(kF4).value() == 1152);
    CHECK_THROWS_AS(weyl_order(RootSystem{RootType::GL, 3}), std::domain_error);
    CHECK(factorial_order(3).value() == 6);
}

TEST_CASE("a(t) counts degrees divisible by t") {
    CHECK(a_t(kE8, 10) == 2);
    CHECK(a_t(kE8, 16) == 0);
    for (const RootSystem& root : catalogue())
        CHECK(a_t(root, 1) == root.rank);
}

TEST_CASE("parity counts") {
    CHECK(parity_counts(kE8) == std::pair<int, int>{8, 0});
    CHECK(parity_counts(kE6) == std::pair<int, int>{4, 2});
    CHECK(parity_counts(kA2) == std::pair<int, int>{1, 1});
}

TEST_CASE("regular numbers via the degree congruence test") {
    CHECK(regular_number(kG2, 6));
    CHECK(!regular_number(kE8, 7));
    CHECK(regular_number(kE8, 30));
}

TEST_CASE("positive root counts") {
    CHECK(positive_root_count(kE8) == 120);
    CHECK(positive_root_count(kA1) == 1);
    CHECK(positive_root_count(kG2) == 6);
    CHECK_THROWS_AS(positive_root_count(RootSystem{RootType::GL, 2}), std::domain_error);
}

TEST_CASE("catalogue-wide structural identities") {
    for (const RootSystem& root : catalogue()) {
        CAPTURE(root_to_string(root));
        std::vector<int> d = degrees(root);
        const int r = root.rank;
        const int h = coxeter_number(root);
        REQUIRE(static_cast<int>(d.size()) == r);
        CHECK(std::is_sorted(d.begin(), d.end()));

        // degree symmetry d_i + d_{r+1-i} = h + 2
        for (int i = 0; i < r; ++i)
            CHECK(d[i] + d[r - 1 - i] == h + 2);

        // prod d_i = |W|
        BigInt product = 1;
        for (int di : d)
            product *= di;
        CHECK(product == weyl_order(root).value());

        // sum (2 d_i - 1) = dim G = rank + 2 N
        int dim = 0;
        for (int di : d)
            dim += 2 * di - 1;
        CHECK(dim == r + 2 * positive_root_count(root));

        // j < h prime to h implies j + 1 is a degree
        for (int j = 1; j < h; ++j)
            if (std::gcd(j, h) == 1)
                CHECK(std::count(d.begin(), d.end(), j + 1) >= 1);
    }
}

TEST_CASE("root grammar round-trips") {
    for (const char* text : {"A:1", "B:4", "C:2", "D:5", "E6", "E7", "E8", "F4", "G2", "GL:3"})
        CHECK(root_to_string(parse_root(text)) == text);
    CHECK_THROWS_AS(parse_root("H:4"), std::invalid_argument);
    CHECK_THROWS_AS(parse_root("A:0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_root("D:2"), std::invalid_argument);
}
