#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "lextab/compositions.hpp"
#include "lextab/words.hpp"
#include "oracles.hpp"

using namespace lextab;

TEST_CASE("cyclic shifts") {
    CHECK(cyclic_shifts({1, 2, 3}) == std::vector<Word>{{2, 3, 1}, {3, 1, 2}, {1, 2, 3}});
    CHECK(cyclic_shifts({2, 2}) == std::vector<Word>{{2, 2}, {2, 2}});
    CHECK(cyclic_shifts({1, 4, 3}) == std::vector<Word>{{4, 3, 1}, {3, 1, 4}, {1, 4, 3}});
    CHECK_THROWS_AS(cyclic_shifts({}), std::domain_error);
}

TEST_CASE("least rotation examples") {
    CHECK(least_rotation({2, 1, 3}) == Word{1, 3, 2});
    CHECK(least_rotation({1, 2, 1, 2}) == Word{1, 2, 1, 2});
    CHECK(least_rotation({1, 4, 3}) == Word{1, 4, 3});
    CHECK_THROWS_AS(least_rotation({}), std::domain_error);
}

TEST_CASE("is_necklace examples") {
    CHECK(is_necklace({1, 4, 3}));
    CHECK_FALSE(is_necklace({2, 1, 3}));
    CHECK(is_necklace({1, 1, 2}));
    CHECK(is_necklace({1, 2, 1, 2}));  // equal to a nontrivial rotation of itself
}

TEST_CASE("linear least rotation matches the quadratic oracle") {
    for (int len = 1; len <= 8; ++len)
        oracles::for_each_word(3, len, [&](const Word& w) {
            CHECK(least_rotation(w) == oracles::least_rotation_quadratic(w));
        });
}

TEST_CASE("necklace iff weakly minimal among all shifts") {
    for (int len = 1; len <= 8; ++len)
        oracles::for_each_word(3, len, [&](const Word& w) {
            bool minimal = true;
            for (const Word& v : cyclic_shifts(w))
                if (v < w) minimal = false;
            CHECK(is_necklace(w) == minimal);
        });
}

TEST_CASE("weakly increasing words are necklaces") {
    for (int len = 1; len <= 6; ++len)
        oracles::for_each_word(4, len, [&](const Word& w) {
            if (std::is_sorted(w.begin(), w.end())) CHECK(is_necklace(w));
        });
}

TEST_CASE("necklace multiset count examples") {
    CHECK(necklace_count_multiset({1, 2}) == 1);
    CHECK(necklace_count_multiset({4}) == 1);
    CHECK(necklace_count_multiset({1, 1, 1, 1}) == 6);
    CHECK_THROWS_AS(necklace_count_multiset({1, 0}), std::domain_error);
}

TEST_CASE("necklace multiset count matches brute force up to size 9") {
    for (int n = 1; n <= 9; ++n)
        for (const Composition& spec : compositions_of(n))
            CHECK(necklace_count_multiset(spec.parts()) == oracles::brute_necklace_count(spec.parts()));
}

TEST_CASE("binary necklace counts") {
    CHECK(binary_necklace_T(3, 1) == 1);
    CHECK(binary_necklace_T(4, 2) == 2);
    CHECK(binary_necklace_T(6, 3) == 4);
    CHECK(binary_necklace_T(5, 0) == 1);
    CHECK(binary_necklace_T(5, 5) == 1);
    CHECK_THROWS_AS(binary_necklace_T(4, 5), std::domain_error);
    CHECK_THROWS_AS(binary_necklace_T(4, -1), std::domain_error);
}

TEST_CASE("T(n,k) symmetry and agreement with the multiset count") {
    for (int n = 1; n <= 14; ++n)
        for (int k = 0; k <= n; ++k) {
            CHECK(binary_necklace_T(n, k) == binary_necklace_T(n, n - k));
            if (k > 0 && k < n)
                CHECK(binary_necklace_T(n, k) == necklace_count_multiset({n - k, k}));
        }
}
