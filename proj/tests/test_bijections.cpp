#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "lextab/identities.hpp"
#include "lextab/tableaux.hpp"
#include "oracles.hpp"

using namespace lextab;

namespace {

Composition ones(int n) { return Composition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

} // namespace

TEST_CASE("set partition map examples") {
    const Tableau t{Composition{2, 2}, {{1, 4}, {2, 3}}};
    const SetPartition pi = to_set_partition(t);
    CHECK(pi.blocks == std::vector<std::vector<int>>{{1, 4}, {2, 3}});
    CHECK(pi.str() == "{1,4}/{2,3}");
    CHECK(from_set_partition(pi) == t);

    const Tableau column{Composition{1, 1, 1}, {{1}, {2}, {3}}};
    CHECK(to_set_partition(column).blocks == std::vector<std::vector<int>>{{1}, {2}, {3}});

    CHECK_THROWS_AS(to_set_partition({Composition{3, 1}, {{1, 4, 3}, {2}}}), std::domain_error);
    CHECK_THROWS_AS(from_set_partition({{{1, 2}, {2, 3}}}), std::domain_error);
}

TEST_CASE("set partition round trip over all partitions, n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        long count = 0;
        for (const auto& blocks : oracles::all_set_partitions(n)) {
            SetPartition pi{blocks};
            const Tableau t = from_set_partition(pi);
            CHECK(is_immaculate(t));
            CHECK(is_standard(t));
            // normalized form of the same partition
            SetPartition expected{blocks};
            for (auto& b : expected.blocks) std::sort(b.begin(), b.end());
            std::sort(expected.blocks.begin(), expected.blocks.end(),
                      [](const auto& a, const auto& b) { return a.front() < b.front(); });
            CHECK(to_set_partition(t) == expected);
            ++count;
        }
        CHECK(Integer(count) == bell(n));
    }
}

TEST_CASE("standard immaculate tableaux round trip through partitions, n <= 6") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& shape : compositions_of(n))
            for (const Tableau& t : enumerate_tableaux(TableauKind::Immaculate, shape, ones(n)))
                CHECK(from_set_partition(to_set_partition(t)) == t);
}

TEST_CASE("cycle map examples") {
    const Tableau t{Composition{3, 1}, {{1, 4, 3}, {2}}};
    const CycleDecomposition sigma = to_permutation(t);
    CHECK(sigma.cycles == std::vector<std::vector<int>>{{1, 4, 3}, {2}});
    CHECK(sigma.str() == "(1 4 3)(2)");
    CHECK(from_permutation(sigma) == t);

    // identity permutation -> the single-column tableau
    const CycleDecomposition id{{{1}, {2}, {3}, {4}}};
    CHECK(from_permutation(id).shape == ones(4));

    // cycles written from arbitrary starting points normalize
    const CycleDecomposition rotated{{{4, 3, 1}, {2}}};
    CHECK(from_permutation(rotated) == t);

    CHECK_THROWS_AS(to_permutation({Composition{2}, {{1, 1}}}), std::domain_error);  // not standard
    CHECK_THROWS_AS(to_permutation({Composition{1, 1}, {{2}, {1}}}), std::domain_error);
    CHECK_THROWS_AS(from_permutation({{{1, 1}}}), std::domain_error);
}

TEST_CASE("cycle round trip over all permutations, n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 1);
        long count = 0;
        do {
            const CycleDecomposition sigma{oracles::cycles_of(perm)};
            const Tableau t = from_permutation(sigma);
            CHECK(is_lexical(t));
            CHECK(is_standard(t));
            CHECK(to_permutation(t) == sigma);
            ++count;
        } while (std::next_permutation(perm.begin(), perm.end()));
        CHECK(Integer(count) == factorial(n));
    }
}

TEST_CASE("standard lexical tableaux round trip through permutations, n <= 6") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& shape : compositions_of(n))
            for (const Tableau& t : enumerate_tableaux(TableauKind::Lexical, shape, ones(n)))
                CHECK(from_permutation(to_permutation(t)) == t);
}

TEST_CASE("length-k shape sums match permutation cycle counts, n <= 6") {
    // the cycle bijection respects the row count
    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= n; ++k) {
            Integer total = 0;
            for (const auto& shape : compositions_of(n, k))
                total += count_K_by_enumeration(TableauKind::Lexical, shape, ones(n));
            CHECK(total == stirling1_unsigned(n, k));
        }
}
