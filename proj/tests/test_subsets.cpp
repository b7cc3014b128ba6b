#include <doctest.h>

#include "adjkit/subsets.hpp"

using namespace adjkit;

TEST_CASE("lex_subsets enumerates in lexicographic order") {
    const auto s32 = lex_subsets(3, 2);
    REQUIRE(s32.size() == 3);
    CHECK(s32[0].elements() == std::vector<int>{1, 2});
    CHECK(s32[1].elements() == std::vector<int>{1, 3});
    CHECK(s32[2].elements() == std::vector<int>{2, 3});

    const auto empty = lex_subsets(5, 0);
    REQUIRE(empty.size() == 1);
    CHECK(empty[0].size() == 0);

    const auto s42 = lex_subsets(4, 2);
    REQUIRE(s42.size() == 6);
    CHECK(s42[3].elements() == std::vector<int>{2, 3});

    CHECK_THROWS_AS(lex_subsets(3, 4), DomainError);
    CHECK_THROWS_AS(lex_subsets(3, -1), DomainError);
}

TEST_CASE("first and last subsets bracket the enumeration") {
    for (int n = 1; n <= 6; ++n) {
        for (int k = 1; k <= n; ++k) {
            const auto all = lex_subsets(n, k);
            REQUIRE(static_cast<std::int64_t>(all.size()) == binomial(n, k));
            CHECK(all.front() == IndexSubset::first(n, k));
            std::vector<int> last(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i) last[static_cast<std::size_t>(i)] = n - k + 1 + i;
            CHECK(all.back().elements() == last);
        }
    }
}

TEST_CASE("subset ranks") {
    CHECK(subset_rank(IndexSubset(3, {1, 2})) == 0);
    CHECK(subset_rank(IndexSubset(3, {2, 3})) == 2);
    CHECK(subset_unrank(4, 2, 5).elements() == std::vector<int>{3, 4});
    CHECK_THROWS_AS(subset_unrank(4, 2, 6), DomainError);
    CHECK_THROWS_AS(subset_unrank(4, 5, 0), DomainError);
}

TEST_CASE("rank and unrank are inverse, exhaustively for n <= 8") {
    for (int n = 0; n <= 8; ++n) {
        for (int k = 0; k <= n; ++k) {
            const auto all = lex_subsets(n, k);
            for (std::int64_t r = 0; r < static_cast<std::int64_t>(all.size()); ++r) {
                CHECK(all[static_cast<std::size_t>(r)].rank() == r);
                CHECK(IndexSubset::unrank(n, k, r) == all[static_cast<std::size_t>(r)]);
            }
        }
    }
}

TEST_CASE("complementation is an involution into the complementary grade") {
    for (int n = 1; n <= 8; ++n) {
        for (int k = 0; k <= n; ++k) {
            for (const auto& s : lex_subsets(n, k)) {
                const IndexSubset c = s.complement();
                CHECK(c.size() == n - k);
                CHECK(c.complement() == s);
                // The complement appears in the complementary enumeration.
                CHECK(IndexSubset::unrank(n, n - k, c.rank()) == c);
            }
        }
    }
}

TEST_CASE("subset_sign") {
    CHECK(subset_sign(IndexSubset(3, {1}), IndexSubset(3, {1})) == 1);
    CHECK(subset_sign(IndexSubset(3, {1, 2}), IndexSubset(3, {1, 3})) == -1);
    CHECK(subset_sign(IndexSubset(3, {2, 3}), IndexSubset(3, {2, 3})) == 1);
    CHECK_THROWS_AS(subset_sign(IndexSubset(3, {1}), IndexSubset(3, {1, 2})), DomainError);
}

TEST_CASE("IndexSubset validates its invariants") {
    CHECK_THROWS_AS(IndexSubset(3, {2, 2}), DomainError);
    CHECK_THROWS_AS(IndexSubset(3, {0, 1}), DomainError);
    CHECK_THROWS_AS(IndexSubset(3, {1, 4}), DomainError);
}
