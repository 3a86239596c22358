#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "bbwdim/closed_forms.hpp"
#include "bbwdim/oracle.hpp"

using bbwdim::BigInt;
using bbwdim::Partition;
using bbwdim::Word;

TEST_CASE("ssyt_count pinned values") {
    for (long long m = 1; m <= 6; ++m) CHECK(bbwdim::ssyt_count(Partition{1}, m) == m);
    CHECK(bbwdim::ssyt_count(Partition{1, 1, 1}, 3) == 1);
    CHECK(bbwdim::ssyt_count(Partition{2, 1}, 3) == 8);
    CHECK(bbwdim::ssyt_count(Partition{}, 4) == 1);
    CHECK_THROWS_AS(bbwdim::ssyt_count(Partition{1, 1}, 1), bbwdim::BadRange);
}

TEST_CASE("ssyt_count fails loudly over budget") {
    CHECK_THROWS_AS(bbwdim::ssyt_count(Partition{3, 3}, 9, 10), bbwdim::TooLarge);
    // the same shape fits a roomier budget
    CHECK(bbwdim::ssyt_count(Partition{3, 3}, 3, 100) == 10);
}

TEST_CASE("rectangular tableaux match det_power_dim") {
    for (long long k = 1; k <= 5; ++k)
        for (long long m = k; m <= 5; ++m)
            for (long long l = 0; l <= 3; ++l) {
                std::vector<long long> rect(static_cast<std::size_t>(k), l);
                CHECK(bbwdim::ssyt_count(Partition(std::move(rect)), m) ==
                      bbwdim::det_power_dim(k, m, l));
            }
}

TEST_CASE("projective_cohomology classical values") {
    bbwdim::CohomologyProfile sections;
    sections.groups.emplace(0, 10);
    CHECK(bbwdim::projective_cohomology(3, 3) == sections);

    bbwdim::CohomologyProfile top;
    top.groups.emplace(1, 2);
    CHECK(bbwdim::projective_cohomology(-3, 2) == top);

    CHECK(bbwdim::projective_cohomology(-1, 2).vanishes());
    CHECK(bbwdim::projective_cohomology(-2, 3).vanishes());
    CHECK_THROWS_AS(bbwdim::projective_cohomology(1, 1), bbwdim::BadRange);
}

TEST_CASE("projective_cohomology duality") {
    for (long long d = 0; d <= 8; ++d)
        for (std::size_t m = 2; m <= 5; ++m) {
            const auto sections = bbwdim::projective_cohomology(d, m);
            const auto dual = bbwdim::projective_cohomology(-d - static_cast<long long>(m), m);
            REQUIRE(sections.groups.count(0) == 1);
            REQUIRE(dual.groups.count(static_cast<int>(m) - 1) == 1);
            CHECK(sections.groups.at(0) == dual.groups.at(static_cast<int>(m) - 1));
        }
}

TEST_CASE("rsk_row_count pinned words") {
    CHECK(bbwdim::rsk_row_count(Word{{1, 1, 1}}) == 1);
    CHECK(bbwdim::rsk_row_count(Word{{3, 2, 1}}) == 3);
    CHECK(bbwdim::rsk_row_count(Word{{2, 1, 2}}) == 2);
    CHECK(bbwdim::rsk_row_count(Word{{}}) == 0);
}

TEST_CASE("make_word validates the alphabet") {
    CHECK_THROWS_AS(bbwdim::make_word({1, 4}, 3), bbwdim::Error);
    CHECK_THROWS_AS(bbwdim::make_word({0}, 3), bbwdim::Error);
    CHECK(bbwdim::make_word({1, 3, 2}, 3).letters == std::vector<int>{1, 3, 2});
}

TEST_CASE("bounded_shape_word_count pinned values") {
    CHECK(bbwdim::bounded_shape_word_count(2, 3, 3) == 26);
    CHECK(bbwdim::bounded_shape_word_count(1, 2, 2) == 3);
    for (long long m = 1; m <= 4; ++m)
        for (long long d = 0; d <= 4; ++d) {
            BigInt power = 1;
            for (long long i = 0; i < d; ++i) power *= m;
            CHECK(bbwdim::bounded_shape_word_count(d > 0 ? d : 1, m, d) == power);
        }
}

TEST_CASE("bounded_shape_word_count fails loudly over budget") {
    CHECK_THROWS_AS(bbwdim::bounded_shape_word_count(2, 3, 3, 26), bbwdim::TooLarge);
    CHECK(bbwdim::bounded_shape_word_count(2, 3, 3, 27) == 26);
}
