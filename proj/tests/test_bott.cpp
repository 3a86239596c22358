#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "bbwdim/bott.hpp"
#include "bbwdim/oracle.hpp"
#include "bbwdim/partition.hpp"
#include "bbwdim/weyl.hpp"
#include "test_support.hpp"

using bbwdim::BigInt;
using bbwdim::CohomologyProfile;
using bbwdim::GeneralWeight;
using bbwdim::Partition;
using bbwdim::Weight;

namespace {

CohomologyProfile single(int degree, BigInt dim) {
    CohomologyProfile p;
    p.groups.emplace(degree, std::move(dim));
    return p;
}

}  // namespace

TEST_CASE("rho") {
    CHECK(bbwdim::rho(1) == Weight{0});
    CHECK(bbwdim::rho(2) == Weight{1, 0});
    CHECK(bbwdim::rho(4) == Weight{3, 2, 1, 0});
}

TEST_CASE("bott_cohomology on pinned weights") {
    CHECK(bbwdim::bott_cohomology(GeneralWeight{-1, 0}).vanishes());
    CHECK(bbwdim::bott_cohomology(GeneralWeight{-2, 0}) == single(1, 1));
    CHECK(bbwdim::bott_cohomology(GeneralWeight{3, 0, 0}) == single(0, 10));
    CHECK(bbwdim::bott_cohomology(GeneralWeight{1, -2, 0}) == single(1, 6));
}

TEST_CASE("grassmannian_cohomology on pinned weights") {
    CHECK(bbwdim::grassmannian_cohomology(Weight{2, 1}, 3) == single(0, 8));
    CHECK(bbwdim::grassmannian_cohomology(Weight{-1}, 3).vanishes());
    CHECK(bbwdim::grassmannian_cohomology(Weight{1, -2}, 4).vanishes());
    CHECK_THROWS_AS(bbwdim::grassmannian_cohomology(Weight{1, 0}, 1), bbwdim::MTooSmall);
}

TEST_CASE("vanishing_threshold values and contract") {
    CHECK(bbwdim::vanishing_threshold(Weight{-1}) == 2);
    CHECK(bbwdim::vanishing_threshold(Weight{1, -2}) == 4);
    CHECK(bbwdim::vanishing_threshold(Weight{-1, -1}) == 3);
    CHECK_THROWS_AS(bbwdim::vanishing_threshold(Weight{1, 0}), bbwdim::NotNegative);

    for (std::size_t m = 3; m <= 8; ++m)
        CHECK(bbwdim::grassmannian_cohomology(Weight{-1, -1}, m).vanishes());
}

TEST_CASE("below the threshold cohomology can be nonzero") {
    // m = 3 < threshold 4: one degree-1 group of dimension 6.
    CHECK(bbwdim::grassmannian_cohomology(Weight{1, -2}, 3) == single(1, 6));
}

TEST_CASE("dominant weights concentrate in degree zero") {
    for (long long d = 0; d <= 5; ++d)
        for (const Partition& p : bbwdim::partitions_of(d, 3)) {
            const std::size_t k = std::max<std::size_t>(p.row_count(), 1);
            const Weight lambda = bbwdim::partition_to_weight(p, k);
            for (std::size_t m = k; m <= 6; ++m)
                CHECK(bbwdim::grassmannian_cohomology(lambda, m) ==
                      single(0, bbwdim::h0_dim(lambda, m)));
        }
}

TEST_CASE("rank-one weights match the classical projective profile") {
    for (long long d = -10; d <= 10; ++d)
        for (std::size_t m = 2; m <= 6; ++m) {
            std::vector<long long> mu(m, 0);
            mu[0] = d;
            CHECK(bbwdim::bott_cohomology(GeneralWeight(mu)) ==
                  bbwdim::projective_cohomology(d, m));
        }
}

TEST_CASE("profiles are concentrated with bounded degree") {
    std::mt19937 rng(90125);
    for (int trial = 0; trial < 400; ++trial) {
        const int m = 1 + static_cast<int>(rng() % 5);
        const GeneralWeight mu = test_support::random_general_weight(rng, m, -4, 4);
        const CohomologyProfile profile = bbwdim::bott_cohomology(mu);
        CHECK(profile.groups.size() <= 1);
        for (const auto& [degree, dim] : profile.groups) {
            CHECK(degree >= 0);
            CHECK(degree <= m * (m - 1) / 2);
            CHECK(dim > 0);
        }
    }
}

TEST_CASE("signed formal value matches the profile") {
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 500; ++trial) {
        const int m = 1 + static_cast<int>(rng() % 5);
        const GeneralWeight mu = test_support::random_general_weight(rng, m, -4, 4);
        const CohomologyProfile profile = bbwdim::bott_cohomology(mu);
        const BigInt formal = test_support::formal_weyl_value(mu);
        if (profile.vanishes()) {
            CHECK(formal == 0);
        } else {
            const auto& [degree, dim] = *profile.groups.begin();
            CHECK(formal == (degree % 2 == 0 ? dim : -dim));
        }
    }
}
