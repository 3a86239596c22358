#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "bbwdim/bigint.hpp"
#include "bbwdim/errors.hpp"
#include "bbwdim/weight.hpp"
#include "bbwdim/weyl.hpp"

namespace bbwdim {

/// The standard shift weight in integer normalization: (m-1, m-2, ..., 1, 0).
inline Weight rho(std::size_t m) {
    std::vector<long long> e(m);
    for (std::size_t i = 0; i < m; ++i) e[i] = static_cast<long long>(m - 1 - i);
    return Weight(std::move(e));
}

/// Map from cohomological degree to exact dimension (dimensions are always
/// positive). Cohomology of an irreducible equivariant bundle concentrates
/// in a single degree, so the map holds at most one entry; empty means total
/// vanishing. Degrees never exceed m(m-1)/2.
struct CohomologyProfile {
    std::map<int, BigInt> groups;

    [[nodiscard]] bool vanishes() const { return groups.empty(); }

    bool operator==(const CohomologyProfile&) const = default;
};

/// Dotted Weyl action on a torus weight mu of GL_m, characteristic zero.
///
/// Let nu = mu + rho(m). A repeated entry of nu kills all cohomology.
/// Otherwise sort nu strictly decreasing; the unique nonzero degree is the
/// inversion count of the sorting permutation (its Coxeter length) and the
/// dimension there is the Weyl product of sort(nu) - rho(m).
inline CohomologyProfile bott_cohomology(const GeneralWeight& mu) {
    const std::size_t m = mu.length();
    const Weight shift = rho(m);
    std::vector<long long> nu(m);
    for (std::size_t i = 0; i < m; ++i) nu[i] = mu[i] + shift[i];

    int inversions = 0;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            if (nu[i] == nu[j]) return {};
            if (nu[i] < nu[j]) ++inversions;
        }
    }

    std::sort(nu.begin(), nu.end(), std::greater<>());
    for (std::size_t i = 0; i < m; ++i) nu[i] -= shift[i];

    CohomologyProfile profile;
    profile.groups.emplace(inversions, weyl_dim_full(Weight(std::move(nu))));
    return profile;
}

/// Full cohomology of the bundle attached to lambda on Gr(k,m), any integer
/// entries. For lambda_k >= 0 the profile is exactly {0: h0_dim(lambda, m)}.
inline CohomologyProfile grassmannian_cohomology(const Weight& lambda, std::size_t m) {
    return bott_cohomology(extend_general(lambda, m));
}

/// m0 = k - lambda_k for lambda_k < 0: every m >= m0 gives total vanishing.
/// A sufficient bound, not claimed minimal.
inline long long vanishing_threshold(const Weight& lambda) {
    if (lambda.lowest() >= 0) throw NotNegative();
    return static_cast<long long>(lambda.length()) - lambda.lowest();
}

}  // namespace bbwdim
