#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "bbwdim/bigint.hpp"
#include "bbwdim/errors.hpp"
#include "bbwdim/weight.hpp"

namespace bbwdim {

/// Weyl dimension product for a dominant weight mu of GL_m:
///
///   prod_{1 <= i < j <= m} (mu_i - mu_j + j - i) / (j - i)
///
/// Numerator and denominator accumulate as exact integers with a single
/// exact division at the end; per-factor quotients need not be integral but
/// the full one always is. Entries may be negative: the product depends only
/// on differences, so it is invariant under twisting.
inline BigInt weyl_dim_full(const Weight& mu) {
    const std::vector<long long>& e = mu.entries();
    const std::size_t m = e.size();
    BigInt num = 1;
    BigInt den = 1;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            num *= e[i] - e[j] + static_cast<long long>(j - i);
            den *= static_cast<long long>(j - i);
        }
    }
    return num / den;
}

/// Checked entry point for raw sequences; throws NotDominant if the entries
/// increase anywhere.
inline BigInt weyl_dim_full(const std::vector<long long>& mu) {
    for (std::size_t i = 1; i < mu.size(); ++i)
        if (mu[i - 1] < mu[i]) throw NotDominant(i);
    return weyl_dim_full(Weight(mu));
}

/// dim H^0 of the bundle attached to lambda (lambda_k >= 0) on Gr(k,m):
/// the Weyl product of (lambda_1, ..., lambda_k, 0, ..., 0) as a GL_m weight.
inline BigInt h0_dim(const Weight& lambda, std::size_t m) {
    return weyl_dim_full(extend_with_zeros(lambda, m));
}

/// Rows (m, dim H^0) for m = k, ..., mMax: the stable dimension sequence of
/// the section modules as the ambient rank grows.
using DimensionTable = std::vector<std::pair<std::size_t, BigInt>>;

inline DimensionTable dimension_table(const Weight& lambda, std::size_t m_max) {
    if (lambda.lowest() < 0) throw NegativeLowestEntry();
    if (m_max < lambda.length()) throw MTooSmall(m_max, lambda.length());
    DimensionTable table;
    table.reserve(m_max - lambda.length() + 1);
    for (std::size_t m = lambda.length(); m <= m_max; ++m)
        table.emplace_back(m, h0_dim(lambda, m));
    return table;
}

}  // namespace bbwdim
