#pragma once

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "bbwdim/bigint.hpp"
#include "bbwdim/bott.hpp"
#include "bbwdim/closed_forms.hpp"
#include "bbwdim/oracle.hpp"
#include "bbwdim/partition.hpp"
#include "bbwdim/weyl.hpp"

namespace bbwdim {

/// Outcome of one verification grid. Cases are visited in a fixed order, so
/// reports are deterministic; the first counterexample is kept verbatim.
struct VerifyReport {
    std::string suite;
    long long cases = 0;
    long long failures = 0;
    std::string first_counterexample;

    [[nodiscard]] bool ok() const { return failures == 0; }
};

namespace detail {
inline void record(VerifyReport& report, bool pass, const std::string& detail_text) {
    ++report.cases;
    if (pass) return;
    ++report.failures;
    if (report.first_counterexample.empty()) report.first_counterexample = detail_text;
}
}  // namespace detail

/// Determinant-power symmetry grid: both routes agree for every
/// 1 <= k <= m <= kMax, 1 <= l <= lMax.
inline VerifyReport verify_symmetry(long long k_max = 10, long long l_max = 8) {
    VerifyReport report;
    report.suite = "symmetry";
    for (long long k = 1; k <= k_max; ++k)
        for (long long m = k; m <= k_max; ++m)
            for (long long l = 1; l <= l_max; ++l) {
                const SymmetryCheck check = symmetry_check(k, m, l);
                std::ostringstream os;
                os << "k=" << k << " m=" << m << " l=" << l << ": lhs=" << check.lhs
                   << " rhs=" << check.rhs;
                detail::record(report, check.equal, os.str());
            }
    return report;
}

/// Weyl product against tableau enumeration: every partition with
/// |lambda| <= sizeMax and at most 4 rows, every m with rows <= m <= sizeMax.
inline VerifyReport verify_weyl_oracle(long long size_max = 6,
                                       long long budget = kDefaultEnumBudget) {
    VerifyReport report;
    report.suite = "weyl-oracle";
    if (size_max < 1) throw BadRange("need sizeMax >= 1");
    for (long long d = 0; d <= size_max; ++d)
        for (const Partition& p : partitions_of(d, 4)) {
            const long long m_lo = std::max<long long>(1, static_cast<long long>(p.row_count()));
            for (long long m = m_lo; m <= size_max; ++m) {
                const BigInt formula =
                    weyl_dim_full(partition_to_weight(p, static_cast<std::size_t>(m)));
                const BigInt enumerated = ssyt_count(p, m, budget);
                std::ostringstream os;
                os << "lambda=(";
                for (std::size_t i = 0; i < p.row_count(); ++i)
                    os << (i ? "," : "") << p[i];
                os << ") m=" << m << ": weyl=" << formula << " ssyt=" << enumerated;
                detail::record(report, formula == enumerated, os.str());
            }
        }
    return report;
}

/// Rank-one sanity: the dotted-action computation against the classical
/// projective-space profile for every -dMax <= d <= dMax, 2 <= m <= mMax.
inline VerifyReport verify_bott_oracle(long long d_max = 10, long long m_max = 6) {
    VerifyReport report;
    report.suite = "bott-oracle";
    for (long long d = -d_max; d <= d_max; ++d)
        for (long long m = 2; m <= m_max; ++m) {
            std::vector<long long> mu(static_cast<std::size_t>(m), 0);
            mu[0] = d;
            const CohomologyProfile computed = bott_cohomology(GeneralWeight(mu));
            const CohomologyProfile classical =
                projective_cohomology(d, static_cast<std::size_t>(m));
            std::ostringstream os;
            os << "d=" << d << " m=" << m;
            detail::record(report, computed == classical, os.str());
        }
    return report;
}

/// Tensor-power sums: the m^d identity for d <= k <= dMax, k <= m <= mMax,
/// then agreement with exhaustive word counting wherever the word universe
/// stays within min(budget, 10^6).
inline VerifyReport verify_schur_weyl(long long d_max = 5, long long m_max = 8,
                                      long long budget = kDefaultEnumBudget) {
    VerifyReport report;
    report.suite = "schur-weyl";
    for (long long k = 1; k <= d_max; ++k)
        for (long long m = k; m <= m_max; ++m)
            for (long long d = 0; d <= k; ++d) {
                BigInt power = 1;
                for (long long i = 0; i < d; ++i) power *= m;
                const BigInt summed = tensor_det_dim(k, m, d, 0);
                std::ostringstream os;
                os << "k=" << k << " m=" << m << " d=" << d << ": sum=" << summed
                   << " m^d=" << power;
                detail::record(report, summed == power, os.str());
            }

    const long long word_cap = std::min<long long>(budget, 1'000'000);
    for (long long k = 1; k <= d_max; ++k)
        for (long long m = k; m <= m_max; ++m)
            for (long long d = 0; d <= d_max + 2; ++d) {
                BigInt universe = 1;
                for (long long i = 0; i < d; ++i) universe *= m;
                if (universe > word_cap) break;
                const BigInt summed = tensor_det_dim(k, m, d, 0);
                const BigInt counted = bounded_shape_word_count(k, m, d, word_cap);
                std::ostringstream os;
                os << "k=" << k << " m=" << m << " d=" << d << ": sum=" << summed
                   << " words=" << counted;
                detail::record(report, summed == counted, os.str());
            }
    return report;
}

/// Pluecker relation dimensions: the pinned quadric counts, no linear
/// relations anywhere, nonnegativity over the whole grid.
inline VerifyReport verify_pluecker(long long k_max = 7, long long l_max = 4) {
    VerifyReport report;
    report.suite = "pluecker";
    detail::record(report, pluecker_relations_dim(2, 4, 2) == 1, "k=2 m=4 l=2 expected 1");
    detail::record(report, pluecker_relations_dim(2, 5, 2) == 5, "k=2 m=5 l=2 expected 5");
    for (long long k = 2; k < k_max; ++k)
        for (long long m = k + 1; m <= k_max; ++m) {
            detail::record(report, pluecker_relations_dim(k, m, 1) == 0,
                           "k=" + std::to_string(k) + " m=" + std::to_string(m) +
                               " l=1 expected 0");
            for (long long l = 1; l <= l_max; ++l) {
                const BigInt dim = pluecker_relations_dim(k, m, l);
                std::ostringstream os;
                os << "k=" << k << " m=" << m << " l=" << l << ": negative value " << dim;
                detail::record(report, dim >= 0, os.str());
            }
        }
    return report;
}

}  // namespace bbwdim
