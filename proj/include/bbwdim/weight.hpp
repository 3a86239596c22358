#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "bbwdim/errors.hpp"

namespace bbwdim {

/// Dominant integer weight of GL_k: a nonincreasing sequence of length k >= 1.
/// Entries may be negative. Immutable after construction.
class Weight {
public:
    explicit Weight(std::vector<long long> entries) : entries_(std::move(entries)) {
        if (entries_.empty()) throw Error("weight needs at least one entry");
        for (std::size_t i = 1; i < entries_.size(); ++i)
            if (entries_[i - 1] < entries_[i]) throw NotNonincreasing(i);
    }
    Weight(std::initializer_list<long long> entries)
        : Weight(std::vector<long long>(entries)) {}

    [[nodiscard]] std::size_t length() const { return entries_.size(); }
    [[nodiscard]] long long operator[](std::size_t i) const { return entries_[i]; }
    [[nodiscard]] const std::vector<long long>& entries() const { return entries_; }
    [[nodiscard]] long long lowest() const { return entries_.back(); }

    bool operator==(const Weight&) const = default;

private:
    std::vector<long long> entries_;
};

/// Integer sequence of fixed length with no monotonicity requirement.
/// Exists solely as input to the Bott computation; everything else takes Weight.
class GeneralWeight {
public:
    explicit GeneralWeight(std::vector<long long> entries) : entries_(std::move(entries)) {
        if (entries_.empty()) throw Error("weight needs at least one entry");
    }
    GeneralWeight(std::initializer_list<long long> entries)
        : GeneralWeight(std::vector<long long>(entries)) {}

    [[nodiscard]] std::size_t length() const { return entries_.size(); }
    [[nodiscard]] long long operator[](std::size_t i) const { return entries_[i]; }
    [[nodiscard]] const std::vector<long long>& entries() const { return entries_; }

    bool operator==(const GeneralWeight&) const = default;

private:
    std::vector<long long> entries_;
};

/// Validating factory; throws NotNonincreasing at the first order violation.
inline Weight make_weight(std::vector<long long> raw) { return Weight(std::move(raw)); }

/// (lambda_1, ..., lambda_k, 0, ..., 0) of length m. Requires lambda_k >= 0,
/// which keeps the result dominant; the Bott path uses extend_general instead.
inline Weight extend_with_zeros(const Weight& w, std::size_t m) {
    if (m < w.length()) throw MTooSmall(m, w.length());
    if (w.lowest() < 0) throw NegativeLowestEntry();
    std::vector<long long> e = w.entries();
    e.resize(m, 0);
    return Weight(std::move(e));
}

/// Zero-padded extension with no dominance check. When lambda_k < 0 the
/// result is not nonincreasing, hence the GeneralWeight flavor.
inline GeneralWeight extend_general(const Weight& w, std::size_t m) {
    if (m < w.length()) throw MTooSmall(m, w.length());
    std::vector<long long> e = w.entries();
    e.resize(m, 0);
    return GeneralWeight(std::move(e));
}

/// Adds r to every entry: tensoring with the r-th determinant power.
inline Weight twist(const Weight& w, long long r) {
    std::vector<long long> e = w.entries();
    for (long long& x : e) x += r;
    return Weight(std::move(e));
}

}  // namespace bbwdim
