#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <utility>
#include <vector>

#include "bbwdim/bigint.hpp"
#include "bbwdim/errors.hpp"
#include "bbwdim/weight.hpp"

namespace bbwdim {

/// Integer partition: strictly positive nonincreasing parts, trailing zeros
/// trimmed on construction. The empty partition (weight 0) is allowed.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<long long> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 1; i < parts_.size(); ++i)
            if (parts_[i - 1] < parts_[i]) throw NotNonincreasing(i);
        if (!parts_.empty() && parts_.back() < 0)
            throw Error("partition parts must be nonnegative");
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    }
    Partition(std::initializer_list<long long> parts)
        : Partition(std::vector<long long>(parts)) {}

    [[nodiscard]] std::size_t row_count() const { return parts_.size(); }
    [[nodiscard]] bool empty() const { return parts_.empty(); }
    [[nodiscard]] long long operator[](std::size_t i) const { return parts_[i]; }
    [[nodiscard]] const std::vector<long long>& parts() const { return parts_; }

    /// d, the number of cells of the Young diagram.
    [[nodiscard]] long long weight() const {
        long long d = 0;
        for (long long p : parts_) d += p;
        return d;
    }

    bool operator==(const Partition&) const = default;

private:
    std::vector<long long> parts_;
};

/// Multiset of hook lengths, one per cell; stored sorted nonincreasing.
struct HookMultiset {
    std::vector<long long> hooks;

    [[nodiscard]] std::size_t size() const { return hooks.size(); }
    [[nodiscard]] BigInt product() const {
        BigInt p = 1;
        for (long long h : hooks) p *= h;
        return p;
    }

    bool operator==(const HookMultiset&) const = default;
};

/// Transposed Young diagram. An involution.
inline Partition conjugate(const Partition& p) {
    if (p.empty()) return {};
    std::vector<long long> t(static_cast<std::size_t>(p[0]), 0);
    for (std::size_t i = 0; i < p.row_count(); ++i)
        for (long long j = 0; j < p[i]; ++j) ++t[static_cast<std::size_t>(j)];
    return Partition(std::move(t));
}

/// hook(i,j) = (p_i - j) + (p'_j - i) + 1 with 1-based cell coordinates.
inline HookMultiset hook_lengths(const Partition& p) {
    const Partition conj = conjugate(p);
    std::vector<long long> hooks;
    hooks.reserve(static_cast<std::size_t>(p.weight()));
    for (std::size_t i = 0; i < p.row_count(); ++i) {
        const long long row = static_cast<long long>(i) + 1;
        for (long long j = 1; j <= p[i]; ++j)
            hooks.push_back((p[i] - j) + (conj[static_cast<std::size_t>(j - 1)] - row) + 1);
    }
    std::sort(hooks.begin(), hooks.end(), std::greater<>());
    return HookMultiset{std::move(hooks)};
}

/// Number of standard Young tableaux of shape p: d! / (product of hooks).
/// The quotient is always integral.
inline BigInt syt_count(const Partition& p) {
    return factorial(p.weight()) / hook_lengths(p).product();
}

/// All partitions of d with at most maxRows rows, in lexicographically
/// decreasing order.
inline std::vector<Partition> partitions_of(long long d, long long max_rows) {
    if (d < 0) throw BadRange("need d >= 0");
    if (max_rows < 0) throw BadRange("need maxRows >= 0");
    std::vector<Partition> out;
    std::vector<long long> stack;
    const std::function<void(long long, long long, long long)> descend =
        [&](long long remaining, long long max_part, long long rows_left) {
            if (remaining == 0) {
                out.emplace_back(stack);
                return;
            }
            if (rows_left == 0) return;
            const long long lo = (remaining + rows_left - 1) / rows_left;
            for (long long part = std::min(remaining, max_part); part >= lo; --part) {
                stack.push_back(part);
                descend(remaining - part, part, rows_left - 1);
                stack.pop_back();
            }
        };
    descend(d, d, max_rows);
    return out;
}

/// The partition as a dominant weight of the given length (zero padding).
inline Weight partition_to_weight(const Partition& p, std::size_t length) {
    if (length < p.row_count() || length == 0) throw MTooSmall(length, p.row_count());
    std::vector<long long> e = p.parts();
    e.resize(length, 0);
    return Weight(std::move(e));
}

}  // namespace bbwdim
