#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "bbwdim/bigint.hpp"
#include "bbwdim/bott.hpp"
#include "bbwdim/errors.hpp"
#include "bbwdim/partition.hpp"

namespace bbwdim {

/// Hard cap on brute-force enumeration. Oracles throw TooLarge instead of
/// truncating when a count would pass the budget.
inline constexpr long long kDefaultEnumBudget = 10'000'000;

/// Word over the alphabet [1, m].
struct Word {
    std::vector<int> letters;

    bool operator==(const Word&) const = default;
};

inline Word make_word(std::vector<int> letters, int m) {
    for (int x : letters)
        if (x < 1 || x > m) throw Error("word letter out of range [1, m]");
    return Word{std::move(letters)};
}

/// Semistandard tableau count by direct backtracking: rows weakly increase,
/// columns strictly increase, entries in [1, m]. Pure enumeration, no product
/// formula anywhere on this path.
inline BigInt ssyt_count(const Partition& shape, long long m,
                         long long budget = kDefaultEnumBudget) {
    if (m < static_cast<long long>(shape.row_count()))
        throw BadRange("need m >= number of rows");
    if (shape.empty()) return 1;

    const std::size_t rows = shape.row_count();
    std::vector<std::vector<int>> cells(rows);
    for (std::size_t i = 0; i < rows; ++i)
        cells[i].assign(static_cast<std::size_t>(shape[i]), 0);

    long long count = 0;
    const std::function<void(std::size_t, std::size_t)> fill =
        [&](std::size_t i, std::size_t j) {
            if (i == rows) {
                if (++count > budget)
                    throw TooLarge("semistandard tableau count passed " + std::to_string(budget));
                return;
            }
            std::size_t next_i = i;
            std::size_t next_j = j + 1;
            if (next_j == cells[i].size()) {
                next_i = i + 1;
                next_j = 0;
            }
            int lo = 1;
            if (j > 0) lo = std::max(lo, cells[i][j - 1]);       // weak along the row
            if (i > 0) lo = std::max(lo, cells[i - 1][j] + 1);   // strict down the column
            for (int v = lo; v <= m; ++v) {
                cells[i][j] = v;
                fill(next_i, next_j);
            }
        };
    fill(0, 0);
    return count;
}

/// Line bundle of degree d on projective (m-1)-space, classical statement:
/// sections C(d+m-1, m-1) for d >= 0, top-degree cohomology C(-d-1, m-1) for
/// d <= -m, nothing in between.
inline CohomologyProfile projective_cohomology(long long d, std::size_t m) {
    if (m < 2) throw BadRange("need m >= 2");
    const long long mm = static_cast<long long>(m);
    CohomologyProfile profile;
    if (d >= 0)
        profile.groups.emplace(0, binomial(d + mm - 1, mm - 1));
    else if (d <= -mm)
        profile.groups.emplace(static_cast<int>(m) - 1, binomial(-d - 1, mm - 1));
    return profile;
}

/// Number of rows of the RSK insertion shape of a word. Plain row insertion;
/// only the row lengths are kept, no recording tableau.
inline int rsk_row_count(const Word& word) {
    std::vector<std::vector<int>> rows;
    for (int x : word.letters) {
        int bumped = x;
        for (std::size_t r = 0;; ++r) {
            if (r == rows.size()) {
                rows.push_back({bumped});
                break;
            }
            auto it = std::upper_bound(rows[r].begin(), rows[r].end(), bumped);
            if (it == rows[r].end()) {
                rows[r].push_back(bumped);
                break;
            }
            std::swap(*it, bumped);
        }
    }
    return static_cast<int>(rows.size());
}

/// Number of length-d words over [1, m] whose RSK shape has at most k rows,
/// counted by exhausting all m^d words.
inline BigInt bounded_shape_word_count(long long k, long long m, long long d,
                                       long long budget = kDefaultEnumBudget) {
    if (k < 1 || m < 1 || d < 0) throw BadRange("need k >= 1, m >= 1, d >= 0");
    BigInt universe = 1;
    for (long long i = 0; i < d; ++i) {
        universe *= m;
        if (universe > budget)
            throw TooLarge("word enumeration needs " + universe.str() + " words");
    }
    if (d == 0) return 1;  // the empty word, empty shape

    Word word{std::vector<int>(static_cast<std::size_t>(d), 1)};
    const int top = static_cast<int>(m);
    long long count = 0;
    for (;;) {
        if (rsk_row_count(word) <= k) ++count;
        std::size_t pos = word.letters.size();
        while (pos > 0 && word.letters[pos - 1] == top) {
            word.letters[pos - 1] = 1;
            --pos;
        }
        if (pos == 0) break;
        ++word.letters[pos - 1];
    }
    return count;
}

}  // namespace bbwdim
