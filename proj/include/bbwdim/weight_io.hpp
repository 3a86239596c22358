#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "bbwdim/errors.hpp"

namespace bbwdim {

namespace detail {
inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}
}  // namespace detail

/// Parses the textual weight syntax: comma-separated integers, optionally
/// wrapped in [] or (), whitespace tolerated. "3,1,-2" and "[3, 1, -2]" both
/// yield {3, 1, -2}. Dominance is not checked here.
inline std::vector<long long> parse_entries(std::string_view text) {
    std::string_view s = detail::trim(text);
    if (s.size() >= 2 && ((s.front() == '[' && s.back() == ']') ||
                          (s.front() == '(' && s.back() == ')'))) {
        s.remove_prefix(1);
        s.remove_suffix(1);
    }
    if (detail::trim(s).empty()) throw Error("empty weight string");

    std::vector<long long> entries;
    while (true) {
        const std::size_t comma = s.find(',');
        const std::string_view token = detail::trim(s.substr(0, comma));
        long long value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            throw Error("bad weight entry '" + std::string(token) + "'");
        entries.push_back(value);
        if (comma == std::string_view::npos) break;
        s.remove_prefix(comma + 1);
    }
    return entries;
}

/// Canonical echo: bare comma-separated decimal entries.
inline std::string format_entries(const std::vector<long long>& entries) {
    std::string out;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(entries[i]);
    }
    return out;
}

}  // namespace bbwdim
