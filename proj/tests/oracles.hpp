#pragma once

// Test-only reference implementations. They follow the textual definitions
// directly and share no code with the library routines they check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace oracle {

/// Pruning on a padded digit string: pad left with ell + 1 zeros, find the
/// ell-th '0' from the right, zero every digit right of it, parse, subtract 1.
inline std::uint64_t reference_prune(std::uint64_t m, unsigned ell) {
    std::string digits;
    for (std::uint64_t v = m; v != 0; v >>= 1) digits.insert(digits.begin(), static_cast<char>('0' + (v & 1)));
    digits.insert(0, std::string(ell + 1, '0'));
    unsigned seen = 0;
    std::size_t pos = digits.size();
    for (std::size_t i = digits.size(); i-- > 0;) {
        if (digits[i] == '0' && ++seen == ell) {
            pos = i;
            break;
        }
    }
    for (std::size_t i = pos + 1; i < digits.size(); ++i) digits[i] = '0';
    const auto value = std::stoull(digits, nullptr, 2);
    return value == 0 ? 0 : value - 1;
}

/// k-digit representation via string formatting.
inline std::string format_digits(std::uint64_t m, unsigned k) {
    std::string out;
    for (unsigned i = 0; i < k; ++i) out.insert(out.begin(), static_cast<char>('0' + ((m >> i) & 1)));
    return out;
}

struct SimpleEdge {
    std::uint64_t src;
    std::uint64_t dst;
    std::int64_t weight;
};

/// Edges of the run graph straight from the prose rules: blue m-1 -> m for
/// 1 <= m <= top (optionally skipping m = 1), red P(m) -> m for 1 <= m < top.
inline std::vector<SimpleEdge> prose_edges(unsigned n, unsigned ell, std::int64_t blue, bool with_case_one_blue) {
    const std::uint64_t top = (std::uint64_t{1} << n) - 1;
    std::vector<SimpleEdge> edges;
    for (std::uint64_t m = with_case_one_blue ? 1 : 2; m <= top; ++m) edges.push_back({m - 1, m, blue});
    for (std::uint64_t m = 1; m < top; ++m) edges.push_back({reference_prune(m, ell), m, 1});
    return edges;
}

/// Every src -> dst path weight by depth-first enumeration.
inline std::vector<std::int64_t> all_path_weights(const std::vector<SimpleEdge>& edges, std::uint64_t src,
                                                  std::uint64_t dst) {
    std::vector<std::int64_t> out;
    std::function<void(std::uint64_t, std::int64_t)> walk = [&](std::uint64_t v, std::int64_t w) {
        if (v == dst) {
            out.push_back(w);
            return;
        }
        for (const auto& e : edges) {
            if (e.src == v) walk(e.dst, w + e.weight);
        }
    };
    walk(src, 0);
    return out;
}

} // namespace oracle
