#pragma once

#include <cstdint>
#include <span>
#include <type_traits>
#include <vector>

namespace gallai {

using Vertex = int;

// Largest uniformity the ranking tables support.
inline constexpr int kMaxUniformity = 8;

// Largest vertex count whose r-subsets can be ranked through the table.
inline constexpr int kMaxRankedVertices = 1 << 16;

/// Exact binomial coefficient. Saturates at UINT64_MAX on overflow.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

namespace detail {

struct BinomialTable {
    // rows[k][m] = C(m, k) for k <= kMaxUniformity, m < kMaxRankedVertices
    std::vector<std::uint64_t> rows[kMaxUniformity + 1];
};

const BinomialTable& binomial_table();

}  // namespace detail

/// Table lookup of C(m, k); k must be <= kMaxUniformity and m < kMaxRankedVertices.
inline std::uint64_t small_binomial(int m, int k) {
    return detail::binomial_table().rows[k][static_cast<std::size_t>(m)];
}

/// Colex rank of a sorted subset without validation: sum of C(s_i, i+1).
inline std::uint64_t colex_rank(std::span<const Vertex> sorted) {
    const auto& t = detail::binomial_table();
    std::uint64_t rank = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i)
        rank += t.rows[i + 1][static_cast<std::size_t>(sorted[i])];
    return rank;
}

/// Colex rank of an r-subset of {0..n-1}. The input need not be sorted.
/// Throws std::invalid_argument on wrong cardinality, duplicates or
/// out-of-range elements.
std::uint64_t rank_subset(std::span<const Vertex> subset, int n, int r);

/// Inverse of rank_subset; returns the subset in increasing order.
std::vector<Vertex> unrank_subset(std::uint64_t rank, int n, int r);

/// Writes the subset with the given colex rank into out (size r), increasing.
void unrank_into(std::uint64_t rank, int r, std::span<Vertex> out);

/// Advances a sorted subset of {0..n-1} to its colex successor.
/// Returns false (leaving the subset unspecified) after the last subset.
inline bool next_colex(std::span<Vertex> s, int n) {
    const std::size_t d = s.size();
    for (std::size_t j = 0; j < d; ++j) {
        const int limit = (j + 1 < d) ? s[j + 1] : n;
        if (s[j] + 1 < limit) {
            ++s[j];
            for (std::size_t i = 0; i < j; ++i) s[i] = static_cast<Vertex>(i);
            return true;
        }
    }
    return false;
}

/// Calls f(span<const Vertex>) for every d-subset of {0..n-1} in colex order.
/// Stops early if f returns false (when f returns bool).
template <class F>
void for_each_subset(int n, int d, F&& f) {
    if (d < 0 || d > n) return;
    std::vector<Vertex> s(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) s[static_cast<std::size_t>(i)] = i;
    do {
        if constexpr (std::is_same_v<decltype(f(std::span<const Vertex>(s))), bool>) {
            if (!f(std::span<const Vertex>(s))) return;
        } else {
            f(std::span<const Vertex>(s));
        }
    } while (next_colex(s, n));
}

/// Like for_each_subset but restricted to subsets whose largest element is top.
/// These form a contiguous colex block starting at rank C(top, d).
template <class F>
void for_each_subset_with_top(int top, int d, F&& f) {
    if (d <= 0 || top < d - 1) return;
    std::vector<Vertex> s(static_cast<std::size_t>(d));
    for (int i = 0; i + 1 < d; ++i) s[static_cast<std::size_t>(i)] = i;
    s.back() = top;
    std::span<Vertex> lower(s.data(), s.size() - 1);
    do {
        f(std::span<const Vertex>(s));
    } while (d > 1 && next_colex(lower, top));
}

}  // namespace gallai
