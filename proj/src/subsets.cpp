#include "gallai/subsets.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace gallai {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
    return (a > kSaturated - b) ? kSaturated : a + b;
}

}  // namespace

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > kSaturated) return kSaturated;
    }
    return static_cast<std::uint64_t>(acc);
}

namespace detail {

const BinomialTable& binomial_table() {
    static const BinomialTable table = [] {
        BinomialTable t;
        const auto size = static_cast<std::size_t>(kMaxRankedVertices);
        for (auto& row : t.rows) row.assign(size, 0);
        for (std::size_t m = 0; m < size; ++m) t.rows[0][m] = 1;
        // Pascal: C(m, k) = C(m-1, k) + C(m-1, k-1)
        for (int k = 1; k <= kMaxUniformity; ++k) {
            auto& row = t.rows[k];
            const auto& prev = t.rows[k - 1];
            for (std::size_t m = 1; m < size; ++m) row[m] = saturating_add(row[m - 1], prev[m - 1]);
        }
        return t;
    }();
    return table;
}

}  // namespace detail

std::uint64_t rank_subset(std::span<const Vertex> subset, int n, int r) {
    if (r < 1 || r > kMaxUniformity)
        throw std::invalid_argument("uniformity " + std::to_string(r) + " outside 1.." +
                                    std::to_string(kMaxUniformity));
    if (n > kMaxRankedVertices) throw std::invalid_argument("vertex count too large to rank");
    if (static_cast<int>(subset.size()) != r)
        throw std::invalid_argument("subset has " + std::to_string(subset.size()) +
                                    " elements, expected " + std::to_string(r));
    std::vector<Vertex> sorted(subset.begin(), subset.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 0 || sorted[i] >= n)
            throw std::invalid_argument("element " + std::to_string(sorted[i]) + " outside 0.." +
                                        std::to_string(n - 1));
        if (i > 0 && sorted[i] == sorted[i - 1])
            throw std::invalid_argument("repeated element " + std::to_string(sorted[i]));
    }
    return colex_rank(sorted);
}

void unrank_into(std::uint64_t rank, int r, std::span<Vertex> out) {
    const auto& t = detail::binomial_table();
    for (int i = r; i >= 1; --i) {
        const auto& row = t.rows[i];
        // largest c with C(c, i) <= rank
        auto it = std::upper_bound(row.begin(), row.end(), rank);
        const auto c = static_cast<Vertex>(it - row.begin()) - 1;
        out[static_cast<std::size_t>(i - 1)] = c;
        rank -= row[static_cast<std::size_t>(c)];
    }
}

std::vector<Vertex> unrank_subset(std::uint64_t rank, int n, int r) {
    if (r < 1 || r > kMaxUniformity)
        throw std::invalid_argument("uniformity " + std::to_string(r) + " outside 1.." +
                                    std::to_string(kMaxUniformity));
    if (n < r || n > kMaxRankedVertices) throw std::invalid_argument("bad vertex count for unranking");
    if (rank >= binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(r)))
        throw std::invalid_argument("rank " + std::to_string(rank) + " out of range");
    std::vector<Vertex> out(static_cast<std::size_t>(r));
    unrank_into(rank, r, out);
    return out;
}

}  // namespace gallai
