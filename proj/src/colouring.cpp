#include "gallai/colouring.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace gallai {

int resolve_workers(int requested) {
    if (requested >= 1) return requested;
    if (const char* env = std::getenv("GALLAI_WORKERS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void EdgeColouring::check_shape(int n, int r, int k) {
    if (r < 2 || r > kMaxUniformity)
        throw std::invalid_argument("uniformity r=" + std::to_string(r) + " outside 2.." +
                                    std::to_string(kMaxUniformity));
    if (n < r)
        throw std::invalid_argument("n=" + std::to_string(n) + " is smaller than r=" +
                                    std::to_string(r));
    if (n > kMaxRankedVertices) throw std::invalid_argument("n=" + std::to_string(n) + " too large");
    if (k < 1 || k > kMaxColours)
        throw std::invalid_argument("palette size k=" + std::to_string(k) + " outside 1.." +
                                    std::to_string(kMaxColours));
    if (binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(r)) > kMaxEdges)
        throw std::invalid_argument("C(" + std::to_string(n) + "," + std::to_string(r) +
                                    ") r-sets exceed the materialisation limit");
}

EdgeColouring::EdgeColouring(int n, int r, int k, std::vector<std::uint8_t> colours)
    : n_(n), r_(r), k_(k), colours_(std::move(colours)) {
    check_shape(n, r, k);
    const auto expected = binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(r));
    if (colours_.size() != expected)
        throw std::invalid_argument("colour array has " + std::to_string(colours_.size()) +
                                    " entries, expected " + std::to_string(expected));
    std::vector<bool> used(static_cast<std::size_t>(k) + 1, false);
    for (std::size_t i = 0; i < colours_.size(); ++i) {
        const int c = colours_[i];
        if (c < 1 || c > k)
            throw std::invalid_argument("r-set " + format_set(unrank_subset(i, n, r)) +
                                        " has colour " + std::to_string(c) + " outside 1.." +
                                        std::to_string(k));
        used[static_cast<std::size_t>(c)] = true;
    }
    for (int c = 1; c <= k; ++c)
        if (!used[static_cast<std::size_t>(c)])
            throw std::invalid_argument("colour " + std::to_string(c) +
                                        " is never used (palette must be tight)");
}

Colour EdgeColouring::colour_of(std::span<const Vertex> edge) const {
    return colours_[rank_subset(edge, n_, r_)];
}

std::vector<std::uint64_t> EdgeColouring::class_sizes() const {
    std::vector<std::uint64_t> sizes(static_cast<std::size_t>(k_) + 1, 0);
    for (auto c : colours_) ++sizes[c];
    return sizes;
}

Hypergraph::Hypergraph(int n, int r, std::vector<std::uint64_t> edge_ranks)
    : n_(n), r_(r), ranks_(std::move(edge_ranks)) {
    if (r < 1 || r > kMaxUniformity)
        throw std::invalid_argument("uniformity r=" + std::to_string(r) + " unsupported");
    if (n < 0 || n > kMaxRankedVertices)
        throw std::invalid_argument("vertex count " + std::to_string(n) + " unsupported");
    const auto total = binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(r));
    std::sort(ranks_.begin(), ranks_.end());
    for (std::size_t i = 0; i < ranks_.size(); ++i) {
        if (ranks_[i] >= total) throw std::invalid_argument("edge rank out of range");
        if (i > 0 && ranks_[i] == ranks_[i - 1])
            throw std::invalid_argument("duplicate edge " + format_set(unrank_subset(ranks_[i], n, r)));
    }
}

Hypergraph Hypergraph::from_edges(int n, int r, const std::vector<std::vector<Vertex>>& edges) {
    std::vector<std::uint64_t> ranks;
    ranks.reserve(edges.size());
    for (const auto& e : edges) ranks.push_back(rank_subset(e, n, r));
    return Hypergraph(n, r, std::move(ranks));
}

std::vector<Vertex> Hypergraph::edge(std::size_t i) const {
    std::vector<Vertex> out(static_cast<std::size_t>(r_));
    unrank_into(ranks_.at(i), r_, out);
    return out;
}

std::vector<std::vector<Vertex>> Hypergraph::edges() const {
    std::vector<std::vector<Vertex>> out;
    out.reserve(ranks_.size());
    for (std::size_t i = 0; i < ranks_.size(); ++i) out.push_back(edge(i));
    return out;
}

bool Hypergraph::contains(std::span<const Vertex> edge) const {
    return std::binary_search(ranks_.begin(), ranks_.end(), rank_subset(edge, n_, r_));
}

Hypergraph colour_class(const EdgeColouring& c, Colour i) {
    if (i < 1 || i > c.k())
        throw std::invalid_argument("colour " + std::to_string(i) + " outside palette 1.." +
                                    std::to_string(c.k()));
    std::vector<std::uint64_t> ranks;
    const auto colours = c.colours();
    for (std::uint64_t rank = 0; rank < colours.size(); ++rank)
        if (colours[rank] == i) ranks.push_back(rank);
    return Hypergraph(c.n(), c.r(), std::move(ranks));
}

std::string format_set(std::span<const Vertex> s) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << '}';
    return os.str();
}

}  // namespace gallai
