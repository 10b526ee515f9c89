#include "gallai/relabel.hpp"

#include <algorithm>
#include <stdexcept>

namespace gallai {

void check_permutation(std::span<const Vertex> perm, int n) {
    if (static_cast<int>(perm.size()) != n)
        throw std::invalid_argument("vertex map has " + std::to_string(perm.size()) + " entries, expected " +
                                    std::to_string(n));
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (Vertex v : perm) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("vertex map is not a permutation");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

EdgeColouring relabel_vertices(const EdgeColouring& c, std::span<const Vertex> perm) {
    check_permutation(perm, c.n());
    std::vector<Vertex> inverse(perm.size());
    for (std::size_t v = 0; v < perm.size(); ++v) inverse[static_cast<std::size_t>(perm[v])] = static_cast<Vertex>(v);
    return EdgeColouring::from_function(c.n(), c.r(), c.k(), [&](std::span<const Vertex> e) {
        Vertex buf[kMaxUniformity];
        for (std::size_t i = 0; i < e.size(); ++i) buf[i] = inverse[static_cast<std::size_t>(e[i])];
        std::sort(buf, buf + e.size());
        return c.colour_of_sorted(std::span<const Vertex>(buf, e.size()));
    });
}

EdgeColouring relabel_colours(const EdgeColouring& c, std::span<const Colour> perm) {
    if (static_cast<int>(perm.size()) != c.k() + 1) throw std::invalid_argument("colour map needs k+1 entries");
    std::vector<bool> seen(perm.size(), false);
    for (std::size_t i = 1; i < perm.size(); ++i) {
        const Colour p = perm[i];
        if (p < 1 || p > c.k() || seen[static_cast<std::size_t>(p)])
            throw std::invalid_argument("colour map is not a permutation");
        seen[static_cast<std::size_t>(p)] = true;
    }
    std::vector<std::uint8_t> out(c.colours().begin(), c.colours().end());
    for (auto& col : out) col = static_cast<std::uint8_t>(perm[col]);
    return EdgeColouring(c.n(), c.r(), c.k(), std::move(out));
}

IsomorphismCheck classes_isomorphic_under(const EdgeColouring& c, std::span<const Vertex> vertex_map) {
    check_permutation(vertex_map, c.n());
    IsomorphismCheck res;
    res.pass = true;
    std::vector<Vertex> image(static_cast<std::size_t>(c.r()));
    for_each_subset(c.n(), c.r(), [&](std::span<const Vertex> e) {
        for (std::size_t i = 0; i < e.size(); ++i) image[i] = vertex_map[static_cast<std::size_t>(e[i])];
        std::sort(image.begin(), image.end());
        const Colour from = c.colour_of_sorted(e);
        if (c.colour_of_sorted(image) != from % c.k() + 1) {
            res.pass = false;
            res.counterexample = std::vector<Vertex>(e.begin(), e.end());
            return false;
        }
        return true;
    });
    return res;
}

}  // namespace gallai
