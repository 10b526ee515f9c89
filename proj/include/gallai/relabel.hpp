#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gallai/colouring.hpp"

namespace gallai {

/// Throws std::invalid_argument unless perm is a permutation of {0..n-1}.
void check_permutation(std::span<const Vertex> perm, int n);

/// The colouring c' with c'(perm(e)) = c(e).
EdgeColouring relabel_vertices(const EdgeColouring& c, std::span<const Vertex> perm);

/// The colouring with colour i renamed perm[i]; perm has k+1 entries and
/// perm[1..k] is a permutation of {1..k}.
EdgeColouring relabel_colours(const EdgeColouring& c, std::span<const Colour> perm);

struct IsomorphismCheck {
    bool pass = false;
    std::optional<std::vector<Vertex>> counterexample;  // first edge e with c(map(e)) != c(e) mod k + 1
};

/// Whether mapping every edge through vertex_map sends colour class m onto
/// class (m mod k) + 1.
IsomorphismCheck classes_isomorphic_under(const EdgeColouring& c, std::span<const Vertex> vertex_map);

}  // namespace gallai
