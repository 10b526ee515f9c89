#pragma once

#include <array>
#include <string>
#include <vector>

#include "gallai/colouring.hpp"

namespace gallai {

/// Classes 1..k-1 are the tight cycles {x, x+a, x+2a} (mod n) of step a = 1..k-1;
/// class k is everything else. Throws std::invalid_argument if n is not an odd
/// prime, two step classes overlap, or class k would be empty.
EdgeColouring pointwise_cycles_colouring(int k, int n);

/// Sorted triple of circular distances of a 3-set of Z_m.
struct DistanceType {
    std::array<int, 3> d{};

    bool special() const { return d[0] == d[1] || d[1] == d[2]; }
    /// Entrywise multiplication mod m, each entry folded to min(x, m-x), re-sorted.
    DistanceType times(int s, int m = 17) const;
    std::string to_string() const;  // "112"-style digits when every entry < 10
    friend auto operator<=>(const DistanceType&, const DistanceType&) = default;
};

/// Throws std::invalid_argument unless the edge is 3 distinct vertices of Z_m.
DistanceType type_of(std::span<const Vertex> edge, int m = 17);

/// Every type realised by some 3-set of Z_m, sorted.
std::vector<DistanceType> realisable_types(int m = 17);

/// The four type sets C, 2C, 4C, 8C with C = {112, 336, 145, 235, 347, 458}.
std::array<std::vector<DistanceType>, 4> k17_type_classes();

struct TypePartitionReport {
    bool partition = false;       // disjoint, and covering all realisable types
    std::size_t realisable = 0;   // 24
    std::size_t special = 0;      // 8
    std::array<std::size_t, 4> special_per_class{};
    std::array<std::size_t, 4> size_per_class{};
};

TypePartitionReport check_k17_types();

/// The 4-colouring of K_17^(3): colour m on edges whose type lies in 2^(m-1) C.
/// Throws std::logic_error if the type sets fail to partition the types.
EdgeColouring k17_colouring();

/// Vertex v_{ix} of the n^2-vertex blow-up is i*n + x.
inline Vertex blowup_vertex(int n, int block, int inner) { return block * n + inner; }

/// Blocks all distinct -> c on blocks; otherwise inner indices all distinct ->
/// c on inner indices; otherwise colour k+1. With verify_input the input must
/// be strongly connected with no multicoloured 4-set (std::invalid_argument).
EdgeColouring strong_blowup(const EdgeColouring& c, bool verify_input = true, int workers = 1);

/// Blocks all distinct -> c on blocks; all in one block -> c on inner
/// indices; otherwise colour k+1. With verify_input the input must be a
/// covering colouring with no tricoloured 4-set.
EdgeColouring covering_blowup(const EdgeColouring& c, bool verify_input = true, int workers = 1);

/// 4-edge coloured palette[0] when its vertex sum is even and palette[1]
/// otherwise. palette must be a permutation of {1,2}. Throws for n < 6.
EdgeColouring parity_covering_2colouring(int n, std::array<Colour, 2> palette = {1, 2});

/// Red = 1, blue = 2, green = 3.
inline constexpr Colour kRed = 1, kBlue = 2, kGreen = 3;

/// Three-colouring of K_{n^2}^(4) from two 2-colourings of K_n^(4): c's
/// colours 1,2 are read as red, blue and d's colours 1,2 as blue, green.
/// Blocks all distinct -> d; one block -> c; three blocks -> red; two pairs
/// -> blue; three plus one -> green. With verify_input both inputs must be
/// coverings (std::invalid_argument otherwise).
EdgeColouring covering_4graph_colouring(const EdgeColouring& c, const EdgeColouring& d,
                                        bool verify_input = true);

/// A strongly connected 3-graph on n >= 2 vertices with floor(C(n,2)/2)
/// edges, built from H_2 (empty) or H_4 (K_4^(3) minus {1,2,3}) by adding four
/// vertices at a time, plus an apex for odd n.
Hypergraph minimal_connected_3graph(int n);

}  // namespace gallai
