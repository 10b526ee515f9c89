#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "gallai/colour_set_family.hpp"

namespace gallai {

/// An unordered partition of the palette {1..k} into three non-empty blocks.
struct ThreePartition {
    std::array<std::vector<Colour>, 3> blocks;
};

/// Calls f(a, b, c) with the block masks of every partition of {1..k} into
/// exactly three non-empty blocks, generated as restricted growth strings
/// (colour 1 always in block a). Stops when f returns false.
template <class F>
void for_each_three_partition(int k, F&& f);

struct PartitionCheck {
    bool pass = false;
    std::optional<ThreePartition> unhit;  // first partition no member meets in all blocks
    std::uint64_t partitions_checked = 0;
};

/// Whether every 3-partition of {1..k} has a member meeting all three blocks.
/// Throws std::invalid_argument when k < 3 or k differs from the family's palette.
PartitionCheck partition_condition(const ColourSetFamily& f, int k);

struct LinkProfile {
    Colour colour = 0;
    std::size_t degree = 0;       // members containing the colour
    bool link_connected = false;  // link graph on {1..k} minus the colour
};

/// Per-colour degree and connectivity of the link graph, whose edges are
/// A \ {i} for members A containing i.
std::vector<LinkProfile> link_connectivity_profile(const ColourSetFamily& f, int k);

/// Chain of partitions {p} | S | rest, growing S by the rest-part of a member
/// through p each step. When the family satisfies the partition condition the
/// chain completes and exhibits distinct members through p (k-2 of them for a
/// family of triples).
struct SingletonChain {
    Colour pivot = 0;
    bool complete = false;
    std::vector<std::vector<Colour>> members;
    std::optional<ThreePartition> unhit;
};

SingletonChain singleton_chain(const ColourSetFamily& f, int k, Colour pivot);

/// ceil(k(k-2)/3): the least size of a family satisfying the partition condition.
std::int64_t partition_family_lower_bound(int k);

ThreePartition partition_from_masks(ColourMask a, ColourMask b, ColourMask c);

// ---------------------------------------------------------------------------

namespace detail {

template <class F>
bool three_partition_step(int colour, int k, int used, std::array<ColourMask, 3>& blocks, F& f) {
    if (colour > k) return used < 3 || f(blocks[0], blocks[1], blocks[2]);
    // blocks still empty must be fillable by the colours left
    if (3 - used > k - colour + 1) return true;
    const int limit = std::min(used + 1, 3);
    for (int b = 0; b < limit; ++b) {
        blocks[static_cast<std::size_t>(b)] |= colour_bit(colour);
        const bool go = three_partition_step(colour + 1, k, std::max(used, b + 1), blocks, f);
        blocks[static_cast<std::size_t>(b)] &= ~colour_bit(colour);
        if (!go) return false;
    }
    return true;
}

}  // namespace detail

template <class F>
void for_each_three_partition(int k, F&& f) {
    std::array<ColourMask, 3> blocks{};
    detail::three_partition_step(1, k, 0, blocks, f);
}

}  // namespace gallai
