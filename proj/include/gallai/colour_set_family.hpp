#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gallai/colouring.hpp"

namespace gallai {

/// Bit c set <=> colour c present. Bit 0 is unused.
using ColourMask = std::uint64_t;

inline ColourMask colour_bit(Colour c) { return ColourMask{1} << c; }

std::vector<Colour> mask_colours(ColourMask m);

/// A set of distinct subsets of the palette {1..k}, kept in canonical order
/// (members sorted internally, family sorted lexicographically).
class ColourSetFamily {
public:
    explicit ColourSetFamily(int k) : k_(k) { check_palette(k); }
    ColourSetFamily(int k, std::vector<std::vector<Colour>> members);

    static ColourSetFamily from_masks(int k, std::span<const ColourMask> masks);

    int k() const { return k_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    const std::vector<std::vector<Colour>>& members() const { return members_; }
    std::vector<ColourMask> masks() const;

    bool contains(std::span<const Colour> member) const;

    /// Number of members containing colour i.
    std::size_t degree(Colour i) const;

    /// Image of the family under a colour relabelling; perm[c] is the new
    /// name of colour c (perm[0] ignored).
    ColourSetFamily relabelled(std::span<const Colour> perm) const;

    std::string to_string() const;

    friend bool operator==(const ColourSetFamily&, const ColourSetFamily&) = default;

private:
    static void check_palette(int k);

    int k_;
    std::vector<std::vector<Colour>> members_;
};

}  // namespace gallai
