#include "gallai/family_checks.hpp"

#include <stdexcept>

#include "gallai/disjoint_set.hpp"

namespace gallai {

namespace {

void check_args(const ColourSetFamily& f, int k) {
    if (k < 3) throw std::invalid_argument("3-partitions need k >= 3");
    if (f.k() != k)
        throw std::invalid_argument("family palette is " + std::to_string(f.k()) + ", expected " +
                                    std::to_string(k));
}

bool hits(ColourMask member, ColourMask a, ColourMask b, ColourMask c) {
    return (member & a) && (member & b) && (member & c);
}

}  // namespace

ThreePartition partition_from_masks(ColourMask a, ColourMask b, ColourMask c) {
    return ThreePartition{{mask_colours(a), mask_colours(b), mask_colours(c)}};
}

PartitionCheck partition_condition(const ColourSetFamily& f, int k) {
    check_args(f, k);
    const auto masks = f.masks();
    PartitionCheck res;
    res.pass = true;
    for_each_three_partition(k, [&](ColourMask a, ColourMask b, ColourMask c) {
        ++res.partitions_checked;
        for (auto m : masks)
            if (hits(m, a, b, c)) return true;
        res.pass = false;
        res.unhit = partition_from_masks(a, b, c);
        return false;
    });
    return res;
}

std::vector<LinkProfile> link_connectivity_profile(const ColourSetFamily& f, int k) {
    check_args(f, k);
    const auto masks = f.masks();
    std::vector<LinkProfile> out;
    for (Colour i = 1; i <= k; ++i) {
        LinkProfile p;
        p.colour = i;
        DisjointSet dsu(static_cast<std::size_t>(k) + 1);
        for (auto m : masks) {
            if (!(m & colour_bit(i))) continue;
            ++p.degree;
            const auto rest = mask_colours(m & ~colour_bit(i));
            for (std::size_t j = 1; j < rest.size(); ++j)
                dsu.unite(static_cast<std::size_t>(rest[0]), static_cast<std::size_t>(rest[j]));
        }
        const Colour first = (i == 1) ? 2 : 1;
        p.link_connected = true;
        for (Colour v = 1; v <= k; ++v)
            if (v != i && !dsu.same(static_cast<std::size_t>(first), static_cast<std::size_t>(v))) {
                p.link_connected = false;
                break;
            }
        out.push_back(p);
    }
    return out;
}

SingletonChain singleton_chain(const ColourSetFamily& f, int k, Colour pivot) {
    check_args(f, k);
    if (pivot < 1 || pivot > k) throw std::invalid_argument("pivot outside palette");
    SingletonChain chain;
    chain.pivot = pivot;
    const auto masks = f.masks();
    const ColourMask p = colour_bit(pivot);
    ColourMask all = 0;
    for (Colour c = 1; c <= k; ++c) all |= colour_bit(c);
    const Colour seed = (pivot == 1) ? 2 : 1;
    ColourMask grown = colour_bit(seed);
    ColourMask rest = all & ~p & ~grown;
    while (rest) {
        const ColourMask* found = nullptr;
        for (const auto& m : masks)
            if (hits(m, p, grown, rest)) {
                found = &m;
                break;
            }
        if (!found) {
            chain.unhit = partition_from_masks(p, grown, rest);
            return chain;
        }
        chain.members.push_back(mask_colours(*found));
        grown |= *found & rest;
        rest &= ~*found;
    }
    chain.complete = true;
    return chain;
}

std::int64_t partition_family_lower_bound(int k) {
    const std::int64_t num = static_cast<std::int64_t>(k) * (k - 2);
    return (num + 2) / 3;
}

}  // namespace gallai
