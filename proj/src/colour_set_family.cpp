#include "gallai/colour_set_family.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace gallai {

std::vector<Colour> mask_colours(ColourMask m) {
    std::vector<Colour> out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

void ColourSetFamily::check_palette(int k) {
    if (k < 1 || k > kMaxColours)
        throw std::invalid_argument("palette size " + std::to_string(k) + " unsupported");
}

ColourSetFamily::ColourSetFamily(int k, std::vector<std::vector<Colour>> members)
    : k_(k), members_(std::move(members)) {
    check_palette(k);
    for (auto& m : members_) {
        std::sort(m.begin(), m.end());
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] < 1 || m[i] > k)
                throw std::invalid_argument("colour " + std::to_string(m[i]) + " outside 1.." +
                                            std::to_string(k));
            if (i > 0 && m[i] == m[i - 1])
                throw std::invalid_argument("repeated colour " + std::to_string(m[i]) + " in member");
        }
    }
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
        throw std::invalid_argument("family members must be pairwise distinct");
}

ColourSetFamily ColourSetFamily::from_masks(int k, std::span<const ColourMask> masks) {
    std::vector<ColourMask> unique(masks.begin(), masks.end());
    std::sort(unique.begin(), unique.end());
    unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
    std::vector<std::vector<Colour>> members;
    members.reserve(unique.size());
    for (auto m : unique) members.push_back(mask_colours(m));
    return ColourSetFamily(k, std::move(members));
}

std::vector<ColourMask> ColourSetFamily::masks() const {
    std::vector<ColourMask> out;
    out.reserve(members_.size());
    for (const auto& m : members_) {
        ColourMask mask = 0;
        for (auto c : m) mask |= colour_bit(c);
        out.push_back(mask);
    }
    return out;
}

bool ColourSetFamily::contains(std::span<const Colour> member) const {
    std::vector<Colour> key(member.begin(), member.end());
    std::sort(key.begin(), key.end());
    return std::binary_search(members_.begin(), members_.end(), key);
}

std::size_t ColourSetFamily::degree(Colour i) const {
    return static_cast<std::size_t>(std::count_if(members_.begin(), members_.end(), [&](const auto& m) {
        return std::binary_search(m.begin(), m.end(), i);
    }));
}

ColourSetFamily ColourSetFamily::relabelled(std::span<const Colour> perm) const {
    if (static_cast<int>(perm.size()) != k_ + 1)
        throw std::invalid_argument("colour permutation must have k+1 entries");
    auto members = members_;
    for (auto& m : members)
        for (auto& c : m) c = perm[static_cast<std::size_t>(c)];
    return ColourSetFamily(k_, std::move(members));
}

std::string ColourSetFamily::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < members_.size(); ++i) {
        os << (i ? " " : "") << '{';
        for (std::size_t j = 0; j < members_[i].size(); ++j) os << (j ? "," : "") << members_[i][j];
        os << '}';
    }
    os << ']';
    return os.str();
}

}  // namespace gallai
