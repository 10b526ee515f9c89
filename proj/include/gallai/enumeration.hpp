#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "gallai/colour_set_family.hpp"
#include "gallai/colouring.hpp"

namespace gallai {

enum class EnumerationMode { Exhaustive, EarlyExit, Sampled };

std::string_view to_string(EnumerationMode mode);

struct EnumerationOptions {
    int workers = 1;
    // Stop at the first witness. With several workers the witness found is
    // not necessarily the colex-first one.
    bool early_exit = false;
    // When non-zero, examine this many uniformly random d-sets instead of all.
    std::uint64_t sample = 0;
    std::uint64_t seed = 0;
};

/// d-sets whose C(d,r) sub-edges all receive pairwise distinct colours.
struct MulticolouredResult {
    int d = 0;
    EnumerationMode mode = EnumerationMode::Exhaustive;
    ColourSetFamily family{1};
    std::uint64_t raw_count = 0;   // multicoloured d-sets seen
    std::uint64_t visited = 0;     // d-sets examined
    std::optional<std::vector<Vertex>> witness;  // colex-first when exhaustive
};

/// Throws std::invalid_argument unless r <= d <= n.
MulticolouredResult multicoloured_family(const EdgeColouring& c, int d,
                                         const EnumerationOptions& options = {});

/// (r+1)-sets whose r+1 sub-edges span at least `threshold` colours.
struct TricolouredResult {
    int threshold = 3;
    EnumerationMode mode = EnumerationMode::Exhaustive;
    std::uint64_t at_least = 0;
    std::uint64_t exactly = 0;
    std::uint64_t visited = 0;
    std::optional<std::vector<Vertex>> witness;  // first set reaching the threshold
};

TricolouredResult tricoloured_count(const EdgeColouring& c, int threshold = 3,
                                    const EnumerationOptions& options = {});

/// The largest number of distinct colours on the C(d,2) edges of a d-clique.
struct MaxColoursResult {
    int d = 0;
    int max = 0;
    std::vector<Vertex> witness;  // colex-first clique attaining the maximum
    std::uint64_t visited = 0;
};

/// Requires r = 2 and 2 <= d <= n.
MaxColoursResult max_colours_on_d_set(const EdgeColouring& c, int d, int workers = 1);

}  // namespace gallai
