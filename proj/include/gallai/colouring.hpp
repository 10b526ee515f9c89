#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "gallai/parallel.hpp"
#include "gallai/subsets.hpp"

namespace gallai {

/// Colours are 1-based: a k-colouring uses {1..k}.
using Colour = int;

// Palette bound: colour sets are handled as 64-bit masks.
inline constexpr int kMaxColours = 63;

// Refuse to materialise colourings with more r-sets than this.
inline constexpr std::uint64_t kMaxEdges = std::uint64_t{1} << 31;

/// A total colouring of the r-subsets of {0..n-1} with colours {1..k}.
///
/// Storage is dense, indexed by colex rank. Construction validates that
/// every entry lies in {1..k} and that each colour is used at least once.
/// Instances are immutable and can be shared across threads.
class EdgeColouring {
public:
    EdgeColouring(int n, int r, int k, std::vector<std::uint8_t> colours);

    /// Builds a colouring by evaluating colour_of(span<const Vertex>) on every
    /// r-set in colex order. Evaluation is split over `workers` threads; the
    /// callable must therefore be safe to call concurrently.
    template <class F>
    static EdgeColouring from_function(int n, int r, int k, F&& colour_of, int workers = 1);

    int n() const { return n_; }
    int r() const { return r_; }
    int k() const { return k_; }
    std::uint64_t edge_count() const { return colours_.size(); }

    Colour colour_at(std::uint64_t rank) const { return colours_[rank]; }

    /// Colour of an r-set given in any order; validates the set.
    Colour colour_of(std::span<const Vertex> edge) const;

    /// Colour of a sorted r-set, no validation.
    Colour colour_of_sorted(std::span<const Vertex> sorted) const {
        return colours_[colex_rank(sorted)];
    }

    std::span<const std::uint8_t> colours() const { return colours_; }

    /// Number of r-sets carrying each colour; index 0 is unused.
    std::vector<std::uint64_t> class_sizes() const;

    friend bool operator==(const EdgeColouring&, const EdgeColouring&) = default;

private:
    static void check_shape(int n, int r, int k);

    int n_;
    int r_;
    int k_;
    std::vector<std::uint8_t> colours_;
};

/// An r-uniform edge set on {0..n-1}, stored as sorted unique colex ranks.
class Hypergraph {
public:
    Hypergraph(int n, int r, std::vector<std::uint64_t> edge_ranks);

    static Hypergraph from_edges(int n, int r, const std::vector<std::vector<Vertex>>& edges);

    int n() const { return n_; }
    int r() const { return r_; }
    std::size_t size() const { return ranks_.size(); }
    std::span<const std::uint64_t> ranks() const { return ranks_; }

    /// The i-th edge (in colex order), vertices increasing.
    std::vector<Vertex> edge(std::size_t i) const;
    std::vector<std::vector<Vertex>> edges() const;

    bool contains(std::span<const Vertex> edge) const;

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

private:
    int n_;
    int r_;
    std::vector<std::uint64_t> ranks_;
};

/// The r-sets of colour i. Throws std::invalid_argument if i is outside {1..k}.
Hypergraph colour_class(const EdgeColouring& c, Colour i);

/// Human-readable "{a,b,c}".
std::string format_set(std::span<const Vertex> s);

// ---------------------------------------------------------------------------

template <class F>
EdgeColouring EdgeColouring::from_function(int n, int r, int k, F&& colour_of, int workers) {
    check_shape(n, r, k);
    std::vector<std::uint8_t> out(
        binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(r)));
    // Task t covers the r-sets with largest element n-1-t: a contiguous rank
    // block starting at C(top, r). Heaviest blocks go first.
    const int tops = n - r + 1;
    parallel_tasks(tops, workers, [&](int task, int) {
        const int top = n - 1 - task;
        std::uint8_t* dst = out.data() + small_binomial(top, r);
        for_each_subset_with_top(top, r, [&](std::span<const Vertex> s) {
            const auto v = static_cast<long long>(colour_of(s));
            *dst++ = (v >= 1 && v <= 255) ? static_cast<std::uint8_t>(v) : std::uint8_t{0};
        });
    });
    return EdgeColouring(n, r, k, std::move(out));
}

}  // namespace gallai
