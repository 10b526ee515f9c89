#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gallai/colour_set_family.hpp"
#include "gallai/colouring.hpp"

namespace gallai {

using SearchWitness = std::variant<std::monostate, EdgeColouring, ColourSetFamily, Hypergraph>;

/// Outcome of a bounded search. Budgets count search nodes; 0 means unlimited.
struct SearchReport {
    std::string task;
    std::vector<std::pair<std::string, std::int64_t>> params;
    std::optional<std::int64_t> optimum;  // best value found
    SearchWitness witness;
    std::uint64_t nodes = 0;
    std::uint64_t pruned = 0;
    // Size of the unpruned space, saturating at UINT64_MAX.
    std::uint64_t space = 0;
    double elapsed_ms = 0;
    // Set only when the search finished without hitting the budget, so the
    // optimum is proven.
    bool complete = false;
    // The witness was re-checked by the verification routines.
    bool witness_verified = false;
    std::string argument;
    // Hunt only: best tricoloured count of each restart (-1 when infeasible).
    std::vector<std::int64_t> per_seed;
};

/// Least number of distinct colour sets of multicoloured triangles over
/// connected k-colourings of K_n. Colours are introduced in first-use order
/// unless `unreduced` is set. Requires k >= 3 and n >= 2k.
SearchReport min_multicoloured_triangles(int k, int n, std::uint64_t budget = 0,
                                         int workers = 1, bool unreduced = false);

/// Least size of a family of 3-subsets of {1..k} meeting every 3-partition in
/// all three blocks. Requires 3 <= k <= 10.
SearchReport min_partition_family(int k, std::uint64_t budget = 0);

/// Least edge count of a strongly connected 3-graph on n vertices.
/// Requires 3 <= n <= 8.
SearchReport min_connected_3graph_edges(int n, std::uint64_t budget = 0);

/// Randomised local search for a strongly connected 3-colouring of K_n^(3)
/// with few tricoloured 4-sets. Never complete. Requires k = 3 and
/// 4 <= n <= 9. The budget is the total number of moves tried.
SearchReport tricoloured_counterexample_hunt(int n, int k = 3, int seeds = 10,
                                             std::uint64_t budget = 200000,
                                             std::uint64_t first_seed = 0);

}  // namespace gallai
