#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "gallai/colouring.hpp"

namespace gallai {

/// A randomised construction gave up. attempts() is the number of restarts
/// spent (0 when the parameters were rejected by a counting argument).
class ConstructionError : public std::runtime_error {
public:
    ConstructionError(const std::string& what, int attempts)
        : std::runtime_error(what), attempts_(attempts) {}
    int attempts() const { return attempts_; }

private:
    int attempts_;
};

bool is_prime(long long n);

/// Edge {x,y} of K_{2k+1} gets colour min(|x-y|, 2k+1-|x-y|): each colour
/// class is the spanning cycle of one step size.
/// Throws std::invalid_argument unless 2k+1 is prime.
EdgeColouring cyclic_prime_colouring(int k);

/// Removes vertex v; vertices above v shift down by one. Works for any r.
/// Throws std::invalid_argument if n-1 < r or a colour disappears.
EdgeColouring delete_vertex(const EdgeColouring& c, Vertex v);

/// Replaces vertex i of a 2-colouring on K_m by sizes[i] consecutive vertices.
/// Edges between classes i != j take c(ij); edges inside a class take c({0,1}).
EdgeColouring blow_up(const EdgeColouring& c, std::span<const int> sizes);

/// The verified preconditions of the doubling step.
struct DoublingHypotheses {
    Colour special_colour = 0;
    /// v_1..v_n: the special class as a spanning cycle, starting at its lowest
    /// vertex and heading to that vertex's lower-numbered neighbour.
    std::vector<Vertex> cycle_order;
    Colour distance2_colour = 0;      // shared colour of every v_i v_{i+2}
    std::size_t special_count = 0;    // colour sets containing special_colour
    std::size_t family_size = 0;      // all colour sets of multicoloured triangles
};

/// Checks that c (r = 2) is connected, that special_colour spans a single
/// spanning cycle, that the distance-2 chords of that cycle share one colour,
/// and that exactly k-2 colour sets of multicoloured triangles contain the
/// special colour. Throws std::invalid_argument naming the first failure.
DoublingHypotheses check_doubling_hypotheses(const EdgeColouring& c, Colour special_colour, int workers = 1);

/// The doubling step on K_{2n} with colour k+1. Cycle position p gives x_p = p
/// and y_p = n + p; x_p y_q gets colour k+1 when q is p or p+1 (mod n) and
/// otherwise copies c on the underlying cycle vertices. Colour labels of c are
/// kept. Throws std::invalid_argument if the hypotheses do not describe c.
EdgeColouring double_extension(const EdgeColouring& c, const DoublingHypotheses& h);

struct PipelineResult {
    int k = 0;
    int k0 = 0;  // largest k0 <= k with 2k0+1 prime
    EdgeColouring colouring;
    std::int64_t predicted_count = 0;
    std::size_t realised_count = 0;  // enumerated family size
};

/// cyclic_prime_colouring(k0) followed by k-k0 doubling steps, each using the
/// newest colour as the special one.
PipelineResult upper_bound_pipeline(int k, int workers = 1);

/// k0(k0-2)/3 + sum_{j=k0}^{k-1} (j-1).
std::int64_t pipeline_prediction(int k0, int k);

struct PathsColouring {
    EdgeColouring colouring;
    std::vector<std::vector<Vertex>> paths;  // paths[i] is colour i+1, as a vertex sequence
    int attempts = 0;
};

/// Smallest n allowed by a Moore-type count for k-1 edge-disjoint spanning
/// paths whose union has no cycle of length <= d.
long long paths_vertex_lower_bound(int k, int d);

/// Colours k-1 edge-disjoint Hamiltonian paths of K_n with 1..k-1 so that
/// their union has no cycle of length <= d, and the rest with colour k. The
/// search is seeded and deterministic. Throws std::invalid_argument for
/// k < 3, d < 3 or n < 2k, and ConstructionError when n is below the counting
/// bound or max_attempts restarts fail.
PathsColouring paths_colouring(int k, int n, std::uint64_t seed, int d, int max_attempts = 10000);

}  // namespace gallai
