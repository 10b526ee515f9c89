#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gallai/colouring.hpp"

namespace gallai {

/// The four connectivity notions for a colour class.
///
///  - Graph: spanning connectivity of a 2-graph.
///  - Pointwise: every vertex lies in an edge, and any two vertices are joined
///    by a sequence of edges where consecutive edges intersect.
///  - Strong: any two (r-1)-sets are joined by a sequence of edges where
///    consecutive edges share exactly r-1 vertices, the first edge containing
///    one set and the last the other.
///  - Covering: every (r-1)-set lies in some edge.
enum class Notion { Graph, Pointwise, Strong, Covering };

std::string_view to_string(Notion notion);
/// Accepts "graph", "pointwise", "strong", "covering".
Notion parse_notion(std::string_view name);

/// Degenerate is reserved for hosts with no r-sets at all (n < r), where the
/// notions are vacuous.
enum class Verdict { Pass, Fail, Degenerate };

std::string_view to_string(Verdict verdict);

struct ConnectivityWitness {
    enum class Kind { None, Path, Unreachable, Uncovered };

    Kind kind = Kind::None;
    std::vector<Vertex> source;
    // Path: the far end; Unreachable: a query set not reachable from source;
    // Uncovered: the set lying in no edge.
    std::vector<Vertex> target;
    std::vector<std::vector<Vertex>> path;
};

std::string_view to_string(ConnectivityWitness::Kind kind);

struct ConnectivityResult {
    Notion notion;
    Verdict verdict;
    ConnectivityWitness witness;

    bool ok() const { return verdict != Verdict::Fail; }
};

/// Decides connectivity of h in the given notion. A failing verdict always
/// carries an Unreachable or Uncovered witness. With want_path, a passing
/// Graph/Pointwise/Strong verdict carries a path between the first and last
/// query sets in colex order.
///
/// Throws std::invalid_argument if n != h.n(), r < 2, or Graph is requested
/// for r != 2.
ConnectivityResult is_connected(const Hypergraph& h, int n, Notion notion, bool want_path = true);

/// Shortest strong path (consecutive edges share r-1 vertices) from an edge
/// containing `source` to an edge containing `target`; both are (r-1)-sets.
std::optional<std::vector<std::vector<Vertex>>> strong_path(const Hypergraph& h,
                                                            std::span<const Vertex> source,
                                                            std::span<const Vertex> target);

/// Shortest sequence of pairwise-consecutively intersecting edges from an edge
/// containing vertex a to one containing vertex b.
std::optional<std::vector<std::vector<Vertex>>> pointwise_path(const Hypergraph& h, Vertex a,
                                                               Vertex b);

/// Checks a claimed strong path edge by edge.
bool is_strong_path(const Hypergraph& h, const std::vector<std::vector<Vertex>>& path,
                    std::span<const Vertex> source, std::span<const Vertex> target);

/// Lower-bound machinery for strongly connected 3-graphs: the auxiliary
/// 2-graph on the C(n,2) pairs, where each edge xyz contributes the three
/// pair-adjacencies (xy)(xz), (xy)(yz), (xz)(yz).
struct PairGraphReport {
    std::uint64_t nodes = 0;
    std::uint64_t edges = 0;           // 3 |E(h)|
    std::uint64_t reduced_edges = 0;   // 2 |E(h)|, one adjacency dropped per edge
    bool connected = false;
    bool reduced_connected = false;
    // floor(C(n,2)/2): what a connected reduced graph forces on |E(h)|.
    std::uint64_t implied_min_edges = 0;
    bool bound_respected = false;      // |E(h)| >= implied_min_edges
};

PairGraphReport pair_graph_report(const Hypergraph& h);

}  // namespace gallai
