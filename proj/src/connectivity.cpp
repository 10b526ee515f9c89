#include "gallai/connectivity.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "gallai/disjoint_set.hpp"

namespace gallai {

std::string_view to_string(Notion notion) {
    switch (notion) {
        case Notion::Graph: return "graph";
        case Notion::Pointwise: return "pointwise";
        case Notion::Strong: return "strong";
        case Notion::Covering: return "covering";
    }
    return "?";
}

Notion parse_notion(std::string_view name) {
    for (auto n : {Notion::Graph, Notion::Pointwise, Notion::Strong, Notion::Covering})
        if (to_string(n) == name) return n;
    throw std::invalid_argument("unknown connectivity notion '" + std::string(name) + "'");
}

std::string_view to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::Degenerate: return "DEGENERATE";
    }
    return "?";
}

std::string_view to_string(ConnectivityWitness::Kind kind) {
    switch (kind) {
        case ConnectivityWitness::Kind::None: return "none";
        case ConnectivityWitness::Kind::Path: return "path";
        case ConnectivityWitness::Kind::Unreachable: return "unreachable";
        case ConnectivityWitness::Kind::Uncovered: return "uncovered";
    }
    return "?";
}

namespace {

// Ranks of the r sub-(r-1)-sets of a sorted r-set; sub[j] omits position j.
void face_ranks(std::span<const Vertex> e, std::span<std::uint64_t> sub) {
    const auto r = e.size();
    // prefix: positions i < j keep their slot, C(e_i, i+1); suffix shifts down, C(e_i, i)
    std::uint64_t suffix = 0;
    for (std::size_t i = 1; i < r; ++i) suffix += small_binomial(e[i], static_cast<int>(i));
    std::uint64_t prefix = 0;
    for (std::size_t j = 0; j < r; ++j) {
        sub[j] = prefix + suffix;
        if (j + 1 < r) {
            suffix -= small_binomial(e[j + 1], static_cast<int>(j + 1));
            prefix += small_binomial(e[j], static_cast<int>(j + 1));
        }
    }
}

// CSR incidence from query node to edge indices.
struct Incidence {
    std::vector<std::uint64_t> offsets;
    std::vector<std::uint32_t> edges;

    std::span<const std::uint32_t> of(std::uint64_t node) const {
        return {edges.data() + offsets[node], edges.data() + offsets[node + 1]};
    }
};

template <class NodesOf>
Incidence build_incidence(std::size_t edge_count, std::uint64_t node_count, NodesOf&& nodes_of) {
    Incidence inc;
    inc.offsets.assign(node_count + 1, 0);
    std::vector<std::uint64_t> buf;
    for (std::size_t e = 0; e < edge_count; ++e) {
        nodes_of(e, buf);
        for (auto v : buf) ++inc.offsets[v + 1];
    }
    for (std::uint64_t i = 0; i < node_count; ++i) inc.offsets[i + 1] += inc.offsets[i];
    inc.edges.resize(inc.offsets.back());
    auto fill = inc.offsets;
    for (std::size_t e = 0; e < edge_count; ++e) {
        nodes_of(e, buf);
        for (auto v : buf) inc.edges[fill[v]++] = static_cast<std::uint32_t>(e);
    }
    return inc;
}

// Breadth-first search over edges; moves between edges through shared nodes.
template <class NodesOf>
std::optional<std::vector<std::vector<Vertex>>> edge_bfs(const Hypergraph& h, std::uint64_t node_count,
                                                         std::uint64_t source, std::uint64_t target,
                                                         NodesOf&& nodes_of) {
    const auto m = h.size();
    const auto inc = build_incidence(m, node_count, nodes_of);
    std::vector<std::int64_t> parent(m, -2);
    std::deque<std::uint32_t> queue;
    for (auto e : inc.of(source)) {
        parent[e] = -1;
        queue.push_back(e);
    }
    std::vector<std::uint64_t> buf;
    while (!queue.empty()) {
        const auto e = queue.front();
        queue.pop_front();
        nodes_of(e, buf);
        if (std::find(buf.begin(), buf.end(), target) != buf.end()) {
            std::vector<std::vector<Vertex>> path;
            for (std::int64_t cur = e; cur >= 0; cur = parent[static_cast<std::size_t>(cur)])
                path.push_back(h.edge(static_cast<std::size_t>(cur)));
            std::reverse(path.begin(), path.end());
            return path;
        }
        for (auto node : buf)
            for (auto f : inc.of(node))
                if (parent[f] == -2) {
                    parent[f] = e;
                    queue.push_back(f);
                }
    }
    return std::nullopt;
}

struct FaceNodes {
    const Hypergraph& h;
    void operator()(std::size_t e, std::vector<std::uint64_t>& out) const {
        Vertex verts[kMaxUniformity];
        const auto r = static_cast<std::size_t>(h.r());
        unrank_into(h.ranks()[e], h.r(), std::span<Vertex>(verts, r));
        out.resize(r);
        face_ranks(std::span<const Vertex>(verts, r), out);
    }
};

struct VertexNodes {
    const Hypergraph& h;
    void operator()(std::size_t e, std::vector<std::uint64_t>& out) const {
        Vertex verts[kMaxUniformity];
        const auto r = static_cast<std::size_t>(h.r());
        unrank_into(h.ranks()[e], h.r(), std::span<Vertex>(verts, r));
        out.assign(verts, verts + r);
    }
};

std::vector<Vertex> unrank_face(std::uint64_t rank, int size) {
    std::vector<Vertex> out(static_cast<std::size_t>(size));
    if (size > 0) unrank_into(rank, size, out);
    return out;
}

ConnectivityResult decide_faces(const Hypergraph& h, Notion notion, bool want_path) {
    const int n = h.n();
    const int r = h.r();
    const auto nodes = binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(r - 1));
    ConnectivityResult res{notion, Verdict::Pass, {}};

    std::vector<bool> covered(nodes, false);
    const bool need_union = notion != Notion::Covering;
    DisjointSet dsu(need_union ? nodes : 0);
    std::uint64_t sub[kMaxUniformity];
    Vertex verts[kMaxUniformity];
    for (auto rank : h.ranks()) {
        unrank_into(rank, r, std::span<Vertex>(verts, static_cast<std::size_t>(r)));
        face_ranks(std::span<const Vertex>(verts, static_cast<std::size_t>(r)),
                   std::span<std::uint64_t>(sub, static_cast<std::size_t>(r)));
        for (int j = 0; j < r; ++j) {
            covered[sub[j]] = true;
            if (need_union && j > 0) dsu.unite(sub[0], sub[j]);
        }
    }
    for (std::uint64_t v = 0; v < nodes; ++v)
        if (!covered[v]) {
            res.verdict = Verdict::Fail;
            res.witness.kind = ConnectivityWitness::Kind::Uncovered;
            res.witness.target = unrank_face(v, r - 1);
            return res;
        }
    if (need_union && dsu.components() > 1) {
        for (std::uint64_t v = 1; v < nodes; ++v)
            if (!dsu.same(0, v)) {
                res.verdict = Verdict::Fail;
                res.witness.kind = ConnectivityWitness::Kind::Unreachable;
                res.witness.source = unrank_face(0, r - 1);
                res.witness.target = unrank_face(v, r - 1);
                return res;
            }
    }
    if (want_path && need_union) {
        const auto src = unrank_face(0, r - 1);
        const auto dst = unrank_face(nodes - 1, r - 1);
        if (auto path = strong_path(h, src, dst)) {
            res.witness.kind = ConnectivityWitness::Kind::Path;
            res.witness.source = src;
            res.witness.target = dst;
            res.witness.path = std::move(*path);
        }
    }
    return res;
}

ConnectivityResult decide_pointwise(const Hypergraph& h, bool want_path) {
    const int n = h.n();
    const int r = h.r();
    ConnectivityResult res{Notion::Pointwise, Verdict::Pass, {}};
    std::vector<bool> covered(static_cast<std::size_t>(n), false);
    DisjointSet dsu(static_cast<std::size_t>(n));
    Vertex verts[kMaxUniformity];
    for (auto rank : h.ranks()) {
        unrank_into(rank, r, std::span<Vertex>(verts, static_cast<std::size_t>(r)));
        for (int j = 0; j < r; ++j) {
            covered[static_cast<std::size_t>(verts[j])] = true;
            if (j > 0) dsu.unite(static_cast<std::size_t>(verts[0]), static_cast<std::size_t>(verts[j]));
        }
    }
    for (int v = 0; v < n; ++v)
        if (!covered[static_cast<std::size_t>(v)]) {
            res.verdict = Verdict::Fail;
            res.witness.kind = ConnectivityWitness::Kind::Uncovered;
            res.witness.target = {v};
            return res;
        }
    for (int v = 1; v < n; ++v)
        if (!dsu.same(0, static_cast<std::size_t>(v))) {
            res.verdict = Verdict::Fail;
            res.witness.kind = ConnectivityWitness::Kind::Unreachable;
            res.witness.source = {0};
            res.witness.target = {v};
            return res;
        }
    if (want_path) {
        if (auto path = pointwise_path(h, 0, n - 1)) {
            res.witness.kind = ConnectivityWitness::Kind::Path;
            res.witness.source = {0};
            res.witness.target = {n - 1};
            res.witness.path = std::move(*path);
        }
    }
    return res;
}

}  // namespace

ConnectivityResult is_connected(const Hypergraph& h, int n, Notion notion, bool want_path) {
    if (h.n() != n)
        throw std::invalid_argument("hypergraph has " + std::to_string(h.n()) + " vertices, expected " +
                                    std::to_string(n));
    if (h.r() < 2) throw std::invalid_argument("connectivity needs uniformity r >= 2");
    if (notion == Notion::Graph && h.r() != 2)
        throw std::invalid_argument("graph connectivity applies to r=2 only");
    if (n < h.r()) return {notion, Verdict::Degenerate, {}};
    switch (notion) {
        case Notion::Pointwise: return decide_pointwise(h, want_path);
        case Notion::Graph:
        case Notion::Strong:
        case Notion::Covering: return decide_faces(h, notion, want_path);
    }
    throw std::logic_error("unreachable notion");
}

std::optional<std::vector<std::vector<Vertex>>> strong_path(const Hypergraph& h,
                                                            std::span<const Vertex> source,
                                                            std::span<const Vertex> target) {
    const int r = h.r();
    const auto nodes = binomial(static_cast<std::uint64_t>(h.n()), static_cast<std::uint64_t>(r - 1));
    const auto s = rank_subset(source, h.n(), r - 1);
    const auto t = rank_subset(target, h.n(), r - 1);
    return edge_bfs(h, nodes, s, t, FaceNodes{h});
}

std::optional<std::vector<std::vector<Vertex>>> pointwise_path(const Hypergraph& h, Vertex a, Vertex b) {
    if (a < 0 || a >= h.n() || b < 0 || b >= h.n()) throw std::invalid_argument("vertex out of range");
    return edge_bfs(h, static_cast<std::uint64_t>(h.n()), static_cast<std::uint64_t>(a),
                    static_cast<std::uint64_t>(b), VertexNodes{h});
}

bool is_strong_path(const Hypergraph& h, const std::vector<std::vector<Vertex>>& path,
                    std::span<const Vertex> source, std::span<const Vertex> target) {
    if (path.empty()) return false;
    const auto subset_of = [](std::span<const Vertex> small, const std::vector<Vertex>& big) {
        return std::all_of(small.begin(), small.end(),
                           [&](Vertex v) { return std::find(big.begin(), big.end(), v) != big.end(); });
    };
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (!h.contains(path[i])) return false;
        if (i > 0) {
            std::vector<Vertex> a = path[i - 1], b = path[i];
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            std::vector<Vertex> common;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
            if (static_cast<int>(common.size()) != h.r() - 1) return false;
        }
    }
    return subset_of(source, path.front()) && subset_of(target, path.back());
}

PairGraphReport pair_graph_report(const Hypergraph& h) {
    if (h.r() != 3) throw std::invalid_argument("pair graph is defined for 3-graphs");
    PairGraphReport rep;
    rep.nodes = binomial(static_cast<std::uint64_t>(h.n()), 2);
    rep.edges = 3 * h.size();
    rep.reduced_edges = 2 * h.size();
    rep.implied_min_edges = rep.nodes / 2;
    DisjointSet full(rep.nodes);
    DisjointSet reduced(rep.nodes);
    Vertex v[3];
    std::uint64_t sub[3];
    for (auto rank : h.ranks()) {
        unrank_into(rank, 3, v);
        face_ranks(std::span<const Vertex>(v, 3), sub);
        // sub[2] = xy, sub[1] = xz, sub[0] = yz
        full.unite(sub[2], sub[1]);
        full.unite(sub[2], sub[0]);
        full.unite(sub[1], sub[0]);
        reduced.unite(sub[2], sub[1]);
        reduced.unite(sub[2], sub[0]);
    }
    rep.connected = rep.nodes > 0 && full.components() == 1;
    rep.reduced_connected = rep.nodes > 0 && reduced.components() == 1;
    rep.bound_respected = h.size() >= rep.implied_min_edges;
    return rep;
}

}  // namespace gallai
