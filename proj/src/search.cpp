#include "gallai/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <functional>
#include <limits>
#include <mutex>
#include <random>
#include <stdexcept>

#include "gallai/connectivity.hpp"
#include "gallai/disjoint_set.hpp"
#include "gallai/enumeration.hpp"
#include "gallai/family_checks.hpp"
#include "gallai/parallel.hpp"

namespace gallai {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t out = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (out > std::numeric_limits<std::uint64_t>::max() / base)
            return std::numeric_limits<std::uint64_t>::max();
        out *= base;
    }
    return out;
}

// Tiny union-find on at most 64 elements, rebuilt at every use.
struct SmallDsu {
    std::array<std::uint8_t, 64> parent{};
    int components = 0;

    void reset(int size) {
        for (int i = 0; i < size; ++i) parent[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
        components = size;
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[parent[static_cast<std::size_t>(x)]];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        parent[static_cast<std::size_t>(b)] = static_cast<std::uint8_t>(a);
        --components;
    }
};

// ---------------------------------------------------------------------------
// Connected k-colourings of K_n with few colour sets on multicoloured triangles.

struct TriangleSearch {
    int k = 0;
    int n = 0;
    int m = 0;
    bool unreduced = false;
    std::uint64_t budget = 0;

    std::vector<std::array<int, 2>> ends;
    // closing[j]: the other two edges of each triangle whose last edge is j
    std::vector<std::vector<std::array<int, 2>>> closing;
    // suffix[pos][v]: component of v among edges pos..m-1
    std::vector<std::array<std::uint8_t, 64>> suffix;
    // incident_left[pos][v]: edges among pos..m-1 at v
    std::vector<std::array<std::uint8_t, 16>> incident_left;

    std::atomic<std::uint64_t> nodes{0};
    std::atomic<std::uint64_t> pruned{0};
    std::atomic<bool> aborted{false};
    std::atomic<int> best{0};
    std::mutex best_mutex;
    std::vector<std::uint8_t> best_colours;

    void prepare() {
        m = n * (n - 1) / 2;
        ends.resize(static_cast<std::size_t>(m));
        for (int b = 1, j = 0; b < n; ++b)
            for (int a = 0; a < b; ++a, ++j) ends[static_cast<std::size_t>(j)] = {a, b};
        auto rank = [](int a, int b) { return b * (b - 1) / 2 + a; };
        closing.assign(static_cast<std::size_t>(m), {});
        for (int j = 0; j < m; ++j) {
            const auto [a, b] = ends[static_cast<std::size_t>(j)];
            for (int c = 0; c < n; ++c) {
                if (c == a || c == b) continue;
                const int e1 = rank(std::min(a, c), std::max(a, c));
                const int e2 = rank(std::min(b, c), std::max(b, c));
                if (e1 < j && e2 < j) closing[static_cast<std::size_t>(j)].push_back({e1, e2});
            }
        }
        incident_left.assign(static_cast<std::size_t>(m) + 1, {});
        for (int pos = m - 1; pos >= 0; --pos) {
            incident_left[static_cast<std::size_t>(pos)] = incident_left[static_cast<std::size_t>(pos) + 1];
            for (int v : ends[static_cast<std::size_t>(pos)]) ++incident_left[static_cast<std::size_t>(pos)][static_cast<std::size_t>(v)];
        }
        suffix.assign(static_cast<std::size_t>(m) + 1, {});
        SmallDsu dsu;
        dsu.reset(n);
        for (int pos = m; pos >= 0; --pos) {
            if (pos < m) dsu.unite(ends[static_cast<std::size_t>(pos)][0], ends[static_cast<std::size_t>(pos)][1]);
            for (int v = 0; v < n; ++v)
                suffix[static_cast<std::size_t>(pos)][static_cast<std::size_t>(v)] =
                    static_cast<std::uint8_t>(dsu.find(v));
        }
    }

    struct State {
        std::vector<std::uint8_t> colour;
        std::vector<int> class_size;
        std::vector<int> set_count;  // by colour mask
        int family = 0;
        int used = 0;
    };

    State fresh() const {
        State s;
        s.colour.assign(static_cast<std::size_t>(m), 0);
        s.class_size.assign(static_cast<std::size_t>(k) + 1, 0);
        s.set_count.assign(std::size_t{1} << (k + 1), 0);
        return s;
    }

    // Applies colour c to edge j; returns the masks of new rainbow triangles
    // through the closing list (recorded in set_count).
    void assign(State& s, int j, int c) const {
        s.colour[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(c);
        ++s.class_size[static_cast<std::size_t>(c)];
        if (c > s.used) s.used = c;
        for (const auto& [e1, e2] : closing[static_cast<std::size_t>(j)]) {
            const int c1 = s.colour[static_cast<std::size_t>(e1)];
            const int c2 = s.colour[static_cast<std::size_t>(e2)];
            if (c1 == c2 || c1 == c || c2 == c) continue;
            const std::size_t mask = (std::size_t{1} << c) | (std::size_t{1} << c1) | (std::size_t{1} << c2);
            if (s.set_count[mask]++ == 0) ++s.family;
        }
    }

    void unassign(State& s, int j, int previous_used) const {
        const int c = s.colour[static_cast<std::size_t>(j)];
        for (const auto& [e1, e2] : closing[static_cast<std::size_t>(j)]) {
            const int c1 = s.colour[static_cast<std::size_t>(e1)];
            const int c2 = s.colour[static_cast<std::size_t>(e2)];
            if (c1 == c2 || c1 == c || c2 == c) continue;
            const std::size_t mask = (std::size_t{1} << c) | (std::size_t{1} << c1) | (std::size_t{1} << c2);
            if (--s.set_count[mask] == 0) --s.family;
        }
        --s.class_size[static_cast<std::size_t>(c)];
        s.colour[static_cast<std::size_t>(j)] = 0;
        s.used = previous_used;
    }

    // Every class together with the unassigned edges pos..m-1 can still be
    // spanning and connected: each class needs components-1 more edges, every
    // vertex needs an edge of each colour, and the unassigned edges must join
    // the components of each class.
    bool feasible(const State& s, int pos) const {
        const auto& comp = suffix[static_cast<std::size_t>(pos)];
        const auto& left = incident_left[static_cast<std::size_t>(pos)];
        std::array<std::uint64_t, 16> seen{};
        for (int j = 0; j < pos; ++j) {
            const auto bit = std::uint64_t{1} << s.colour[static_cast<std::size_t>(j)];
            seen[static_cast<std::size_t>(ends[static_cast<std::size_t>(j)][0])] |= bit;
            seen[static_cast<std::size_t>(ends[static_cast<std::size_t>(j)][1])] |= bit;
        }
        for (int v = 0; v < n; ++v)
            if (k - std::popcount(seen[static_cast<std::size_t>(v)]) > left[static_cast<std::size_t>(v)]) return false;
        int needed = 0;
        SmallDsu dsu;
        bool checked_empty = false;
        for (int c = 1; c <= k; ++c) {
            if (s.class_size[static_cast<std::size_t>(c)] == 0) {
                needed += n - 1;
                if (checked_empty) continue;
                checked_empty = true;
            }
            dsu.reset(n);
            for (int j = 0; j < pos; ++j)
                if (s.colour[static_cast<std::size_t>(j)] == c)
                    dsu.unite(ends[static_cast<std::size_t>(j)][0], ends[static_cast<std::size_t>(j)][1]);
            if (s.class_size[static_cast<std::size_t>(c)] != 0) needed += dsu.components - 1;
            for (int v = 0; v < n; ++v) dsu.unite(v, comp[static_cast<std::size_t>(v)]);
            if (dsu.components != 1) return false;
        }
        return needed <= m - pos;
    }

    int colour_limit(const State& s) const { return unreduced ? k : std::min(k, s.used + 1); }

    void record(const State& s) {
        std::lock_guard lock(best_mutex);
        if (s.family < best.load()) {
            best.store(s.family);
            best_colours = s.colour;
        }
    }

    // Depth-first search from pos. With a non-null `prefixes`, stops at depth
    // `split` and stores the partial assignments instead of descending.
    void dfs(State& s, int pos, int split, std::vector<std::vector<std::uint8_t>>* prefixes) {
        if (aborted.load(std::memory_order_relaxed)) return;
        const auto count = nodes.fetch_add(1, std::memory_order_relaxed) + 1;
        if (budget != 0 && count > budget) {
            aborted.store(true);
            return;
        }
        if (pos == m) {
            if (s.family < best.load()) record(s);
            return;
        }
        if (prefixes != nullptr && pos == split) {
            prefixes->emplace_back(s.colour.begin(), s.colour.begin() + pos);
            return;
        }
        const int limit = colour_limit(s);
        for (int c = 1; c <= limit; ++c) {
            const int previous_used = s.used;
            assign(s, pos, c);
            if (s.family >= best.load(std::memory_order_relaxed) || !feasible(s, pos + 1))
                pruned.fetch_add(1, std::memory_order_relaxed);
            else
                dfs(s, pos + 1, split, prefixes);
            unassign(s, pos, previous_used);
            if (aborted.load(std::memory_order_relaxed)) return;
        }
    }
};

// ---------------------------------------------------------------------------
// Smallest families of triples meeting every 3-partition.

struct PartitionSearch {
    int k = 0;
    std::uint64_t budget = 0;
    std::vector<ColourMask> triples;
    std::vector<std::uint64_t> transversals;  // per partition, bitmask over triples
    // per colour: indices of triples containing it
    std::vector<std::uint64_t> through;

    std::uint64_t nodes = 0;
    std::uint64_t pruned = 0;
    bool aborted = false;
    int best = 0;
    std::uint64_t best_family = 0;

    void prepare() {
        for (int c = 3; c <= k; ++c)
            for (int b = 2; b < c; ++b)
                for (int a = 1; a < b; ++a) triples.push_back(colour_bit(a) | colour_bit(b) | colour_bit(c));
        through.assign(static_cast<std::size_t>(k) + 1, 0);
        for (std::size_t t = 0; t < triples.size(); ++t)
            for (Colour c = 1; c <= k; ++c)
                if (triples[t] & colour_bit(c)) through[static_cast<std::size_t>(c)] |= std::uint64_t{1} << t;
        for_each_three_partition(k, [&](ColourMask a, ColourMask b, ColourMask c) {
            std::uint64_t mask = 0;
            for (std::size_t t = 0; t < triples.size(); ++t)
                if ((triples[t] & a) && (triples[t] & b) && (triples[t] & c)) mask |= std::uint64_t{1} << t;
            transversals.push_back(mask);
            return true;
        });
        best = static_cast<int>(triples.size()) + 1;
    }

    // Lower bound on the final size: each colour ends with degree >= k-2.
    int degree_bound(std::uint64_t family) const {
        int total = 0;
        for (Colour c = 1; c <= k; ++c)
            total += std::max(k - 2, std::popcount(family & through[static_cast<std::size_t>(c)]));
        return (total + 2) / 3;
    }

    // Links computed from the still-available triples must be connected.
    bool links_possible(std::uint64_t available) const {
        for (Colour p = 1; p <= k; ++p) {
            SmallDsu dsu;
            dsu.reset(k + 1);
            std::uint64_t rest = available & through[static_cast<std::size_t>(p)];
            while (rest) {
                const auto others = mask_colours(triples[static_cast<std::size_t>(std::countr_zero(rest))] & ~colour_bit(p));
                dsu.unite(others[0], others[1]);
                rest &= rest - 1;
            }
            // k-1 vertices other than p, plus the unused slot 0 and p itself
            if (dsu.components != 3) return false;
        }
        return true;
    }

    void dfs(std::uint64_t family, std::uint64_t excluded) {
        if (aborted) return;
        if (budget != 0 && nodes >= budget) {
            aborted = true;
            return;
        }
        ++nodes;
        const int size = std::popcount(family);
        int chosen = -1;
        int fewest = std::numeric_limits<int>::max();
        for (std::size_t p = 0; p < transversals.size(); ++p) {
            if (transversals[p] & family) continue;
            const int options = std::popcount(transversals[p] & ~excluded);
            if (options < fewest) {
                fewest = options;
                chosen = static_cast<int>(p);
            }
        }
        if (chosen < 0) {
            if (size < best) {
                best = size;
                best_family = family;
            }
            return;
        }
        if (fewest == 0 || size + 1 >= best || degree_bound(family) >= best ||
            !links_possible(~excluded & ((triples.size() == 64) ? ~std::uint64_t{0}
                                                                : ((std::uint64_t{1} << triples.size()) - 1)))) {
            ++pruned;
            return;
        }
        std::uint64_t options = transversals[static_cast<std::size_t>(chosen)] & ~excluded;
        std::uint64_t tried = 0;
        while (options) {
            const std::uint64_t bit = options & (~options + 1);
            dfs(family | bit, excluded | tried);
            if (aborted) return;
            tried |= bit;
            options &= options - 1;
        }
    }
};

// ---------------------------------------------------------------------------
// Strong connectivity of a 3-graph through its pairs.

struct PairIndex {
    int n = 0;
    std::vector<std::array<int, 3>> edge_pairs;  // per 3-edge, its three pair ranks
    std::vector<std::vector<Vertex>> edges;

    explicit PairIndex(int n_) : n(n_) {
        for_each_subset(n, 3, [&](std::span<const Vertex> s) {
            edges.emplace_back(s.begin(), s.end());
            const auto pr = [](int a, int b) { return b * (b - 1) / 2 + a; };
            edge_pairs.push_back({pr(s[0], s[1]), pr(s[0], s[2]), pr(s[1], s[2])});
        });
    }
    int pair_count() const { return n * (n - 1) / 2; }
};

// Components of the pair graph of the edges selected by `pick`, minus one.
template <class Pick>
int pair_disconnection(const PairIndex& idx, Pick&& pick) {
    SmallDsu dsu;
    dsu.reset(idx.pair_count());
    for (std::size_t e = 0; e < idx.edge_pairs.size(); ++e) {
        if (!pick(e)) continue;
        const auto& p = idx.edge_pairs[e];
        dsu.unite(p[0], p[1]);
        dsu.unite(p[0], p[2]);
    }
    return dsu.components - 1;
}

bool colouring_strongly_connected(const EdgeColouring& c) {
    for (Colour i = 1; i <= c.k(); ++i)
        if (is_connected(colour_class(c, i), c.n(), Notion::Strong, false).verdict != Verdict::Pass) return false;
    return true;
}

}  // namespace

SearchReport min_multicoloured_triangles(int k, int n, std::uint64_t budget, int workers, bool unreduced) {
    if (k < 3 || k > 8) throw std::invalid_argument("min_multicoloured_triangles needs 3 <= k <= 8");
    if (n < 2 * k) throw std::invalid_argument("no connected " + std::to_string(k) + "-colouring of K_" +
                                               std::to_string(n) + " exists below n = 2k");
    if (n > 12) throw std::invalid_argument("min_multicoloured_triangles needs n <= 12");
    const auto start = Clock::now();
    TriangleSearch search;
    search.k = k;
    search.n = n;
    search.unreduced = unreduced;
    search.budget = budget;
    search.prepare();
    const int sets = k * (k - 1) * (k - 2) / 6;
    search.best.store(sets + 1);

    // Split the tree into independent prefixes; workers share the incumbent.
    const int split = std::min(search.m, unreduced ? 4 : 6);
    std::vector<std::vector<std::uint8_t>> prefixes;
    {
        auto root = search.fresh();
        search.dfs(root, 0, split, &prefixes);
    }
    parallel_tasks(static_cast<int>(prefixes.size()), resolve_workers(workers), [&](int t, int) {
        auto s = search.fresh();
        const auto& prefix = prefixes[static_cast<std::size_t>(t)];
        for (int j = 0; j < split; ++j) search.assign(s, j, prefix[static_cast<std::size_t>(j)]);
        if (s.family >= search.best.load()) {
            search.pruned.fetch_add(1);
            return;
        }
        // The prefix node itself was counted while splitting.
        search.nodes.fetch_sub(1);
        search.dfs(s, split, -1, nullptr);
    });

    SearchReport rep;
    rep.task = "min_multicoloured_triangles";
    rep.params = {{"k", k}, {"n", n}, {"budget", static_cast<std::int64_t>(budget)}, {"unreduced", unreduced}};
    rep.nodes = search.nodes.load();
    rep.pruned = search.pruned.load();
    rep.space = saturating_pow(static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(search.m));
    rep.complete = !search.aborted.load();
    if (!search.best_colours.empty()) {
        rep.optimum = search.best.load();
        EdgeColouring c(n, 2, k, search.best_colours);
        bool ok = true;
        for (Colour i = 1; i <= k; ++i)
            ok = ok && is_connected(colour_class(c, i), n, Notion::Graph, false).verdict == Verdict::Pass;
        ok = ok && static_cast<std::int64_t>(multicoloured_family(c, 3).family.size()) == *rep.optimum;
        rep.witness_verified = ok;
        rep.witness = std::move(c);
    }
    rep.argument = std::string(unreduced ? "all colour assignments" : "assignments in first-use colour order") +
                   " over the " + std::to_string(search.m) +
                   " edges in colex order; a subtree is cut when its family already reaches the incumbent or "
                   "some colour class plus the unassigned edges is disconnected";
    rep.elapsed_ms = ms_since(start);
    return rep;
}

SearchReport min_partition_family(int k, std::uint64_t budget) {
    if (k < 3 || k > 8) throw std::invalid_argument("min_partition_family needs 3 <= k <= 8");
    const auto start = Clock::now();
    PartitionSearch search;
    search.k = k;
    search.budget = budget;
    search.prepare();
    search.dfs(0, 0);

    SearchReport rep;
    rep.task = "min_partition_family";
    rep.params = {{"k", k}, {"budget", static_cast<std::int64_t>(budget)}};
    rep.nodes = search.nodes;
    rep.pruned = search.pruned;
    rep.space = saturating_pow(2, search.triples.size());
    rep.complete = !search.aborted;
    if (search.best <= static_cast<int>(search.triples.size())) {
        rep.optimum = search.best;
        std::vector<ColourMask> masks;
        for (std::size_t t = 0; t < search.triples.size(); ++t)
            if (search.best_family >> t & 1) masks.push_back(search.triples[t]);
        auto family = ColourSetFamily::from_masks(k, masks);
        bool ok = partition_condition(family, k).pass;
        for (const auto& p : link_connectivity_profile(family, k)) ok = ok && p.link_connected;
        rep.witness_verified = ok;
        rep.witness = std::move(family);
    }
    rep.argument = "branching on the triples meeting an uncovered partition with the fewest options, excluding "
                   "earlier siblings; cut by size, the degree bound k-2 per colour and link connectivity over the "
                   "triples still available";
    rep.elapsed_ms = ms_since(start);
    return rep;
}

SearchReport min_connected_3graph_edges(int n, std::uint64_t budget) {
    if (n < 3 || n > 8) throw std::invalid_argument("min_connected_3graph_edges needs 3 <= n <= 8");
    const auto start = Clock::now();
    const PairIndex idx(n);
    const int total = static_cast<int>(idx.edges.size());
    const int pairs = idx.pair_count();

    SearchReport rep;
    rep.task = "min_connected_3graph_edges";
    rep.params = {{"n", n}, {"budget", static_cast<std::int64_t>(budget)}};
    bool aborted = false;
    std::vector<int> chosen;
    std::vector<int> witness;
    std::vector<int> cover(static_cast<std::size_t>(pairs), 0);
    int uncovered = pairs;

    // Sizes are tried in increasing order; every subset of a refuted size is
    // visited or cut because 3 pairs per remaining edge cannot cover the rest.
    std::function<bool(int, int)> dfs = [&](int next, int left) -> bool {
        if (budget != 0 && rep.nodes >= budget) {
            aborted = true;
            return false;
        }
        ++rep.nodes;
        if (left == 0) {
            if (uncovered > 0) return false;
            std::vector<bool> in(static_cast<std::size_t>(total), false);
            for (int e : chosen) in[static_cast<std::size_t>(e)] = true;
            if (pair_disconnection(idx, [&](std::size_t e) { return in[e]; }) == 0) {
                witness = chosen;
                return true;
            }
            return false;
        }
        if (uncovered > 3 * left || total - next < left) {
            ++rep.pruned;
            return false;
        }
        for (int e = next; e <= total - left; ++e) {
            chosen.push_back(e);
            for (int p : idx.edge_pairs[static_cast<std::size_t>(e)])
                if (cover[static_cast<std::size_t>(p)]++ == 0) --uncovered;
            const bool found = dfs(e + 1, left - 1);
            for (int p : idx.edge_pairs[static_cast<std::size_t>(e)])
                if (--cover[static_cast<std::size_t>(p)] == 0) ++uncovered;
            chosen.pop_back();
            if (found || aborted) return found;
        }
        return false;
    };

    std::uint64_t space = 0;
    for (int size = 0; size <= total && !aborted; ++size) {
        space += binomial(static_cast<std::uint64_t>(total), static_cast<std::uint64_t>(size));
        if (dfs(0, size)) {
            rep.optimum = size;
            break;
        }
    }
    rep.space = space;
    rep.complete = !aborted && rep.optimum.has_value();
    if (rep.optimum) {
        std::vector<std::vector<Vertex>> edges;
        for (int e : witness) edges.push_back(idx.edges[static_cast<std::size_t>(e)]);
        auto h = Hypergraph::from_edges(n, 3, edges);
        rep.witness_verified = is_connected(h, n, Notion::Strong, false).verdict == Verdict::Pass;
        rep.witness = std::move(h);
    }
    rep.argument = "all edge subsets of each size below the optimum were refuted, in increasing size; a partial "
                   "subset is cut when its remaining edges cannot cover the uncovered pairs";
    rep.elapsed_ms = ms_since(start);
    return rep;
}

SearchReport tricoloured_counterexample_hunt(int n, int k, int seeds, std::uint64_t budget,
                                             std::uint64_t first_seed) {
    if (k != 3) throw std::invalid_argument("the tricoloured hunt concerns 3-colourings (k = 3)");
    if (n < 4 || n > 9) throw std::invalid_argument("tricoloured hunt needs 4 <= n <= 9");
    if (seeds < 1) throw std::invalid_argument("tricoloured hunt needs at least one seed");
    const auto start = Clock::now();
    const PairIndex idx(n);
    const int m = static_cast<int>(idx.edges.size());
    const std::int64_t weight = static_cast<std::int64_t>(binomial(static_cast<std::uint64_t>(n), 4)) + 1;

    // The 4-sets through each 3-edge, as the ranks of their four 3-edges.
    std::vector<std::array<std::uint64_t, 4>> quads;
    std::vector<std::vector<int>> quads_through(static_cast<std::size_t>(m));
    for_each_subset(n, 4, [&](std::span<const Vertex> q) {
        std::array<std::uint64_t, 4> ranks{};
        for (int skip = 0; skip < 4; ++skip) {
            std::array<Vertex, 3> e{};
            for (int i = 0, j = 0; i < 4; ++i)
                if (i != skip) e[static_cast<std::size_t>(j++)] = q[static_cast<std::size_t>(i)];
            ranks[static_cast<std::size_t>(skip)] = colex_rank(e);
            quads_through[ranks[static_cast<std::size_t>(skip)]].push_back(static_cast<int>(quads.size()));
        }
        quads.push_back(ranks);
    });

    auto tricoloured = [&](const std::vector<std::uint8_t>& col, int q) {
        unsigned mask = 0;
        for (auto e : quads[static_cast<std::size_t>(q)]) mask |= 1u << col[e];
        return std::popcount(mask) >= 3;
    };
    auto disconnection = [&](const std::vector<std::uint8_t>& col, int c) {
        return pair_disconnection(idx, [&](std::size_t e) { return col[e] == c; });
    };

    SearchReport rep;
    rep.task = "tricoloured_counterexample_hunt";
    rep.params = {{"n", n},
                  {"k", k},
                  {"seeds", seeds},
                  {"budget", static_cast<std::int64_t>(budget)},
                  {"seed", static_cast<std::int64_t>(first_seed)}};
    const std::uint64_t per_seed = std::max<std::uint64_t>(1, budget / static_cast<std::uint64_t>(seeds));
    const std::uint64_t sideways_cap = 2 * static_cast<std::uint64_t>(m);
    std::vector<std::uint8_t> best_colours;
    std::int64_t best_tri = -1;

    for (int s = 0; s < seeds; ++s) {
        std::mt19937_64 rng(first_seed + static_cast<std::uint64_t>(s));
        std::uniform_int_distribution<int> pick_edge(0, m - 1);
        std::uniform_int_distribution<int> pick_shift(1, k - 1);
        std::uniform_int_distribution<int> pick_colour(1, k);
        std::vector<std::uint8_t> col(static_cast<std::size_t>(m));
        for (auto& c : col) c = static_cast<std::uint8_t>(pick_colour(rng));
        std::vector<int> disc(static_cast<std::size_t>(k) + 1, 0);
        std::int64_t disc_total = 0;
        for (int c = 1; c <= k; ++c) disc_total += disc[static_cast<std::size_t>(c)] = disconnection(col, c);
        std::int64_t tri = 0;
        for (int q = 0; q < static_cast<int>(quads.size()); ++q) tri += tricoloured(col, q);

        std::int64_t seed_best = -1;
        auto note = [&] {
            if (disc_total != 0) return;
            if (seed_best < 0 || tri < seed_best) seed_best = tri;
            if (best_tri < 0 || tri < best_tri) {
                best_tri = tri;
                best_colours = col;
            }
        };
        note();
        std::uint64_t sideways = 0;
        for (std::uint64_t move = 0; move < per_seed; ++move) {
            ++rep.nodes;
            const int e = pick_edge(rng);
            const int old_c = col[static_cast<std::size_t>(e)];
            const int new_c = (old_c - 1 + pick_shift(rng)) % k + 1;
            std::int64_t tri_delta = 0;
            for (int q : quads_through[static_cast<std::size_t>(e)]) tri_delta -= tricoloured(col, q);
            col[static_cast<std::size_t>(e)] = static_cast<std::uint8_t>(new_c);
            for (int q : quads_through[static_cast<std::size_t>(e)]) tri_delta += tricoloured(col, q);
            const int d_old = disconnection(col, old_c);
            const int d_new = disconnection(col, new_c);
            const std::int64_t disc_delta = d_old + d_new - disc[static_cast<std::size_t>(old_c)] -
                                            disc[static_cast<std::size_t>(new_c)];
            const std::int64_t delta = weight * disc_delta + tri_delta;
            if (delta < 0 || (delta == 0 && sideways < sideways_cap)) {
                sideways = (delta < 0) ? 0 : sideways + 1;
                disc[static_cast<std::size_t>(old_c)] = d_old;
                disc[static_cast<std::size_t>(new_c)] = d_new;
                disc_total += disc_delta;
                tri += tri_delta;
                note();
            } else {
                col[static_cast<std::size_t>(e)] = static_cast<std::uint8_t>(old_c);
                ++rep.pruned;
            }
        }
        rep.per_seed.push_back(seed_best);
    }

    if (best_tri >= 0) {
        rep.optimum = best_tri;
        EdgeColouring c(n, 3, k, best_colours);
        rep.witness_verified = colouring_strongly_connected(c) &&
                               static_cast<std::int64_t>(tricoloured_count(c).at_least) == best_tri;
        rep.witness = std::move(c);
    }
    rep.space = saturating_pow(static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(m));
    rep.complete = false;
    rep.argument = "randomised local search, not exhaustive: single-edge recolourings accepted on strict "
                   "improvement or capped sideways moves, with disconnection weighted above any tricoloured count";
    rep.elapsed_ms = ms_since(start);
    return rep;
}

}  // namespace gallai
