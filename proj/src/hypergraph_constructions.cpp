#include "gallai/hypergraph_constructions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "gallai/connectivity.hpp"
#include "gallai/enumeration.hpp"
#include "gallai/graph_constructions.hpp"

namespace gallai {

EdgeColouring pointwise_cycles_colouring(int k, int n) {
    if (k < 2) throw std::invalid_argument("pointwise cycles colouring needs k >= 2");
    if (n < 3 || n % 2 == 0 || !is_prime(n)) throw std::invalid_argument("n=" + std::to_string(n) + " is not an odd prime");
    if (2 * (k - 1) >= n)
        throw std::invalid_argument("steps 1.." + std::to_string(k - 1) + " overlap modulo n=" + std::to_string(n));
    const auto total = binomial(static_cast<std::uint64_t>(n), 3);
    std::vector<std::uint8_t> colours(total, static_cast<std::uint8_t>(k));
    for (int a = 1; a < k; ++a) {
        for (int j = 0; j < n; ++j) {
            std::array<Vertex, 3> e{j * a % n, (j + 1) * a % n, (j + 2) * a % n};
            std::sort(e.begin(), e.end());
            auto& slot = colours[colex_rank(e)];
            if (slot != k)
                throw std::invalid_argument("step classes " + std::to_string(slot) + " and " + std::to_string(a) +
                                            " overlap on " + format_set(e) + " at n=" + std::to_string(n));
            slot = static_cast<std::uint8_t>(a);
        }
    }
    if (static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(k - 1) >= total)
        throw std::invalid_argument("no 3-sets left for colour " + std::to_string(k) + " at n=" + std::to_string(n));
    return EdgeColouring(n, 3, k, std::move(colours));
}

namespace {

int fold(int x, int m) {
    x = ((x % m) + m) % m;
    return std::min(x, m - x);
}

}  // namespace

DistanceType DistanceType::times(int s, int m) const {
    DistanceType out;
    for (std::size_t i = 0; i < 3; ++i) out.d[i] = fold(d[i] * s, m);
    std::sort(out.d.begin(), out.d.end());
    return out;
}

std::string DistanceType::to_string() const {
    std::string s;
    const bool digits = d[2] < 10;
    for (std::size_t i = 0; i < 3; ++i) {
        if (!digits && i > 0) s += ',';
        s += std::to_string(d[i]);
    }
    return digits ? s : "(" + s + ")";
}

DistanceType type_of(std::span<const Vertex> edge, int m) {
    if (edge.size() != 3) throw std::invalid_argument("a distance type needs a 3-set");
    for (std::size_t i = 0; i < 3; ++i) {
        if (edge[i] < 0 || edge[i] >= m) throw std::invalid_argument("vertex outside Z_" + std::to_string(m));
        for (std::size_t j = 0; j < i; ++j)
            if (edge[i] == edge[j]) throw std::invalid_argument("repeated vertex in " + format_set(edge));
    }
    DistanceType t;
    t.d = {fold(edge[0] - edge[1], m), fold(edge[0] - edge[2], m), fold(edge[1] - edge[2], m)};
    std::sort(t.d.begin(), t.d.end());
    return t;
}

std::vector<DistanceType> realisable_types(int m) {
    std::set<DistanceType> seen;
    for_each_subset(m, 3, [&](std::span<const Vertex> e) { seen.insert(type_of(e, m)); });
    return {seen.begin(), seen.end()};
}

std::array<std::vector<DistanceType>, 4> k17_type_classes() {
    const std::vector<DistanceType> base{{{1, 1, 2}}, {{3, 3, 6}}, {{1, 4, 5}},
                                         {{2, 3, 5}}, {{3, 4, 7}}, {{4, 5, 8}}};
    std::array<std::vector<DistanceType>, 4> out;
    int s = 1;
    for (auto& cls : out) {
        for (const auto& t : base) cls.push_back(t.times(s));
        std::sort(cls.begin(), cls.end());
        s *= 2;
    }
    return out;
}

TypePartitionReport check_k17_types() {
    TypePartitionReport rep;
    const auto all = realisable_types(17);
    rep.realisable = all.size();
    rep.special = static_cast<std::size_t>(std::count_if(all.begin(), all.end(), [](const auto& t) { return t.special(); }));
    const auto classes = k17_type_classes();
    std::multiset<DistanceType> used;
    for (std::size_t m = 0; m < 4; ++m) {
        rep.size_per_class[m] = classes[m].size();
        for (const auto& t : classes[m]) {
            used.insert(t);
            rep.special_per_class[m] += t.special();
        }
    }
    rep.partition = used.size() == all.size() && std::equal(used.begin(), used.end(), all.begin());
    return rep;
}

EdgeColouring k17_colouring() {
    const auto rep = check_k17_types();
    if (!rep.partition) throw std::logic_error("K17 type sets do not partition the distance types");
    const auto classes = k17_type_classes();
    return EdgeColouring::from_function(17, 3, 4, [&](std::span<const Vertex> e) {
        const auto t = type_of(e);
        for (std::size_t m = 0; m < 4; ++m)
            if (std::binary_search(classes[m].begin(), classes[m].end(), t)) return static_cast<int>(m) + 1;
        return 0;
    });
}

namespace {

void check_blowup_input(const EdgeColouring& c, const char* what) {
    if (c.r() != 3) throw std::invalid_argument(std::string(what) + " needs a 3-graph colouring");
    if (c.k() + 1 > kMaxColours) throw std::invalid_argument("palette would exceed the colour limit");
    if (static_cast<long long>(c.n()) * c.n() > kMaxRankedVertices)
        throw std::invalid_argument(std::string(what) + " output too large");
}

void require_all(const EdgeColouring& c, Notion notion) {
    for (Colour i = 1; i <= c.k(); ++i)
        if (!is_connected(colour_class(c, i), c.n(), notion, false).ok())
            throw std::invalid_argument("input colour " + std::to_string(i) + " is not " +
                                        std::string(notion == Notion::Strong ? "strongly connected" : "a covering"));
}

bool all_distinct(int a, int b, int c) { return a != b && b != c && a != c; }

}  // namespace

EdgeColouring strong_blowup(const EdgeColouring& c, bool verify_input, int workers) {
    check_blowup_input(c, "strong blow-up");
    if (verify_input) {
        require_all(c, Notion::Strong);
        EnumerationOptions opts;
        opts.workers = workers;
        opts.early_exit = true;
        if (c.n() >= 4 && multicoloured_family(c, 4, opts).witness)
            throw std::invalid_argument("input has a multicoloured 4-set");
    }
    const int n = c.n();
    const Colour fresh = c.k() + 1;
    return EdgeColouring::from_function(
        n * n, 3, fresh,
        [&](std::span<const Vertex> e) {
            std::array<Vertex, 3> blk{e[0] / n, e[1] / n, e[2] / n};
            std::array<Vertex, 3> in{e[0] % n, e[1] % n, e[2] % n};
            if (all_distinct(blk[0], blk[1], blk[2])) return c.colour_of_sorted(blk);
            if (all_distinct(in[0], in[1], in[2])) {
                std::sort(in.begin(), in.end());
                return c.colour_of_sorted(in);
            }
            return fresh;
        },
        workers);
}

EdgeColouring covering_blowup(const EdgeColouring& c, bool verify_input, int workers) {
    check_blowup_input(c, "covering blow-up");
    if (verify_input) {
        require_all(c, Notion::Covering);
        EnumerationOptions opts;
        opts.workers = workers;
        opts.early_exit = true;
        if (c.n() >= 4 && tricoloured_count(c, 3, opts).at_least > 0)
            throw std::invalid_argument("input has a tricoloured 4-set");
    }
    const int n = c.n();
    const Colour fresh = c.k() + 1;
    return EdgeColouring::from_function(
        n * n, 3, fresh,
        [&](std::span<const Vertex> e) {
            const std::array<Vertex, 3> blk{e[0] / n, e[1] / n, e[2] / n};
            if (all_distinct(blk[0], blk[1], blk[2])) return c.colour_of_sorted(blk);
            if (blk[0] == blk[2]) {
                // one block: inner indices are already increasing
                const std::array<Vertex, 3> in{e[0] % n, e[1] % n, e[2] % n};
                return c.colour_of_sorted(in);
            }
            return fresh;
        },
        workers);
}

EdgeColouring parity_covering_2colouring(int n, std::array<Colour, 2> palette) {
    if (n < 6) throw std::invalid_argument("parity colouring needs n >= 6");
    if (!((palette[0] == 1 && palette[1] == 2) || (palette[0] == 2 && palette[1] == 1)))
        throw std::invalid_argument("palette must be a permutation of {1,2}");
    return EdgeColouring::from_function(n, 4, 2, [&](std::span<const Vertex> e) {
        return (e[0] + e[1] + e[2] + e[3]) % 2 == 0 ? palette[0] : palette[1];
    });
}

EdgeColouring covering_4graph_colouring(const EdgeColouring& c, const EdgeColouring& d, bool verify_input) {
    if (c.r() != 4 || d.r() != 4) throw std::invalid_argument("covering 4-graph colouring needs 4-graph inputs");
    if (c.k() != 2 || d.k() != 2) throw std::invalid_argument("covering 4-graph colouring needs two 2-colourings");
    if (c.n() != d.n()) throw std::invalid_argument("inputs live on different vertex counts");
    if (static_cast<long long>(c.n()) * c.n() > kMaxRankedVertices) throw std::invalid_argument("output too large");
    if (verify_input) {
        for (const auto* in : {&c, &d})
            for (Colour i = 1; i <= 2; ++i) {
                const auto res = is_connected(colour_class(*in, i), in->n(), Notion::Covering, false);
                if (!res.ok())
                    throw std::invalid_argument(std::string(in == &c ? "red/blue" : "blue/green") + " input colour " +
                                                std::to_string(i) + " is not a covering: " +
                                                format_set(res.witness.target) + " lies in no edge");
            }
    }
    const int n = c.n();
    return EdgeColouring::from_function(n * n, 4, 3, [&](std::span<const Vertex> e) {
        std::array<Vertex, 4> blk{};
        for (std::size_t i = 0; i < 4; ++i) blk[i] = e[i] / n;
        // blocks are non-decreasing; count the runs
        int distinct = 1, longest = 1, run = 1;
        for (std::size_t i = 1; i < 4; ++i) {
            if (blk[i] == blk[i - 1]) {
                longest = std::max(longest, ++run);
            } else {
                ++distinct;
                run = 1;
            }
        }
        if (distinct == 4) return d.colour_of_sorted(blk) + 1;  // 1,2 -> blue, green
        if (distinct == 1) {
            const std::array<Vertex, 4> in{e[0] % n, e[1] % n, e[2] % n, e[3] % n};
            return c.colour_of_sorted(in);
        }
        if (distinct == 3) return kRed;
        return longest == 2 ? kBlue : kGreen;
    });
}

Hypergraph minimal_connected_3graph(int n) {
    if (n < 2) throw std::invalid_argument("minimal connected 3-graph needs n >= 2");
    if (n > kMaxRankedVertices) throw std::invalid_argument("n too large");
    const int even = n % 2 == 0 ? n : n - 1;
    int m = even % 4 == 0 ? 4 : 2;
    std::vector<std::vector<Vertex>> edges;
    if (m == 4) edges = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}};
    const auto pairs = [](int size) {
        const int k = size / 2;
        std::vector<std::pair<Vertex, Vertex>> xy;
        for (int i = 0; i < k; ++i) xy.emplace_back(i, k + i);
        return xy;
    };
    while (m < even) {
        const auto xy = pairs(m);
        const Vertex a = m, b = m + 1, c = m + 2, d = m + 3;
        for (std::size_t i = 0; i < xy.size(); ++i) {
            const auto [x, y] = xy[i];
            edges.push_back({x, y, a});
            if (i + 1 < xy.size()) edges.push_back({x, y, b});
            edges.push_back({x, y, c});
            edges.push_back({x, y, d});
        }
        edges.push_back({xy.back().first, a, b});
        edges.push_back({a, b, c});
        edges.push_back({a, c, d});
        edges.push_back({xy.back().second, b, d});
        m += 4;
    }
    if (n % 2 == 1)
        for (const auto& [x, y] : pairs(even)) edges.push_back({x, y, even});
    return Hypergraph::from_edges(n, 3, edges);
}

}  // namespace gallai
