#include "gallai/graph_constructions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <random>

#include "gallai/connectivity.hpp"
#include "gallai/enumeration.hpp"

namespace gallai {

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

EdgeColouring cyclic_prime_colouring(int k) {
    const long long n = 2LL * k + 1;
    if (k < 1) throw std::invalid_argument("k must be positive");
    if (!is_prime(n))
        throw std::invalid_argument("2k+1=" + std::to_string(n) + " not prime");
    const int m = static_cast<int>(n);
    return EdgeColouring::from_function(m, 2, k, [m](std::span<const Vertex> e) {
        const int d = e[1] - e[0];
        return std::min(d, m - d);
    });
}

EdgeColouring delete_vertex(const EdgeColouring& c, Vertex v) {
    if (v < 0 || v >= c.n()) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    if (c.n() - 1 < c.r())
        throw std::invalid_argument("deleting a vertex would leave fewer than r vertices");
    try {
        return EdgeColouring::from_function(c.n() - 1, c.r(), c.k(), [&](std::span<const Vertex> e) {
            Vertex buf[kMaxUniformity];
            for (std::size_t i = 0; i < e.size(); ++i) buf[i] = e[i] >= v ? e[i] + 1 : e[i];
            return c.colour_of_sorted(std::span<const Vertex>(buf, e.size()));
        });
    } catch (const std::invalid_argument& err) {
        throw std::invalid_argument("deleting vertex " + std::to_string(v) + ": " + err.what());
    }
}

EdgeColouring blow_up(const EdgeColouring& c, std::span<const int> sizes) {
    if (c.r() != 2) throw std::invalid_argument("blow_up needs a 2-colouring");
    if (static_cast<int>(sizes.size()) != c.n())
        throw std::invalid_argument("blow_up needs one class size per vertex (" + std::to_string(c.n()) + ")");
    std::vector<Vertex> cls;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (sizes[i] < 1) throw std::invalid_argument("vertex class " + std::to_string(i) + " is empty");
        if (cls.size() + static_cast<std::size_t>(sizes[i]) > static_cast<std::size_t>(kMaxRankedVertices))
            throw std::invalid_argument("blow-up too large");
        cls.insert(cls.end(), static_cast<std::size_t>(sizes[i]), static_cast<Vertex>(i));
    }
    const Vertex first_pair[2] = {0, 1};
    const Colour inner = c.colour_of_sorted(first_pair);
    return EdgeColouring::from_function(static_cast<int>(cls.size()), 2, c.k(), [&](std::span<const Vertex> e) {
        const Vertex pair[2] = {cls[static_cast<std::size_t>(e[0])], cls[static_cast<std::size_t>(e[1])]};
        return pair[0] == pair[1] ? inner : c.colour_of_sorted(pair);
    });
}

namespace {

Colour edge_colour(const EdgeColouring& c, Vertex a, Vertex b) {
    const Vertex pair[2] = {std::min(a, b), std::max(a, b)};
    return c.colour_of_sorted(pair);
}

// Verifies that order walks a spanning cycle of colour s with one-coloured
// distance-2 chords; returns the chord colour.
Colour check_cycle(const EdgeColouring& c, Colour s, std::span<const Vertex> order) {
    const auto n = order.size();
    for (std::size_t p = 0; p < n; ++p)
        if (edge_colour(c, order[p], order[(p + 1) % n]) != s)
            throw std::invalid_argument("cycle order does not follow colour " + std::to_string(s));
    const Colour chord = edge_colour(c, order[0], order[2 % n]);
    for (std::size_t p = 0; p < n; ++p)
        if (edge_colour(c, order[p], order[(p + 2) % n]) != chord)
            throw std::invalid_argument("distance-2 edges of the colour-" + std::to_string(s) +
                                        " cycle are not monochromatic");
    return chord;
}

}  // namespace

DoublingHypotheses check_doubling_hypotheses(const EdgeColouring& c, Colour special, int workers) {
    if (c.r() != 2) throw std::invalid_argument("doubling needs a 2-colouring");
    if (special < 1 || special > c.k()) throw std::invalid_argument("special colour outside palette");
    const int n = c.n();
    if (n < 3) throw std::invalid_argument("colour " + std::to_string(special) + " is not a spanning cycle");
    for (Colour i = 1; i <= c.k(); ++i)
        if (!is_connected(colour_class(c, i), n, Notion::Graph, false).ok())
            throw std::invalid_argument("colour " + std::to_string(i) + " is not connected");

    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
    for (const auto& e : colour_class(c, special).edges()) {
        adj[static_cast<std::size_t>(e[0])].push_back(e[1]);
        adj[static_cast<std::size_t>(e[1])].push_back(e[0]);
    }
    for (const auto& a : adj)
        if (a.size() != 2)
            throw std::invalid_argument("colour " + std::to_string(special) + " is not a spanning cycle");
    DoublingHypotheses h;
    h.special_colour = special;
    h.cycle_order.push_back(0);
    Vertex prev = 0;
    Vertex cur = std::min(adj[0][0], adj[0][1]);
    while (cur != 0) {
        h.cycle_order.push_back(cur);
        const auto& a = adj[static_cast<std::size_t>(cur)];
        const Vertex next = a[0] == prev ? a[1] : a[0];
        prev = cur;
        cur = next;
    }
    if (static_cast<int>(h.cycle_order.size()) != n)
        throw std::invalid_argument("colour " + std::to_string(special) + " is not a spanning cycle");
    h.distance2_colour = check_cycle(c, special, h.cycle_order);

    EnumerationOptions opts;
    opts.workers = workers;
    const auto fam = multicoloured_family(c, 3, opts).family;
    h.family_size = fam.size();
    h.special_count = fam.degree(special);
    if (static_cast<int>(h.special_count) != c.k() - 2)
        throw std::invalid_argument(std::to_string(h.special_count) + " colour sets contain colour " +
                                    std::to_string(special) + ", expected k-2=" + std::to_string(c.k() - 2));
    return h;
}

EdgeColouring double_extension(const EdgeColouring& c, const DoublingHypotheses& h) {
    if (c.r() != 2) throw std::invalid_argument("doubling needs a 2-colouring");
    const int n = c.n();
    if (c.k() + 1 > kMaxColours) throw std::invalid_argument("palette would exceed the colour limit");
    if (h.special_colour < 1 || h.special_colour > c.k() || static_cast<int>(h.cycle_order.size()) != n)
        throw std::invalid_argument("doubling hypotheses do not match the colouring");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (Vertex v : h.cycle_order) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("cycle order is not a permutation of the vertices");
        seen[static_cast<std::size_t>(v)] = true;
    }
    if (check_cycle(c, h.special_colour, h.cycle_order) != h.distance2_colour)
        throw std::invalid_argument("doubling hypotheses do not match the colouring");

    const Colour fresh = c.k() + 1;
    const auto& order = h.cycle_order;
    return EdgeColouring::from_function(2 * n, 2, fresh, [&](std::span<const Vertex> e) {
        // e[0] < e[1], so a cross edge always has its x end first.
        const int p = e[0] % n;
        const int q = e[1] % n;
        const bool cross = e[0] < n && e[1] >= n;
        if (cross && (q == p || q == (p + 1) % n)) return fresh;
        return edge_colour(c, order[static_cast<std::size_t>(p)], order[static_cast<std::size_t>(q)]);
    });
}

std::int64_t pipeline_prediction(int k0, int k) {
    std::int64_t total = static_cast<std::int64_t>(k0) * (k0 - 2) / 3;
    for (int j = k0; j < k; ++j) total += j - 1;
    return total;
}

PipelineResult upper_bound_pipeline(int k, int workers) {
    if (k < 3) throw std::invalid_argument("pipeline needs k >= 3");
    int k0 = k;
    while (!is_prime(2LL * k0 + 1)) --k0;
    auto c = cyclic_prime_colouring(k0);
    for (int j = k0; j < k; ++j) c = double_extension(c, check_doubling_hypotheses(c, j, workers));
    EnumerationOptions opts;
    opts.workers = workers;
    const auto realised = multicoloured_family(c, 3, opts).family.size();
    return PipelineResult{k, k0, std::move(c), pipeline_prediction(k0, k), realised};
}

// ---------------------------------------------------------------------------
// paths colouring

long long paths_vertex_lower_bound(int k, int d) {
    const long long delta = 2LL * (k - 1);
    const int t = d / 2;
    // Ball of radius t around a full-degree vertex is a tree; each of the
    // 2(k-1) path-endpoint deficits prunes at most one depth-1 subtree.
    long double full = 0, pruned = 0, pw = 1;
    for (int i = 0; i < t; ++i) {
        full += pw;
        if (i <= t - 2) pruned += pw;
        pw *= static_cast<long double>(delta - 1);
    }
    const long double bound = 1 + delta * full - delta * pruned;
    const long double cap = static_cast<long double>(std::numeric_limits<long long>::max() / 2);
    const long long b = bound > cap ? std::numeric_limits<long long>::max() / 2 : static_cast<long long>(bound);
    return std::max(b, 2LL * k);
}

namespace {

// Union of the paths as a multigraph; `cost` is the number of cycles of length
// <= d, parallel edges counting as 2-cycles.
class ShortCycleGraph {
public:
    ShortCycleGraph(int n, int d) : adj_(static_cast<std::size_t>(n)), mark_(static_cast<std::size_t>(n), 0), d_(d) {}

    long long cost() const { return cost_; }

    // Simple u-v paths of length 1..d-1.
    long long paths_between(int u, int v) {
        target_ = v;
        found_ = 0;
        mark_[static_cast<std::size_t>(u)] = 1;
        dfs(u, 0);
        mark_[static_cast<std::size_t>(u)] = 0;
        return found_;
    }

    void add(int u, int v) {
        cost_ += paths_between(u, v);
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
    }

    void remove(int u, int v) {
        erase_one(adj_[static_cast<std::size_t>(u)], v);
        erase_one(adj_[static_cast<std::size_t>(v)], u);
        cost_ -= paths_between(u, v);
    }

private:
    static void erase_one(std::vector<int>& a, int x) {
        auto it = std::find(a.begin(), a.end(), x);
        *it = a.back();
        a.pop_back();
    }

    void dfs(int x, int depth) {
        for (int y : adj_[static_cast<std::size_t>(x)]) {
            if (y == target_) {
                ++found_;
            } else if (depth + 2 < d_ && !mark_[static_cast<std::size_t>(y)]) {
                mark_[static_cast<std::size_t>(y)] = 1;
                dfs(y, depth + 1);
                mark_[static_cast<std::size_t>(y)] = 0;
            }
        }
    }

    std::vector<std::vector<int>> adj_;
    std::vector<char> mark_;
    int d_;
    int target_ = 0;
    long long found_ = 0;
    long long cost_ = 0;
};

struct Edge {
    int path;
    int u;
    int v;
};

class PathSearch {
public:
    PathSearch(int paths, int n, int d, std::mt19937_64& rng)
        : n_(n), g_(n, d), rng_(rng), order_(static_cast<std::size_t>(paths)), pos_(static_cast<std::size_t>(paths)) {
        for (std::size_t p = 0; p < order_.size(); ++p) {
            auto& o = order_[p];
            o.resize(static_cast<std::size_t>(n));
            std::iota(o.begin(), o.end(), 0);
            std::shuffle(o.begin(), o.end(), rng_);
            pos_[p].resize(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) pos_[p][static_cast<std::size_t>(o[static_cast<std::size_t>(i)])] = i;
            for (int i = 0; i + 1 < n; ++i) g_.add(o[static_cast<std::size_t>(i)], o[static_cast<std::size_t>(i + 1)]);
        }
    }

    // Local search by segment reversals; true once no short cycle remains.
    bool run(long long max_moves) {
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        std::uniform_int_distribution<int> vertex(0, n_ - 1);
        const double temperature = 0.35;
        for (long long move = 0; move < max_moves && g_.cost() > 0; ++move) {
            const auto bad = next_bad_edge();
            if (!bad) return g_.cost() == 0;
            const int p = bad->path;
            const int i = std::min(pos(p, bad->u), pos(p, bad->v));
            int j = vertex(rng_);
            if (j == i || j == i + 1) continue;
            const int a = j > i ? i + 1 : j;
            const int b = j > i ? j : i;
            const long long before = g_.cost();
            apply_reversal_edges(p, a, b, true);
            const long long delta = g_.cost() - before;
            if (delta <= 0 || unit(rng_) < std::exp(-static_cast<double>(delta) / temperature)) {
                reverse_segment(p, a, b);
            } else {
                apply_reversal_edges(p, a, b, false);
            }
        }
        return g_.cost() == 0;
    }

    const std::vector<std::vector<int>>& order() const { return order_; }

private:
    int pos(int p, int v) const { return pos_[static_cast<std::size_t>(p)][static_cast<std::size_t>(v)]; }
    int at(int p, int i) const { return order_[static_cast<std::size_t>(p)][static_cast<std::size_t>(i)]; }

    // Swaps the boundary edges of reversing [a,b] in path p (forward), or
    // restores them (backward). The path order itself is untouched.
    void apply_reversal_edges(int p, int a, int b, bool forward) {
        const bool left = a > 0;
        const bool right = b < n_ - 1;
        const int la = left ? at(p, a - 1) : -1, va = at(p, a), vb = at(p, b), rb = right ? at(p, b + 1) : -1;
        if (forward) {
            if (left) g_.remove(la, va);
            if (right) g_.remove(vb, rb);
            if (left) g_.add(la, vb);
            if (right) g_.add(va, rb);
        } else {
            if (left) g_.remove(la, vb);
            if (right) g_.remove(va, rb);
            if (left) g_.add(la, va);
            if (right) g_.add(vb, rb);
        }
    }

    void reverse_segment(int p, int a, int b) {
        auto& o = order_[static_cast<std::size_t>(p)];
        std::reverse(o.begin() + a, o.begin() + b + 1);
        for (int i = a; i <= b; ++i) pos_[static_cast<std::size_t>(p)][static_cast<std::size_t>(o[static_cast<std::size_t>(i)])] = i;
    }

    bool still_bad(const Edge& e) {
        if (std::abs(pos(e.path, e.u) - pos(e.path, e.v)) != 1) return false;
        return g_.paths_between(e.u, e.v) > 1;  // the edge itself is one path
    }

    std::optional<Edge> next_bad_edge() {
        for (int round = 0; round < 2; ++round) {
            while (!bad_.empty()) {
                std::uniform_int_distribution<std::size_t> pick(0, bad_.size() - 1);
                const auto idx = pick(rng_);
                const Edge e = bad_[idx];
                bad_[idx] = bad_.back();
                bad_.pop_back();
                if (still_bad(e)) return e;
            }
            for (std::size_t p = 0; p < order_.size(); ++p)
                for (int i = 0; i + 1 < n_; ++i) {
                    const Edge e{static_cast<int>(p), at(static_cast<int>(p), i), at(static_cast<int>(p), i + 1)};
                    if (g_.paths_between(e.u, e.v) > 1) bad_.push_back(e);
                }
        }
        return std::nullopt;
    }

    int n_;
    ShortCycleGraph g_;
    std::mt19937_64& rng_;
    std::vector<std::vector<int>> order_;
    std::vector<std::vector<int>> pos_;
    std::vector<Edge> bad_;
};


// Even n = 2m: vertices a_x = x and b_x = m + x over Z_m. Two voltages
// alpha, beta with alpha - beta a unit mod m give the Hamiltonian cycle
// a_0 b_alpha a_(alpha-beta) b_(2alpha-beta) ...; dropping one edge leaves a
// path. Voltage pairs are drawn at random and kept only while the union
// stays free of cycles of length <= d.
std::optional<std::vector<std::vector<int>>> lifted_paths(int paths, int n, int d, std::mt19937_64& rng) {
    const int m = n / 2;
    ShortCycleGraph g(n, d);
    std::vector<char> used(static_cast<std::size_t>(m), 0);
    std::uniform_int_distribution<int> residue(0, m - 1);
    std::uniform_int_distribution<int> cut(0, n - 1);
    std::vector<std::vector<int>> out;
    const int tries = 64 * m;
    for (int p = 0; p < paths; ++p) {
        bool placed = false;
        for (int t = 0; t < tries && !placed; ++t) {
            const int alpha = residue(rng);
            const int beta = residue(rng);
            if (alpha == beta || used[static_cast<std::size_t>(alpha)] || used[static_cast<std::size_t>(beta)]) continue;
            if (std::gcd(((alpha - beta) % m + m) % m, m) != 1) continue;
            std::vector<int> cycle;
            int x = 0;
            for (int j = 0; j < m; ++j) {
                cycle.push_back(x);
                cycle.push_back(m + (x + alpha) % m);
                x = ((x + alpha - beta) % m + m) % m;
            }
            const int start = cut(rng);
            std::rotate(cycle.begin(), cycle.begin() + start, cycle.end());
            int added = 0;
            while (added + 1 < n && g.cost() == 0) {
                g.add(cycle[static_cast<std::size_t>(added)], cycle[static_cast<std::size_t>(added + 1)]);
                ++added;
            }
            if (g.cost() == 0) {
                used[static_cast<std::size_t>(alpha)] = used[static_cast<std::size_t>(beta)] = 1;
                out.push_back(std::move(cycle));
                placed = true;
            } else {
                for (int i = added; i > 0; --i)
                    g.remove(cycle[static_cast<std::size_t>(i - 1)], cycle[static_cast<std::size_t>(i)]);
            }
        }
        if (!placed) return std::nullopt;
    }
    return out;
}

}  // namespace

PathsColouring paths_colouring(int k, int n, std::uint64_t seed, int d, int max_attempts) {
    if (k < 3) throw std::invalid_argument("paths colouring needs k >= 3");
    if (k > kMaxColours) throw std::invalid_argument("too many colours");
    if (d < 3) throw std::invalid_argument("paths colouring needs d >= 3");
    if (n < 2 * k)
        throw std::invalid_argument("n=" + std::to_string(n) + " < 2k: colour " + std::to_string(k) +
                                    " cannot be connected");
    if (n > 4096) throw std::invalid_argument("n too large for the paths search");
    if (max_attempts < 1) throw std::invalid_argument("max_attempts must be positive");
    const long long bound = paths_vertex_lower_bound(k, d);
    if (n < bound)
        throw ConstructionError("no " + std::to_string(k - 1) + " spanning paths on " + std::to_string(n) +
                                    " vertices avoid cycles of length <= " + std::to_string(d) +
                                    " (counting bound needs n >= " + std::to_string(bound) + ")",
                                0);

    std::mt19937_64 rng(seed);
    const long long moves = 400LL * n * k;
    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        std::vector<std::vector<int>> order;
        if (n % 2 == 0) {
            auto lifted = lifted_paths(k - 1, n, d, rng);
            if (!lifted) continue;
            order = std::move(*lifted);
        } else {
            PathSearch search(k - 1, n, d, rng);
            if (!search.run(moves)) continue;
            order = search.order();
        }
        std::vector<std::uint8_t> table(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), static_cast<std::uint8_t>(k));
        for (std::size_t p = 0; p < order.size(); ++p) {
            const auto& o = order[p];
            for (std::size_t i = 0; i + 1 < o.size(); ++i) {
                table[static_cast<std::size_t>(o[i]) * static_cast<std::size_t>(n) + static_cast<std::size_t>(o[i + 1])] = static_cast<std::uint8_t>(p + 1);
                table[static_cast<std::size_t>(o[i + 1]) * static_cast<std::size_t>(n) + static_cast<std::size_t>(o[i])] = static_cast<std::uint8_t>(p + 1);
            }
        }
        auto c = EdgeColouring::from_function(n, 2, k, [&](std::span<const Vertex> e) {
            return table[static_cast<std::size_t>(e[0]) * static_cast<std::size_t>(n) + static_cast<std::size_t>(e[1])];
        });
        if (!is_connected(colour_class(c, k), n, Notion::Graph, false).ok()) continue;
        std::vector<std::vector<Vertex>> paths(order.begin(), order.end());
        return PathsColouring{std::move(c), std::move(paths), attempt};
    }
    throw ConstructionError("paths search failed after " + std::to_string(max_attempts) + " attempts",
                            max_attempts);
}

}  // namespace gallai
