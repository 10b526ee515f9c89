#include "gallai/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "gallai/parallel.hpp"

namespace gallai {

std::string_view to_string(EnumerationMode mode) {
    switch (mode) {
        case EnumerationMode::Exhaustive: return "exhaustive";
        case EnumerationMode::EarlyExit: return "early-exit";
        case EnumerationMode::Sampled: return "sampled";
    }
    return "?";
}

namespace {

constexpr int kMaxSetSize = 64;

// r-subsets of positions {0..d-1}, in colex order.
std::vector<std::vector<int>> sub_edge_patterns(int d, int r) {
    std::vector<std::vector<int>> out;
    for_each_subset(d, r, [&](std::span<const Vertex> s) { out.emplace_back(s.begin(), s.end()); });
    return out;
}

class SetScanner {
public:
    SetScanner(const EdgeColouring& c, int d)
        : c_(c), d_(d), r_(c.r()), col_(c.colours().data()), patterns_(sub_edge_patterns(d, c.r())) {}

    int d() const { return d_; }
    std::uint64_t sub_edges() const { return patterns_.size(); }

    ColourMask mask_of(std::span<const Vertex> s) const {
        ColourMask mask = 0;
        for (const auto& p : patterns_) {
            std::uint64_t rank = 0;
            for (std::size_t m = 0; m < p.size(); ++m)
                rank += small_binomial(s[static_cast<std::size_t>(p[m])], static_cast<int>(m + 1));
            mask |= colour_bit(col_[rank]);
        }
        return mask;
    }

    // visit(mask, set) for every d-set with largest element `top`, in colex
    // order. Returns early once `stop` is raised.
    template <class Visit>
    void scan_top(int top, const std::atomic<bool>& stop, Visit&& visit) const {
        std::array<Vertex, kMaxSetSize> s{};
        const std::span<const Vertex> set(s.data(), static_cast<std::size_t>(d_));
        if (d_ == r_ + 1) {
            // Dropping position j >= 1 gives rank s0 + K[j]; dropping 0 gives R0.
            std::array<std::uint64_t, kMaxUniformity + 2> K{};
            for_each_subset_with_top(top, d_ - 1, [&](std::span<const Vertex> upper) {
                if (upper[0] == 0 || stop.load(std::memory_order_relaxed)) return;
                for (int i = 1; i < d_; ++i) s[static_cast<std::size_t>(i)] = upper[static_cast<std::size_t>(i - 1)];
                std::uint64_t r0 = 0;
                for (int i = 1; i < d_; ++i) r0 += small_binomial(s[static_cast<std::size_t>(i)], i);
                for (int j = 1; j < d_; ++j) {
                    std::uint64_t k = 0;
                    for (int i = 1; i < j; ++i) k += small_binomial(s[static_cast<std::size_t>(i)], i + 1);
                    for (int i = j + 1; i < d_; ++i) k += small_binomial(s[static_cast<std::size_t>(i)], i);
                    K[static_cast<std::size_t>(j)] = k;
                }
                const ColourMask base = colour_bit(col_[r0]);
                const int s1 = s[1];
                for (int s0 = 0; s0 < s1; ++s0) {
                    ColourMask mask = base;
                    for (int j = 1; j < d_; ++j) mask |= colour_bit(col_[static_cast<std::uint64_t>(s0) + K[static_cast<std::size_t>(j)]]);
                    s[0] = s0;
                    visit(mask, set);
                }
            });
            return;
        }
        if (r_ == 2) {
            // Edge {v,w} with v < w has rank C(w,2) + v, so the colours from a
            // new lowest vertex v to each chosen w are contiguous in v.
            s[static_cast<std::size_t>(d_ - 1)] = top;
            scan_pairs(d_ - 2, 0, s, stop, visit);
            return;
        }
        for_each_subset_with_top(top, d_, [&](std::span<const Vertex> t) {
            if (stop.load(std::memory_order_relaxed)) return;
            std::copy(t.begin(), t.end(), s.begin());
            visit(mask_of(set), set);
        });
    }

    template <class Visit>
    void scan_pairs(int pos, ColourMask mask, std::array<Vertex, kMaxSetSize>& s, const std::atomic<bool>& stop,
                    Visit& visit) const {
        const auto upos = static_cast<std::size_t>(pos);
        std::array<const std::uint8_t*, kMaxSetSize> rows{};
        for (int j = pos + 1; j < d_; ++j)
            rows[static_cast<std::size_t>(j)] = col_ + small_binomial(s[static_cast<std::size_t>(j)], 2);
        const std::span<const Vertex> set(s.data(), static_cast<std::size_t>(d_));
        for (int v = pos; v < s[upos + 1]; ++v) {
            if (pos == 0 && stop.load(std::memory_order_relaxed)) return;
            ColourMask m = mask;
            for (int j = pos + 1; j < d_; ++j) m |= colour_bit(rows[static_cast<std::size_t>(j)][v]);
            s[upos] = v;
            if (pos == 0)
                visit(m, set);
            else
                scan_pairs(pos - 1, m, s, stop, visit);
        }
    }

    // Runs make_state() per worker and scan_top over all tops; returns states.
    template <class State, class Visit>
    std::vector<State> scan_all(int workers, std::atomic<bool>& stop, Visit visit) const {
        const int n = c_.n();
        const int tops = n - d_ + 1;
        workers = std::max(1, workers);
        std::vector<State> states(static_cast<std::size_t>(std::min(workers, std::max(tops, 1))));
        parallel_tasks(tops, static_cast<int>(states.size()), [&](int task, int worker) {
            const int top = n - 1 - task;
            auto& st = states[static_cast<std::size_t>(worker)];
            scan_top(top, stop, [&](ColourMask mask, std::span<const Vertex> set) { visit(st, mask, set, top, stop); });
        });
        return states;
    }

    template <class Visit>
    void scan_sampled(std::uint64_t samples, std::uint64_t seed, Visit&& visit) const {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> pick(0, c_.n() - 1);
        std::array<Vertex, kMaxSetSize> s{};
        const std::span<Vertex> set(s.data(), static_cast<std::size_t>(d_));
        for (std::uint64_t i = 0; i < samples; ++i) {
            for (int j = 0; j < d_; ++j) {
                Vertex v;
                do {
                    v = pick(rng);
                } while (std::find(s.begin(), s.begin() + j, v) != s.begin() + j);
                s[static_cast<std::size_t>(j)] = v;
            }
            std::sort(set.begin(), set.end());
            visit(mask_of(set), std::span<const Vertex>(set));
        }
    }

private:
    const EdgeColouring& c_;
    int d_;
    int r_;
    const std::uint8_t* col_;
    std::vector<std::vector<int>> patterns_;
};

void check_set_size(const EdgeColouring& c, int d) {
    if (d < c.r() || d > c.n())
        throw std::invalid_argument("set size d=" + std::to_string(d) + " outside " + std::to_string(c.r()) +
                                    ".." + std::to_string(c.n()));
    if (d > kMaxSetSize) throw std::invalid_argument("set size d=" + std::to_string(d) + " too large");
}

struct Witness {
    int top = -1;
    std::vector<Vertex> set;

    // Tops are scanned in colex order within a task, so the first hit for a
    // smaller top is the colex-smaller witness.
    void offer(int t, std::span<const Vertex> s) {
        if (top < 0 || t < top) {
            top = t;
            set.assign(s.begin(), s.end());
        }
    }
};

}  // namespace

MulticolouredResult multicoloured_family(const EdgeColouring& c, int d, const EnumerationOptions& options) {
    check_set_size(c, d);
    const SetScanner scanner(c, d);
    const auto need = static_cast<int>(scanner.sub_edges());

    struct State {
        std::unordered_set<ColourMask> masks;
        std::uint64_t raw = 0;
        std::uint64_t visited = 0;
        Witness witness;
    };
    MulticolouredResult res;
    res.d = d;
    std::vector<State> states;
    std::atomic<bool> stop{false};
    if (options.sample > 0) {
        res.mode = EnumerationMode::Sampled;
        states.resize(1);
        auto& st = states[0];
        scanner.scan_sampled(options.sample, options.seed, [&](ColourMask mask, std::span<const Vertex> set) {
            ++st.visited;
            if (std::popcount(mask) == need) {
                ++st.raw;
                st.masks.insert(mask);
                st.witness.offer(set.back(), set);
            }
        });
    } else {
        res.mode = options.early_exit ? EnumerationMode::EarlyExit : EnumerationMode::Exhaustive;
        const bool early = options.early_exit;
        states = scanner.scan_all<State>(
            options.workers, stop,
            [&](State& st, ColourMask mask, std::span<const Vertex> set, int top, std::atomic<bool>& flag) {
                ++st.visited;
                if (std::popcount(mask) != need) return;
                ++st.raw;
                st.masks.insert(mask);
                st.witness.offer(top, set);
                if (early) flag.store(true, std::memory_order_relaxed);
            });
    }
    std::vector<ColourMask> all;
    Witness best;
    for (auto& st : states) {
        all.insert(all.end(), st.masks.begin(), st.masks.end());
        res.raw_count += st.raw;
        res.visited += st.visited;
        if (st.witness.top >= 0) best.offer(st.witness.top, st.witness.set);
    }
    res.family = ColourSetFamily::from_masks(c.k(), all);
    if (best.top >= 0) res.witness = best.set;
    return res;
}

TricolouredResult tricoloured_count(const EdgeColouring& c, int threshold, const EnumerationOptions& options) {
    const int d = c.r() + 1;
    check_set_size(c, d);
    if (threshold < 1) throw std::invalid_argument("threshold must be positive");
    const SetScanner scanner(c, d);

    struct State {
        std::uint64_t at_least = 0;
        std::uint64_t exactly = 0;
        std::uint64_t visited = 0;
        Witness witness;
    };
    TricolouredResult res;
    res.threshold = threshold;
    std::vector<State> states;
    std::atomic<bool> stop{false};
    auto tally = [threshold](State& st, ColourMask mask, std::span<const Vertex> set, int top) {
        ++st.visited;
        const int colours = std::popcount(mask);
        if (colours < threshold) return false;
        ++st.at_least;
        if (colours == threshold) ++st.exactly;
        st.witness.offer(top, set);
        return true;
    };
    if (options.sample > 0) {
        res.mode = EnumerationMode::Sampled;
        states.resize(1);
        scanner.scan_sampled(options.sample, options.seed, [&](ColourMask mask, std::span<const Vertex> set) {
            tally(states[0], mask, set, set.back());
        });
    } else {
        res.mode = options.early_exit ? EnumerationMode::EarlyExit : EnumerationMode::Exhaustive;
        const bool early = options.early_exit;
        states = scanner.scan_all<State>(
            options.workers, stop,
            [&](State& st, ColourMask mask, std::span<const Vertex> set, int top, std::atomic<bool>& flag) {
                if (tally(st, mask, set, top) && early) flag.store(true, std::memory_order_relaxed);
            });
    }
    Witness best;
    for (auto& st : states) {
        res.at_least += st.at_least;
        res.exactly += st.exactly;
        res.visited += st.visited;
        if (st.witness.top >= 0) best.offer(st.witness.top, st.witness.set);
    }
    if (best.top >= 0) res.witness = best.set;
    return res;
}

MaxColoursResult max_colours_on_d_set(const EdgeColouring& c, int d, int workers) {
    if (c.r() != 2) throw std::invalid_argument("max_colours_on_d_set needs a 2-colouring");
    check_set_size(c, d);
    const SetScanner scanner(c, d);
    struct State {
        int max = 0;
        std::uint64_t visited = 0;
        Witness witness;
    };
    std::atomic<bool> stop{false};
    auto states = scanner.scan_all<State>(
        workers, stop, [&](State& st, ColourMask mask, std::span<const Vertex> set, int top, std::atomic<bool>&) {
            ++st.visited;
            const int colours = std::popcount(mask);
            if (colours > st.max) {
                st.max = colours;
                st.witness = Witness{};
                st.witness.offer(top, set);
            } else if (colours == st.max) {
                st.witness.offer(top, set);
            }
        });
    MaxColoursResult res;
    res.d = d;
    Witness best;
    for (auto& st : states) {
        res.visited += st.visited;
        if (st.max > res.max) {
            res.max = st.max;
            best = st.witness;
        } else if (st.max == res.max && st.witness.top >= 0) {
            best.offer(st.witness.top, st.witness.set);
        }
    }
    res.witness = best.set;
    return res;
}

}  // namespace gallai
