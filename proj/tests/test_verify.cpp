#include <gtest/gtest.h>

#include <random>

#include "gallai/connectivity.hpp"
#include "gallai/enumeration.hpp"
#include "gallai/family_checks.hpp"
#include "oracle.hpp"

using namespace gallai;

namespace {

Hypergraph tight_cycle(int n) {
    std::vector<std::vector<Vertex>> edges;
    for (int j = 0; j < n; ++j) edges.push_back({j, (j + 1) % n, (j + 2) % n});
    return Hypergraph::from_edges(n, 3, edges);
}

EdgeColouring cyclic(int k) {
    const int n = 2 * k + 1;
    return EdgeColouring::from_function(n, 2, k, [n](std::span<const Vertex> e) {
        const int d = e[1] - e[0];
        return std::min(d, n - d);
    });
}

EdgeColouring random_colouring(std::mt19937& rng, int n, int r, int k) {
    std::vector<std::uint8_t> cols(binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(r)));
    std::uniform_int_distribution<int> pick(1, k);
    for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = static_cast<std::uint8_t>(i < static_cast<std::size_t>(k) ? i + 1 : pick(rng));
    std::shuffle(cols.begin(), cols.end(), rng);
    return EdgeColouring(n, r, k, std::move(cols));
}

}  // namespace

TEST(Connectivity, CompleteThreeGraphIsStrong) {
    const EdgeColouring c(5, 3, 1, std::vector<std::uint8_t>(10, 1));
    const auto res = is_connected(colour_class(c, 1), 5, Notion::Strong);
    EXPECT_EQ(res.verdict, Verdict::Pass);
    ASSERT_EQ(res.witness.kind, ConnectivityWitness::Kind::Path);
    EXPECT_TRUE(is_strong_path(colour_class(c, 1), res.witness.path, res.witness.source, res.witness.target));
}

TEST(Connectivity, TightCycleIsPointwiseButNotStrong) {
    const auto h = tight_cycle(7);
    EXPECT_EQ(is_connected(h, 7, Notion::Pointwise).verdict, Verdict::Pass);
    const auto strong = is_connected(h, 7, Notion::Strong);
    EXPECT_EQ(strong.verdict, Verdict::Fail);
    EXPECT_EQ(strong.witness.kind, ConnectivityWitness::Kind::Uncovered);
    EXPECT_EQ(strong.witness.target, (std::vector<Vertex>{0, 3}));
    EXPECT_EQ(is_connected(h, 7, Notion::Covering).verdict, Verdict::Fail);
}

TEST(Connectivity, SplitClassGivesUnreachable) {
    const auto k4 = Hypergraph::from_edges(4, 3, {{0, 1, 2}, {0, 2, 3}, {1, 2, 3}, {0, 1, 3}});
    EXPECT_EQ(is_connected(k4, 4, Notion::Strong).verdict, Verdict::Pass);
    const auto split = Hypergraph::from_edges(6, 3, {{0, 1, 2}, {3, 4, 5}});
    const auto res = is_connected(split, 6, Notion::Pointwise);
    EXPECT_EQ(res.verdict, Verdict::Fail);
    EXPECT_EQ(res.witness.kind, ConnectivityWitness::Kind::Unreachable);
    EXPECT_EQ(res.witness.target, (std::vector<Vertex>{3}));
}

TEST(Connectivity, GraphNotion) {
    const auto c = cyclic(3);
    for (Colour i = 1; i <= 3; ++i) EXPECT_EQ(is_connected(colour_class(c, i), 7, Notion::Graph).verdict, Verdict::Pass);
    const auto two_triangles = Hypergraph::from_edges(6, 2, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    const auto res = is_connected(two_triangles, 6, Notion::Graph);
    EXPECT_EQ(res.verdict, Verdict::Fail);
    EXPECT_EQ(res.witness.target, (std::vector<Vertex>{3}));
    EXPECT_THROW(is_connected(tight_cycle(7), 7, Notion::Graph), std::invalid_argument);
    EXPECT_THROW(is_connected(tight_cycle(7), 8, Notion::Strong), std::invalid_argument);
}

TEST(Connectivity, DegenerateBelowUniformity) {
    const Hypergraph empty(2, 3, {});
    EXPECT_EQ(is_connected(empty, 2, Notion::Strong).verdict, Verdict::Degenerate);
    const Hypergraph empty3(3, 3, {});
    EXPECT_EQ(is_connected(empty3, 3, Notion::Strong).verdict, Verdict::Fail);
}

TEST(Connectivity, AgreesWithOracleOnRandomClasses) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const int r = 3 + trial % 2;
        const int n = r + 1 + static_cast<int>(rng() % 4);
        const int k = 1 + static_cast<int>(rng() % 3);
        const auto c = random_colouring(rng, n, r, k);
        for (Colour i = 1; i <= k; ++i) {
            const auto h = colour_class(c, i);
            const auto edges = oracle::class_edges(c, i);
            const auto strong = is_connected(h, n, Notion::Strong);
            ASSERT_EQ(strong.ok(), oracle::strongly_connected(n, r, edges));
            ASSERT_EQ(is_connected(h, n, Notion::Covering).ok(), oracle::covering(n, r, edges));
            ASSERT_EQ(is_connected(h, n, Notion::Pointwise).ok(), oracle::pointwise_connected(n, edges));
            if (strong.ok())
                ASSERT_TRUE(is_strong_path(h, strong.witness.path, strong.witness.source, strong.witness.target));
        }
    }
}

TEST(PairGraph, BoundOnSmallGraphs) {
    const auto k4_minus = Hypergraph::from_edges(4, 3, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}});
    const auto rep = pair_graph_report(k4_minus);
    EXPECT_EQ(rep.nodes, 6u);
    EXPECT_EQ(rep.implied_min_edges, 3u);
    EXPECT_TRUE(rep.connected);
    EXPECT_TRUE(rep.reduced_connected);
    EXPECT_TRUE(rep.bound_respected);
}

TEST(Multicoloured, CyclicFamilies) {
    const auto res = multicoloured_family(cyclic(5), 3);
    EXPECT_EQ(res.family.size(), 5u);
    EXPECT_EQ(res.visited, 165u);
    for (Colour i = 1; i <= 5; ++i) EXPECT_EQ(res.family.degree(i), 3u);
    EXPECT_EQ(multicoloured_family(cyclic(3), 3).family, ColourSetFamily(3, {{1, 2, 3}}));
    ASSERT_TRUE(res.witness);
    EXPECT_EQ(*res.witness, (std::vector<Vertex>{0, 1, 3}));
}

TEST(Multicoloured, Monochromatic) {
    const EdgeColouring c(6, 2, 1, std::vector<std::uint8_t>(15, 1));
    const auto res = multicoloured_family(c, 3);
    EXPECT_TRUE(res.family.empty());
    EXPECT_EQ(res.raw_count, 0u);
    EXPECT_FALSE(res.witness);
    EXPECT_THROW(multicoloured_family(c, 7), std::invalid_argument);
    EXPECT_THROW(multicoloured_family(c, 1), std::invalid_argument);
}

TEST(Multicoloured, MatchesOracleAcrossWorkersAndModes) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 120; ++trial) {
        const int r = 2 + trial % 3;
        const int n = r + 1 + static_cast<int>(rng() % 5);
        const int k = std::min(6 + static_cast<int>(rng() % 4), static_cast<int>(binomial(n, r)));
        const auto c = random_colouring(rng, n, r, k);
        for (int d = r; d <= std::min(n, r + 2); ++d) {
            long long raw = 0;
            const auto expected = oracle::multicoloured_family(c, d, &raw);
            for (int workers : {1, 3}) {
                const auto res = multicoloured_family(c, d, {workers});
                ASSERT_EQ(res.raw_count, static_cast<std::uint64_t>(raw));
                ASSERT_EQ(res.visited, binomial(n, d));
                ASSERT_EQ(res.family.size(), expected.size());
                for (const auto& m : res.family.members())
                    ASSERT_TRUE(expected.count(std::set<int>(m.begin(), m.end())));
                ASSERT_EQ(res.witness.has_value(), raw > 0);
            }
            EnumerationOptions early;
            early.early_exit = true;
            const auto e = multicoloured_family(c, d, early);
            ASSERT_EQ(e.mode, EnumerationMode::EarlyExit);
            ASSERT_EQ(e.witness.has_value(), raw > 0);
        }
    }
}

TEST(Tricoloured, CountsAgainstOracle) {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        const int r = 3 + trial % 2;
        const int n = r + 1 + static_cast<int>(rng() % 4);
        const int k = 3;
        const auto c = random_colouring(rng, n, r, k);
        const auto m = oracle::colour_map(c);
        std::uint64_t at_least = 0, exactly = 0;
        for (const auto& s : oracle::subsets_colex(n, r + 1)) {
            std::set<int> cols;
            for (const auto& e : oracle::sub_edges(s, r)) cols.insert(m.at(e));
            at_least += cols.size() >= 3;
            exactly += cols.size() == 3;
        }
        const auto res = tricoloured_count(c, 3, {2});
        ASSERT_EQ(res.at_least, at_least);
        ASSERT_EQ(res.exactly, exactly);
    }
    const EdgeColouring mono(5, 3, 1, std::vector<std::uint8_t>(10, 1));
    EXPECT_EQ(tricoloured_count(mono).at_least, 0u);
}

TEST(Tricoloured, SampledModeIsMarked) {
    std::mt19937 rng(3);
    const auto c = random_colouring(rng, 10, 3, 3);
    EnumerationOptions opts;
    opts.sample = 500;
    opts.seed = 9;
    const auto a = tricoloured_count(c, 3, opts);
    const auto b = tricoloured_count(c, 3, opts);
    EXPECT_EQ(a.mode, EnumerationMode::Sampled);
    EXPECT_EQ(a.visited, 500u);
    EXPECT_EQ(a.at_least, b.at_least);
}

TEST(MaxColours, Basics) {
    EXPECT_EQ(max_colours_on_d_set(cyclic(5), 3).max, 3);
    const EdgeColouring mono(5, 2, 1, std::vector<std::uint8_t>(10, 1));
    const auto res = max_colours_on_d_set(mono, 3);
    EXPECT_EQ(res.max, 1);
    EXPECT_EQ(res.witness, (std::vector<Vertex>{0, 1, 2}));
}

TEST(PartitionCondition, Basics) {
    std::vector<std::vector<Colour>> all;
    for (int a = 1; a <= 5; ++a)
        for (int b = a + 1; b <= 5; ++b)
            for (int c = b + 1; c <= 5; ++c) all.push_back({a, b, c});
    const auto pass = partition_condition(ColourSetFamily(5, all), 5);
    EXPECT_TRUE(pass.pass);
    EXPECT_EQ(pass.partitions_checked, 25u);  // S(5,3)
    const auto fail = partition_condition(ColourSetFamily(4), 4);
    EXPECT_FALSE(fail.pass);
    ASSERT_TRUE(fail.unhit);
    EXPECT_EQ(partition_condition(multicoloured_family(cyclic(5), 3).family, 5).pass, true);
    EXPECT_THROW(partition_condition(ColourSetFamily(2), 2), std::invalid_argument);
}

TEST(PartitionCondition, StirlingCounts) {
    // S(k,3) for k = 3..12
    const std::uint64_t expected[] = {1, 6, 25, 90, 301, 966, 3025, 9330, 28501, 86526};
    for (int k = 3; k <= 12; ++k) {
        std::uint64_t count = 0;
        for_each_three_partition(k, [&](ColourMask a, ColourMask b, ColourMask c) {
            EXPECT_TRUE(a && b && c);
            EXPECT_EQ(a & b, 0u);
            EXPECT_EQ((a | b | c), ((ColourMask{1} << (k + 1)) - 2));
            ++count;
            return true;
        });
        EXPECT_EQ(count, expected[k - 3]) << "k=" << k;
    }
}

TEST(LinkProfile, CyclicAndComplete) {
    const auto prof = link_connectivity_profile(multicoloured_family(cyclic(5), 3).family, 5);
    for (const auto& p : prof) {
        EXPECT_EQ(p.degree, 3u);
        EXPECT_TRUE(p.link_connected);
    }
    const ColourSetFamily all4(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
    for (const auto& p : link_connectivity_profile(all4, 4)) {
        EXPECT_EQ(p.degree, 3u);
        EXPECT_TRUE(p.link_connected);
    }
    // {1},{2},{3,4} is unhit and the link of colour 1 misses colour 2.
    const ColourSetFamily weak(4, {{1, 3, 4}, {2, 3, 4}});
    EXPECT_FALSE(partition_condition(weak, 4).pass);
    bool some_disconnected = false;
    for (const auto& p : link_connectivity_profile(weak, 4)) some_disconnected |= !p.link_connected;
    EXPECT_TRUE(some_disconnected);
}

TEST(SingletonChain, ExhibitsKMinusTwoMembers) {
    const auto fam = multicoloured_family(cyclic(6), 3).family;
    for (Colour p = 1; p <= 6; ++p) {
        const auto chain = singleton_chain(fam, 6, p);
        EXPECT_TRUE(chain.complete);
        EXPECT_EQ(chain.members.size(), 4u);
        for (const auto& m : chain.members) EXPECT_TRUE(std::find(m.begin(), m.end(), p) != m.end());
    }
    const auto broken = singleton_chain(ColourSetFamily(4), 4, 1);
    EXPECT_FALSE(broken.complete);
    EXPECT_TRUE(broken.unhit);
    EXPECT_EQ(partition_family_lower_bound(4), 3);
    EXPECT_EQ(partition_family_lower_bound(5), 5);
    EXPECT_EQ(partition_family_lower_bound(6), 8);
}
