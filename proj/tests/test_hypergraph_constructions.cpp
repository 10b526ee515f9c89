#include <gtest/gtest.h>

#include "gallai/connectivity.hpp"
#include "gallai/enumeration.hpp"
#include "gallai/hypergraph_constructions.hpp"
#include "gallai/relabel.hpp"
#include "oracle.hpp"

using namespace gallai;

namespace {

bool every_class(const EdgeColouring& c, Notion notion) {
    for (Colour i = 1; i <= c.k(); ++i)
        if (!is_connected(colour_class(c, i), c.n(), notion, false).ok()) return false;
    return true;
}

std::uint64_t oracle_tricoloured(const EdgeColouring& c) {
    const auto m = oracle::colour_map(c);
    std::uint64_t count = 0;
    for (const auto& s : oracle::subsets_colex(c.n(), c.r() + 1)) {
        std::set<int> cols;
        for (const auto& e : oracle::sub_edges(s, c.r())) cols.insert(m.at(e));
        count += cols.size() >= 3;
    }
    return count;
}

}  // namespace

TEST(PointwiseCycles, K13FourColours) {
    const auto c = pointwise_cycles_colouring(4, 13);
    const auto sizes = c.class_sizes();
    EXPECT_EQ(sizes[1], 13u);
    EXPECT_EQ(sizes[2], 13u);
    EXPECT_EQ(sizes[3], 13u);
    EXPECT_EQ(sizes[4], 286u - 39u);
    for (Colour i = 1; i <= 4; ++i)
        EXPECT_TRUE(oracle::pointwise_connected(13, oracle::class_edges(c, i)));
    long long raw = -1;
    EXPECT_TRUE(oracle::multicoloured_family(c, 4, &raw).empty());
    EXPECT_EQ(raw, 0);
    const auto res = multicoloured_family(c, 4);
    EXPECT_EQ(res.visited, 715u);
    EXPECT_EQ(res.raw_count, 0u);
    const auto tri = tricoloured_count(c);
    EXPECT_GT(tri.at_least, 0u);
    EXPECT_EQ(tri.at_least, oracle_tricoloured(c));
}

TEST(PointwiseCycles, TwoColoursIsTheTightCycle) {
    const auto c = pointwise_cycles_colouring(2, 7);
    std::vector<std::vector<Vertex>> expected;
    for (int j = 0; j < 7; ++j) {
        std::vector<Vertex> e{j, (j + 1) % 7, (j + 2) % 7};
        std::sort(e.begin(), e.end());
        expected.push_back(e);
    }
    std::sort(expected.begin(), expected.end());
    auto got = colour_class(c, 1).edges();
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, expected);
    EXPECT_EQ(c.class_sizes()[2], 28u);
}

TEST(PointwiseCycles, Preconditions) {
    EXPECT_THROW(pointwise_cycles_colouring(4, 15), std::invalid_argument);
    EXPECT_THROW(pointwise_cycles_colouring(4, 5), std::invalid_argument);
    EXPECT_THROW(pointwise_cycles_colouring(1, 7), std::invalid_argument);
}

TEST(DistanceTypes, Examples) {
    const std::vector<Vertex> a{1, 2, 4}, b{0, 1, 2}, c{0, 4, 8};
    EXPECT_EQ(type_of(a).d, (std::array<int, 3>{1, 2, 3}));
    EXPECT_EQ(type_of(b).d, (std::array<int, 3>{1, 1, 2}));
    EXPECT_EQ(type_of(c).d, (std::array<int, 3>{4, 4, 8}));
    EXPECT_EQ(type_of(a).to_string(), "123");
    EXPECT_EQ((DistanceType{{1, 4, 5}}).times(2).d, (std::array<int, 3>{2, 7, 8}));
    const std::vector<Vertex> dup{1, 1, 2}, out{0, 1, 17};
    EXPECT_THROW(type_of(dup), std::invalid_argument);
    EXPECT_THROW(type_of(out), std::invalid_argument);
}

TEST(DistanceTypes, PartitionOfTheTwentyFourTypes) {
    const auto all = realisable_types();
    EXPECT_EQ(all.size(), 24u);
    EXPECT_EQ(std::count_if(all.begin(), all.end(), [](const auto& t) { return t.special(); }), 8);
    const auto rep = check_k17_types();
    EXPECT_TRUE(rep.partition);
    for (std::size_t m = 0; m < 4; ++m) {
        EXPECT_EQ(rep.size_per_class[m], 6u);
        EXPECT_EQ(rep.special_per_class[m], 2u);
    }
}

TEST(K17, Properties) {
    const auto c = k17_colouring();
    EXPECT_EQ(c.k(), 4);
    const std::vector<Vertex> e012{0, 1, 2};
    EXPECT_EQ(c.colour_of(e012), 1);
    const std::vector<Vertex> t278{0, 2, 10};  // distances 2, 10->7, 8
    EXPECT_EQ(type_of(t278).d, (std::array<int, 3>{2, 7, 8}));
    EXPECT_EQ(c.colour_of(t278), 2);
    for (Colour i = 1; i <= 4; ++i)
        EXPECT_TRUE(oracle::strongly_connected(17, 3, oracle::class_edges(c, i))) << "colour " << i;
    EXPECT_TRUE(every_class(c, Notion::Strong));
    long long raw = -1;
    EXPECT_TRUE(oracle::multicoloured_family(c, 4, &raw).empty());
    EXPECT_EQ(multicoloured_family(c, 4).raw_count, 0u);
    std::vector<Vertex> doubling(17);
    for (int x = 0; x < 17; ++x) doubling[static_cast<std::size_t>(x)] = 2 * x % 17;
    EXPECT_TRUE(classes_isomorphic_under(c, doubling).pass);
    // The quoted strong path from {0,1} to {5,9} in colour 1.
    const auto h = colour_class(c, 1);
    const std::vector<std::vector<Vertex>> path{{0, 1, 2}, {0, 2, 5}, {2, 5, 9}};
    EXPECT_TRUE(is_strong_path(h, path, std::vector<Vertex>{0, 1}, std::vector<Vertex>{5, 9}));
}

TEST(Relabel, IsomorphismChecks) {
    const auto cyc = EdgeColouring::from_function(7, 2, 3, [](std::span<const Vertex> e) {
        const int d = e[1] - e[0];
        return std::min(d, 7 - d);
    });
    std::vector<Vertex> doubling(7), identity(7);
    for (int x = 0; x < 7; ++x) {
        doubling[static_cast<std::size_t>(x)] = 2 * x % 7;
        identity[static_cast<std::size_t>(x)] = x;
    }
    EXPECT_TRUE(classes_isomorphic_under(cyc, doubling).pass);
    const auto fail = classes_isomorphic_under(cyc, identity);
    EXPECT_FALSE(fail.pass);
    EXPECT_EQ(*fail.counterexample, (std::vector<Vertex>{0, 1}));
    EXPECT_THROW(classes_isomorphic_under(cyc, std::vector<Vertex>{0, 0, 1, 2, 3, 4, 5}), std::invalid_argument);
    const auto moved = relabel_vertices(cyc, doubling);
    const std::vector<Vertex> e{0, 2};
    EXPECT_EQ(moved.colour_of(e), 1);  // image of {0,1}
    const std::vector<Colour> perm{0, 3, 1, 2};
    EXPECT_EQ(relabel_colours(cyc, perm).class_sizes()[3], 7u);
}

TEST(StrongBlowup, FromMonochromaticTriple) {
    const EdgeColouring mono(3, 3, 1, {1});
    const auto s9 = strong_blowup(mono);
    EXPECT_EQ(s9.n(), 9);
    EXPECT_EQ(s9.k(), 2);
    for (Colour i = 1; i <= 2; ++i) EXPECT_TRUE(oracle::strongly_connected(9, 3, oracle::class_edges(s9, i)));
    long long raw = -1;
    oracle::multicoloured_family(s9, 4, &raw);
    EXPECT_EQ(raw, 0);
    const auto s81 = strong_blowup(s9);
    EXPECT_EQ(s81.n(), 81);
    EXPECT_EQ(s81.k(), 3);
    EXPECT_EQ(s81.edge_count(), binomial(81, 3));
    EXPECT_TRUE(every_class(s81, Notion::Strong));
    const auto res = multicoloured_family(s81, 4);
    EXPECT_EQ(res.visited, 1'663'740u);
    EXPECT_EQ(res.raw_count, 0u);
}

TEST(StrongBlowup, CaseFormula) {
    const auto k17 = k17_colouring();
    const auto s = strong_blowup(k17);
    const int n = 17;
    auto v = [n](int i, int x) { return blowup_vertex(n, i, x); };
    // distinct blocks -> c on blocks
    EXPECT_EQ(s.colour_of(std::vector<Vertex>{v(0, 5), v(1, 5), v(2, 5)}), k17.colour_of(std::vector<Vertex>{0, 1, 2}));
    // repeated block, distinct inner indices -> c on inner indices
    EXPECT_EQ(s.colour_of(std::vector<Vertex>{v(3, 0), v(3, 4), v(9, 8)}), k17.colour_of(std::vector<Vertex>{0, 4, 8}));
    // otherwise the new colour
    EXPECT_EQ(s.colour_of(std::vector<Vertex>{v(3, 0), v(3, 4), v(9, 4)}), 5);
}

TEST(StrongBlowup, RejectsBadInput) {
    const auto cyc = pointwise_cycles_colouring(2, 7);  // class 1 is not strongly connected
    EXPECT_THROW(strong_blowup(cyc), std::invalid_argument);
    EXPECT_NO_THROW(strong_blowup(cyc, false));
}

TEST(CoveringBlowup, Chain) {
    const EdgeColouring mono(4, 3, 1, {1, 1, 1, 1});
    const auto c16 = covering_blowup(mono);
    EXPECT_EQ(c16.n(), 16);
    for (Colour i = 1; i <= 2; ++i) EXPECT_TRUE(oracle::covering(16, 3, oracle::class_edges(c16, i)));
    EXPECT_EQ(oracle_tricoloured(c16), 0u);
    const auto c256 = covering_blowup(c16);
    EXPECT_EQ(c256.n(), 256);
    EXPECT_EQ(c256.k(), 3);
    EXPECT_TRUE(every_class(c256, Notion::Covering));
    EXPECT_EQ(c256.colour_of(std::vector<Vertex>{blowup_vertex(16, 1, 0), blowup_vertex(16, 1, 1), blowup_vertex(16, 1, 5)}),
              c16.colour_of(std::vector<Vertex>{0, 1, 5}));
}

TEST(CoveringBlowup, RejectsTricolouredInput) {
    EXPECT_THROW(covering_blowup(pointwise_cycles_colouring(4, 13)), std::invalid_argument);
}

TEST(Parity, ExtensionsAndCoverage) {
    const auto p = parity_covering_2colouring(6);
    EXPECT_EQ(p.colour_of(std::vector<Vertex>{0, 1, 2, 3}), 1);
    EXPECT_EQ(p.colour_of(std::vector<Vertex>{0, 1, 2, 4}), 2);
    // {0,2,4} only extends by odd vertices at n = 6 and 7, so the even class
    // is not a covering there; from n = 8 both classes are.
    for (int n = 6; n <= 10; ++n) {
        const auto c = parity_covering_2colouring(n);
        const bool expected = n >= 8;
        EXPECT_EQ(oracle::covering(n, 4, oracle::class_edges(c, 1)), expected) << n;
        EXPECT_TRUE(oracle::covering(n, 4, oracle::class_edges(c, 2))) << n;
        EXPECT_EQ(is_connected(colour_class(c, 1), n, Notion::Covering).ok(), expected);
    }
    const auto fail = is_connected(colour_class(p, 1), 6, Notion::Covering);
    EXPECT_EQ(fail.witness.target, (std::vector<Vertex>{0, 2, 4}));
    EXPECT_THROW(parity_covering_2colouring(5), std::invalid_argument);
    EXPECT_THROW(parity_covering_2colouring(8, {1, 1}), std::invalid_argument);
}

TEST(Parity, NoCoveringTwoColouringOfK6Exists) {
    // Both classes covering would 2-colour the complementary pairs of K_6
    // with no monochromatic triangle. Check all 2^15 colourings directly.
    const auto quads = oracle::subsets_colex(6, 4);
    const auto triples = oracle::subsets_colex(6, 3);
    for (int mask = 0; mask < (1 << 15); ++mask) {
        bool covering[2] = {true, true};
        for (const auto& t : triples) {
            bool in[2] = {false, false};
            for (std::size_t q = 0; q < quads.size(); ++q)
                if (std::includes(quads[q].begin(), quads[q].end(), t.begin(), t.end())) in[mask >> q & 1] = true;
            covering[0] = covering[0] && in[0];
            covering[1] = covering[1] && in[1];
        }
        ASSERT_FALSE(covering[0] && covering[1]) << mask;
    }
}

TEST(Covering4Graph, CaseFormula) {
    const auto c = parity_covering_2colouring(8);
    const auto d = parity_covering_2colouring(8, {2, 1});
    const auto out = covering_4graph_colouring(c, d);
    EXPECT_EQ(out.n(), 64);
    auto v = [](int i, int x) { return blowup_vertex(8, i, x); };
    EXPECT_EQ(out.colour_of(std::vector<Vertex>{v(1, 0), v(1, 1), v(2, 0), v(3, 0)}), kRed);
    EXPECT_EQ(out.colour_of(std::vector<Vertex>{v(1, 0), v(1, 1), v(2, 0), v(2, 5)}), kBlue);
    EXPECT_EQ(out.colour_of(std::vector<Vertex>{v(1, 0), v(1, 1), v(1, 2), v(4, 0)}), kGreen);
    EXPECT_EQ(out.colour_of(std::vector<Vertex>{v(1, 0), v(1, 1), v(1, 2), v(1, 4)}),
              c.colour_of(std::vector<Vertex>{0, 1, 2, 4}));
    // d colour 1 -> blue, 2 -> green; d({0,1,2,4}) = 1 since the sum is odd.
    EXPECT_EQ(out.colour_of(std::vector<Vertex>{v(0, 3), v(1, 3), v(2, 3), v(4, 3)}), kBlue);
    EXPECT_TRUE(every_class(out, Notion::Covering));
    const auto tri = tricoloured_count(out);
    EXPECT_EQ(tri.visited, binomial(64, 5));
    EXPECT_EQ(tri.at_least, 0u);
}

TEST(Covering4Graph, SixVertexParityBasesAreRejected) {
    const auto p = parity_covering_2colouring(6);
    EXPECT_THROW(covering_4graph_colouring(p, p), std::invalid_argument);
    const auto out = covering_4graph_colouring(p, p, false);
    EXPECT_EQ(out.n(), 36);
    EXPECT_FALSE(every_class(out, Notion::Covering));
    EXPECT_EQ(tricoloured_count(out).at_least, 0u);
}

TEST(MinimalThreeGraph, SmallCases) {
    EXPECT_EQ(minimal_connected_3graph(2).size(), 0u);
    EXPECT_EQ(is_connected(minimal_connected_3graph(2), 2, Notion::Strong).verdict, Verdict::Degenerate);
    EXPECT_EQ(minimal_connected_3graph(3).size(), 1u);
    EXPECT_EQ(minimal_connected_3graph(4).edges(),
              (std::vector<std::vector<Vertex>>{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}}));
    EXPECT_EQ(minimal_connected_3graph(5).size(), 5u);
    EXPECT_EQ(minimal_connected_3graph(6).size(), 7u);
    EXPECT_THROW(minimal_connected_3graph(1), std::invalid_argument);
}

TEST(MinimalThreeGraph, SizesAndConnectivityUpToThirty) {
    for (int n = 3; n <= 30; ++n) {
        const auto h = minimal_connected_3graph(n);
        EXPECT_EQ(h.size(), binomial(static_cast<std::uint64_t>(n), 2) / 2) << n;
        EXPECT_EQ(is_connected(h, n, Notion::Strong).verdict, Verdict::Pass) << n;
        const auto rep = pair_graph_report(h);
        EXPECT_TRUE(rep.reduced_connected) << n;
        EXPECT_TRUE(rep.bound_respected) << n;
        if (n <= 12) EXPECT_TRUE(oracle::strongly_connected(n, 3, h.edges())) << n;
    }
}
