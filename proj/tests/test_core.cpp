#include <gtest/gtest.h>

#include <numeric>
#include <sstream>

#include "gallai/colour_set_family.hpp"
#include "gallai/colouring.hpp"
#include "gallai/colouring_io.hpp"
#include "oracle.hpp"

using namespace gallai;

namespace {

EdgeColouring cyclic7() {
    return EdgeColouring::from_function(7, 2, 3, [](std::span<const Vertex> e) {
        const int d = e[1] - e[0];
        return std::min(d, 7 - d);
    });
}

}  // namespace

TEST(Ranking, KnownValues) {
    const std::vector<Vertex> first{0, 1, 2}, last{2, 3, 4}, mid{0, 2, 3};
    EXPECT_EQ(rank_subset(first, 5, 3), 0u);
    EXPECT_EQ(rank_subset(last, 5, 3), 9u);
    EXPECT_EQ(rank_subset(mid, 5, 3), 2u);
    const std::vector<Vertex> unsorted{3, 0, 2};
    EXPECT_EQ(rank_subset(unsorted, 5, 3), 2u);
}

TEST(Ranking, RejectsBadInput) {
    const std::vector<Vertex> out_of_range{0, 1, 5}, dup{1, 1, 2}, short_set{0, 1};
    EXPECT_THROW(rank_subset(out_of_range, 5, 3), std::invalid_argument);
    EXPECT_THROW(rank_subset(dup, 5, 3), std::invalid_argument);
    EXPECT_THROW(rank_subset(short_set, 5, 3), std::invalid_argument);
    EXPECT_THROW(unrank_subset(10, 5, 3), std::invalid_argument);
}

TEST(Ranking, ExhaustiveRoundTripMatchesColexOrder) {
    for (int r = 1; r <= 4; ++r)
        for (int n = r; n <= 25; ++n) {
            const auto all = oracle::subsets_colex(n, r);
            ASSERT_EQ(all.size(), binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(r)));
            for (std::size_t i = 0; i < all.size(); ++i) {
                ASSERT_EQ(rank_subset(all[i], n, r), i);
                ASSERT_EQ(unrank_subset(i, n, r), all[i]);
            }
        }
}

TEST(Ranking, ForEachSubsetVisitsColexOrder) {
    std::vector<std::vector<Vertex>> seen;
    for_each_subset(7, 3, [&](std::span<const Vertex> s) { seen.emplace_back(s.begin(), s.end()); });
    EXPECT_EQ(seen, oracle::subsets_colex(7, 3));
}

TEST(Ranking, Binomial) {
    EXPECT_EQ(binomial(5, 2), 10u);
    EXPECT_EQ(binomial(289, 4), 284'660'376u);
    EXPECT_EQ(binomial(3, 5), 0u);
    EXPECT_EQ(binomial(1000, 500), UINT64_MAX);
}

TEST(EdgeColouringTest, ValidatesInvariants) {
    EXPECT_THROW(EdgeColouring(3, 2, 2, {1, 1, 1}), std::invalid_argument);  // colour 2 unused
    EXPECT_THROW(EdgeColouring(3, 2, 1, {1, 1}), std::invalid_argument);     // wrong size
    EXPECT_THROW(EdgeColouring(3, 2, 1, {1, 0, 1}), std::invalid_argument);  // colour 0
    EXPECT_THROW(EdgeColouring(2, 3, 1, {}), std::invalid_argument);         // n < r
    EXPECT_NO_THROW(EdgeColouring(3, 2, 2, {1, 2, 1}));
}

TEST(EdgeColouringTest, FromFunctionIndependentOfWorkers) {
    auto f = [](std::span<const Vertex> e) { return (e[0] + 2 * e[1] + 3 * e[2]) % 4 + 1; };
    const auto a = EdgeColouring::from_function(12, 3, 4, f, 1);
    const auto b = EdgeColouring::from_function(12, 3, 4, f, 3);
    EXPECT_EQ(a, b);
    for (const auto& e : oracle::subsets_colex(12, 3)) EXPECT_EQ(a.colour_of(e), f(e));
}

TEST(ColourClass, MonochromaticK4) {
    const EdgeColouring c(4, 2, 1, std::vector<std::uint8_t>(6, 1));
    EXPECT_EQ(colour_class(c, 1).size(), 6u);
    EXPECT_THROW(colour_class(c, 2), std::invalid_argument);
    EXPECT_THROW(colour_class(c, 0), std::invalid_argument);
}

TEST(ColourClass, CyclicK7ClassOneIsTheSevenCycle) {
    const auto h = colour_class(cyclic7(), 1);
    std::vector<std::vector<Vertex>> expected;
    for (int x = 0; x < 7; ++x) {
        std::vector<Vertex> e{x, (x + 1) % 7};
        std::sort(e.begin(), e.end());
        expected.push_back(e);
    }
    std::sort(expected.begin(), expected.end());
    auto got = h.edges();
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, expected);
}

TEST(ColourClass, ClassesPartitionEdges) {
    const auto c = EdgeColouring::from_function(9, 3, 5, [](std::span<const Vertex> e) {
        return (e[0] * 7 + e[1] * 3 + e[2]) % 5 + 1;
    });
    std::vector<std::uint64_t> all;
    for (Colour i = 1; i <= c.k(); ++i) {
        const auto h = colour_class(c, i);
        all.insert(all.end(), h.ranks().begin(), h.ranks().end());
        EXPECT_EQ(h.size(), c.class_sizes()[static_cast<std::size_t>(i)]);
    }
    std::sort(all.begin(), all.end());
    std::vector<std::uint64_t> expected(c.edge_count());
    std::iota(expected.begin(), expected.end(), 0u);
    EXPECT_EQ(all, expected);
}

TEST(HypergraphTest, RejectsDuplicates) {
    EXPECT_THROW(Hypergraph::from_edges(5, 3, {{0, 1, 2}, {2, 1, 0}}), std::invalid_argument);
    EXPECT_THROW(Hypergraph::from_edges(5, 3, {{0, 1, 5}}), std::invalid_argument);
    const auto h = Hypergraph::from_edges(5, 3, {{2, 3, 4}, {0, 1, 2}});
    EXPECT_EQ(h.edge(0), (std::vector<Vertex>{0, 1, 2}));
    EXPECT_TRUE(h.contains(std::vector<Vertex>{4, 2, 3}));
}

TEST(ColourSetFamilyTest, CanonicalOrderAndValidation) {
    const ColourSetFamily f(5, {{3, 1, 2}, {1, 4, 5}});
    EXPECT_EQ(f.members()[0], (std::vector<Colour>{1, 2, 3}));
    EXPECT_EQ(f.degree(1), 2u);
    EXPECT_EQ(f.degree(4), 1u);
    EXPECT_THROW(ColourSetFamily(3, {{1, 2, 4}}), std::invalid_argument);
    EXPECT_THROW(ColourSetFamily(3, {{1, 2, 3}, {3, 2, 1}}), std::invalid_argument);
    const std::vector<Colour> perm{0, 5, 4, 3, 2, 1};
    EXPECT_EQ(f.relabelled(perm), ColourSetFamily(5, {{3, 4, 5}, {1, 2, 5}}));
}

TEST(ColouringIo, EncodeK3) {
    const EdgeColouring c(3, 2, 1, {1, 1, 1});
    EXPECT_EQ(encode(c), "gallai-colouring v1\nn=3 r=2 k=1\n0 1 1\n0 2 1\n1 2 1\n");
}

TEST(ColouringIo, RoundTripAnyLineOrder) {
    const auto c = cyclic7();
    EXPECT_EQ(decode(encode(c)), c);
    std::istringstream in(encode(c));
    std::string l1, l2, line;
    std::getline(in, l1);
    std::getline(in, l2);
    std::vector<std::string> lines;
    while (std::getline(in, line)) lines.push_back(line);
    std::reverse(lines.begin(), lines.end());
    std::string text = l1 + "\n" + l2 + "\n";
    for (const auto& l : lines) text += l + "\n";
    EXPECT_EQ(decode(text), c);
}

TEST(ColouringIo, ErrorsCarryLineNumbers) {
    const std::string header = "gallai-colouring v1\nn=3 r=2 k=2\n";
    auto line_of = [](const std::string& text) -> long {
        try {
            decode(text);
        } catch (const FormatError& e) {
            return static_cast<long>(e.line());
        }
        return -1;
    };
    EXPECT_EQ(line_of("gallai-colouring v2\nn=3 r=2 k=2\n"), 1);
    EXPECT_EQ(line_of("gallai-colouring v1\nn=3 r=2\n"), 2);
    EXPECT_EQ(line_of(header + "0 1 1\n0 2 3\n1 2 2\n"), 4);  // colour out of range
    EXPECT_EQ(line_of(header + "0 1 1\n1 0 2\n1 2 2\n"), 4);  // not increasing
    EXPECT_EQ(line_of(header + "0 1 1\n0 1 2\n1 2 2\n"), 4);  // duplicate
    EXPECT_EQ(line_of(header + "0 1 1\n0 2 2\n"), 0);          // missing edge
    try {
        decode(header + "0 1 1\n0 2 2\n");
        FAIL();
    } catch (const FormatError& e) {
        EXPECT_NE(std::string(e.what()).find("incomplete colouring"), std::string::npos);
    }
    EXPECT_THROW(decode(header + "0 1 1\n0 2 1\n1 2 1\n"), FormatError);  // colour 2 unused
}

TEST(ColouringIo, HypergraphRoundTrip) {
    const auto h = Hypergraph::from_edges(6, 3, {{0, 1, 2}, {1, 2, 5}, {0, 3, 4}});
    std::stringstream ss;
    encode_hypergraph(h, ss);
    EXPECT_EQ(decode_hypergraph(ss), h);
}
