#include <gtest/gtest.h>

#include "properties.hpp"

TEST(Properties, RandomisedSuiteHasNoViolations) {
    const auto tally = properties::run_suite(3000, 20261016);
    EXPECT_EQ(tally.instances, 3000);
    EXPECT_EQ(tally.colour_permutation, 0);
    EXPECT_EQ(tally.vertex_relabelling, 0);
    EXPECT_EQ(tally.implications, 0);
    EXPECT_EQ(tally.gallai, 0);
    EXPECT_GT(tally.gallai_instances, 300);
}

TEST(Properties, GallaiOnEveryConnectedThreeColouringOfSmallGraphs) {
    // Random connected 3-colourings of K_10..K_12.
    std::mt19937_64 rng(7);
    int connected = 0;
    for (int i = 0; i < 3000; ++i) {
        const auto c = properties::random_colouring(rng, 10 + i % 3, 2, 3);
        if (!properties::connected_graph_colouring(c)) continue;
        ++connected;
        EXPECT_GT(gallai::multicoloured_family(c, 3).raw_count, 0u);
    }
    EXPECT_GT(connected, 1000);
}
