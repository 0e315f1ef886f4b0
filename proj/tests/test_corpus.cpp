#include <gtest/gtest.h>

#include <map>
#include <set>

#include "hcf/corpus.hpp"
#include "hcf/oracle.hpp"

namespace hcf {
namespace {

// Known counts of connected simple graphs up to isomorphism.
TEST(Corpus, SimpleGraphClassCounts) {
    std::map<std::size_t, std::size_t> by_size;
    for (const auto& [name, g] : connected_simple_graphs(6)) {
        ++by_size[g.vertex_count()];
        for (Vertex a = 0; a < g.vertex_count(); ++a) {
            for (Vertex b = a + 1; b < g.vertex_count(); ++b) {
                EXPECT_LE(g.multiplicity(a, b), 1) << name;
            }
        }
    }
    EXPECT_EQ(by_size[2], 1U);
    EXPECT_EQ(by_size[3], 2U);
    EXPECT_EQ(by_size[4], 6U);
    EXPECT_EQ(by_size[5], 21U);
    EXPECT_EQ(by_size[6], 112U);
}

TEST(Corpus, StandardCorpus) {
    const auto corpus = standard_corpus(5, 1);
    EXPECT_EQ(corpus.size(), 2U * 30U + 4U);
    std::set<std::string> names;
    for (const auto& [name, g] : corpus) {
        EXPECT_TRUE(names.insert(name).second) << name;
        EXPECT_LE(g.vertex_count(), 5U);
    }
    for (const char* fixed : {"B3", "P3", "K4", "C5"}) {
        EXPECT_TRUE(names.count(fixed)) << fixed;
    }
    // Seeded, so identical between calls.
    const auto again = standard_corpus(5, 1);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        EXPECT_EQ(corpus[i].graph, again[i].graph);
    }
}

TEST(Corpus, DoubledEdge) {
    std::mt19937_64 rng(1);
    const Multigraph g = complete_graph(4);
    const Multigraph d = with_doubled_edge(g, rng);
    EXPECT_EQ(d.edge_count(), g.edge_count() + 1);
    const Edge extra = d.edge(d.edge_count());
    EXPECT_EQ(d.multiplicity(extra.u, extra.v), 2);
}

TEST(Corpus, NamedGraphs) {
    EXPECT_EQ(banana_graph(3), build_graph(2, {{0, 1}, {0, 1}, {0, 1}}));
    EXPECT_EQ(path_graph(3), build_graph(3, {{0, 1}, {1, 2}}));
    EXPECT_EQ(cycle_graph(4), build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
    EXPECT_EQ(complete_graph(3), build_graph(3, {{0, 1}, {0, 2}, {1, 2}}));
}

TEST(Corpus, AntichainCovers) {
    EXPECT_EQ(maximal_antichain_covers(path_graph(2)).size(), 1U);
    EXPECT_EQ(maximal_antichain_covers(path_graph(3)).size(), 2U);
    EXPECT_EQ(maximal_antichain_covers(path_graph(4)).size(), 6U);
    EXPECT_EQ(maximal_antichain_covers(path_graph(5)).size(), 28U);
    EXPECT_THROW(maximal_antichain_covers(path_graph(6)), std::invalid_argument);
    std::mt19937_64 rng(2);
    const Multigraph big = path_graph(7);
    for (int i = 0; i < 20; ++i) {
        EXPECT_NO_THROW(Cover(big, random_maximal_antichain_cover(big, rng).maximal_sets()));
    }
}

TEST(Corpus, ModelsAreDeduplicated) {
    std::mt19937_64 rng(3);
    const Multigraph b = banana_graph(3);
    EXPECT_EQ(corpus_models(b, {"asm", "cfm", "all-antichains"}, rng).size(), 1U);
    const Multigraph k4 = complete_graph(4);
    EXPECT_EQ(corpus_models(k4, {"asm", "cfm", "all-antichains"}, rng).size(), 6U);
    EXPECT_THROW(corpus_models(k4, {"bogus"}, rng), std::invalid_argument);
}

TEST(Corpus, RandomEdgeOrderIsAPermutation) {
    std::mt19937_64 rng(4);
    const Multigraph g = complete_graph(5);
    const Multigraph r = random_edge_order(g, rng);
    EXPECT_EQ(count_spanning_trees(r), 125);
    auto a = g.edges();
    auto b = r.edges();
    auto less = [](const Edge& x, const Edge& y) { return std::pair(x.u, x.v) < std::pair(y.u, y.v); };
    std::sort(a.begin(), a.end(), less);
    std::sort(b.begin(), b.end(), less);
    EXPECT_EQ(a, b);
}

} // namespace
} // namespace hcf
