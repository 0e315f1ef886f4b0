#include <gtest/gtest.h>

#include <random>

#include "brute_force.hpp"
#include "hcf/corpus.hpp"
#include "hcf/oracle.hpp"

namespace hcf {
namespace {

Configuration chips(std::vector<Chips> v) { return Configuration(std::move(v)); }
std::vector<SpanningTree> trees(std::vector<std::vector<EdgeId>> lists) {
    std::vector<SpanningTree> out;
    for (auto& l : lists) {
        out.emplace_back(std::move(l));
    }
    return out;
}

TEST(Trees, Examples) {
    EXPECT_EQ(enumerate_spanning_trees(complete_graph(3)), trees({{1, 2}, {1, 3}, {2, 3}}));
    EXPECT_EQ(enumerate_spanning_trees(banana_graph(3)), trees({{1}, {2}, {3}}));
    EXPECT_EQ(enumerate_spanning_trees(path_graph(3)), trees({{1, 2}}));
}

TEST(Trees, Counts) {
    EXPECT_EQ(count_spanning_trees(complete_graph(3)), 3);
    EXPECT_EQ(count_spanning_trees(complete_graph(4)), 16);
    EXPECT_EQ(count_spanning_trees(complete_graph(5)), 125);
    EXPECT_EQ(count_spanning_trees(banana_graph(3)), 3);
    EXPECT_EQ(count_spanning_trees(cycle_graph(5)), 5);
    EXPECT_EQ(class_count(complete_graph(4)), 16);
}

TEST(Trees, AgreeWithSubsetEnumerationAndDeterminant) {
    for (const auto& [name, g] : standard_corpus()) {
        const auto listed = enumerate_spanning_trees(g);
        EXPECT_EQ(listed, brute::trees_by_subsets(g)) << name;
        EXPECT_EQ(BigInt(listed.size()), count_spanning_trees(g)) << name;
        for (const auto& t : listed) {
            EXPECT_TRUE(is_spanning_tree(g, t)) << name;
        }
    }
}

TEST(Trees, SizeGuard) {
    OracleLimits small;
    small.max_edges = 5;
    EXPECT_THROW(enumerate_spanning_trees(complete_graph(4), small), InstanceTooLarge);
    small = {};
    small.max_vertices = 3;
    EXPECT_THROW(enumerate_spanning_trees(complete_graph(4), small), InstanceTooLarge);
    EXPECT_THROW(enumerate_spanning_trees(complete_graph(9)), InstanceTooLarge);
}

TEST(Recurrent, Examples) {
    const Multigraph g = complete_graph(3);
    EXPECT_EQ(enumerate_recurrent(g, asm_cover(g)), (std::vector{chips({0, 1}), chips({1, 0}), chips({1, 1})}));
    EXPECT_EQ(enumerate_recurrent(g, cfm_cover(g)), (std::vector{chips({0, 0}), chips({0, 1}), chips({1, 0})}));
    const Multigraph b = banana_graph(3);
    EXPECT_EQ(enumerate_recurrent(b, asm_cover(b)), (std::vector{chips({0}), chips({1}), chips({2})}));
}

TEST(Recurrent, SizeGuard) {
    OracleLimits small;
    small.max_box_volume = 5;
    const Multigraph g = complete_graph(4);
    EXPECT_THROW(enumerate_recurrent(g, asm_cover(g), small), InstanceTooLarge);
    EXPECT_EQ(degree_box_volume(g), 27U);
}

// Recurrent counts match tree counts for every model, results are stable and
// critical, and nothing outside the degree box is stable.
TEST(Recurrent, CountsMatchTrees) {
    std::mt19937_64 rng(29);
    for (const auto& [name, g] : standard_corpus(4)) {
        const BigInt trees = count_spanning_trees(g);
        for (const Cover& h : corpus_models(g, {"asm", "cfm", "all-antichains"}, rng)) {
            const auto rec = enumerate_recurrent(g, h);
            EXPECT_EQ(BigInt(rec.size()), trees) << name << ' ' << describe(h, g);
            EXPECT_TRUE(std::is_sorted(rec.begin(), rec.end()));
            for (const auto& d : rec) {
                EXPECT_TRUE(is_stable(g, h, d));
                EXPECT_TRUE(is_critical(g, h, d));
            }
            for (int trial = 0; trial < 10; ++trial) {
                Configuration d = Configuration::zeros(g);
                for (Vertex v = 1; v <= g.n(); ++v) {
                    d[v] = static_cast<Chips>(rng() % static_cast<std::uint64_t>(g.degree(v)));
                }
                const Vertex v = 1 + rng() % g.n();
                d[v] = g.degree(v) + static_cast<Chips>(rng() % 3);
                EXPECT_FALSE(is_stable(g, h, d)) << name;
            }
        }
    }
}

TEST(Equivalence, Examples) {
    const Multigraph g = complete_graph(3);
    const auto w = equivalent(g, chips({0, 0}), chips({1, 1}));
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w->firing, (std::vector<BigInt>{1, 1}));
    const auto self = equivalent(g, chips({4, -2}), chips({4, -2}));
    ASSERT_TRUE(self.has_value());
    EXPECT_EQ(self->firing, (std::vector<BigInt>{0, 0}));
    EXPECT_FALSE(equivalent(g, chips({0, 0}), chips({0, 1})).has_value());
}

TEST(Equivalence, SolverMatchesBoundedSearch) {
    std::mt19937_64 rng(31);
    for (const auto& [name, g] : standard_corpus(4)) {
        const EquivalenceOracle eq(g);
        for (int trial = 0; trial < 10; ++trial) {
            Configuration d1 = Configuration::zeros(g);
            Configuration d2 = Configuration::zeros(g);
            for (Vertex v = 1; v <= g.n(); ++v) {
                d1[v] = static_cast<Chips>(rng() % 5);
                d2[v] = static_cast<Chips>(rng() % 5);
            }
            if (trial % 2 == 0) {
                // A guaranteed equivalent pair: fire a random small vector.
                d2 = d1;
                for (Vertex v = 1; v <= g.n(); ++v) {
                    const int times = static_cast<int>(rng() % 5) - 2;
                    for (int k = 0; k < std::abs(times); ++k) {
                        const Configuration once = fire_set(g, d2, g.make_set({v}));
                        d2 = times > 0 ? once : d2 + (d2 - once);
                    }
                }
            }
            const auto w = eq.witness(d1, d2);
            const auto found = brute::equivalence_by_search(g, d1, d2, 8);
            if (trial % 2 == 0) {
                ASSERT_TRUE(found.has_value()) << name;
            }
            if (found) {
                // The reduced Laplacian is nonsingular, so f is unique.
                ASSERT_TRUE(w.has_value()) << name;
                for (std::size_t i = 0; i < g.n(); ++i) {
                    EXPECT_EQ(w->firing[i], (*found)[i]) << name;
                }
            } else if (w) {
                // Only possible when the witness leaves the search box.
                bool outside = false;
                for (const BigInt& x : w->firing) {
                    outside = outside || abs(x) > 8;
                }
                EXPECT_TRUE(outside) << name;
            }
            if (w) {
                EXPECT_TRUE(w->verifies(g, d1, d2));
            }
        }
    }
}

TEST(Equivalence, IsAnEquivalenceRelation) {
    std::mt19937_64 rng(37);
    for (const auto& [name, g] : standard_corpus(4)) {
        const EquivalenceOracle eq(g);
        const Cover h = asm_cover(g);
        for (int trial = 0; trial < 10; ++trial) {
            Configuration a = Configuration::zeros(g);
            for (Vertex v = 1; v <= g.n(); ++v) {
                a[v] = static_cast<Chips>(rng() % 6);
            }
            const Configuration b = stabilize(g, h, fire_sink(g, a)).config;
            const Configuration c = recurrent_representative(g, h, a);
            const auto ab = eq.witness(a, b);
            const auto ba = eq.witness(b, a);
            const auto bc = eq.witness(b, c);
            const auto ac = eq.witness(a, c);
            ASSERT_TRUE(ab && ba && bc && ac) << name;
            EXPECT_TRUE(eq.equivalent(a, a));
            for (std::size_t i = 0; i < g.n(); ++i) {
                EXPECT_EQ(ba->firing[i], -ab->firing[i]);
                EXPECT_EQ(ac->firing[i], ab->firing[i] + bc->firing[i]);
            }
        }
    }
}

// Distinct recurrents of one model never share a class.
TEST(Equivalence, RecurrentsArePairwiseInequivalent) {
    std::mt19937_64 rng(41);
    for (const auto& [name, g] : standard_corpus(4)) {
        const EquivalenceOracle eq(g);
        for (const Cover& h : corpus_models(g, {"asm", "cfm"}, rng)) {
            const auto rec = enumerate_recurrent(g, h);
            for (std::size_t i = 0; i < rec.size(); ++i) {
                for (std::size_t j = i + 1; j < rec.size(); ++j) {
                    EXPECT_FALSE(eq.equivalent(rec[i], rec[j])) << name;
                }
            }
        }
    }
}

TEST(Solver, SingularMatrixRejected) {
    EXPECT_THROW(IntegerSolver(IntegerMatrix{{1, 2}, {2, 4}}), std::invalid_argument);
}

TEST(Solver, Divisibility) {
    const IntegerSolver s(IntegerMatrix{{2, 0}, {0, 3}});
    EXPECT_EQ(s.solve({4, 9}), (std::vector<BigInt>{2, 3}));
    EXPECT_FALSE(s.solve({1, 0}).has_value());
    const IntegerSolver t(IntegerMatrix{{0, 1}, {3, 5}});
    EXPECT_EQ(t.solve({2, 13}), (std::vector<BigInt>{1, 2}));
}

} // namespace
} // namespace hcf
