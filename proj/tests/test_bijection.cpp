#include <gtest/gtest.h>

#include <random>
#include <set>

#include "hcf/bijection.hpp"
#include "hcf/corpus.hpp"
#include "hcf/oracle.hpp"
#include "hcf/verify.hpp"

namespace hcf {
namespace {

Multigraph k3() { return complete_graph(3); }
Configuration chips(std::vector<Chips> v) { return Configuration(std::move(v)); }
SpanningTree tree(std::vector<EdgeId> ids) { return SpanningTree(std::move(ids)); }

TEST(Sigma, AsmExamples) {
    const Multigraph g = k3();
    const SigmaResult a = sigma(g, asm_cover(g), chips({1, 1}));
    ASSERT_TRUE(a.ok());
    EXPECT_EQ(*a.tree, tree({1, 2}));
    const SigmaResult b = sigma(g, asm_cover(g), chips({0, 1}));
    ASSERT_TRUE(b.ok());
    EXPECT_EQ(*b.tree, tree({2, 3}));
    EXPECT_EQ(b.trace.accepted, (std::vector<EdgeId>{2, 3}));
    EXPECT_EQ(b.trace.order, (std::vector<Vertex>{2, 1}));
    ASSERT_EQ(b.trace.steps.size(), 3U);
    EXPECT_EQ(b.trace.steps[0].edge, 1U);
    EXPECT_EQ(b.trace.steps[0].decision, Decision::reject);
}

TEST(Sigma, CfmExamples) {
    const Multigraph g = k3();
    const SigmaResult r = sigma(g, cfm_cover(g), chips({0, 0}));
    ASSERT_TRUE(r.ok());
    EXPECT_EQ(*r.tree, tree({1, 3}));
    EXPECT_EQ(format_trace(r.trace), (std::vector<std::string>{
                                         "step 1 X={0} edge=e1 m=1 thresh=0 decision=accept",
                                         "step 2 X={0,1} edge=e2 m=2 thresh=1 decision=reject",
                                         "step 3 X={0,1} edge=e3 m=2 thresh=0 decision=accept",
                                     }));
}

TEST(Sigma, CfmExcessHalts) {
    const Multigraph g = k3();
    const SigmaResult r = sigma(g, cfm_cover(g), chips({1, 0}));
    EXPECT_FALSE(r.ok());
    ASSERT_TRUE(r.anomaly.has_value());
    EXPECT_EQ(r.anomaly->kind, SigmaAnomaly::Kind::excess);
    ASSERT_EQ(r.trace.steps.size(), 1U);
    const SigmaStep& s = r.trace.steps[0];
    EXPECT_EQ(s.edge, 1U);
    EXPECT_EQ(s.target, 1U);
    EXPECT_EQ(s.threshold, 0);
    EXPECT_EQ(s.value, 1);
    EXPECT_EQ(s.decision, Decision::anomaly);
}

// The two non-halting policies finish the scan with a spanning tree or
// report that the boundary ran out.
TEST(Sigma, ExcessPoliciesTerminate) {
    const Multigraph g = k3();
    for (ExcessAction act : {ExcessAction::treat_as_reject, ExcessAction::treat_as_accept}) {
        AnomalyPolicy p;
        p.on_excess = act;
        const SigmaResult r = sigma(g, cfm_cover(g), chips({1, 0}), p);
        if (r.ok()) {
            EXPECT_TRUE(is_spanning_tree(g, *r.tree));
        } else {
            EXPECT_EQ(r.anomaly->kind, SigmaAnomaly::Kind::exhausted);
        }
        EXPECT_NE(r.trace.steps[0].decision, Decision::anomaly);
    }
}

TEST(Sigma, RequiresRecurrentInput) {
    const Multigraph g = k3();
    EXPECT_THROW(sigma(g, asm_cover(g), chips({0, 0})), PreconditionError);
    EXPECT_THROW(sigma(g, asm_cover(g), chips({2, 0})), PreconditionError);
}

TEST(Sigma, Deterministic) {
    const Multigraph g = complete_graph(4);
    const Cover h = asm_cover(g);
    for (const auto& d : enumerate_recurrent(g, h)) {
        const SigmaResult a = sigma(g, h, d);
        const SigmaResult b = sigma(g, h, d);
        EXPECT_EQ(a.tree, b.tree);
        EXPECT_EQ(format_trace(a.trace), format_trace(b.trace));
    }
}

TEST(GammaOrder, Examples) {
    const Multigraph g = k3();
    const VertexOrder a = gamma_order(g, tree({1, 2}));
    EXPECT_EQ(a.order, (std::vector<Vertex>{0, 1, 2}));
    EXPECT_EQ(a.tree_edge, (std::vector<EdgeId>{1, 2}));

    const VertexOrder per = gamma_order(g, tree({2, 3}), RejectionMemory::per_stage);
    EXPECT_EQ(per.order, (std::vector<Vertex>{0, 2, 1}));
    EXPECT_EQ(per.rejected, (std::vector<std::vector<EdgeId>>{{1}, {1}}));
    EXPECT_EQ(per.tree_edge, (std::vector<EdgeId>{2, 3}));

    const VertexOrder kept = gamma_order(g, tree({2, 3}));
    EXPECT_EQ(kept.order, (std::vector<Vertex>{0, 2, 1}));
    EXPECT_EQ(kept.rejected, (std::vector<std::vector<EdgeId>>{{1}, {}}));

    EXPECT_EQ(gamma_order(path_graph(3), tree({1, 2})).order, (std::vector<Vertex>{0, 1, 2}));
}

TEST(Gamma, Examples) {
    const Multigraph g = k3();
    const GammaResult c = gamma(g, cfm_cover(g), tree({1, 2}));
    ASSERT_TRUE(c.ok());
    EXPECT_EQ(*c.config, chips({0, 1}));
    const GammaResult a = gamma(g, asm_cover(g), tree({1, 2}));
    ASSERT_TRUE(a.ok());
    EXPECT_EQ(*a.config, chips({1, 1}));
    const GammaResult b = gamma(g, asm_cover(g), tree({2, 3}));
    ASSERT_TRUE(b.ok());
    EXPECT_EQ(*b.config, chips({0, 1}));
    EXPECT_EQ(format_trace(b), (std::vector<std::string>{
                                   "stage 0 Y={0,2} pivot=1 rejected=[] edge=e3 m=2 scanned=2 value=0",
                                   "stage 1 Y={0} pivot=2 rejected=[e1] edge=e2 m=2 scanned=1 value=1",
                               }));
}

TEST(Gamma, CfmStages) {
    const Multigraph g = k3();
    const GammaResult r = gamma(g, cfm_cover(g), tree({1, 2}));
    ASSERT_TRUE(r.ok());
    ASSERT_EQ(r.stages.size(), 2U);
    // Last vertex first: v2 is reconstructed against the singleton, v1 against {v1,v2}.
    EXPECT_EQ(r.stages[0].pivot, 2U);
    EXPECT_EQ(r.stages[0].m, 2);
    EXPECT_EQ(r.stages[0].value, 1);
    EXPECT_EQ(r.stages[1].pivot, 1U);
    EXPECT_EQ(r.stages[1].m, 1);
    EXPECT_EQ(r.stages[1].value, 0);
}

TEST(Gamma, InvertsSigmaOnAsm) {
    std::mt19937_64 rng(43);
    for (const auto& [name, base] : standard_corpus(5)) {
        for (int k = 0; k < 2; ++k) {
            const Multigraph g = k == 0 ? base : random_edge_order(base, rng);
            const Cover h = asm_cover(g);
            std::set<SpanningTree> seen;
            for (const auto& d : enumerate_recurrent(g, h)) {
                const SigmaResult s = sigma(g, h, d);
                ASSERT_TRUE(s.ok()) << name;
                EXPECT_TRUE(is_spanning_tree(g, *s.tree)) << name;
                EXPECT_TRUE(seen.insert(*s.tree).second) << name;
                // The vertex order read off the tree is the burning order.
                const VertexOrder o = gamma_order(g, *s.tree);
                EXPECT_EQ(std::vector<Vertex>(o.order.begin() + 1, o.order.end()), s.trace.order) << name;
                const GammaResult back = gamma(g, h, *s.tree);
                ASSERT_TRUE(back.ok()) << name;
                EXPECT_EQ(*back.config, d) << name;
            }
            EXPECT_EQ(BigInt(seen.size()), count_spanning_trees(g)) << name;
        }
    }
}

// Clearing the rejected edges at every stage loses injectivity on K3 once
// the edge order is reversed.
TEST(Gamma, PerStageMemoryBreaksAsm) {
    const Multigraph g = build_graph(3, {{1, 2}, {0, 2}, {0, 1}});
    AnomalyPolicy per;
    per.rejection = RejectionMemory::per_stage;
    EXPECT_FALSE(verify_bijection(g, asm_cover(g), per).certified());
    EXPECT_TRUE(verify_bijection(g, asm_cover(g)).certified());
}

// With the pivot tested for debt like every other vertex, gamma searches for
// the unique self-consistent value. On the classical model it agrees with the
// exempt computation.
TEST(Gamma, WithoutPivotExemption) {
    for (const Multigraph& g : {k3(), complete_graph(4), banana_graph(3), cycle_graph(4)}) {
        AnomalyPolicy strict;
        strict.pivot_exemption = false;
        const Cover h = asm_cover(g);
        for (const auto& t : enumerate_spanning_trees(g)) {
            const GammaResult a = gamma(g, h, t);
            const GammaResult b = gamma(g, h, t, strict);
            ASSERT_TRUE(a.ok());
            ASSERT_TRUE(b.ok()) << b.failure;
            EXPECT_EQ(*a.config, *b.config);
        }
    }
}

TEST(Verify, Examples) {
    const Multigraph g = k3();
    const VerificationReport a = verify_bijection(g, asm_cover(g));
    EXPECT_TRUE(a.certified());
    EXPECT_EQ(a.recurrent_count, 3U);
    EXPECT_EQ(a.tree_count, 3U);

    const VerificationReport c = verify_bijection(g, cfm_cover(g));
    EXPECT_FALSE(c.certified());
    bool named = false;
    for (const auto& f : c.failures) {
        if (f.kind == VerificationFailure::Kind::sigma_anomaly) {
            named = named || (f.configs.size() == 1 && f.configs[0] == chips({1, 0}));
            EXPECT_FALSE(f.trace.empty());
        }
    }
    EXPECT_TRUE(named);
}

TEST(Policy, Strings) {
    EXPECT_EQ(parse_excess_action("halt"), ExcessAction::halt);
    EXPECT_EQ(parse_excess_action("reject"), ExcessAction::treat_as_reject);
    EXPECT_EQ(parse_excess_action("treat-as-accept"), ExcessAction::treat_as_accept);
    EXPECT_EQ(parse_excess_action("maybe"), std::nullopt);
    EXPECT_EQ(parse_rejection_memory("per-stage"), RejectionMemory::per_stage);
    EXPECT_EQ(parse_rejection_memory("persistent"), RejectionMemory::persistent);
    for (ExcessAction a : {ExcessAction::halt, ExcessAction::treat_as_reject, ExcessAction::treat_as_accept}) {
        EXPECT_EQ(parse_excess_action(to_string(a)), a);
    }
}

} // namespace
} // namespace hcf
