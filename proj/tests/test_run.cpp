#include <gtest/gtest.h>

#include "hcf/run.hpp"

namespace hcf {
namespace {

Instance k3_instance() {
    const Multigraph g = complete_graph(3);
    return Instance{"K3", g, cfm_cover(g), "native", {}};
}

TEST(Run, CertifiedInstance) {
    const Multigraph g = complete_graph(3);
    const RunReport r = run_instance(Instance{"K3", g, asm_cover(g), "native", {}});
    EXPECT_EQ(r.outcome, RunReport::Outcome::certified);
    const auto j = to_json(r);
    EXPECT_EQ(j["schema"], kReportSchema);
    EXPECT_EQ(j["outcome"], "certified");
    EXPECT_FALSE(j.contains("wall_seconds"));
}

TEST(Run, CounterexampleReplaysIdentically) {
    const Instance inst = k3_instance();
    const RunReport r = run_instance(inst);
    ASSERT_EQ(r.outcome, RunReport::Outcome::counterexample);
    const std::string text = to_json(r).dump();
    const Instance back = instance_from_json(nlohmann::json::parse(text));
    EXPECT_EQ(back.key(), inst.key());
    EXPECT_EQ(back.graph, inst.graph);
    EXPECT_EQ(back.cover, inst.cover);
    EXPECT_EQ(to_json(run_instance(back)).dump(), text);
    // The bare instance form is accepted as well.
    EXPECT_EQ(instance_from_json(to_json(inst)).key(), inst.key());
}

TEST(Run, TooLargeBecomesError) {
    OracleLimits tiny;
    tiny.max_vertices = 2;
    const RunReport r = run_instance(k3_instance(), tiny);
    EXPECT_EQ(r.outcome, RunReport::Outcome::error);
    EXPECT_FALSE(r.error.empty());
}

TEST(Run, TimingIsOptIn) {
    const RunReport r = run_instance(k3_instance(), {}, true);
    ASSERT_TRUE(r.wall_seconds.has_value());
    EXPECT_TRUE(to_json(r).contains("wall_seconds"));
}

TEST(Run, GraphHashDependsOnEdgeOrder) {
    const Multigraph g = complete_graph(3);
    EXPECT_EQ(graph_hash(g), graph_hash(complete_graph(3)));
    EXPECT_NE(graph_hash(g), graph_hash(reorder_edges(g, {3, 2, 1})));
    EXPECT_EQ(graph_hash(g).size(), 16U);
}

TEST(Run, BuildInstances) {
    CorpusOptions opt;
    opt.models = {"asm", "cfm"};
    opt.orderings = 2;
    const std::vector<NamedGraph> graphs{{"K3", complete_graph(3)}, {"B3", banana_graph(3)}};
    const auto a = build_instances(graphs, opt);
    // K3: 3 orders x 2 models; B3: 3 orders x 1 model.
    EXPECT_EQ(a.size(), 9U);
    const auto b = build_instances(graphs, opt);
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].key(), b[i].key());
        EXPECT_EQ(a[i].graph, b[i].graph);
    }
}

} // namespace
} // namespace hcf
