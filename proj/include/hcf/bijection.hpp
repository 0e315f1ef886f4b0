#pragma once

// The edge-scanning maps between recurrent configurations and spanning trees
// of a hereditary model: sigma burns a configuration into a tree, gamma reads
// a vertex order off a tree and rebuilds chip counts from it.
//
// Both maps are driven by the graph's edge order. At each step the smallest
// boundary edge e = (u, v) of the burnt set X that has not been rejected is
// scanned and compared against
//
//     threshold = m(v, D - Q chi_X) - |{rejected edges at v} + {e}|
//
// where m is the least loss of v over the maximal ready sets outside X.

#include <optional>
#include <string>
#include <vector>

#include "hcf/dynamics.hpp"
#include "hcf/spanning_tree.hpp"

namespace hcf {

// What sigma does when D(v) exceeds the threshold, a case the burning rule
// leaves open.
enum class ExcessAction { halt, treat_as_reject, treat_as_accept };

// Whether the rejected-edge set is cleared each time a vertex is burnt
// (per_stage) or kept for the whole run (persistent).
enum class RejectionMemory { persistent, per_stage };

struct AnomalyPolicy {
    ExcessAction on_excess = ExcessAction::halt;
    // Evaluate m without debt-testing the vertex being burnt.
    bool pivot_exemption = true;
    RejectionMemory rejection = RejectionMemory::persistent;

    friend bool operator==(const AnomalyPolicy&, const AnomalyPolicy&) = default;
};

std::string to_string(ExcessAction a);
std::string to_string(RejectionMemory r);
std::string to_string(const AnomalyPolicy& p);
std::optional<ExcessAction> parse_excess_action(const std::string& s);
std::optional<RejectionMemory> parse_rejection_memory(const std::string& s);

enum class Decision { reject, accept, anomaly };
std::string to_string(Decision d);

struct SigmaStep {
    std::size_t step = 0;
    VertexSet burnt;
    EdgeId edge = 0;
    Vertex target = 0;
    std::optional<int> m;
    std::optional<Chips> threshold;
    Chips value = 0;
    Decision decision = Decision::reject;
};

struct SigmaTrace {
    AnomalyPolicy policy;
    std::vector<SigmaStep> steps;
    // Accepted edges and burnt vertices in acceptance order.
    std::vector<EdgeId> accepted;
    std::vector<Vertex> order;
};

struct SigmaAnomaly {
    enum class Kind {
        excess,    // D(v) > threshold under the halt policy
        exhausted, // every boundary edge was rejected before X reached V
    };
    Kind kind = Kind::excess;
    std::string message;
};

struct SigmaResult {
    std::optional<SpanningTree> tree;
    std::optional<SigmaAnomaly> anomaly;
    SigmaTrace trace;

    [[nodiscard]] bool ok() const { return tree.has_value(); }
};

// Requires a recurrent D (PreconditionError otherwise).
SigmaResult sigma(const Multigraph& g, const Cover& h, const Configuration& d, const AnomalyPolicy& policy = {});

std::vector<std::string> format_trace(const SigmaTrace& trace);

struct VertexOrder {
    // w_0 = sink, then vertices in the order they join the burnt set.
    std::vector<Vertex> order;
    // rejected[s] are the edges rejected while looking for w_{s+1}.
    std::vector<std::vector<EdgeId>> rejected;
    // tree_edge[s] burns w_{s+1}.
    std::vector<EdgeId> tree_edge;
};

// Requires a spanning tree of g.
VertexOrder gamma_order(const Multigraph& g, const SpanningTree& t,
                        RejectionMemory rejection = RejectionMemory::persistent);

struct GammaStage {
    std::size_t stage = 0;
    VertexSet fired;
    Vertex pivot = 0;
    EdgeId tree_edge = 0;
    std::vector<EdgeId> rejected;
    std::optional<int> m;
    std::size_t scanned = 0;
    Chips value = 0;
};

struct GammaResult {
    std::optional<Configuration> config;
    std::vector<GammaStage> stages;
    std::string failure;

    [[nodiscard]] bool ok() const { return config.has_value(); }
};

// Rebuilds chip counts from the tree, last vertex of the order first. The
// result is not checked for recurrence; negative entries are returned as is.
// Fails (config empty, `failure` set) only when the pivot's value cannot be
// determined, which requires pivot_exemption = false.
GammaResult gamma(const Multigraph& g, const Cover& h, const SpanningTree& t, const AnomalyPolicy& policy = {});

std::vector<std::string> format_trace(const GammaResult& result);

} // namespace hcf
