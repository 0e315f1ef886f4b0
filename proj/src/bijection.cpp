#include "hcf/bijection.hpp"

#include <algorithm>
#include <stdexcept>

namespace hcf {

std::string to_string(ExcessAction a) {
    switch (a) {
    case ExcessAction::halt:
        return "halt";
    case ExcessAction::treat_as_reject:
        return "reject";
    case ExcessAction::treat_as_accept:
        return "accept";
    }
    return "?";
}

std::string to_string(RejectionMemory r) { return r == RejectionMemory::persistent ? "persistent" : "per-stage"; }

std::string to_string(const AnomalyPolicy& p) {
    return "excess=" + to_string(p.on_excess) + " pivot-exemption=" + (p.pivot_exemption ? "on" : "off") +
           " rejection=" + to_string(p.rejection);
}

std::optional<ExcessAction> parse_excess_action(const std::string& s) {
    if (s == "halt") {
        return ExcessAction::halt;
    }
    if (s == "reject" || s == "treat-as-reject") {
        return ExcessAction::treat_as_reject;
    }
    if (s == "accept" || s == "treat-as-accept") {
        return ExcessAction::treat_as_accept;
    }
    return std::nullopt;
}

std::optional<RejectionMemory> parse_rejection_memory(const std::string& s) {
    if (s == "persistent") {
        return RejectionMemory::persistent;
    }
    if (s == "per-stage") {
        return RejectionMemory::per_stage;
    }
    return std::nullopt;
}

std::string to_string(Decision d) {
    switch (d) {
    case Decision::reject:
        return "reject";
    case Decision::accept:
        return "accept";
    case Decision::anomaly:
        return "anomaly";
    }
    return "?";
}

namespace {

// Vertex of e outside x; e must cross the cut.
Vertex outside_endpoint(const Edge& e, const VertexSet& x) { return x.test(e.u) ? e.v : e.u; }

// Smallest boundary edge of x not in `rejected`, or 0.
EdgeId next_edge(const Multigraph& g, const VertexSet& x, const std::vector<bool>& rejected) {
    const auto& edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (!rejected[i + 1] && x.test(edges[i].u) != x.test(edges[i].v)) {
            return i + 1;
        }
    }
    return 0;
}

// |{e in rejected : e incident to v}| + 1 for the scanned edge itself.
std::size_t scanned_at(const Multigraph& g, const std::vector<bool>& rejected, Vertex v) {
    std::size_t count = 1;
    for (EdgeId id = 1; id <= g.edge_count(); ++id) {
        if (rejected[id] && g.edge(id).incident(v)) {
            ++count;
        }
    }
    return count;
}

std::string format_optional(const std::optional<int>& x) { return x ? std::to_string(*x) : "undef"; }
std::string format_optional(const std::optional<Chips>& x) { return x ? std::to_string(*x) : "undef"; }

std::string format_edges(const std::vector<EdgeId>& ids) {
    std::string out = "[";
    for (std::size_t i = 0; i < ids.size(); ++i) {
        out += (i ? "," : "") + std::string("e") + std::to_string(ids[i]);
    }
    return out + "]";
}

} // namespace

SigmaResult sigma(const Multigraph& g, const Cover& h, const Configuration& d, const AnomalyPolicy& policy) {
    if (!is_recurrent(g, h, d)) {
        throw PreconditionError("sigma requires a recurrent configuration, got " + format_chips(d));
    }
    SigmaResult result;
    result.trace.policy = policy;

    VertexSet burnt = g.make_set({kSink});
    std::vector<bool> rejected(g.edge_count() + 1, false);
    std::vector<EdgeId> accepted;
    Configuration fired = fire_cluster(g, d, burnt);
    std::size_t step = 0;

    while (!burnt.all()) {
        const EdgeId id = next_edge(g, burnt, rejected);
        if (id == 0) {
            result.anomaly = SigmaAnomaly{SigmaAnomaly::Kind::exhausted,
                                          "every boundary edge of X=" + format_set(burnt) + " was rejected"};
            return result;
        }
        const Vertex v = outside_endpoint(g.edge(id), burnt);
        SigmaStep record;
        record.step = ++step;
        record.burnt = burnt;
        record.edge = id;
        record.target = v;
        record.value = d[v];
        record.m = min_loss(g, h, fired, v, ~burnt, policy.pivot_exemption);

        // An undefined m means v cannot fire at all, so the edge cannot burn it.
        Decision decision = Decision::reject;
        if (record.m) {
            record.threshold = static_cast<Chips>(*record.m) - static_cast<Chips>(scanned_at(g, rejected, v));
            if (d[v] == *record.threshold) {
                decision = Decision::accept;
            } else if (d[v] > *record.threshold) {
                switch (policy.on_excess) {
                case ExcessAction::halt:
                    decision = Decision::anomaly;
                    break;
                case ExcessAction::treat_as_reject:
                    decision = Decision::reject;
                    break;
                case ExcessAction::treat_as_accept:
                    decision = Decision::accept;
                    break;
                }
            }
        }
        record.decision = decision;
        result.trace.steps.push_back(record);

        if (decision == Decision::anomaly) {
            result.anomaly = SigmaAnomaly{SigmaAnomaly::Kind::excess,
                                          "D(" + std::to_string(v) + ")=" + std::to_string(d[v]) + " exceeds threshold " +
                                              std::to_string(*record.threshold) + " at e" + std::to_string(id)};
            return result;
        }
        if (decision == Decision::reject) {
            rejected[id] = true;
            continue;
        }
        accepted.push_back(id);
        result.trace.accepted.push_back(id);
        result.trace.order.push_back(v);
        burnt.set(v);
        fired = fire_cluster(g, d, burnt);
        if (policy.rejection == RejectionMemory::per_stage) {
            std::fill(rejected.begin(), rejected.end(), false);
        }
    }
    result.tree = SpanningTree(accepted);
    return result;
}

std::vector<std::string> format_trace(const SigmaTrace& trace) {
    std::vector<std::string> lines;
    for (const SigmaStep& s : trace.steps) {
        lines.push_back("step " + std::to_string(s.step) + " X=" + format_set(s.burnt) + " edge=e" + std::to_string(s.edge) +
                        " m=" + format_optional(s.m) + " thresh=" + format_optional(s.threshold) +
                        " decision=" + to_string(s.decision));
    }
    return lines;
}

VertexOrder gamma_order(const Multigraph& g, const SpanningTree& t, RejectionMemory rejection) {
    if (!is_spanning_tree(g, t)) {
        throw PreconditionError(format_tree(t) + " is not a spanning tree of the graph");
    }
    VertexOrder out;
    out.order.push_back(kSink);
    VertexSet burnt = g.make_set({kSink});
    std::vector<bool> rejected(g.edge_count() + 1, false);
    std::vector<EdgeId> stage_rejected;
    while (!burnt.all()) {
        const EdgeId id = next_edge(g, burnt, rejected);
        if (id == 0) {
            throw std::logic_error("gamma_order: no tree edge crosses the cut");
        }
        if (!t.contains(id)) {
            rejected[id] = true;
            stage_rejected.push_back(id);
            continue;
        }
        const Vertex v = outside_endpoint(g.edge(id), burnt);
        out.order.push_back(v);
        out.rejected.push_back(std::move(stage_rejected));
        out.tree_edge.push_back(id);
        stage_rejected.clear();
        burnt.set(v);
        if (rejection == RejectionMemory::per_stage) {
            std::fill(rejected.begin(), rejected.end(), false);
        }
    }
    return out;
}

namespace {

// m for the pivot at one stage of gamma. `partial` holds D - Q chi_Y on the
// vertices already reconstructed; the pivot entry is `pivot_chips` (ignored
// when exempt).
std::optional<int> stage_loss(const Multigraph& g, const Cover& h, Configuration partial, const VertexSet& fired, Vertex pivot,
                              Chips pivot_chips, bool exempt) {
    partial[pivot] = checked_add(pivot_chips, g.edges_into(pivot, fired));
    return min_loss(g, h, partial, pivot, ~fired, exempt);
}

} // namespace

GammaResult gamma(const Multigraph& g, const Cover& h, const SpanningTree& t, const AnomalyPolicy& policy) {
    const VertexOrder order = gamma_order(g, t, policy.rejection);
    const std::size_t n = g.n();
    GammaResult result;
    Configuration d = Configuration::zeros(g);

    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t stage = n - 1 - i; // index into order.rejected / order.tree_edge
        const Vertex pivot = order.order[n - i];
        VertexSet fired = g.empty_set();
        for (std::size_t j = 0; j + i < n; ++j) {
            fired.set(order.order[j]);
        }

        // Values at w_j for j > n - i are known; everything else is unused.
        Configuration partial = Configuration::zeros(g);
        for (std::size_t j = n - i + 1; j <= n; ++j) {
            const Vertex w = order.order[j];
            partial[w] = checked_add(d[w], g.edges_into(w, fired));
        }

        // Replay the edge scan from the fired set.
        std::vector<bool> rejected(g.edge_count() + 1, false);
        if (policy.rejection == RejectionMemory::persistent) {
            for (std::size_t s = 0; s < stage; ++s) {
                for (EdgeId id : order.rejected[s]) {
                    rejected[id] = true;
                }
            }
        }
        GammaStage record;
        record.stage = i;
        record.fired = fired;
        record.pivot = pivot;
        while (true) {
            const EdgeId id = next_edge(g, fired, rejected);
            if (id == 0) {
                throw std::logic_error("gamma: edge scan found no tree edge");
            }
            if (!t.contains(id)) {
                rejected[id] = true;
                record.rejected.push_back(id);
                continue;
            }
            if (outside_endpoint(g.edge(id), fired) != pivot) {
                throw std::logic_error("gamma: tree edge e" + std::to_string(id) + " is not incident to pivot " +
                                       std::to_string(pivot));
            }
            record.tree_edge = id;
            break;
        }
        if (record.rejected != order.rejected[stage] || record.tree_edge != order.tree_edge[stage]) {
            throw std::logic_error("gamma: replayed scan differs from the order computation at stage " + std::to_string(i));
        }
        record.scanned = scanned_at(g, rejected, pivot);

        if (policy.pivot_exemption) {
            record.m = stage_loss(g, h, partial, fired, pivot, 0, true);
            if (!record.m) {
                throw std::logic_error("gamma: pivot " + std::to_string(pivot) + " lies in no maximal ready set");
            }
            record.value = static_cast<Chips>(*record.m) - static_cast<Chips>(record.scanned);
        } else {
            // The pivot's own chips enter m, so look for the self-consistent value.
            std::vector<Chips> solutions;
            for (Chips x = 0; x < g.degree(pivot); ++x) {
                auto m = stage_loss(g, h, partial, fired, pivot, x, false);
                if (m && static_cast<Chips>(*m) - static_cast<Chips>(record.scanned) == x) {
                    solutions.push_back(x);
                    record.m = m;
                }
            }
            if (solutions.size() != 1) {
                result.stages.push_back(record);
                result.failure = "pivot " + std::to_string(pivot) + " has " + std::to_string(solutions.size()) +
                                 " self-consistent values at stage " + std::to_string(i);
                return result;
            }
            record.value = solutions.front();
        }
        d[pivot] = record.value;
        result.stages.push_back(record);
    }
    result.config = d;
    return result;
}

std::vector<std::string> format_trace(const GammaResult& result) {
    std::vector<std::string> lines;
    for (const GammaStage& s : result.stages) {
        lines.push_back("stage " + std::to_string(s.stage) + " Y=" + format_set(s.fired) + " pivot=" + std::to_string(s.pivot) +
                        " rejected=" + format_edges(s.rejected) + " edge=e" + std::to_string(s.tree_edge) +
                        " m=" + format_optional(s.m) + " scanned=" + std::to_string(s.scanned) +
                        " value=" + std::to_string(s.value));
    }
    if (!result.failure.empty()) {
        lines.push_back("failure " + result.failure);
    }
    return lines;
}

} // namespace hcf
