#include "hcf/run.hpp"

#include <chrono>
#include <cstdio>

namespace hcf {

std::string Instance::key() const {
    return graph_name + "|" + describe(cover, graph) + "|" + ordering + "|" + to_string(policy);
}

std::string to_string(RunReport::Outcome o) {
    switch (o) {
    case RunReport::Outcome::certified:
        return "certified";
    case RunReport::Outcome::counterexample:
        return "counterexample";
    case RunReport::Outcome::error:
        return "error";
    }
    return "?";
}

std::string graph_hash(const Multigraph& g) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : write_graph(g)) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    char buffer[17];
    std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(hash));
    return buffer;
}

RunReport run_instance(const Instance& instance, const OracleLimits& limits, bool timed) {
    RunReport out{instance, RunReport::Outcome::error, std::nullopt, {}, std::nullopt};
    const auto start = std::chrono::steady_clock::now();
    try {
        out.report = verify_bijection(instance.graph, instance.cover, instance.policy, limits);
        out.outcome = out.report->certified() ? RunReport::Outcome::certified : RunReport::Outcome::counterexample;
    } catch (const std::exception& e) {
        out.error = e.what();
    }
    if (timed) {
        out.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    return out;
}

nlohmann::json to_json(const Instance& instance) {
    return {{"graph_name", instance.graph_name},
            {"graph_hash", graph_hash(instance.graph)},
            {"graph", to_json(instance.graph)},
            {"model_name", describe(instance.cover, instance.graph)},
            {"model", to_json(instance.cover)},
            {"ordering", instance.ordering},
            {"policy", to_json(instance.policy)}};
}

nlohmann::json to_json(const RunReport& report) {
    nlohmann::json out = {{"schema", kReportSchema},
                          {"key", report.instance.key()},
                          {"instance", to_json(report.instance)},
                          {"outcome", to_string(report.outcome)}};
    if (report.report) {
        out["counts"] = {{"recurrents", report.report->recurrent_count}, {"trees", report.report->tree_count}};
        out["failures"] = to_json(*report.report).at("failures");
    }
    if (!report.error.empty()) {
        out["error"] = report.error;
    }
    if (report.wall_seconds) {
        out["wall_seconds"] = *report.wall_seconds;
    }
    return out;
}

Instance instance_from_json(const nlohmann::json& j) {
    const nlohmann::json& in = j.contains("instance") ? j.at("instance") : j;
    Multigraph g = graph_from_json(in.at("graph"));
    Cover h = cover_from_json(in.at("model"), g);
    return Instance{in.at("graph_name").get<std::string>(), std::move(g), std::move(h), in.at("ordering").get<std::string>(),
                    policy_from_json(in.at("policy"))};
}

std::vector<std::string> format_text(const RunReport& report) {
    std::vector<std::string> lines;
    std::string head = to_string(report.outcome) + " " + report.instance.key();
    if (report.report) {
        head += " recurrents=" + std::to_string(report.report->recurrent_count) +
                " trees=" + std::to_string(report.report->tree_count) +
                " failures=" + std::to_string(report.report->failures.size());
    }
    if (report.wall_seconds) {
        head += " wall=" + std::to_string(*report.wall_seconds) + "s";
    }
    lines.push_back(head);
    if (!report.error.empty()) {
        lines.push_back("  error: " + report.error);
    }
    if (report.report) {
        for (const auto& f : report.report->failures) {
            lines.push_back("  " + to_string(f.kind) + ": " + f.detail);
        }
    }
    return lines;
}

std::vector<Instance> build_instances(const std::vector<NamedGraph>& graphs, const CorpusOptions& options) {
    std::mt19937_64 rng(options.seed);
    std::vector<Instance> out;
    for (const NamedGraph& named : graphs) {
        std::vector<std::pair<std::string, Multigraph>> orders{{"native", named.graph}};
        for (std::size_t k = 1; k <= options.orderings; ++k) {
            orders.emplace_back("perm" + std::to_string(k), random_edge_order(named.graph, rng));
        }
        for (const auto& [ordering, graph] : orders) {
            for (Cover& cover : corpus_models(graph, options.models, rng)) {
                out.push_back(Instance{named.name, graph, std::move(cover), ordering, options.policy});
            }
        }
    }
    return out;
}

} // namespace hcf
