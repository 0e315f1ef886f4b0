#pragma once

// Self-contained verification instances and their reports, as streamed by
// `hcf verify` and re-run by `hcf replay`.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hcf/io.hpp"

namespace hcf {

inline constexpr int kReportSchema = 1;

struct Instance {
    std::string graph_name;
    Multigraph graph;
    Cover cover;
    std::string ordering; // "native" or "perm<k>"
    AnomalyPolicy policy;

    // graph_name|model|ordering|policy
    [[nodiscard]] std::string key() const;
};

struct RunReport {
    enum class Outcome { certified, counterexample, error };

    Instance instance;
    Outcome outcome = Outcome::error;
    std::optional<VerificationReport> report;
    std::string error;
    std::optional<double> wall_seconds;
};

std::string to_string(RunReport::Outcome o);

// FNV-1a over the graph file text, as 16 hex digits.
std::string graph_hash(const Multigraph& g);

// Never throws for instance-level problems; those become Outcome::error.
RunReport run_instance(const Instance& instance, const OracleLimits& limits = {}, bool timed = false);

nlohmann::json to_json(const Instance& instance);
nlohmann::json to_json(const RunReport& report);
Instance instance_from_json(const nlohmann::json& j);

// One line per instance plus indented failure lines.
std::vector<std::string> format_text(const RunReport& report);

struct CorpusOptions {
    std::size_t max_vertices = 5;
    std::vector<std::string> models{"asm"};
    std::size_t orderings = 0; // extra random edge orders per graph
    std::uint64_t seed = 1;
    AnomalyPolicy policy;
};

// Every (graph, edge order, model) instance for the given graphs.
std::vector<Instance> build_instances(const std::vector<NamedGraph>& graphs, const CorpusOptions& options);

} // namespace hcf
