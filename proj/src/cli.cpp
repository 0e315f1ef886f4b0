#include "hcf/cli.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "hcf/run.hpp"

namespace hcf {

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kInputError = 2;

// Raised for bad input detected after argument parsing.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string with_path(const std::string& path, const std::string& what) { return path + ": " + what; }

Multigraph load_graph(const std::string& path) {
    try {
        return parse_graph(read_file(path));
    } catch (const std::exception& e) {
        throw InputError(with_path(path, e.what()));
    }
}

Cover load_model(const std::string& spec, const Multigraph& g) {
    try {
        if (spec == "asm") {
            return asm_cover(g);
        }
        if (spec == "cfm") {
            return cfm_cover(g);
        }
        return parse_model(read_file(spec), g);
    } catch (const std::exception& e) {
        throw InputError(with_path(spec, e.what()));
    }
}

Configuration load_configuration(const std::string& path, const Multigraph& g) {
    try {
        return parse_configuration(read_file(path), g);
    } catch (const std::exception& e) {
        throw InputError(with_path(path, e.what()));
    }
}

SpanningTree load_tree(const std::string& path, const Multigraph& g) {
    try {
        return parse_tree(read_file(path), g);
    } catch (const std::exception& e) {
        throw InputError(with_path(path, e.what()));
    }
}

void require_nonnegative(const Configuration& d, const std::string& path) {
    if (!d.nonnegative()) {
        throw InputError(with_path(path, "configuration has a negative entry: " + format_chips(d)));
    }
}

std::string format_firings(const FiringVector& f) {
    std::string out = "firings";
    for (auto k : f) {
        out += " " + std::to_string(k);
    }
    return out;
}

struct PolicyFlags {
    std::string excess = "halt";
    bool no_pivot_exemption = false;
    std::string rejection = "persistent";

    void attach(CLI::App* cmd) {
        cmd->add_option("--policy", excess, "Action when D(v) exceeds the threshold: halt, reject, accept")
            ->check(CLI::IsMember({"halt", "reject", "accept", "treat-as-reject", "treat-as-accept"}));
        cmd->add_flag("--no-pivot-exemption", no_pivot_exemption, "Debt-test the pivot when evaluating m");
        cmd->add_option("--rejection", rejection, "Rejected-edge memory: persistent or per-stage")
            ->check(CLI::IsMember({"persistent", "per-stage"}));
    }

    [[nodiscard]] AnomalyPolicy policy() const {
        AnomalyPolicy p;
        p.on_excess = *parse_excess_action(excess);
        p.rejection = *parse_rejection_memory(rejection);
        p.pivot_exemption = !no_pivot_exemption;
        return p;
    }
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string part;
    while (std::getline(in, part, sep)) {
        if (!part.empty()) {
            out.push_back(part);
        }
    }
    return out;
}

std::vector<RunReport> run_all(const std::vector<Instance>& instances, std::size_t jobs, bool timed) {
    std::vector<std::optional<RunReport>> slots(instances.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < instances.size(); i = next++) {
            slots[i] = run_instance(instances[i], {}, timed);
        }
    };
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < jobs; ++t) {
        pool.emplace_back(worker);
    }
    worker();
    pool.clear();
    // Output order is instance order, independent of scheduling.
    std::vector<RunReport> out;
    out.reserve(slots.size());
    for (auto& slot : slots) {
        out.push_back(std::move(*slot));
    }
    return out;
}

} // namespace

int run_cli(int argc, const char* const argv[], std::ostream& out, std::ostream& err) {
    CLI::App app{"Hereditary chip-firing models: stabilisation, recurrence and the tree bijection"};
    app.require_subcommand(1);

    std::string graph_path, config_path, config2_path, tree_path, model = "asm";
    auto add_graph = [&](CLI::App* cmd) { cmd->add_option("graph", graph_path, "Graph file")->required(); };
    auto add_config = [&](CLI::App* cmd) { cmd->add_option("config", config_path, "Configuration file")->required(); };
    auto add_model = [&](CLI::App* cmd) { cmd->add_option("--model,-m", model, "asm, cfm or a model file")->capture_default_str(); };

    // stabilize
    auto* stabilize_cmd = app.add_subcommand("stabilize", "Stabilise a configuration");
    std::string strategy = "first-ready-maximal";
    std::uint64_t seed = 0;
    std::size_t confluence = 0;
    add_graph(stabilize_cmd);
    add_config(stabilize_cmd);
    add_model(stabilize_cmd);
    stabilize_cmd->add_option("--strategy", strategy, "first-ready-maximal, singletons-first or random")
        ->check(CLI::IsMember({"first-ready-maximal", "singletons-first", "random"}));
    stabilize_cmd->add_option("--seed", seed, "Seed for the random strategy");
    stabilize_cmd->add_option("--check-confluence", confluence, "Also run K seeded random strategies and compare");

    // recurrent
    auto* recurrent_cmd = app.add_subcommand("recurrent", "Decide recurrence (criticality, cross-checked by active-vertex firing)");
    add_graph(recurrent_cmd);
    add_config(recurrent_cmd);
    add_model(recurrent_cmd);

    // to-tree / from-tree
    PolicyFlags policy_flags;
    bool trace = false;
    std::string trace_format = "text";
    auto* to_tree_cmd = app.add_subcommand("to-tree", "Map a recurrent configuration to a spanning tree");
    add_graph(to_tree_cmd);
    add_config(to_tree_cmd);
    add_model(to_tree_cmd);
    auto* from_tree_cmd = app.add_subcommand("from-tree", "Map a spanning tree to a configuration");
    add_graph(from_tree_cmd);
    from_tree_cmd->add_option("tree", tree_path, "Tree file")->required();
    add_model(from_tree_cmd);
    for (auto* cmd : {to_tree_cmd, from_tree_cmd}) {
        policy_flags.attach(cmd);
        cmd->add_flag("--trace", trace, "Write the decision log to stderr");
        cmd->add_option("--trace-format", trace_format, "text or json")->check(CLI::IsMember({"text", "json"}));
    }

    // enumerate / count
    auto* enumerate_cmd = app.add_subcommand("enumerate", "List spanning trees or recurrent configurations");
    std::string what = "trees";
    add_graph(enumerate_cmd);
    add_model(enumerate_cmd);
    enumerate_cmd->add_option("--what", what, "trees or recurrents")->check(CLI::IsMember({"trees", "recurrents"}));
    auto* count_cmd = app.add_subcommand("count", "Number of spanning trees (= number of equivalence classes)");
    add_graph(count_cmd);

    // verify / replay
    auto* verify_cmd = app.add_subcommand("verify", "Check the bijection exhaustively on a corpus");
    std::vector<std::string> graph_files;
    std::size_t max_vertices = 0;
    std::string models = "asm";
    std::size_t orderings = 0;
    std::uint64_t corpus_seed = 1;
    std::string format = "text";
    std::string artifact_dir;
    std::size_t jobs = std::max(1U, std::thread::hardware_concurrency());
    bool timing = false;
    PolicyFlags verify_policy;
    verify_cmd->add_option("graphs", graph_files, "Graph files (instead of a generated corpus)");
    verify_cmd->add_option("--max-vertices", max_vertices, "Generate the standard corpus up to this many vertices");
    verify_cmd->add_option("--models", models, "Comma-separated: asm, cfm, all-antichains");
    verify_cmd->add_option("--orderings", orderings, "Extra random edge orders per graph");
    verify_cmd->add_option("--seed", corpus_seed, "Seed for doubled edges, orderings and sampled models");
    verify_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    verify_cmd->add_option("--artifacts", artifact_dir, "Write one JSON artifact per counterexample into this directory");
    verify_cmd->add_option("--jobs", jobs, "Worker threads");
    verify_cmd->add_flag("--timing", timing, "Include wall time (output is then not reproducible)");
    verify_policy.attach(verify_cmd);

    auto* replay_cmd = app.add_subcommand("replay", "Re-run the instance stored in a JSON report");
    std::string artifact_path;
    replay_cmd->add_option("artifact", artifact_path, "Report JSON")->required();

    // small wrappers
    auto* dualize_cmd = app.add_subcommand("dualize", "K+ - D");
    add_graph(dualize_cmd);
    add_config(dualize_cmd);
    auto* canon_cmd = app.add_subcommand("canon", "Recurrent configuration equivalent to D");
    add_graph(canon_cmd);
    add_config(canon_cmd);
    add_model(canon_cmd);
    auto* equivalent_cmd = app.add_subcommand("equivalent", "Decide equivalence modulo the Laplacian");
    add_graph(equivalent_cmd);
    add_config(equivalent_cmd);
    equivalent_cmd->add_option("other", config2_path, "Second configuration file")->required();
    auto* epsilon_cmd = app.add_subcommand("epsilon", "D - stabilize(D) for D = degree");
    add_graph(epsilon_cmd);
    add_model(epsilon_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    try {
        if (*stabilize_cmd) {
            const Multigraph g = load_graph(graph_path);
            const Cover h = load_model(model, g);
            const Configuration d = load_configuration(config_path, g);
            FiringStrategy s = strategy == "random"             ? FiringStrategy::random(seed)
                               : strategy == "singletons-first" ? FiringStrategy::singletons_first()
                                                                : FiringStrategy::first_ready_maximal();
            const Stabilization result = stabilize(g, h, d, s);
            out << format_chips(result.config) << "\n" << format_firings(result.firings) << "\n";
            if (confluence > 0) {
                for (std::size_t k = 0; k < confluence; ++k) {
                    const Stabilization other = stabilize(g, h, d, FiringStrategy::random(seed + k));
                    if (other.config != result.config || other.firings != result.firings) {
                        err << "confluence violated with random seed " << seed + k << ": " << format_chips(other.config)
                            << " / " << format_firings(other.firings) << "\n";
                        return kViolation;
                    }
                }
                out << "confluence " << confluence << " agree\n";
            }
            return kOk;
        }
        if (*recurrent_cmd) {
            const Multigraph g = load_graph(graph_path);
            const Cover h = load_model(model, g);
            const Configuration d = load_configuration(config_path, g);
            require_nonnegative(d, config_path);
            const bool critical = is_critical(g, h, d);
            const bool by_firing = active_firing_check(g, h, d);
            out << (critical ? "recurrent" : "not-recurrent") << "\n";
            out << "active-firing " << (by_firing ? "recurrent" : "not-recurrent") << "\n";
            if (critical != by_firing) {
                err << "criticality and active-vertex firing disagree\n";
                return kViolation;
            }
            return critical ? kOk : kViolation;
        }
        if (*to_tree_cmd) {
            const Multigraph g = load_graph(graph_path);
            const Cover h = load_model(model, g);
            const Configuration d = load_configuration(config_path, g);
            require_nonnegative(d, config_path);
            if (!is_recurrent(g, h, d)) {
                throw InputError(with_path(config_path, format_chips(d) + " is not recurrent"));
            }
            const SigmaResult result = sigma(g, h, d, policy_flags.policy());
            if (trace || !result.ok()) {
                if (trace_format == "json") {
                    err << to_json(result.trace).dump() << "\n";
                } else {
                    for (const auto& line : format_trace(result.trace)) {
                        err << line << "\n";
                    }
                }
            }
            if (!result.ok()) {
                err << "anomaly: " << result.anomaly->message << "\n";
                return kViolation;
            }
            out << format_tree(*result.tree) << "\n";
            return kOk;
        }
        if (*from_tree_cmd) {
            const Multigraph g = load_graph(graph_path);
            const Cover h = load_model(model, g);
            const SpanningTree t = load_tree(tree_path, g);
            const GammaResult result = gamma(g, h, t, policy_flags.policy());
            if (trace || !result.ok()) {
                if (trace_format == "json") {
                    err << to_json(result).dump() << "\n";
                } else {
                    for (const auto& line : format_trace(result)) {
                        err << line << "\n";
                    }
                }
            }
            if (!result.ok()) {
                err << "gamma failed: " << result.failure << "\n";
                return kViolation;
            }
            out << format_chips(*result.config) << "\n";
            if (!is_recurrent(g, h, *result.config)) {
                err << "result is not recurrent\n";
                return kViolation;
            }
            return kOk;
        }
        if (*enumerate_cmd) {
            const Multigraph g = load_graph(graph_path);
            if (what == "trees") {
                for (const auto& t : enumerate_spanning_trees(g)) {
                    out << format_tree(t) << "\n";
                }
            } else {
                const Cover h = load_model(model, g);
                for (const auto& d : enumerate_recurrent(g, h)) {
                    out << format_chips(d) << "\n";
                }
            }
            return kOk;
        }
        if (*count_cmd) {
            out << count_spanning_trees(load_graph(graph_path)) << "\n";
            return kOk;
        }
        if (*verify_cmd) {
            CorpusOptions options;
            options.models = split(models, ',');
            options.orderings = orderings;
            options.seed = corpus_seed;
            options.policy = verify_policy.policy();
            for (const auto& kind : options.models) {
                if (kind != "asm" && kind != "cfm" && kind != "all-antichains") {
                    throw InputError("unknown model kind '" + kind + "'");
                }
            }
            std::vector<NamedGraph> graphs;
            for (const auto& path : graph_files) {
                graphs.push_back({path, load_graph(path)});
            }
            if (max_vertices > 0) {
                if (max_vertices > 7) {
                    throw InputError("--max-vertices is limited to 7");
                }
                for (auto& named : standard_corpus(max_vertices, corpus_seed)) {
                    graphs.push_back(std::move(named));
                }
            }
            if (graphs.empty()) {
                throw InputError("verify needs graph files or --max-vertices");
            }
            const std::vector<RunReport> reports = run_all(build_instances(graphs, options), jobs, timing);
            std::size_t certified = 0, counterexamples = 0, errors = 0, index = 0;
            for (const RunReport& r : reports) {
                ++index;
                certified += r.outcome == RunReport::Outcome::certified;
                counterexamples += r.outcome == RunReport::Outcome::counterexample;
                errors += r.outcome == RunReport::Outcome::error;
                if (format == "json") {
                    out << to_json(r).dump() << "\n";
                } else {
                    for (const auto& line : format_text(r)) {
                        out << line << "\n";
                    }
                }
                if (!artifact_dir.empty() && r.outcome != RunReport::Outcome::certified) {
                    std::filesystem::create_directories(artifact_dir);
                    std::ofstream file(std::filesystem::path(artifact_dir) / ("instance" + std::to_string(index) + ".json"));
                    file << to_json(r).dump(2) << "\n";
                }
            }
            if (format == "json") {
                out << nlohmann::json{{"schema", kReportSchema},
                                      {"summary",
                                       {{"instances", reports.size()},
                                        {"certified", certified},
                                        {"counterexamples", counterexamples},
                                        {"errors", errors}}}}
                           .dump()
                    << "\n";
            } else {
                out << "summary instances=" << reports.size() << " certified=" << certified
                    << " counterexamples=" << counterexamples << " errors=" << errors << "\n";
            }
            if (errors > 0) {
                return kInputError;
            }
            return counterexamples > 0 ? kViolation : kOk;
        }
        if (*replay_cmd) {
            nlohmann::json artifact;
            std::optional<Instance> instance;
            try {
                artifact = nlohmann::json::parse(read_file(artifact_path));
                instance = instance_from_json(artifact);
            } catch (const std::exception& e) {
                throw InputError(with_path(artifact_path, e.what()));
            }
            const RunReport r = run_instance(*instance);
            nlohmann::json replayed = to_json(r);
            out << replayed.dump() << "\n";
            nlohmann::json recorded = artifact;
            recorded.erase("wall_seconds");
            if (artifact.contains("outcome") && recorded != replayed) {
                err << "replay differs from the recorded report\n";
                return kViolation;
            }
            return r.outcome == RunReport::Outcome::certified ? kOk
                   : r.outcome == RunReport::Outcome::error   ? kInputError
                                                              : kViolation;
        }
        if (*dualize_cmd) {
            const Multigraph g = load_graph(graph_path);
            out << format_chips(dualize(g, load_configuration(config_path, g))) << "\n";
            return kOk;
        }
        if (*canon_cmd) {
            const Multigraph g = load_graph(graph_path);
            const Cover h = load_model(model, g);
            const Configuration d = load_configuration(config_path, g);
            require_nonnegative(d, config_path);
            out << format_chips(recurrent_representative(g, h, d)) << "\n";
            return kOk;
        }
        if (*equivalent_cmd) {
            const Multigraph g = load_graph(graph_path);
            const auto witness = equivalent(g, load_configuration(config_path, g), load_configuration(config2_path, g));
            if (!witness) {
                out << "not-equivalent\n";
                return kViolation;
            }
            out << "equivalent f=";
            for (const auto& f : witness->firing) {
                out << " " << f;
            }
            out << "\n";
            return kOk;
        }
        if (*epsilon_cmd) {
            const Multigraph g = load_graph(graph_path);
            out << format_chips(epsilon(g, load_model(model, g))) << "\n";
            return kOk;
        }
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const InstanceTooLarge& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}

} // namespace hcf
