#include "hcf/verify.hpp"

#include <map>

namespace hcf {

std::string to_string(VerificationFailure::Kind k) {
    using Kind = VerificationFailure::Kind;
    switch (k) {
    case Kind::count_mismatch:
        return "count-mismatch";
    case Kind::sigma_anomaly:
        return "sigma-anomaly";
    case Kind::sigma_collision:
        return "sigma-collision";
    case Kind::gamma_failure:
        return "gamma-failure";
    case Kind::gamma_not_recurrent:
        return "gamma-not-recurrent";
    case Kind::gamma_collision:
        return "gamma-collision";
    case Kind::gamma_sigma:
        return "gamma-sigma";
    case Kind::sigma_gamma:
        return "sigma-gamma";
    }
    return "?";
}

namespace {

void append(std::vector<std::string>& out, const std::vector<std::string>& lines, const std::string& prefix = "") {
    for (const auto& line : lines) {
        out.push_back(prefix + line);
    }
}

} // namespace

VerificationReport verify_bijection(const Multigraph& g, const Cover& h, const AnomalyPolicy& policy,
                                    const OracleLimits& limits) {
    using Kind = VerificationFailure::Kind;
    VerificationReport report;
    report.policy = policy;

    const std::vector<Configuration> recurrents = enumerate_recurrent(g, h, limits);
    const std::vector<SpanningTree> trees = enumerate_spanning_trees(g, limits);
    report.recurrent_count = recurrents.size();
    report.tree_count = trees.size();
    if (recurrents.size() != trees.size()) {
        report.failures.push_back({Kind::count_mismatch,
                                   std::to_string(recurrents.size()) + " recurrent configurations vs " +
                                       std::to_string(trees.size()) + " spanning trees",
                                   {},
                                   {},
                                   {}});
    }

    // sigma on every recurrent configuration.
    std::map<SpanningTree, std::size_t> sigma_image;
    std::map<Configuration, SigmaResult> sigma_runs;
    for (std::size_t i = 0; i < recurrents.size(); ++i) {
        const Configuration& d = recurrents[i];
        SigmaResult run = sigma(g, h, d, policy);
        if (!run.ok()) {
            VerificationFailure f{Kind::sigma_anomaly, run.anomaly->message, {d}, {}, {}};
            append(f.trace, format_trace(run.trace));
            report.failures.push_back(std::move(f));
            continue;
        }
        const SpanningTree tree = *run.tree;
        if (auto [it, inserted] = sigma_image.emplace(tree, i); !inserted) {
            const Configuration& first = recurrents[it->second];
            VerificationFailure f{Kind::sigma_collision, format_chips(first) + " and " + format_chips(d) + " both map to " +
                                                             format_tree(tree),
                                  {first, d},
                                  {tree},
                                  {}};
            append(f.trace, format_trace(sigma_runs.at(first).trace), "a: ");
            append(f.trace, format_trace(run.trace), "b: ");
            report.failures.push_back(std::move(f));
        }
        GammaResult back = gamma(g, h, tree, policy);
        if (!back.ok() || *back.config != d) {
            VerificationFailure f{Kind::gamma_sigma,
                                  format_chips(d) + " -> " + format_tree(tree) + " -> " +
                                      (back.ok() ? format_chips(*back.config) : "failure: " + back.failure),
                                  {d},
                                  {tree},
                                  {}};
            append(f.trace, format_trace(run.trace), "sigma: ");
            append(f.trace, format_trace(back), "gamma: ");
            report.failures.push_back(std::move(f));
        }
        sigma_runs.emplace(d, std::move(run));
    }

    // gamma on every tree.
    std::map<Configuration, SpanningTree> gamma_image;
    for (const SpanningTree& tree : trees) {
        GammaResult run = gamma(g, h, tree, policy);
        if (!run.ok()) {
            VerificationFailure f{Kind::gamma_failure, run.failure, {}, {tree}, {}};
            append(f.trace, format_trace(run));
            report.failures.push_back(std::move(f));
            continue;
        }
        const Configuration& d = *run.config;
        if (auto [it, inserted] = gamma_image.emplace(d, tree); !inserted) {
            report.failures.push_back({Kind::gamma_collision,
                                       format_tree(it->second) + " and " + format_tree(tree) + " both map to " +
                                           format_chips(d),
                                       {d},
                                       {it->second, tree},
                                       format_trace(run)});
        }
        if (!is_recurrent(g, h, d)) {
            VerificationFailure f{Kind::gamma_not_recurrent, format_tree(tree) + " -> " + format_chips(d) + " is not recurrent",
                                  {d},
                                  {tree},
                                  {}};
            append(f.trace, format_trace(run));
            report.failures.push_back(std::move(f));
            continue;
        }
        SigmaResult forward = sigma(g, h, d, policy);
        if (!forward.ok() || *forward.tree != tree) {
            VerificationFailure f{Kind::sigma_gamma,
                                  format_tree(tree) + " -> " + format_chips(d) + " -> " +
                                      (forward.ok() ? format_tree(*forward.tree) : "anomaly: " + forward.anomaly->message),
                                  {d},
                                  {tree},
                                  {}};
            append(f.trace, format_trace(run), "gamma: ");
            append(f.trace, format_trace(forward.trace), "sigma: ");
            report.failures.push_back(std::move(f));
        }
    }
    return report;
}

} // namespace hcf
