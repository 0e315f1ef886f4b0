#pragma once

// Exhaustive check that sigma and gamma are mutually inverse bijections on one
// (graph, model, edge order, policy) instance. Failures are collected as data.

#include <string>
#include <vector>

#include "hcf/bijection.hpp"
#include "hcf/oracle.hpp"

namespace hcf {

struct VerificationFailure {
    enum class Kind {
        count_mismatch,      // #recurrent != #trees
        sigma_anomaly,       // sigma halted or got stuck
        sigma_collision,     // two recurrent configurations share a tree
        gamma_failure,       // gamma could not produce a configuration
        gamma_not_recurrent, // gamma(T) is not recurrent (includes negative entries)
        gamma_collision,     // two trees share a configuration
        gamma_sigma,         // gamma(sigma(D)) != D
        sigma_gamma,         // sigma(gamma(T)) != T
    };

    Kind kind = Kind::count_mismatch;
    std::string detail;
    std::vector<Configuration> configs;
    std::vector<SpanningTree> trees;
    std::vector<std::string> trace;
};

std::string to_string(VerificationFailure::Kind k);

struct VerificationReport {
    AnomalyPolicy policy;
    std::size_t recurrent_count = 0;
    std::size_t tree_count = 0;
    std::vector<VerificationFailure> failures;

    [[nodiscard]] bool certified() const { return failures.empty(); }
};

VerificationReport verify_bijection(const Multigraph& g, const Cover& h, const AnomalyPolicy& policy = {},
                                    const OracleLimits& limits = {});

} // namespace hcf
