#pragma once

// Brute-force ground truth: spanning trees, recurrent configurations and
// exact equivalence of configurations modulo the reduced Laplacian.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hcf/dynamics.hpp"
#include "hcf/spanning_tree.hpp"

namespace hcf {

class InstanceTooLarge : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct OracleLimits {
    std::size_t max_vertices = 8;
    std::size_t max_edges = 16;
    std::uint64_t max_box_volume = 10'000'000;
};

// All spanning trees in ascending lexicographic order of sorted edge ids.
std::vector<SpanningTree> enumerate_spanning_trees(const Multigraph& g, const OracleLimits& limits = {});

// det of the reduced Laplacian.
BigInt count_spanning_trees(const Multigraph& g);
inline BigInt class_count(const Multigraph& g) { return count_spanning_trees(g); }

// Critical configurations inside the box 0 <= D(v) <= degree(v) - 1, in
// lexicographic order.
std::vector<Configuration> enumerate_recurrent(const Multigraph& g, const Cover& h, const OracleLimits& limits = {});

// Number of configurations in the box above, or nullopt past 2^64.
std::optional<std::uint64_t> degree_box_volume(const Multigraph& g);

// Calls fn on every configuration of the degree box in lexicographic order.
template <class Fn>
void for_each_in_degree_box(const Multigraph& g, Fn&& fn) {
    Configuration d = Configuration::zeros(g);
    const std::size_t n = g.n();
    while (true) {
        fn(static_cast<const Configuration&>(d));
        std::size_t i = n;
        while (i > 0) {
            Vertex v = i;
            if (d[v] + 1 < g.degree(v)) {
                ++d[v];
                break;
            }
            d[v] = 0;
            --i;
        }
        if (i == 0) {
            return;
        }
    }
}

// Integer solutions of A x = b for a nonsingular A. The triangular form is
// reached with unimodular row operations, so a system is solvable over the
// integers iff back substitution divides exactly.
class IntegerSolver {
  public:
    explicit IntegerSolver(const IntegerMatrix& a);

    [[nodiscard]] std::optional<std::vector<BigInt>> solve(const std::vector<BigInt>& b) const;

  private:
    IntegerMatrix upper_;
    IntegerMatrix transform_;
};

struct EquivalenceWitness {
    // f with reduced_laplacian * f = D2 - D1 on the non-sink vertices, i.e.
    // firing f from D2 reaches D1.
    std::vector<BigInt> firing;

    [[nodiscard]] bool verifies(const Multigraph& g, const Configuration& d1, const Configuration& d2) const;
};

// Reusable equivalence test for one graph.
class EquivalenceOracle {
  public:
    explicit EquivalenceOracle(const Multigraph& g) : g_{&g}, reduced_{reduced_laplacian(g)}, solver_{reduced_} {}

    [[nodiscard]] std::optional<EquivalenceWitness> witness(const Configuration& d1, const Configuration& d2) const;
    [[nodiscard]] bool equivalent(const Configuration& d1, const Configuration& d2) const {
        return witness(d1, d2).has_value();
    }

  private:
    const Multigraph* g_;
    IntegerMatrix reduced_;
    IntegerSolver solver_;
};

// nullopt when D1 and D2 are not equivalent.
std::optional<EquivalenceWitness> equivalent(const Multigraph& g, const Configuration& d1, const Configuration& d2);

} // namespace hcf
