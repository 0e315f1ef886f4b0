#pragma once

// Configurations and the firing dynamics of a hereditary model: ready sets,
// the burning fixed point, stabilisation, criticality and the helpers built
// on top of them.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hcf/model.hpp"

namespace hcf {

class PreconditionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Chip counts on the non-sink vertices 1..n. The sink holds minus their sum.
class Configuration {
  public:
    Configuration() = default;
    explicit Configuration(std::vector<Chips> chips) : chips_{std::move(chips)} {}
    static Configuration zeros(const Multigraph& g) { return Configuration(std::vector<Chips>(g.n(), 0)); }

    [[nodiscard]] std::size_t size() const { return chips_.size(); }
    [[nodiscard]] const std::vector<Chips>& values() const { return chips_; }

    // v ranges over 1..n.
    Chips operator[](Vertex v) const { return chips_[v - 1]; }
    Chips& operator[](Vertex v) { return chips_[v - 1]; }

    [[nodiscard]] Chips sink_value() const;
    [[nodiscard]] bool nonnegative() const;

    Configuration& operator+=(const Configuration& other);
    Configuration& operator-=(const Configuration& other);
    friend Configuration operator+(Configuration a, const Configuration& b) { return a += b; }
    friend Configuration operator-(Configuration a, const Configuration& b) { return a -= b; }
    [[nodiscard]] Configuration scaled(Chips k) const;

    friend bool operator==(const Configuration&, const Configuration&) = default;
    friend auto operator<=>(const Configuration&, const Configuration&) = default;

  private:
    std::vector<Chips> chips_;
};

std::string format_chips(const Configuration& d);

struct FiringStrategy {
    enum class Kind { first_ready_maximal, singletons_first, random };

    Kind kind = Kind::first_ready_maximal;
    std::uint64_t seed = 0;

    static FiringStrategy first_ready_maximal() { return {Kind::first_ready_maximal, 0}; }
    static FiringStrategy singletons_first() { return {Kind::singletons_first, 0}; }
    static FiringStrategy random(std::uint64_t seed) { return {Kind::random, seed}; }
};

// Per-vertex firing counts, indexed like a Configuration (entry v-1 for vertex v).
using FiringVector = std::vector<std::int64_t>;

struct Stabilization {
    Configuration config;
    FiringVector firings;
};

// D - Q chi_S for a sink-free S. Debt is allowed in the result.
Configuration fire_set(const Multigraph& g, const Configuration& d, const VertexSet& s);
// D - Q chi_S where S may contain the sink.
Configuration fire_cluster(const Multigraph& g, const Configuration& d, const VertexSet& s);
Configuration fire_sink(const Multigraph& g, const Configuration& d);

bool is_ready(const Multigraph& g, const Cover& h, const Configuration& d, const VertexSet& m);

// Greatest subset S of A such that every v in S other than `exempt` satisfies
// D(v) >= edges from v to the complement of S. The exempt vertex's chip count
// is never read. Without an exemption this is the union of all ready subsets of A.
VertexSet max_ready_subset(const Multigraph& g, const Configuration& d, const VertexSet& a,
                           std::optional<Vertex> exempt = std::nullopt);

// Maximal ready sets inside U: the burning fixed point of each A_j & U, with
// empty and strictly dominated results dropped and duplicates removed.
std::vector<VertexSet> maximal_ready_sets(const Multigraph& g, const Cover& h, const Configuration& d, const VertexSet& u,
                                          std::optional<Vertex> exempt = std::nullopt);

// Least number of chips v loses when firing a maximal ready set inside U that
// contains it. nullopt when no such set exists.
std::optional<int> min_loss(const Multigraph& g, const Cover& h, const Configuration& d, Vertex v, const VertexSet& u,
                            bool exempt_pivot);

// Requires nonnegative chips on every non-sink vertex (PreconditionError otherwise).
bool is_stable(const Multigraph& g, const Cover& h, const Configuration& d);

Stabilization stabilize(const Multigraph& g, const Cover& h, const Configuration& d,
                        FiringStrategy strategy = FiringStrategy::first_ready_maximal());

// Stable and returned to itself by firing the sink and stabilising. False for
// configurations with debt.
bool is_critical(const Multigraph& g, const Cover& h, const Configuration& d);
inline bool is_recurrent(const Multigraph& g, const Cover& h, const Configuration& d) { return is_critical(g, h, d); }

// Starting from fire_sink(D), fires single active vertices (lowest index
// first, debt allowed) until none is active or more than n firings happened.
// True iff that ends at D with every vertex fired exactly once. False for
// unstable input.
bool active_firing_check(const Multigraph& g, const Cover& h, const Configuration& d);

// D - stabilize(D) for D = degree on every non-sink vertex. Throws
// std::logic_error if some entry is not strictly positive.
Configuration epsilon(const Multigraph& g, const Cover& h);

// The recurrent configuration equivalent to D, by repeated sink firing and
// stabilisation. Throws std::runtime_error past `max_iterations` (default 10
// times the number of spanning trees).
Configuration recurrent_representative(const Multigraph& g, const Cover& h, const Configuration& d,
                                       std::optional<std::uint64_t> max_iterations = std::nullopt);

// K+ - D with K+(v) = degree(v) - 1.
Configuration dualize(const Multigraph& g, const Configuration& d);

} // namespace hcf
