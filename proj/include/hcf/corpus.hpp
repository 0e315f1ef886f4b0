#pragma once

// Instance generators for verification runs: small connected graphs, model
// covers and edge reorderings.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hcf/model.hpp"

namespace hcf {

struct NamedGraph {
    std::string name;
    Multigraph graph;
};

// One representative per isomorphism class of connected simple graphs on
// 2..max_vertices vertices (max_vertices <= 7). Each representative is the
// labelling with the smallest edge bitmask.
std::vector<NamedGraph> connected_simple_graphs(std::size_t max_vertices);

// g with one uniformly chosen edge duplicated at the end of the edge list.
Multigraph with_doubled_edge(const Multigraph& g, std::mt19937_64& rng);

Multigraph banana_graph(std::size_t multiplicity);   // two vertices, parallel edges
Multigraph path_graph(std::size_t vertex_count);     // 0-1-2-...
Multigraph cycle_graph(std::size_t vertex_count);    // 0-1-...-(k-1)-0
Multigraph complete_graph(std::size_t vertex_count); // lexicographic edge order

// The standard corpus: connected simple graphs up to `max_vertices`, each
// also with one seeded doubled edge, then B3, P3, K4, C5 (those that fit).
std::vector<NamedGraph> standard_corpus(std::size_t max_vertices = 5, std::uint64_t seed = 1);

// Every antichain of nonempty subsets of the non-sink vertices that is
// maximal among such antichains. Requires at most 4 non-sink vertices.
std::vector<Cover> maximal_antichain_covers(const Multigraph& g);

// A random maximal antichain cover (greedy over a random order of the
// nonempty subsets). Requires at most 16 non-sink vertices.
Cover random_maximal_antichain_cover(const Multigraph& g, std::mt19937_64& rng);

// Models used for verification: "asm", "cfm", or "all-antichains" (every
// maximal antichain cover up to 4 non-sink vertices, `samples` random ones
// above). Duplicates are removed.
std::vector<Cover> corpus_models(const Multigraph& g, const std::vector<std::string>& kinds, std::mt19937_64& rng,
                                 std::size_t samples = 8);

// A uniformly random permutation of the edge list.
Multigraph random_edge_order(const Multigraph& g, std::mt19937_64& rng);

} // namespace hcf
