#include "hcf/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace hcf {

namespace {

// Bit index of the pair (a, b), a < b, in an upper-triangular layout.
std::size_t pair_bit(std::size_t k, std::size_t a, std::size_t b) {
    if (a > b) {
        std::swap(a, b);
    }
    return a * k - a * (a + 1) / 2 + (b - a - 1);
}

bool connected(std::size_t k, std::uint32_t mask) {
    std::uint32_t seen = 1;
    bool grew = true;
    while (grew) {
        grew = false;
        for (std::size_t a = 0; a < k; ++a) {
            for (std::size_t b = a + 1; b < k; ++b) {
                if (mask >> pair_bit(k, a, b) & 1U) {
                    const bool ia = seen >> a & 1U;
                    const bool ib = seen >> b & 1U;
                    if (ia != ib) {
                        seen |= (1U << a) | (1U << b);
                        grew = true;
                    }
                }
            }
        }
    }
    return seen == (1U << k) - 1;
}

std::uint32_t relabel(std::size_t k, std::uint32_t mask, const std::vector<std::size_t>& perm) {
    std::uint32_t out = 0;
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = a + 1; b < k; ++b) {
            if (mask >> pair_bit(k, a, b) & 1U) {
                out |= 1U << pair_bit(k, perm[a], perm[b]);
            }
        }
    }
    return out;
}

Multigraph from_mask(std::size_t k, std::uint32_t mask) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = a + 1; b < k; ++b) {
            if (mask >> pair_bit(k, a, b) & 1U) {
                edges.emplace_back(a, b);
            }
        }
    }
    return build_graph(k, edges);
}

} // namespace

std::vector<NamedGraph> connected_simple_graphs(std::size_t max_vertices) {
    if (max_vertices > 7) {
        throw std::invalid_argument("connected_simple_graphs supports at most 7 vertices");
    }
    std::vector<NamedGraph> out;
    for (std::size_t k = 2; k <= max_vertices; ++k) {
        const std::size_t pairs = k * (k - 1) / 2;
        std::vector<std::size_t> perm(k);
        std::set<std::uint32_t> classes;
        for (std::uint32_t mask = 1; mask < (1U << pairs); ++mask) {
            if (!connected(k, mask)) {
                continue;
            }
            std::iota(perm.begin(), perm.end(), std::size_t{0});
            std::uint32_t canonical = mask;
            do {
                canonical = std::min(canonical, relabel(k, mask, perm));
            } while (std::next_permutation(perm.begin(), perm.end()));
            classes.insert(canonical);
        }
        std::size_t index = 0;
        for (std::uint32_t mask : classes) {
            out.push_back({"simple" + std::to_string(k) + "_" + std::to_string(index++), from_mask(k, mask)});
        }
    }
    return out;
}

Multigraph with_doubled_edge(const Multigraph& g, std::mt19937_64& rng) {
    std::vector<Edge> edges = g.edges();
    edges.push_back(edges[rng() % edges.size()]);
    return Multigraph(g.vertex_count(), std::move(edges));
}

Multigraph banana_graph(std::size_t multiplicity) {
    return build_graph(2, std::vector<std::pair<Vertex, Vertex>>(multiplicity, {0, 1}));
}

Multigraph path_graph(std::size_t vertex_count) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex v = 1; v < vertex_count; ++v) {
        edges.emplace_back(v - 1, v);
    }
    return build_graph(vertex_count, edges);
}

Multigraph cycle_graph(std::size_t vertex_count) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex v = 1; v < vertex_count; ++v) {
        edges.emplace_back(v - 1, v);
    }
    edges.emplace_back(vertex_count - 1, 0);
    return build_graph(vertex_count, edges);
}

Multigraph complete_graph(std::size_t vertex_count) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex a = 0; a < vertex_count; ++a) {
        for (Vertex b = a + 1; b < vertex_count; ++b) {
            edges.emplace_back(a, b);
        }
    }
    return build_graph(vertex_count, edges);
}

std::vector<NamedGraph> standard_corpus(std::size_t max_vertices, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<NamedGraph> out = connected_simple_graphs(max_vertices);
    const std::size_t simple = out.size();
    for (std::size_t i = 0; i < simple; ++i) {
        out.push_back({out[i].name + "_doubled", with_doubled_edge(out[i].graph, rng)});
    }
    for (NamedGraph extra : {NamedGraph{"B3", banana_graph(3)}, NamedGraph{"P3", path_graph(3)},
                             NamedGraph{"K4", complete_graph(4)}, NamedGraph{"C5", cycle_graph(5)}}) {
        if (extra.graph.vertex_count() <= max_vertices) {
            out.push_back(std::move(extra));
        }
    }
    return out;
}

std::vector<Cover> maximal_antichain_covers(const Multigraph& g) {
    const std::size_t n = g.n();
    if (n > 4) {
        throw std::invalid_argument("maximal_antichain_covers enumerates at most 4 non-sink vertices");
    }
    const std::uint32_t subsets = (1U << n) - 1; // nonempty subsets are 1..subsets
    auto comparable = [](std::uint32_t a, std::uint32_t b) { return (a & b) == a || (a & b) == b; };
    std::vector<Cover> out;
    for (std::uint32_t family = 1; family < (1U << subsets); ++family) {
        std::vector<std::uint32_t> members;
        for (std::uint32_t s = 1; s <= subsets; ++s) {
            if (family >> (s - 1) & 1U) {
                members.push_back(s);
            }
        }
        bool antichain = true;
        for (std::size_t i = 0; i < members.size() && antichain; ++i) {
            for (std::size_t j = i + 1; j < members.size() && antichain; ++j) {
                antichain = !comparable(members[i], members[j]);
            }
        }
        if (!antichain) {
            continue;
        }
        bool maximal = true;
        for (std::uint32_t s = 1; s <= subsets && maximal; ++s) {
            maximal = std::any_of(members.begin(), members.end(), [&](std::uint32_t m) { return comparable(s, m); });
        }
        if (!maximal) {
            continue;
        }
        std::vector<std::vector<Vertex>> sets;
        for (std::uint32_t s : members) {
            auto& list = sets.emplace_back();
            for (std::size_t b = 0; b < n; ++b) {
                if (s >> b & 1U) {
                    list.push_back(b + 1);
                }
            }
        }
        out.push_back(build_model(g, sets));
    }
    return out;
}

Cover random_maximal_antichain_cover(const Multigraph& g, std::mt19937_64& rng) {
    const std::size_t n = g.n();
    if (n > 16) {
        throw std::invalid_argument("random_maximal_antichain_cover supports at most 16 non-sink vertices");
    }
    std::vector<std::uint32_t> order((1U << n) - 1);
    std::iota(order.begin(), order.end(), 1U);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::uint32_t> members;
    for (std::uint32_t s : order) {
        const bool free = std::none_of(members.begin(), members.end(),
                                       [&](std::uint32_t m) { return (s & m) == s || (s & m) == m; });
        if (free) {
            members.push_back(s);
        }
    }
    std::sort(members.begin(), members.end());
    std::vector<std::vector<Vertex>> sets;
    for (std::uint32_t s : members) {
        auto& list = sets.emplace_back();
        for (std::size_t b = 0; b < n; ++b) {
            if (s >> b & 1U) {
                list.push_back(b + 1);
            }
        }
    }
    return build_model(g, sets);
}

std::vector<Cover> corpus_models(const Multigraph& g, const std::vector<std::string>& kinds, std::mt19937_64& rng,
                                 std::size_t samples) {
    std::vector<Cover> out;
    auto add = [&](Cover c) {
        if (std::find(out.begin(), out.end(), c) == out.end()) {
            out.push_back(std::move(c));
        }
    };
    for (const std::string& kind : kinds) {
        if (kind == "asm") {
            add(asm_cover(g));
        } else if (kind == "cfm") {
            add(cfm_cover(g));
        } else if (kind == "all-antichains") {
            if (g.n() <= 4) {
                for (Cover& c : maximal_antichain_covers(g)) {
                    add(std::move(c));
                }
            } else {
                for (std::size_t i = 0; i < samples; ++i) {
                    add(random_maximal_antichain_cover(g, rng));
                }
            }
        } else {
            throw std::invalid_argument("unknown model kind '" + kind + "'");
        }
    }
    return out;
}

Multigraph random_edge_order(const Multigraph& g, std::mt19937_64& rng) {
    std::vector<EdgeId> order(g.edge_count());
    std::iota(order.begin(), order.end(), EdgeId{1});
    std::shuffle(order.begin(), order.end(), rng);
    return reorder_edges(g, order);
}

} // namespace hcf
