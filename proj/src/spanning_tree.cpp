#include "hcf/spanning_tree.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hcf {

SpanningTree::SpanningTree(std::vector<EdgeId> edges) : edges_{std::move(edges)} {
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
        throw std::invalid_argument("spanning tree lists an edge twice");
    }
}

bool SpanningTree::contains(EdgeId id) const { return std::binary_search(edges_.begin(), edges_.end(), id); }

bool is_spanning_tree(const Multigraph& g, const SpanningTree& t) {
    if (t.size() != g.n()) {
        return false;
    }
    std::vector<Vertex> parent(g.vertex_count());
    std::iota(parent.begin(), parent.end(), Vertex{0});
    auto find = [&](Vertex v) {
        while (parent[v] != v) {
            v = parent[v] = parent[parent[v]];
        }
        return v;
    };
    for (EdgeId id : t.edges()) {
        if (id == 0 || id > g.edge_count()) {
            return false;
        }
        const Edge& e = g.edge(id);
        const Vertex a = find(e.u);
        const Vertex b = find(e.v);
        if (a == b) {
            return false;
        }
        parent[a] = b;
    }
    return true;
}

std::string format_tree(const SpanningTree& t) {
    std::string out = "tree";
    for (EdgeId id : t.edges()) {
        out += " e" + std::to_string(id);
    }
    return out;
}

} // namespace hcf
