#include "hcf/multigraph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hcf {

namespace {

std::string edge_name(std::size_t index, const Edge& e) {
    std::ostringstream out;
    out << "edge e" << index + 1 << " (" << e.u << "," << e.v << ")";
    return out.str();
}

} // namespace

Multigraph::Multigraph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_{vertex_count}, edges_{std::move(edges)} {
    if (vertex_count_ < 2) {
        throw GraphError(GraphError::Kind::too_few_vertices, "graph needs at least 2 vertices, got " + std::to_string(vertex_count_));
    }
    if (edges_.empty()) {
        throw GraphError(GraphError::Kind::empty_edge_list, "edge list is empty");
    }
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (e.u >= vertex_count_ || e.v >= vertex_count_) {
            const Vertex bad = e.u >= vertex_count_ ? e.u : e.v;
            throw GraphError(GraphError::Kind::vertex_out_of_range,
                             edge_name(i, e) + " references vertex " + std::to_string(bad) + " outside 0.." +
                                 std::to_string(vertex_count_ - 1));
        }
        if (e.u == e.v) {
            throw GraphError(GraphError::Kind::loop, edge_name(i, e) + " is a loop");
        }
    }

    degree_.assign(vertex_count_, 0);
    multiplicity_.assign(vertex_count_ * vertex_count_, 0);
    for (const Edge& e : edges_) {
        ++degree_[e.u];
        ++degree_[e.v];
        ++multiplicity_[e.u * vertex_count_ + e.v];
        ++multiplicity_[e.v * vertex_count_ + e.u];
    }
    neighbours_.resize(vertex_count_);
    for (Vertex a = 0; a < vertex_count_; ++a) {
        if (degree_[a] == 0) {
            throw GraphError(GraphError::Kind::isolated_vertex, "vertex " + std::to_string(a) + " has no incident edge");
        }
        for (Vertex b = 0; b < vertex_count_; ++b) {
            if (int k = multiplicity_[a * vertex_count_ + b]; k > 0) {
                neighbours_[a].emplace_back(b, k);
            }
        }
    }

    // Connectivity from the sink.
    std::vector<bool> seen(vertex_count_, false);
    std::vector<Vertex> stack{kSink};
    seen[kSink] = true;
    while (!stack.empty()) {
        Vertex a = stack.back();
        stack.pop_back();
        for (auto [b, k] : neighbours_[a]) {
            if (!seen[b]) {
                seen[b] = true;
                stack.push_back(b);
            }
        }
    }
    if (auto it = std::find(seen.begin(), seen.end(), false); it != seen.end()) {
        throw GraphError(GraphError::Kind::disconnected,
                         "graph is disconnected: vertex " + std::to_string(it - seen.begin()) + " is unreachable from the sink");
    }
}

const Edge& Multigraph::edge(EdgeId id) const {
    if (id == 0 || id > edges_.size()) {
        throw std::out_of_range("edge identifier e" + std::to_string(id) + " out of range");
    }
    return edges_[id - 1];
}

int Multigraph::degree(Vertex v) const { return degree_.at(v); }

int Multigraph::multiplicity(Vertex a, Vertex b) const { return multiplicity_.at(a * vertex_count_ + b); }

const std::vector<std::pair<Vertex, int>>& Multigraph::neighbours(Vertex v) const { return neighbours_.at(v); }

int Multigraph::edges_into(Vertex v, const VertexSet& set) const {
    int total = 0;
    for (auto [w, k] : neighbours_[v]) {
        if (set.test(w)) {
            total += k;
        }
    }
    return total;
}

int Multigraph::edges_leaving(Vertex v, const VertexSet& set) const { return degree_[v] - edges_into(v, set); }

VertexSet Multigraph::make_set(std::initializer_list<Vertex> vertices) const {
    return make_set(std::vector<Vertex>(vertices));
}

VertexSet Multigraph::make_set(const std::vector<Vertex>& vertices) const {
    VertexSet s(vertex_count_);
    for (Vertex v : vertices) {
        if (v >= vertex_count_) {
            throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
        }
        s.set(v);
    }
    return s;
}

VertexSet Multigraph::non_sink_vertices() const {
    VertexSet s(vertex_count_);
    s.set();
    s.reset(kSink);
    return s;
}

Multigraph build_graph(std::size_t vertex_count, const std::vector<std::pair<Vertex, Vertex>>& edge_list) {
    std::vector<Edge> edges;
    edges.reserve(edge_list.size());
    for (auto [u, v] : edge_list) {
        edges.push_back({u, v});
    }
    return Multigraph(vertex_count, std::move(edges));
}

int degree(const Multigraph& g, Vertex v) { return g.degree(v); }

std::vector<EdgeId> boundary_edges(const Multigraph& g, const VertexSet& x) {
    if (x.size() != g.vertex_count()) {
        throw std::invalid_argument("boundary_edges: vertex set has wrong universe size");
    }
    if (x.none() || x.all()) {
        throw std::invalid_argument("boundary_edges: X must be a nonempty proper subset of the vertices");
    }
    std::vector<EdgeId> out;
    const auto& edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (x.test(edges[i].u) != x.test(edges[i].v)) {
            out.push_back(i + 1);
        }
    }
    return out;
}

IntegerMatrix laplacian(const Multigraph& g) {
    const std::size_t dim = g.vertex_count();
    IntegerMatrix q(dim);
    for (Vertex a = 0; a < dim; ++a) {
        q(a, a) = g.degree(a);
        for (auto [b, k] : g.neighbours(a)) {
            q(a, b) = -k;
        }
    }
    return q;
}

IntegerMatrix reduced_laplacian(const Multigraph& g) {
    const std::size_t dim = g.n();
    IntegerMatrix q(dim);
    for (Vertex a = 1; a <= dim; ++a) {
        q(a - 1, a - 1) = g.degree(a);
        for (auto [b, k] : g.neighbours(a)) {
            if (b != kSink) {
                q(a - 1, b - 1) = -k;
            }
        }
    }
    return q;
}

Multigraph reorder_edges(const Multigraph& g, const std::vector<EdgeId>& order) {
    if (order.size() != g.edge_count()) {
        throw std::invalid_argument("reorder_edges: order must list every edge once");
    }
    std::vector<bool> used(g.edge_count() + 1, false);
    std::vector<Edge> edges;
    edges.reserve(order.size());
    for (EdgeId id : order) {
        if (id == 0 || id > g.edge_count() || used[id]) {
            throw std::invalid_argument("reorder_edges: order is not a permutation of the edge identifiers");
        }
        used[id] = true;
        edges.push_back(g.edge(id));
    }
    return Multigraph(g.vertex_count(), std::move(edges));
}

std::string format_set(const VertexSet& s) {
    std::string out = "{";
    bool first = true;
    for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v)) {
        out += first ? "" : ",";
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

} // namespace hcf
