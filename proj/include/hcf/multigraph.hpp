#pragma once

// Connected loopless multigraphs with a fixed sink (vertex 0) and a fixed
// total order on the edges.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "hcf/integer.hpp"

namespace hcf {

using Vertex = std::size_t;
using EdgeId = std::size_t; // 1-based position in the edge list

inline constexpr Vertex kSink = 0;

using VertexSet = boost::dynamic_bitset<>;

struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    [[nodiscard]] bool incident(Vertex w) const { return u == w || v == w; }
    [[nodiscard]] Vertex other(Vertex w) const { return u == w ? v : u; }

    friend bool operator==(const Edge&, const Edge&) = default;
};

class GraphError : public std::invalid_argument {
  public:
    enum class Kind { too_few_vertices, empty_edge_list, vertex_out_of_range, loop, disconnected, isolated_vertex };

    GraphError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_{kind} {}

    [[nodiscard]] Kind kind() const { return kind_; }

  private:
    Kind kind_;
};

class Multigraph {
  public:
    // Validates and takes ownership of the edge list. Throws GraphError.
    Multigraph(std::size_t vertex_count, std::vector<Edge> edges);

    [[nodiscard]] std::size_t vertex_count() const { return vertex_count_; }
    // Number of non-sink vertices.
    [[nodiscard]] std::size_t n() const { return vertex_count_ - 1; }
    [[nodiscard]] std::size_t edge_count() const { return edges_.size(); }
    [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
    [[nodiscard]] const Edge& edge(EdgeId id) const;

    [[nodiscard]] int degree(Vertex v) const;
    [[nodiscard]] int multiplicity(Vertex a, Vertex b) const;

    // Neighbours of v with edge multiplicity, ascending by vertex.
    [[nodiscard]] const std::vector<std::pair<Vertex, int>>& neighbours(Vertex v) const;

    // Number of edges from v to vertices in `set`.
    [[nodiscard]] int edges_into(Vertex v, const VertexSet& set) const;
    // Number of edges from v to vertices outside `set`.
    [[nodiscard]] int edges_leaving(Vertex v, const VertexSet& set) const;

    [[nodiscard]] VertexSet empty_set() const { return VertexSet(vertex_count_); }
    [[nodiscard]] VertexSet make_set(std::initializer_list<Vertex> vertices) const;
    [[nodiscard]] VertexSet make_set(const std::vector<Vertex>& vertices) const;
    [[nodiscard]] VertexSet non_sink_vertices() const;

    friend bool operator==(const Multigraph& a, const Multigraph& b) {
        return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
    }

  private:
    std::size_t vertex_count_;
    std::vector<Edge> edges_;
    std::vector<int> degree_;
    std::vector<int> multiplicity_; // vertex_count_ x vertex_count_
    std::vector<std::vector<std::pair<Vertex, int>>> neighbours_;
};

Multigraph build_graph(std::size_t vertex_count, const std::vector<std::pair<Vertex, Vertex>>& edge_list);

int degree(const Multigraph& g, Vertex v);

// Edges with exactly one endpoint in X, ascending by identifier. X must be a
// nonempty proper subset of the vertices.
std::vector<EdgeId> boundary_edges(const Multigraph& g, const VertexSet& x);

IntegerMatrix laplacian(const Multigraph& g);
// Laplacian with the sink row and column removed.
IntegerMatrix reduced_laplacian(const Multigraph& g);

// Same vertices, edges reordered so that new edge i is old edge order[i]
// (order holds 1-based identifiers).
Multigraph reorder_edges(const Multigraph& g, const std::vector<EdgeId>& order);

std::string format_set(const VertexSet& s);

} // namespace hcf
