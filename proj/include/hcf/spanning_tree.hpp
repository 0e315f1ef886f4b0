#pragma once

#include <string>
#include <vector>

#include "hcf/multigraph.hpp"

namespace hcf {

// Edge identifiers of a spanning tree, kept sorted ascending.
class SpanningTree {
  public:
    SpanningTree() = default;
    explicit SpanningTree(std::vector<EdgeId> edges);

    [[nodiscard]] const std::vector<EdgeId>& edges() const { return edges_; }
    [[nodiscard]] bool contains(EdgeId id) const;
    [[nodiscard]] std::size_t size() const { return edges_.size(); }

    friend bool operator==(const SpanningTree&, const SpanningTree&) = default;
    friend auto operator<=>(const SpanningTree&, const SpanningTree&) = default;

  private:
    std::vector<EdgeId> edges_;
};

// n edges, all in range, no cycle.
bool is_spanning_tree(const Multigraph& g, const SpanningTree& t);

// "tree e1 e2 ..."
std::string format_tree(const SpanningTree& t);

} // namespace hcf
