#pragma once

// A hereditary chip-firing model, kept only as its maximal sets. Membership
// of S in the model means S is contained in one of them.

#include <string>
#include <vector>

#include "hcf/multigraph.hpp"

namespace hcf {

class ModelError : public std::invalid_argument {
  public:
    enum class Kind { out_of_range, contains_sink, empty_set, not_antichain, not_cover, no_sets };

    ModelError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_{kind} {}

    [[nodiscard]] Kind kind() const { return kind_; }

  private:
    Kind kind_;
};

class Cover {
  public:
    // Validates the antichain and cover conditions against g. Throws ModelError.
    Cover(const Multigraph& g, std::vector<VertexSet> maximal_sets);

    [[nodiscard]] const std::vector<VertexSet>& maximal_sets() const { return sets_; }
    [[nodiscard]] std::size_t vertex_count() const { return vertex_count_; }

    // Sets as sorted vertex lists, for printing and serialisation.
    [[nodiscard]] std::vector<std::vector<Vertex>> as_lists() const;

    friend bool operator==(const Cover&, const Cover&) = default;

  private:
    std::size_t vertex_count_;
    std::vector<VertexSet> sets_;
};

Cover build_model(const Multigraph& g, const std::vector<std::vector<Vertex>>& maximal_sets);

// Singletons: the abelian sandpile model.
Cover asm_cover(const Multigraph& g);
// All non-sink vertices together: the cluster firing model.
Cover cfm_cover(const Multigraph& g);

bool in_model(const Cover& h, const VertexSet& s);

// "asm", "cfm", or the sets written as "{1,2}{3}".
std::string describe(const Cover& h, const Multigraph& g);

} // namespace hcf
