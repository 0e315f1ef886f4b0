#include "hcf/model.hpp"

namespace hcf {

Cover::Cover(const Multigraph& g, std::vector<VertexSet> maximal_sets)
    : vertex_count_{g.vertex_count()}, sets_{std::move(maximal_sets)} {
    if (sets_.empty()) {
        throw ModelError(ModelError::Kind::no_sets, "model has no maximal sets");
    }
    for (const VertexSet& s : sets_) {
        if (s.size() != vertex_count_) {
            throw ModelError(ModelError::Kind::out_of_range, "maximal set has the wrong vertex universe");
        }
        if (s.none()) {
            throw ModelError(ModelError::Kind::empty_set, "maximal sets must be nonempty");
        }
        if (s.test(kSink)) {
            throw ModelError(ModelError::Kind::contains_sink, "maximal set " + format_set(s) + " contains the sink");
        }
    }
    for (std::size_t i = 0; i < sets_.size(); ++i) {
        for (std::size_t j = 0; j < sets_.size(); ++j) {
            if (i != j && sets_[i].is_subset_of(sets_[j])) {
                throw ModelError(ModelError::Kind::not_antichain, "maximal sets are comparable: " + format_set(sets_[i]) +
                                                                      " is contained in " + format_set(sets_[j]));
            }
        }
    }
    VertexSet covered(vertex_count_);
    for (const VertexSet& s : sets_) {
        covered |= s;
    }
    for (Vertex v = 1; v < vertex_count_; ++v) {
        if (!covered.test(v)) {
            throw ModelError(ModelError::Kind::not_cover, "vertex " + std::to_string(v) + " is not covered by the model");
        }
    }
}

std::vector<std::vector<Vertex>> Cover::as_lists() const {
    std::vector<std::vector<Vertex>> out;
    for (const VertexSet& s : sets_) {
        auto& list = out.emplace_back();
        for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v)) {
            list.push_back(v);
        }
    }
    return out;
}

Cover build_model(const Multigraph& g, const std::vector<std::vector<Vertex>>& maximal_sets) {
    std::vector<VertexSet> sets;
    for (const auto& list : maximal_sets) {
        VertexSet s(g.vertex_count());
        for (Vertex v : list) {
            if (v >= g.vertex_count()) {
                throw ModelError(ModelError::Kind::out_of_range, "vertex " + std::to_string(v) + " out of range");
            }
            s.set(v);
        }
        sets.push_back(std::move(s));
    }
    return Cover(g, std::move(sets));
}

Cover asm_cover(const Multigraph& g) {
    std::vector<VertexSet> sets;
    for (Vertex v = 1; v < g.vertex_count(); ++v) {
        sets.push_back(g.make_set({v}));
    }
    return Cover(g, std::move(sets));
}

Cover cfm_cover(const Multigraph& g) { return Cover(g, {g.non_sink_vertices()}); }

bool in_model(const Cover& h, const VertexSet& s) {
    for (const VertexSet& a : h.maximal_sets()) {
        if (s.is_subset_of(a)) {
            return true;
        }
    }
    return false;
}

std::string describe(const Cover& h, const Multigraph& g) {
    if (h == asm_cover(g)) {
        return "asm";
    }
    if (h == cfm_cover(g)) {
        return "cfm";
    }
    std::string out;
    for (const VertexSet& s : h.maximal_sets()) {
        out += format_set(s);
    }
    return out;
}

} // namespace hcf
