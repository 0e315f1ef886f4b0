#include "hcf/dynamics.hpp"

#include <algorithm>
#include <random>

namespace hcf {

Chips Configuration::sink_value() const {
    Chips total = 0;
    for (Chips c : chips_) {
        total = checked_add(total, c);
    }
    return checked_sub(0, total);
}

bool Configuration::nonnegative() const {
    return std::all_of(chips_.begin(), chips_.end(), [](Chips c) { return c >= 0; });
}

Configuration& Configuration::operator+=(const Configuration& other) {
    if (other.size() != size()) {
        throw std::invalid_argument("configuration size mismatch");
    }
    for (std::size_t i = 0; i < chips_.size(); ++i) {
        chips_[i] = checked_add(chips_[i], other.chips_[i]);
    }
    return *this;
}

Configuration& Configuration::operator-=(const Configuration& other) {
    if (other.size() != size()) {
        throw std::invalid_argument("configuration size mismatch");
    }
    for (std::size_t i = 0; i < chips_.size(); ++i) {
        chips_[i] = checked_sub(chips_[i], other.chips_[i]);
    }
    return *this;
}

Configuration Configuration::scaled(Chips k) const {
    Configuration out = *this;
    for (Chips& c : out.chips_) {
        c = checked_mul(c, k);
    }
    return out;
}

std::string format_chips(const Configuration& d) {
    std::string out = "chips";
    for (Chips c : d.values()) {
        out += ' ';
        out += std::to_string(c);
    }
    return out;
}

namespace {

void check_size(const Multigraph& g, const Configuration& d) {
    if (d.size() != g.n()) {
        throw PreconditionError("configuration has " + std::to_string(d.size()) + " entries, graph has " +
                                std::to_string(g.n()) + " non-sink vertices");
    }
}

void check_sink_free(const VertexSet& s) {
    if (s.test(kSink)) {
        throw PreconditionError("vertex set " + format_set(s) + " contains the sink");
    }
}

// In-place D - Q chi_S, recording firings for S when `firings` is given.
void fire_in_place(const Multigraph& g, Configuration& d, const VertexSet& s, FiringVector* firings = nullptr) {
    for (Vertex v = 1; v < g.vertex_count(); ++v) {
        if (s.test(v)) {
            d[v] = checked_sub(d[v], g.edges_leaving(v, s));
            if (firings) {
                ++(*firings)[v - 1];
            }
        } else {
            d[v] = checked_add(d[v], g.edges_into(v, s));
        }
    }
}

} // namespace

Configuration fire_cluster(const Multigraph& g, const Configuration& d, const VertexSet& s) {
    check_size(g, d);
    Configuration out = d;
    fire_in_place(g, out, s);
    return out;
}

Configuration fire_set(const Multigraph& g, const Configuration& d, const VertexSet& s) {
    check_sink_free(s);
    return fire_cluster(g, d, s);
}

Configuration fire_sink(const Multigraph& g, const Configuration& d) { return fire_cluster(g, d, g.make_set({kSink})); }

bool is_ready(const Multigraph& g, const Cover& h, const Configuration& d, const VertexSet& m) {
    check_size(g, d);
    check_sink_free(m);
    if (m.none() || !in_model(h, m)) {
        return false;
    }
    for (auto v = m.find_first(); v != VertexSet::npos; v = m.find_next(v)) {
        if (d[v] < g.edges_leaving(v, m)) {
            return false;
        }
    }
    return true;
}

VertexSet max_ready_subset(const Multigraph& g, const Configuration& d, const VertexSet& a, std::optional<Vertex> exempt) {
    check_sink_free(a);
    if (exempt && !a.test(*exempt)) {
        throw PreconditionError("exempt vertex " + std::to_string(*exempt) + " is not in " + format_set(a));
    }
    VertexSet s = a;
    std::vector<int> leaving(g.vertex_count(), 0);
    std::vector<Vertex> worklist;
    for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v)) {
        leaving[v] = g.edges_leaving(v, s);
        if (v != exempt && d[v] < leaving[v]) {
            worklist.push_back(v);
        }
    }
    while (!worklist.empty()) {
        const Vertex v = worklist.back();
        worklist.pop_back();
        if (!s.test(v)) {
            continue;
        }
        s.reset(v);
        for (auto [w, k] : g.neighbours(v)) {
            if (!s.test(w)) {
                continue;
            }
            leaving[w] += k;
            if (w != exempt && d[w] < leaving[w]) {
                worklist.push_back(w);
            }
        }
    }
    return s;
}

std::vector<VertexSet> maximal_ready_sets(const Multigraph& g, const Cover& h, const Configuration& d, const VertexSet& u,
                                          std::optional<Vertex> exempt) {
    check_sink_free(u);
    std::vector<VertexSet> candidates;
    for (const VertexSet& a : h.maximal_sets()) {
        VertexSet within = a & u;
        std::optional<Vertex> local_exempt = exempt && within.test(*exempt) ? exempt : std::nullopt;
        VertexSet f = max_ready_subset(g, d, within, local_exempt);
        if (f.any()) {
            candidates.push_back(std::move(f));
        }
    }
    std::vector<VertexSet> out;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < candidates.size() && !dominated; ++j) {
            dominated = candidates[i].is_proper_subset_of(candidates[j]);
        }
        if (!dominated && std::find(out.begin(), out.end(), candidates[i]) == out.end()) {
            out.push_back(candidates[i]);
        }
    }
    return out;
}

std::optional<int> min_loss(const Multigraph& g, const Cover& h, const Configuration& d, Vertex v, const VertexSet& u,
                            bool exempt_pivot) {
    if (!u.test(v)) {
        throw PreconditionError("pivot " + std::to_string(v) + " is not in " + format_set(u));
    }
    std::optional<int> best;
    for (const VertexSet& f : maximal_ready_sets(g, h, d, u, exempt_pivot ? std::optional<Vertex>(v) : std::nullopt)) {
        if (f.test(v)) {
            const int loss = g.edges_leaving(v, f);
            best = best ? std::min(*best, loss) : loss;
        }
    }
    return best;
}

bool is_stable(const Multigraph& g, const Cover& h, const Configuration& d) {
    check_size(g, d);
    if (!d.nonnegative()) {
        throw PreconditionError("is_stable requires nonnegative chips, got " + format_chips(d));
    }
    for (const VertexSet& a : h.maximal_sets()) {
        if (max_ready_subset(g, d, a).any()) {
            return false;
        }
    }
    return true;
}

namespace {

// One firing step of the given strategy; false when D is stable.
class Stabilizer {
  public:
    Stabilizer(const Multigraph& g, const Cover& h, FiringStrategy strategy)
        : g_{g}, h_{h}, strategy_{strategy}, rng_{strategy.seed}, order_(h.maximal_sets().size()) {
        for (std::size_t j = 0; j < order_.size(); ++j) {
            order_[j] = j;
        }
    }

    bool step(Configuration& d, FiringVector& firings) {
        switch (strategy_.kind) {
        case FiringStrategy::Kind::first_ready_maximal:
            return first_ready_maximal(d, firings);
        case FiringStrategy::Kind::singletons_first:
            for (Vertex v = 1; v < g_.vertex_count(); ++v) {
                if (d[v] >= g_.degree(v)) {
                    fire_in_place(g_, d, g_.make_set({v}), &firings);
                    return true;
                }
            }
            return first_ready_maximal(d, firings);
        case FiringStrategy::Kind::random:
            return random_step(d, firings);
        }
        return false;
    }

  private:
    bool first_ready_maximal(Configuration& d, FiringVector& firings) {
        for (const VertexSet& a : h_.maximal_sets()) {
            VertexSet f = max_ready_subset(g_, d, a);
            if (f.any()) {
                fire_in_place(g_, d, f, &firings);
                return true;
            }
        }
        return false;
    }

    // Visits the maximal sets in random order; fires the burning fixed point of
    // a random subset of the first nonempty fixed point found (or the fixed
    // point itself if that comes out empty).
    bool random_step(Configuration& d, FiringVector& firings) {
        std::shuffle(order_.begin(), order_.end(), rng_);
        for (std::size_t j : order_) {
            VertexSet f = max_ready_subset(g_, d, h_.maximal_sets()[j]);
            if (f.none()) {
                continue;
            }
            VertexSet pick(g_.vertex_count());
            for (auto v = f.find_first(); v != VertexSet::npos; v = f.find_next(v)) {
                if (rng_() & 1U) {
                    pick.set(v);
                }
            }
            VertexSet fire = max_ready_subset(g_, d, pick);
            fire_in_place(g_, d, fire.any() ? fire : f, &firings);
            return true;
        }
        return false;
    }

    const Multigraph& g_;
    const Cover& h_;
    FiringStrategy strategy_;
    std::mt19937_64 rng_;
    std::vector<std::size_t> order_;
};

} // namespace

Stabilization stabilize(const Multigraph& g, const Cover& h, const Configuration& d, FiringStrategy strategy) {
    check_size(g, d);
    Stabilization result{d, FiringVector(g.n(), 0)};
    Stabilizer stabilizer(g, h, strategy);
    while (stabilizer.step(result.config, result.firings)) {
    }
    return result;
}

bool is_critical(const Multigraph& g, const Cover& h, const Configuration& d) {
    check_size(g, d);
    if (!d.nonnegative() || !is_stable(g, h, d)) {
        return false;
    }
    return stabilize(g, h, fire_sink(g, d)).config == d;
}

bool active_firing_check(const Multigraph& g, const Cover& h, const Configuration& d) {
    check_size(g, d);
    if (!d.nonnegative() || !is_stable(g, h, d)) {
        return false;
    }
    Configuration current = fire_sink(g, d);
    FiringVector fired(g.n(), 0);
    std::size_t total = 0;
    while (total <= g.n()) {
        VertexSet active = g.empty_set();
        for (const VertexSet& a : h.maximal_sets()) {
            active |= max_ready_subset(g, current, a);
        }
        const auto v = active.find_first();
        if (v == VertexSet::npos) {
            break;
        }
        fire_in_place(g, current, g.make_set({v}), &fired);
        ++total;
    }
    return current == d && std::all_of(fired.begin(), fired.end(), [](std::int64_t k) { return k == 1; });
}

Configuration epsilon(const Multigraph& g, const Cover& h) {
    Configuration full = Configuration::zeros(g);
    for (Vertex v = 1; v < g.vertex_count(); ++v) {
        full[v] = g.degree(v);
    }
    Configuration eps = full - stabilize(g, h, full).config;
    for (Vertex v = 1; v < g.vertex_count(); ++v) {
        if (eps[v] <= 0) {
            throw std::logic_error("epsilon is not strictly positive at vertex " + std::to_string(v) + ": " +
                                   format_chips(eps));
        }
    }
    return eps;
}

Configuration recurrent_representative(const Multigraph& g, const Cover& h, const Configuration& d,
                                       std::optional<std::uint64_t> max_iterations) {
    check_size(g, d);
    if (!d.nonnegative()) {
        throw PreconditionError("recurrent_representative requires nonnegative chips, got " + format_chips(d));
    }
    std::uint64_t cap = 0;
    if (max_iterations) {
        cap = *max_iterations;
    } else {
        const BigInt limit = BigInt(10) * determinant(reduced_laplacian(g));
        cap = limit > BigInt(UINT64_MAX) ? UINT64_MAX : static_cast<std::uint64_t>(limit);
    }
    Configuration x = stabilize(g, h, d).config;
    for (std::uint64_t i = 0; !is_critical(g, h, x); ++i) {
        if (i >= cap) {
            throw std::runtime_error("recurrent_representative: no critical configuration after " + std::to_string(cap) +
                                     " iterations");
        }
        x = stabilize(g, h, fire_sink(g, x)).config;
    }
    return x;
}

Configuration dualize(const Multigraph& g, const Configuration& d) {
    check_size(g, d);
    Configuration out = Configuration::zeros(g);
    for (Vertex v = 1; v < g.vertex_count(); ++v) {
        out[v] = checked_sub(g.degree(v) - 1, d[v]);
    }
    return out;
}

} // namespace hcf
