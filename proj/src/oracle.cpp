#include "hcf/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace hcf {

namespace {

void check_graph_size(const Multigraph& g, const OracleLimits& limits) {
    if (g.vertex_count() > limits.max_vertices) {
        throw InstanceTooLarge("graph has " + std::to_string(g.vertex_count()) + " vertices; oracle limit is " +
                               std::to_string(limits.max_vertices));
    }
    if (g.edge_count() > limits.max_edges) {
        throw InstanceTooLarge("graph has " + std::to_string(g.edge_count()) + " edges; oracle limit is " +
                               std::to_string(limits.max_edges));
    }
}

class TreeSearch {
  public:
    explicit TreeSearch(const Multigraph& g) : g_{g}, parent_(g.vertex_count()) {
        std::iota(parent_.begin(), parent_.end(), Vertex{0});
    }

    std::vector<SpanningTree> run() {
        extend(0);
        return std::move(found_);
    }

  private:
    // Union-find without path compression so that unions can be undone.
    Vertex find(Vertex v) const {
        while (parent_[v] != v) {
            v = parent_[v];
        }
        return v;
    }

    void extend(std::size_t next) {
        if (chosen_.size() == g_.n()) {
            found_.emplace_back(chosen_);
            return;
        }
        if (g_.edge_count() - next < g_.n() - chosen_.size()) {
            return;
        }
        const Edge& e = g_.edge(next + 1);
        const Vertex a = find(e.u);
        const Vertex b = find(e.v);
        if (a != b) {
            parent_[a] = b;
            chosen_.push_back(next + 1);
            extend(next + 1);
            chosen_.pop_back();
            parent_[a] = a;
        }
        extend(next + 1);
    }

    const Multigraph& g_;
    std::vector<Vertex> parent_;
    std::vector<EdgeId> chosen_;
    std::vector<SpanningTree> found_;
};

} // namespace

std::vector<SpanningTree> enumerate_spanning_trees(const Multigraph& g, const OracleLimits& limits) {
    check_graph_size(g, limits);
    // Include-before-exclude over ascending edge ids already yields
    // lexicographic order.
    return TreeSearch(g).run();
}

BigInt count_spanning_trees(const Multigraph& g) { return determinant(reduced_laplacian(g)); }

std::optional<std::uint64_t> degree_box_volume(const Multigraph& g) {
    std::uint64_t volume = 1;
    for (Vertex v = 1; v < g.vertex_count(); ++v) {
        if (__builtin_mul_overflow(volume, static_cast<std::uint64_t>(g.degree(v)), &volume)) {
            return std::nullopt;
        }
    }
    return volume;
}

std::vector<Configuration> enumerate_recurrent(const Multigraph& g, const Cover& h, const OracleLimits& limits) {
    check_graph_size(g, limits);
    const auto volume = degree_box_volume(g);
    if (!volume || *volume > limits.max_box_volume) {
        throw InstanceTooLarge("degree box is too large to enumerate (limit " + std::to_string(limits.max_box_volume) + ")");
    }
    std::vector<Configuration> out;
    for_each_in_degree_box(g, [&](const Configuration& d) {
        if (is_critical(g, h, d)) {
            out.push_back(d);
        }
    });
    return out;
}

IntegerSolver::IntegerSolver(const IntegerMatrix& a) : upper_{a}, transform_(a.dim()) {
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i) {
        transform_(i, i) = 1;
    }
    auto swap_rows = [&](std::size_t r1, std::size_t r2) {
        for (std::size_t c = 0; c < n; ++c) {
            std::swap(upper_(r1, c), upper_(r2, c));
            std::swap(transform_(r1, c), transform_(r2, c));
        }
    };
    // row r -= q * row k
    auto subtract = [&](std::size_t r, std::size_t k, const BigInt& q) {
        for (std::size_t c = 0; c < n; ++c) {
            upper_(r, c) -= q * upper_(k, c);
            transform_(r, c) -= q * transform_(k, c);
        }
    };
    for (std::size_t k = 0; k < n; ++k) {
        while (true) {
            std::size_t pivot = n;
            for (std::size_t r = k; r < n; ++r) {
                if (upper_(r, k) != 0 && (pivot == n || abs(upper_(r, k)) < abs(upper_(pivot, k)))) {
                    pivot = r;
                }
            }
            if (pivot == n) {
                throw std::invalid_argument("IntegerSolver: matrix is singular");
            }
            if (pivot != k) {
                swap_rows(pivot, k);
            }
            bool reduced = true;
            for (std::size_t r = k + 1; r < n; ++r) {
                if (upper_(r, k) != 0) {
                    subtract(r, k, upper_(r, k) / upper_(k, k));
                    reduced = reduced && upper_(r, k) == 0;
                }
            }
            if (reduced) {
                break;
            }
        }
    }
}

std::optional<std::vector<BigInt>> IntegerSolver::solve(const std::vector<BigInt>& b) const {
    const std::size_t n = upper_.dim();
    std::vector<BigInt> rhs = transform_.multiply(b);
    std::vector<BigInt> x(n);
    for (std::size_t k = n; k-- > 0;) {
        BigInt residual = rhs[k];
        for (std::size_t j = k + 1; j < n; ++j) {
            residual -= upper_(k, j) * x[j];
        }
        if (residual % upper_(k, k) != 0) {
            return std::nullopt;
        }
        x[k] = residual / upper_(k, k);
    }
    return x;
}

namespace {

std::vector<BigInt> difference(const Configuration& d1, const Configuration& d2) {
    if (d1.size() != d2.size()) {
        throw PreconditionError("configurations differ in size");
    }
    std::vector<BigInt> out(d1.size());
    for (std::size_t i = 0; i < d1.size(); ++i) {
        out[i] = BigInt(d1.values()[i]) - BigInt(d2.values()[i]);
    }
    return out;
}

} // namespace

bool EquivalenceWitness::verifies(const Multigraph& g, const Configuration& d1, const Configuration& d2) const {
    if (firing.size() != g.n()) {
        return false;
    }
    return reduced_laplacian(g).multiply(firing) == difference(d2, d1);
}

std::optional<EquivalenceWitness> EquivalenceOracle::witness(const Configuration& d1, const Configuration& d2) const {
    if (d1.size() != g_->n() || d2.size() != g_->n()) {
        throw PreconditionError("configuration size does not match the graph");
    }
    auto f = solver_.solve(difference(d2, d1));
    if (!f) {
        return std::nullopt;
    }
    return EquivalenceWitness{std::move(*f)};
}

std::optional<EquivalenceWitness> equivalent(const Multigraph& g, const Configuration& d1, const Configuration& d2) {
    return EquivalenceOracle(g).witness(d1, d2);
}

} // namespace hcf
