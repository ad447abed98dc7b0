#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dom1k {

/// Subset of {0,...,n-1} for a fixed universe size n, stored as 64-bit words.
/// Binary set operations require both operands to share the same universe.
class VertexSet {
public:
    explicit VertexSet(int universe) {
        if (universe < 0) throw std::invalid_argument("VertexSet: negative universe size");
        n_ = universe;
        words_.assign(word_count(universe), 0);
    }

    static VertexSet all(int universe) {
        VertexSet s(universe);
        std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
        s.trim();
        return s;
    }

    static VertexSet of(int universe, std::initializer_list<int> vertices) {
        VertexSet s(universe);
        for (int v : vertices) s.insert(v);
        return s;
    }

    static VertexSet of(int universe, const std::vector<int>& vertices) {
        VertexSet s(universe);
        for (int v : vertices) s.insert(v);
        return s;
    }

    int universe_size() const { return n_; }

    bool contains(int v) const {
        check_vertex(v);
        return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
    }

    void insert(int v) {
        check_vertex(v);
        words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
    }

    void erase(int v) {
        check_vertex(v);
        words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    int size() const {
        int c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (std::uint64_t w : words_) {
            if (w != 0) return false;
        }
        return true;
    }

    /// |this ∩ other|, the workhorse of every domination checker.
    int intersection_size(const VertexSet& other) const {
        check_universe(other);
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & other.words_[i]);
        return c;
    }

    bool intersects(const VertexSet& other) const {
        check_universe(other);
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if ((words_[i] & other.words_[i]) != 0) return true;
        }
        return false;
    }

    bool is_subset_of(const VertexSet& other) const {
        check_universe(other);
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if ((words_[i] & ~other.words_[i]) != 0) return false;
        }
        return true;
    }

    VertexSet intersect(const VertexSet& other) const {
        check_universe(other);
        VertexSet r(n_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & other.words_[i];
        return r;
    }

    VertexSet unite(const VertexSet& other) const {
        check_universe(other);
        VertexSet r(n_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] | other.words_[i];
        return r;
    }

    VertexSet difference(const VertexSet& other) const {
        check_universe(other);
        VertexSet r(n_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & ~other.words_[i];
        return r;
    }

    /// Smallest member, or -1 when empty.
    int first() const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (words_[i] != 0) return static_cast<int>((i << 6) + std::countr_zero(words_[i]));
        }
        return -1;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w != 0) {
                int v = static_cast<int>((i << 6) + std::countr_zero(w));
                f(v);
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    bool operator==(const VertexSet& other) const { return n_ == other.n_ && words_ == other.words_; }
    bool operator!=(const VertexSet& other) const { return !(*this == other); }

private:
    static std::size_t word_count(int universe) { return (static_cast<std::size_t>(universe) + 63) >> 6; }

    void trim() {
        int r = n_ & 63;
        if (r != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << r) - 1;
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("VertexSet: vertex " + std::to_string(v) + " outside universe of size " +
                                        std::to_string(n_));
    }

    void check_universe(const VertexSet& other) const {
        if (n_ != other.n_)
            throw std::invalid_argument("VertexSet: universe mismatch (" + std::to_string(n_) + " vs " +
                                        std::to_string(other.n_) + ")");
    }

    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Immutable simple undirected graph on vertices 0..n-1. Adjacency is kept
/// as one VertexSet row per vertex, so adjacency tests and |N(v) ∩ D|
/// queries are word operations.
class Graph {
public:
    Graph(int order, const std::vector<std::pair<int, int>>& edge_list) : n_(order) {
        if (order < 1) throw std::invalid_argument("Graph: order must be at least 1");
        edges_.reserve(edge_list.size());
        for (auto [u, v] : edge_list) {
            if (u < 0 || u >= n_ || v < 0 || v >= n_)
                throw std::invalid_argument("Graph: edge endpoint out of range");
            if (u == v) throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(u));
            if (u > v) std::swap(u, v);
            edges_.emplace_back(u, v);
        }
        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
        adj_.assign(static_cast<std::size_t>(n_), VertexSet(n_));
        for (auto [u, v] : edges_) {
            adj_[static_cast<std::size_t>(u)].insert(v);
            adj_[static_cast<std::size_t>(v)].insert(u);
        }
        max_degree_ = 0;
        for (const auto& row : adj_) max_degree_ = std::max(max_degree_, row.size());
    }

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }

    bool adjacent(int u, int v) const { return neighbors(u).contains(v); }

    const VertexSet& neighbors(int v) const {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("Graph: vertex " + std::to_string(v) + " out of range");
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return neighbors(v).size(); }
    int max_degree() const { return max_degree_; }
    int min_degree() const {
        int d = n_;
        for (const auto& row : adj_) d = std::min(d, row.size());
        return d;
    }

    /// Edges in canonical order: ascending (u, v) with u < v.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }
    bool operator!=(const Graph& other) const { return !(*this == other); }

private:
    int n_;
    int max_degree_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<std::pair<int, int>> edges_;
};

/// The edgeless graph on t >= 1 vertices.
inline Graph make_empty_graph(int order) {
    if (order < 1) throw std::invalid_argument("make_empty_graph: order must be at least 1");
    return Graph(order, {});
}

/// Path v0 - v1 - ... - v(n-1).
inline Graph make_path(int order) {
    if (order < 1) throw std::invalid_argument("make_path: order must be at least 1");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(order) - 1);
    for (int v = 0; v + 1 < order; ++v) edges.emplace_back(v, v + 1);
    return Graph(order, edges);
}

/// Arm lengths (n1,...,nq) of a star-like tree: q disjoint paths attached to
/// one central vertex.
struct StarLikeSpec {
    std::vector<int> arm_lengths;
};

/// Star-like tree with central vertex 0. Arm i (1-based, length n_i) occupies
/// indices 1+sum_{j<i} n_j ... sum_{j<=i} n_j, nearest to the center first;
/// the center is adjacent to the first vertex of each arm. Requires q >= 3 so
/// the center has degree greater than two.
inline Graph make_star_like(const StarLikeSpec& spec) {
    const auto& arms = spec.arm_lengths;
    if (arms.size() < 3)
        throw std::invalid_argument("make_star_like: at least 3 arms required for a central vertex of degree > 2");
    for (int len : arms) {
        if (len < 1) throw std::invalid_argument("make_star_like: arm lengths must be positive");
    }
    int total = 1;
    for (int len : arms) total += len;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(total) - 1);
    int next = 1;
    for (int len : arms) {
        edges.emplace_back(0, next);
        for (int i = 1; i < len; ++i) edges.emplace_back(next + i - 1, next + i);
        next += len;
    }
    return Graph(total, edges);
}

inline Graph make_star_like(std::vector<int> arm_lengths) { return make_star_like(StarLikeSpec{std::move(arm_lengths)}); }

/// Proper 2-coloring (colors 0/1) when the graph is bipartite, nullopt
/// otherwise. Works per connected component; isolated vertices get color 0.
inline std::optional<std::vector<int>> bipartition(const Graph& g) {
    std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
    std::vector<int> queue;
    for (int start = 0; start < g.order(); ++start) {
        if (color[static_cast<std::size_t>(start)] != -1) continue;
        color[static_cast<std::size_t>(start)] = 0;
        queue.assign(1, start);
        while (!queue.empty()) {
            int u = queue.back();
            queue.pop_back();
            bool ok = true;
            g.neighbors(u).for_each([&](int v) {
                if (!ok) return;
                int& cv = color[static_cast<std::size_t>(v)];
                if (cv == -1) {
                    cv = 1 - color[static_cast<std::size_t>(u)];
                    queue.push_back(v);
                } else if (cv == color[static_cast<std::size_t>(u)]) {
                    ok = false;
                }
            });
            if (!ok) return std::nullopt;
        }
    }
    return color;
}

inline bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

inline bool is_connected(const Graph& g) {
    VertexSet seen(g.order());
    std::vector<int> queue{0};
    seen.insert(0);
    while (!queue.empty()) {
        int u = queue.back();
        queue.pop_back();
        g.neighbors(u).for_each([&](int v) {
            if (!seen.contains(v)) {
                seen.insert(v);
                queue.push_back(v);
            }
        });
    }
    return seen.size() == g.order();
}

}  // namespace dom1k
