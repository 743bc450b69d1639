#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gps/errors.hpp"

namespace gps {

using Coord = std::int64_t;
using CoordTuple = std::vector<Coord>;

/// Simple undirected graph on dense vertex ids [0, n).
///
/// Neighbor lists are sorted, symmetric, loop-free and duplicate-free.
/// A graph may carry one integer coordinate tuple per vertex; tuples record
/// where each vertex sits inside the product the graph was cut from (grid
/// axes first, factor-vertex ids last). All tuples have the same arity.
/// Instances are immutable once built, so sharing across threads is safe.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : adj_(check_count(n)) {}

    /// Normalizing builder: sorts neighbor lists, drops duplicate edges,
    /// rejects self-loops and out-of-range endpoints.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw contract_error("edge endpoint out of range: (" + std::to_string(u) +
                                     "," + std::to_string(v) + ") with n=" + std::to_string(n));
            if (u == v)
                throw contract_error("self-loop at vertex " + std::to_string(u));
            g.adj_[u].push_back(v);
            g.adj_[v].push_back(u);
        }
        for (auto& nb : g.adj_) {
            std::sort(nb.begin(), nb.end());
            nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        }
        g.recount();
        return g;
    }

    int vertex_count() const { return static_cast<int>(adj_.size()); }

    std::size_t edge_count() const { return m_; }

    std::span<const int> neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
    }

    int degree(int v) const {
        check_vertex(v);
        return static_cast<int>(adj_[v].size());
    }

    int max_degree() const {
        int d = 0;
        for (const auto& nb : adj_) d = std::max(d, static_cast<int>(nb.size()));
        return d;
    }

    /// All edges as (u,v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> es;
        es.reserve(m_);
        for (int u = 0; u < vertex_count(); ++u)
            for (int v : adj_[u])
                if (u < v) es.emplace_back(u, v);
        return es;
    }

    bool has_coords() const { return coords_.has_value(); }

    int coord_arity() const {
        require_coords();
        return coords_->empty() ? 0 : static_cast<int>((*coords_)[0].size());
    }

    const CoordTuple& coord(int v) const {
        require_coords();
        check_vertex(v);
        return (*coords_)[v];
    }

    const std::vector<CoordTuple>& coords() const {
        require_coords();
        return *coords_;
    }

    /// Attaches coordinate tuples (one per vertex, uniform arity).
    void set_coords(std::vector<CoordTuple> coords) {
        if (static_cast<int>(coords.size()) != vertex_count())
            throw contract_error("coords size does not match vertex count");
        if (!coords.empty()) {
            const std::size_t arity = coords[0].size();
            for (const auto& t : coords)
                if (t.size() != arity)
                    throw contract_error("coordinate tuples have mixed arity");
        }
        coords_ = std::move(coords);
    }

    void drop_coords() { coords_.reset(); }

    bool operator==(const Graph& other) const {
        return adj_ == other.adj_ && coords_ == other.coords_;
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= vertex_count())
            throw contract_error("vertex id " + std::to_string(v) + " out of range [0," +
                                 std::to_string(vertex_count()) + ")");
    }

private:
    static int check_count(int n) {
        if (n < 0) throw contract_error("negative vertex count");
        return n;
    }

    void require_coords() const {
        if (!coords_) throw contract_error("graph carries no coordinates");
    }

    void recount() {
        std::size_t twice = 0;
        for (const auto& nb : adj_) twice += nb.size();
        m_ = twice / 2;
    }

    friend Graph raw_graph(int n, std::vector<std::vector<int>> adj);

    std::vector<std::vector<int>> adj_;
    std::size_t m_ = 0;
    std::optional<std::vector<CoordTuple>> coords_;
};

/// Trusted constructor for adjacency lists already sorted/symmetric/clean.
/// Internal helper for product builders that generate canonical lists.
inline Graph raw_graph(int n, std::vector<std::vector<int>> adj) {
    Graph g(n);
    g.adj_ = std::move(adj);
    g.recount();
    return g;
}

inline constexpr int kUnreachable = -1;

/// BFS distances from src; kUnreachable marks vertices in other components.
/// If cap >= 0 the search stops past distance cap (farther vertices are
/// reported unreachable).
inline std::vector<int> bfs_distances(const Graph& g, int src, int cap = -1) {
    g.check_vertex(src);
    std::vector<int> dist(g.vertex_count(), kUnreachable);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        if (cap >= 0 && dist[u] >= cap) continue;
        for (int w : g.neighbors(u)) {
            if (dist[w] == kUnreachable) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

/// Closed r-ball around v, as a sorted vertex list.
inline std::vector<int> ball(const Graph& g, int v, int r) {
    if (r < 0) throw contract_error("negative radius");
    auto dist = bfs_distances(g, v, r);
    std::vector<int> out;
    for (int u = 0; u < g.vertex_count(); ++u)
        if (dist[u] != kUnreachable) out.push_back(u);
    return out;
}

/// Connected components, each sorted, ordered by smallest member.
inline std::vector<std::vector<int>> connected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        seen[s] = 1;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            comp.push_back(u);
            for (int w : g.neighbors(u))
                if (!seen[w]) {
                    seen[w] = 1;
                    q.push(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

inline bool is_connected(const Graph& g) {
    return g.vertex_count() <= 1 || connected_components(g).size() == 1;
}

/// Largest finite eccentricity over all vertices (per component).
inline int diameter(const Graph& g) {
    int d = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int x : bfs_distances(g, v))
            d = std::max(d, x);
    return d;
}

/// Induced subgraph on `vertices` (need not be sorted; duplicates rejected).
/// Returns the subgraph plus the old-id list indexed by new id; coordinates
/// are carried over.
inline std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g,
                                                           std::vector<int> vertices) {
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        throw contract_error("duplicate vertex in induced_subgraph");
    const int n = g.vertex_count();
    std::vector<int> new_id(n, -1);
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
        g.check_vertex(vertices[i]);
        new_id[vertices[i]] = i;
    }
    std::vector<std::vector<int>> adj(vertices.size());
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i)
        for (int w : g.neighbors(vertices[i]))
            if (new_id[w] >= 0) adj[i].push_back(new_id[w]);
    Graph sub = raw_graph(static_cast<int>(vertices.size()), std::move(adj));
    if (g.has_coords()) {
        std::vector<CoordTuple> coords;
        coords.reserve(vertices.size());
        for (int v : vertices) coords.push_back(g.coord(v));
        sub.set_coords(std::move(coords));
    }
    return {std::move(sub), std::move(vertices)};
}

/// Deletes a vertex set, returning the remainder and its old-id list.
inline std::pair<Graph, std::vector<int>> delete_vertices(const Graph& g,
                                                          const std::vector<int>& removed) {
    std::vector<char> gone(g.vertex_count(), 0);
    for (int v : removed) {
        g.check_vertex(v);
        gone[v] = 1;
    }
    std::vector<int> keep;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!gone[v]) keep.push_back(v);
    return induced_subgraph(g, std::move(keep));
}

/// k-th power: vw is an edge iff 1 <= d_G(v,w) <= k. Coordinates carry over.
inline Graph graph_power(const Graph& g, int k) {
    if (k < 1) throw contract_error("graph_power requires k >= 1");
    const int n = g.vertex_count();
    std::vector<std::vector<int>> adj(n);
    for (int v = 0; v < n; ++v) {
        auto dist = bfs_distances(g, v, k);
        for (int u = 0; u < n; ++u)
            if (u != v && dist[u] != kUnreachable) adj[v].push_back(u);
    }
    Graph p = raw_graph(n, std::move(adj));
    if (g.has_coords()) p.set_coords(g.coords());
    return p;
}

/// All-pairs distance table, kUnreachable across components.
/// Shared by the sampler and the test oracles; O(n(n+m)).
struct AllPairsDistances {
    explicit AllPairsDistances(const Graph& g) {
        table.reserve(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) table.push_back(bfs_distances(g, v));
    }
    int operator()(int u, int v) const { return table[u][v]; }
    int size() const { return static_cast<int>(table.size()); }
    std::vector<std::vector<int>> table;
};

} // namespace gps
