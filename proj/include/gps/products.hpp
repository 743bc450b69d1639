#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "gps/graph.hpp"

namespace gps {

/// Vertex of a product graph, identified by one vertex id per factor.
struct ProductVertex {
    std::vector<int> factor_ids;
};

/// Row-major id of (v,x) in a product with |V(B)| = nb columns. The encoding
/// is part of the public contract: projections and fixtures depend on it.
inline int product_id(int v, int x, int nb) { return v * nb + x; }

inline ProductVertex product_vertex(int id, int nb) {
    return ProductVertex{{id / nb, id % nb}};
}

namespace detail {

inline int checked_product_order(const Graph& a, const Graph& b) {
    const long long n = static_cast<long long>(a.vertex_count()) * b.vertex_count();
    if (n > std::numeric_limits<int>::max())
        throw capacity_error("product would have " + std::to_string(n) + " vertices");
    return static_cast<int>(n);
}

// Factor contribution to a product coordinate tuple: the factor's own tuple
// when it has one, else the bare vertex id.
inline void append_factor_coords(const Graph& g, int v, CoordTuple& out) {
    if (g.has_coords()) {
        const auto& t = g.coord(v);
        out.insert(out.end(), t.begin(), t.end());
    } else {
        out.push_back(v);
    }
}

inline std::vector<CoordTuple> product_coords(const Graph& a, const Graph& b) {
    std::vector<CoordTuple> coords;
    coords.reserve(static_cast<std::size_t>(a.vertex_count()) * b.vertex_count());
    for (int v = 0; v < a.vertex_count(); ++v)
        for (int x = 0; x < b.vertex_count(); ++x) {
            CoordTuple t;
            append_factor_coords(a, v, t);
            append_factor_coords(b, x, t);
            coords.push_back(std::move(t));
        }
    return coords;
}

} // namespace detail

/// Strong product A ⊠ B: (v,x)~(w,y) for distinct pairs when each coordinate
/// pair is equal or adjacent. Ids are row-major; coordinates become 2-tuples
/// (v,x) when both factors lack coords, else concatenated factor tuples.
inline Graph strong_product(const Graph& a, const Graph& b) {
    const int n = detail::checked_product_order(a, b);
    const int nb = b.vertex_count();
    std::vector<std::vector<int>> adj(n);
    for (int v = 0; v < a.vertex_count(); ++v) {
        for (int x = 0; x < nb; ++x) {
            auto& nbrs = adj[product_id(v, x, nb)];
            for (int y : b.neighbors(x)) nbrs.push_back(product_id(v, y, nb));
            for (int w : a.neighbors(v)) {
                nbrs.push_back(product_id(w, x, nb));
                for (int y : b.neighbors(x)) nbrs.push_back(product_id(w, y, nb));
            }
            std::sort(nbrs.begin(), nbrs.end());
        }
    }
    Graph p = raw_graph(n, std::move(adj));
    p.set_coords(detail::product_coords(a, b));
    return p;
}

/// Cartesian product A □ B: exactly one coordinate moves along a factor edge.
inline Graph cartesian_product(const Graph& a, const Graph& b) {
    const int n = detail::checked_product_order(a, b);
    const int nb = b.vertex_count();
    std::vector<std::vector<int>> adj(n);
    for (int v = 0; v < a.vertex_count(); ++v) {
        for (int x = 0; x < nb; ++x) {
            auto& nbrs = adj[product_id(v, x, nb)];
            for (int y : b.neighbors(x)) nbrs.push_back(product_id(v, y, nb));
            for (int w : a.neighbors(v)) nbrs.push_back(product_id(w, x, nb));
            std::sort(nbrs.begin(), nbrs.end());
        }
    }
    Graph p = raw_graph(n, std::move(adj));
    p.set_coords(detail::product_coords(a, b));
    return p;
}

/// Projection of a coordinate-annotated graph onto one axis: the coordinate
/// values occurring there, with preimage counts (the weights w(v) = |π⁻¹(v)|).
struct Projection {
    std::vector<std::pair<Coord, int>> value_counts; // sorted by value
};

inline Projection project(const Graph& g, int axis) {
    if (!g.has_coords()) throw contract_error("project requires coordinates");
    if (axis < 0 || axis >= g.coord_arity())
        throw contract_error("projection axis " + std::to_string(axis) +
                             " out of range for arity " + std::to_string(g.coord_arity()));
    std::map<Coord, int> counts;
    for (int v = 0; v < g.vertex_count(); ++v) ++counts[g.coord(v)[axis]];
    Projection p;
    p.value_counts.assign(counts.begin(), counts.end());
    return p;
}

/// Ordered partition of V(G) into the level sets of one coordinate axis.
/// In a product subgraph every edge joins layers whose indices differ by at
/// most one, because adjacent product vertices differ by <= 1 per grid axis.
struct Layering {
    std::vector<std::vector<int>> layers; // sorted classes, ascending value
    std::vector<Coord> values;            // coordinate value of each layer
    std::vector<int> layer_of;            // vertex -> layer index

    /// Checks the edge-span invariant against the graph it was built from.
    bool edge_span_ok(const Graph& g) const {
        for (auto [u, v] : g.edges())
            if (std::abs(layer_of[u] - layer_of[v]) > 1) return false;
        return true;
    }
};

inline Layering layering_by_axis(const Graph& g, int axis) {
    if (!g.has_coords()) throw contract_error("layering_by_axis requires coordinates");
    if (axis < 0 || axis >= g.coord_arity())
        throw contract_error("layering axis out of range");
    std::map<Coord, std::vector<int>> levels;
    for (int v = 0; v < g.vertex_count(); ++v) levels[g.coord(v)[axis]].push_back(v);
    Layering lay;
    lay.layer_of.assign(g.vertex_count(), -1);
    for (auto& [value, verts] : levels) {
        for (int v : verts) lay.layer_of[v] = static_cast<int>(lay.layers.size());
        lay.values.push_back(value);
        lay.layers.push_back(std::move(verts));
    }
    return lay;
}

/// Collapses a graph onto a subset of coordinate axes: vertices grouped by
/// their tuple restricted to `axes`, one edge per projected edge. Used to
/// recover the factor a product subgraph projects onto.
struct ProjectedGraph {
    Graph graph;                       // one vertex per distinct restricted tuple
    std::vector<CoordTuple> tuples;    // restricted tuple per projected vertex
    std::vector<int> vertex_class;     // original vertex -> projected vertex
};

inline ProjectedGraph projected_graph(const Graph& g, const std::vector<int>& axes) {
    if (!g.has_coords()) throw contract_error("projected_graph requires coordinates");
    for (int a : axes)
        if (a < 0 || a >= g.coord_arity()) throw contract_error("projection axis out of range");
    std::map<CoordTuple, int> ids;
    std::vector<CoordTuple> tuples;
    std::vector<int> cls(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        CoordTuple key;
        key.reserve(axes.size());
        for (int a : axes) key.push_back(g.coord(v)[a]);
        auto [it, fresh] = ids.emplace(std::move(key), static_cast<int>(tuples.size()));
        if (fresh) tuples.push_back(it->first);
        cls[v] = it->second;
    }
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        if (cls[u] != cls[v]) edges.emplace_back(cls[u], cls[v]);
    ProjectedGraph out;
    out.graph = Graph::from_edges(static_cast<int>(tuples.size()), edges);
    out.graph.set_coords(tuples);
    out.tuples = std::move(tuples);
    out.vertex_class = std::move(cls);
    return out;
}

} // namespace gps
