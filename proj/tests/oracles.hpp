#pragma once

// Brute-force oracles for the test suite, written straight from the
// definitions. They deliberately share no code with the library
// implementations they are used to check.

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "gps/colouring.hpp"
#include "gps/graph.hpp"

namespace oracle {

// Strong-product adjacency by direct rule evaluation.
inline bool strong_adjacent(const gps::Graph& a, const gps::Graph& b, int v, int x, int w,
                            int y) {
    if (v == w && x == y) return false;
    const bool va = a.has_edge(v, w), xa = b.has_edge(x, y);
    return (v == w && xa) || (x == y && va) || (va && xa);
}

inline bool cartesian_adjacent(const gps::Graph& a, const gps::Graph& b, int v, int x, int w,
                               int y) {
    if (v == w && x == y) return false;
    return (v == w && b.has_edge(x, y)) || (x == y && a.has_edge(v, w));
}

inline std::size_t strong_product_edges(const gps::Graph& a, const gps::Graph& b) {
    std::size_t count = 0;
    const int na = a.vertex_count(), nb = b.vertex_count();
    for (int v = 0; v < na; ++v)
        for (int x = 0; x < nb; ++x)
            for (int w = 0; w < na; ++w)
                for (int y = 0; y < nb; ++y)
                    if (v * nb + x < w * nb + y && strong_adjacent(a, b, v, x, w, y)) ++count;
    return count;
}

inline std::size_t cartesian_product_edges(const gps::Graph& a, const gps::Graph& b) {
    std::size_t count = 0;
    const int na = a.vertex_count(), nb = b.vertex_count();
    for (int v = 0; v < na; ++v)
        for (int x = 0; x < nb; ++x)
            for (int w = 0; w < na; ++w)
                for (int y = 0; y < nb; ++y)
                    if (v * nb + x < w * nb + y && cartesian_adjacent(a, b, v, x, w, y)) ++count;
    return count;
}

// Width of one elimination ordering: the largest later-neighborhood met
// while eliminating with fill-in.
inline int elimination_width(const gps::Graph& g, const std::vector<int>& order) {
    const int n = g.vertex_count();
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = 1;
    std::vector<char> gone(n, 0);
    int width = 0;
    for (int v : order) {
        std::vector<int> nbrs;
        for (int u = 0; u < n; ++u)
            if (!gone[u] && adj[v][u]) nbrs.push_back(u);
        width = std::max(width, static_cast<int>(nbrs.size()));
        for (int a : nbrs)
            for (int b : nbrs)
                if (a != b) adj[a][b] = 1;
        gone[v] = 1;
    }
    return width;
}

/// Treewidth as the minimum over all n! elimination orderings; n <= 8.
inline int treewidth_all_orderings(const gps::Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return -1;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    int best = n - 1;
    do {
        best = std::min(best, elimination_width(g, order));
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

/// Pathwidth as the vertex separation number, minimized over all orderings.
inline int pathwidth_all_orderings(const gps::Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return -1;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    int best = n - 1;
    do {
        std::vector<char> placed(n, 0);
        int worst = 0;
        for (int i = 0; i < n; ++i) {
            placed[order[i]] = 1;
            int active = 0;
            for (int u = 0; u < n; ++u) {
                if (!placed[u]) continue;
                bool reaches_right = false;
                for (int w : g.neighbors(u))
                    if (!placed[w]) {
                        reaches_right = true;
                        break;
                    }
                if (reaches_right) ++active;
            }
            worst = std::max(worst, active);
        }
        best = std::min(best, worst);
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

// All (r,≤)-reachable vertices from v by exhaustive enumeration of simple
// paths, filtering on the definition afterwards.
inline std::vector<int> reachable_by_path_enumeration(const gps::Graph& g,
                                                      const gps::VertexOrdering& ord, int v,
                                                      int r) {
    std::set<int> found{v};
    std::vector<int> path{v};
    std::vector<char> used(g.vertex_count(), 0);
    used[v] = 1;
    auto admissible = [&]() {
        const int x = path.back();
        if (ord.position[x] > ord.position[v]) return false;
        for (std::size_t i = 1; i + 1 < path.size(); ++i)
            if (ord.position[path[i]] <= ord.position[v]) return false;
        return true;
    };
    auto dfs = [&](auto&& self, int u) -> void {
        if (admissible()) found.insert(path.back());
        if (static_cast<int>(path.size()) - 1 == r) return;
        for (int w : g.neighbors(u)) {
            if (used[w]) continue;
            used[w] = 1;
            path.push_back(w);
            self(self, w);
            path.pop_back();
            used[w] = 0;
        }
    };
    dfs(dfs, v);
    return {found.begin(), found.end()};
}

inline int colr_all_orderings(const gps::Graph& g, int r) {
    const int n = g.vertex_count();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    int best = n;
    do {
        auto ord = gps::VertexOrdering::from_order(order);
        int value = 0;
        for (int v = 0; v < n; ++v)
            value = std::max(
                value,
                static_cast<int>(reachable_by_path_enumeration(g, ord, v, r).size()));
        best = std::min(best, value);
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

} // namespace oracle
