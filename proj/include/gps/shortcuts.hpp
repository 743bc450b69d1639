#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "gps/graph.hpp"

namespace gps {

/// (k,d)-shortcut system: paths of length at most k, each vertex internal to
/// at most d of them. Paths include their endpoints; usage counts cover only
/// the internal positions.
struct ShortcutSystem {
    std::vector<std::vector<int>> paths;
    int k = 0;
    long long d = 0;
};

inline std::vector<long long> internal_usage_counts(const ShortcutSystem& s, int n) {
    std::vector<long long> usage(n, 0);
    for (const auto& path : s.paths)
        for (std::size_t i = 1; i + 1 < path.size(); ++i) ++usage[path[i]];
    return usage;
}

/// Checks every system invariant: path lengths, distinct endpoints, no
/// repeated vertices, consecutive pairs are edges, usage within d.
inline ValidationResult validate_shortcuts(const Graph& g, const ShortcutSystem& s) {
    for (std::size_t pi = 0; pi < s.paths.size(); ++pi) {
        const auto& path = s.paths[pi];
        const std::string tag = "path " + std::to_string(pi);
        if (path.size() < 2) return {false, tag + " has fewer than two vertices"};
        if (static_cast<int>(path.size()) - 1 > s.k)
            return {false, tag + " has length " + std::to_string(path.size() - 1) +
                               " above k=" + std::to_string(s.k)};
        std::vector<int> sorted(path);
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            return {false, tag + " repeats a vertex"};
        for (int v : path) {
            if (v < 0 || v >= g.vertex_count())
                return {false, tag + " mentions vertex " + std::to_string(v) + " out of range"};
        }
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            if (!g.has_edge(path[i], path[i + 1]))
                return {false, tag + " uses the non-edge (" + std::to_string(path[i]) + "," +
                                   std::to_string(path[i + 1]) + ")"};
    }
    const auto usage = internal_usage_counts(s, g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        if (usage[v] > s.d)
            return {false, "vertex " + std::to_string(v) + " is internal to " +
                               std::to_string(usage[v]) + " paths, above d=" +
                               std::to_string(s.d)};
    return {};
}

/// G^P: the host graph plus one edge per shortcut's endpoints (duplicates
/// collapse; the result stays simple).
inline Graph apply_shortcuts(const Graph& g, const ShortcutSystem& s) {
    auto vr = validate_shortcuts(g, s);
    if (!vr.ok) throw contract_error("apply_shortcuts: " + vr.violation);
    auto edges = g.edges();
    for (const auto& path : s.paths) edges.emplace_back(path.front(), path.back());
    Graph out = Graph::from_edges(g.vertex_count(), edges);
    if (g.has_coords()) out.set_coords(g.coords());
    return out;
}

/// Shortcut system realizing the k-th power: one shortest path per vertex
/// pair at distance 2..k, chosen by BFS with the lexicographically smallest
/// parent at every hop. Declared bounds are (k, 2kΔ^k).
inline ShortcutSystem power_shortcut_system(const Graph& g, int k) {
    if (k < 2) throw contract_error("power_shortcut_system requires k >= 2");
    const int n = g.vertex_count();
    ShortcutSystem s;
    s.k = k;
    long long d = 2 * static_cast<long long>(k);
    for (int i = 0; i < k; ++i) {
        d *= std::max(1, g.max_degree());
        if (d > (1ll << 62)) break; // saturate; the declared bound only needs to dominate
    }
    s.d = d;

    for (int v = 0; v < n; ++v) {
        auto dist = bfs_distances(g, v, k);
        // Lexicographically smallest parent per vertex.
        std::vector<int> parent(n, -1);
        for (int w = 0; w < n; ++w) {
            if (w == v || dist[w] == kUnreachable) continue;
            for (int u : g.neighbors(w))
                if (dist[u] != kUnreachable && dist[u] == dist[w] - 1) {
                    parent[w] = u;
                    break; // neighbors are sorted
                }
        }
        for (int w = v + 1; w < n; ++w) {
            if (dist[w] == kUnreachable || dist[w] < 2) continue;
            std::vector<int> path;
            for (int x = w; x != -1; x = parent[x]) {
                path.push_back(x);
                if (x == v) break;
            }
            std::reverse(path.begin(), path.end());
            s.paths.push_back(std::move(path));
        }
    }
    return s;
}

} // namespace gps
