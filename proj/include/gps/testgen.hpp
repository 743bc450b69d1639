#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gps/graph.hpp"
#include "gps/products.hpp"

namespace gps {

// ---------------------------------------------------------------------------
// Deterministic instance builders shared by the CLI witnesses and the tests.
// ---------------------------------------------------------------------------

inline Graph path_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph::from_edges(n, es);
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw contract_error("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, es);
}

inline Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return Graph::from_edges(n, es);
}

/// Star K_{1,n}: center 0, leaves 1..n.
inline Graph star_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i <= n; ++i) es.emplace_back(0, i);
    return Graph::from_edges(n + 1, es);
}

/// n legs of `len` edges each, glued at center 0. Leg i occupies ids
/// 1+i*len .. (i+1)*len, leaf outermost.
inline Graph spider_graph(int legs, int len) {
    if (legs < 1 || len < 1) throw contract_error("spider needs legs >= 1, len >= 1");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < legs; ++i) {
        es.emplace_back(0, 1 + i * len);
        for (int j = 1; j < len; ++j) es.emplace_back(i * len + j, i * len + j + 1);
    }
    return Graph::from_edges(1 + legs * len, es);
}

inline int spider_leaf(int leg, int len) { return (leg + 1) * len; }

/// w x h grid with diagonals: the strong product of two paths, coordinates
/// included.
inline Graph crossed_grid(int w, int h) {
    return strong_product(path_graph(w), path_graph(h));
}

/// Plain w x h grid (cartesian product of paths), coordinates included.
inline Graph grid_graph(int w, int h) {
    return cartesian_product(path_graph(w), path_graph(h));
}

namespace testgen_detail {

inline std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t bound) {
    return bound == 0 ? 0 : gen() % bound;
}

inline double uniform01(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

} // namespace testgen_detail

/// Erdos-Renyi style graph, deterministic in the seed.
inline Graph random_graph(int n, double edge_prob, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (testgen_detail::uniform01(gen) < edge_prob) es.emplace_back(i, j);
    return Graph::from_edges(n, es);
}

/// Uniform attachment tree on n vertices.
inline Graph random_tree(int n, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::vector<std::pair<int, int>> es;
    for (int v = 1; v < n; ++v)
        es.emplace_back(static_cast<int>(testgen_detail::uniform_below(gen, v)), v);
    return Graph::from_edges(n, es);
}

/// Random attachment tree plus extra random edges; always connected.
inline Graph random_connected_graph(int n, double extra_prob, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::vector<std::pair<int, int>> es;
    for (int v = 1; v < n; ++v)
        es.emplace_back(static_cast<int>(testgen_detail::uniform_below(gen, v)), v);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (testgen_detail::uniform01(gen) < extra_prob) es.emplace_back(i, j);
    return Graph::from_edges(n, es);
}

/// Connected induced piece of Z^d ⊠ K_m grown cell by cell from the origin.
/// Coordinates record (z_1..z_d, h); with m = 1 this is a plain subgraph of
/// the d-dimensional crossed grid.
inline Graph random_grid_product_subgraph(int d, int m, int target, std::uint64_t seed) {
    if (d < 1 || m < 1 || target < 1)
        throw contract_error("random_grid_product_subgraph needs d,m,target >= 1");
    std::mt19937_64 gen(seed);
    std::set<CoordTuple> cells;
    std::vector<CoordTuple> frontier;
    CoordTuple origin(d + 1, 0);
    cells.insert(origin);

    auto push_neighbors = [&](const CoordTuple& cell) {
        std::vector<Coord> delta(d, -1);
        while (true) {
            for (Coord h = 0; h < m; ++h) {
                CoordTuple nb(d + 1);
                bool same_z = true;
                for (int i = 0; i < d; ++i) {
                    nb[i] = cell[i] + delta[i];
                    if (delta[i] != 0) same_z = false;
                }
                nb[d] = h;
                if (same_z && h == cell[d]) continue;
                if (!cells.count(nb)) frontier.push_back(nb);
            }
            int axis = 0;
            while (axis < d && delta[axis] == 1) delta[axis++] = -1;
            if (axis == d) break;
            ++delta[axis];
        }
    };
    push_neighbors(origin);
    while (static_cast<int>(cells.size()) < target && !frontier.empty()) {
        const std::size_t pick = testgen_detail::uniform_below(gen, frontier.size());
        CoordTuple cell = frontier[pick];
        frontier[pick] = frontier.back();
        frontier.pop_back();
        if (!cells.insert(cell).second) continue;
        push_neighbors(cell);
    }

    std::vector<CoordTuple> tuples(cells.begin(), cells.end());
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < static_cast<int>(tuples.size()); ++i)
        for (int j = i + 1; j < static_cast<int>(tuples.size()); ++j) {
            bool adj = true;
            for (int a = 0; a < d && adj; ++a)
                if (std::abs(tuples[i][a] - tuples[j][a]) > 1) adj = false;
            if (adj) es.emplace_back(i, j); // K_m: any factor pair is equal or adjacent
        }
    Graph g = Graph::from_edges(static_cast<int>(tuples.size()), es);
    g.set_coords(std::move(tuples));
    return g;
}

// ---------------------------------------------------------------------------
// Witness gadgets from the product structure arguments.
// ---------------------------------------------------------------------------

struct WitnessReport {
    std::string construction;
    Graph host;
    std::string pattern;
    bool verified = false;
    std::string detail;
};

/// In K_{1,n} □ K_{1,n} (center c = 0, leaves 1..n), the vertices (a_i, c)
/// and (c, b_j) together with the middle vertices (a_i, b_j) form a
/// 1-subdivision of K_{n,n}: the paths (a_i,c)-(a_i,b_j)-(c,b_j) are present
/// and internally disjoint.
inline WitnessReport star_cartesian_subdivision_witness(int n) {
    if (n < 1) throw contract_error("witness requires n >= 1");
    WitnessReport rep;
    rep.construction = "star-cartesian-subdivision";
    const Graph star = star_graph(n);
    rep.host = cartesian_product(star, star);
    rep.pattern = "1-subdivision of K_{" + std::to_string(n) + "," + std::to_string(n) + "}";
    const int cols = n + 1;

    rep.verified = true;
    std::set<int> used;
    for (int i = 1; i <= n; ++i) used.insert(product_id(i, 0, cols));
    for (int j = 1; j <= n; ++j) used.insert(product_id(0, j, cols));
    if (static_cast<int>(used.size()) != 2 * n) rep.verified = false;
    for (int i = 1; i <= n && rep.verified; ++i)
        for (int j = 1; j <= n && rep.verified; ++j) {
            const int mid = product_id(i, j, cols);
            if (used.count(mid)) rep.verified = false; // subdivision vertex collides
            used.insert(mid);
            if (!rep.host.has_edge(product_id(i, 0, cols), mid) ||
                !rep.host.has_edge(mid, product_id(0, j, cols)))
                rep.verified = false;
        }
    rep.detail = rep.verified
                     ? std::to_string(2 * n) + " branch vertices, " + std::to_string(n * n) +
                           " subdivision vertices"
                     : "required subdivision edge or vertex missing";
    return rep;
}

/// Deepest complete binary tree whose two leaf-parity classes both fit in n
/// vertices; a connected bipartite pattern inside K_{n,n} cannot beat this.
inline int binary_tree_depth_in_knn(int n) {
    int depth = -1;
    long long even = 0, odd = 0, level = 1;
    for (int d = 0; even + (d % 2 == 0 ? level : 0) <= n && odd + (d % 2 == 1 ? level : 0) <= n;
         ++d) {
        (d % 2 == 0 ? even : odd) += level;
        depth = d;
        if (level > n) break;
        level *= 2;
    }
    return depth;
}

/// In K_{1,n} ⊠ K_{1,n}, the leaf pairs (a_i, c) and (c, b_j) induce a
/// complete bipartite K_{n,n} (both coordinates move along star edges), in
/// which a complete binary tree embeds level by level, parts alternating.
/// Exhibits bounded-degree exponential growth inside a pathwidth-1 ⊠
/// pathwidth-1 product.
inline WitnessReport strong_star_binary_tree_witness(int n) {
    if (n < 1) throw contract_error("witness requires n >= 1");
    WitnessReport rep;
    rep.construction = "star-strong-binary-tree";
    const Graph star = star_graph(n);
    rep.host = strong_product(star, star);
    const int cols = n + 1;
    const int depth = binary_tree_depth_in_knn(n);
    rep.pattern = "K_{" + std::to_string(n) + "," + std::to_string(n) +
                  "} plus a complete binary tree of depth " + std::to_string(depth);

    rep.verified = true;
    std::vector<int> part_a, part_b;
    for (int i = 1; i <= n; ++i) part_a.push_back(product_id(i, 0, cols));
    for (int j = 1; j <= n; ++j) part_b.push_back(product_id(0, j, cols));
    for (int a : part_a)
        for (int b : part_b)
            if (!rep.host.has_edge(a, b)) rep.verified = false;

    // Tree embedding: levels alternate sides, vertices consumed in id order.
    std::size_t next_a = 0, next_b = 0;
    std::vector<int> prev_level;
    for (int d = 0; d <= depth && rep.verified; ++d) {
        std::vector<int> level;
        const long long want = 1ll << d;
        auto& pool = (d % 2 == 0) ? part_a : part_b;
        auto& next = (d % 2 == 0) ? next_a : next_b;
        for (long long i = 0; i < want; ++i) {
            if (next >= pool.size()) {
                rep.verified = false;
                break;
            }
            level.push_back(pool[next++]);
        }
        for (std::size_t i = 0; i < level.size() && rep.verified; ++i) {
            if (d == 0) break;
            if (!rep.host.has_edge(prev_level[i / 2], level[i])) rep.verified = false;
        }
        prev_level = std::move(level);
    }
    rep.detail = rep.verified ? "tree depth " + std::to_string(depth)
                              : "bipartite or tree edge missing";
    return rep;
}

struct MinorCheckResult {
    bool ok = true;
    std::string reason;
};

/// Certified r-shallow K_n minor check: branch sets must be nonempty,
/// disjoint, induce connected subgraphs of radius at most r, and be pairwise
/// joined by an edge. A false verdict names the first failing condition.
inline MinorCheckResult shallow_minor_check(const Graph& g, int n, int r,
                                            const std::vector<std::vector<int>>& branch_sets) {
    if (static_cast<int>(branch_sets.size()) != n)
        return {false, "expected " + std::to_string(n) + " branch sets, got " +
                           std::to_string(branch_sets.size())};
    std::vector<int> owner(g.vertex_count(), -1);
    for (int b = 0; b < n; ++b) {
        if (branch_sets[b].empty())
            return {false, "branch set " + std::to_string(b) + " is empty"};
        for (int v : branch_sets[b]) {
            g.check_vertex(v);
            if (owner[v] != -1)
                return {false, "vertex " + std::to_string(v) + " lies in branch sets " +
                                   std::to_string(owner[v]) + " and " + std::to_string(b)};
            owner[v] = b;
        }
    }
    for (int b = 0; b < n; ++b) {
        auto [sub, old_ids] = induced_subgraph(g, branch_sets[b]);
        if (!is_connected(sub))
            return {false, "branch set " + std::to_string(b) + " is disconnected"};
        int radius = std::numeric_limits<int>::max();
        for (int v = 0; v < sub.vertex_count(); ++v) {
            int ecc = 0;
            for (int x : bfs_distances(sub, v)) ecc = std::max(ecc, x);
            radius = std::min(radius, ecc);
        }
        if (radius > r)
            return {false, "branch set " + std::to_string(b) + " has radius " +
                               std::to_string(radius) + " above " + std::to_string(r)};
    }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            bool linked = false;
            for (int v : branch_sets[a]) {
                for (int w : g.neighbors(v))
                    if (owner[w] == b) {
                        linked = true;
                        break;
                    }
                if (linked) break;
            }
            if (!linked)
                return {false, "no edge joins branch sets " + std::to_string(a) + " and " +
                                   std::to_string(b)};
        }
    return {};
}

/// The cartesian-product shallow-minor construction: with S the spider with
/// n legs of length L, the product S □ S hosts a 2L-shallow K_n minor. Each
/// leaf v keeps its whole fiber {v} x V(S) plus half of the path
/// Q_{v,w} = P_{v,w} x {σ(v,w)} for every other leaf w, where P_{v,w} runs
/// leaf-center-leaf in the first factor and σ assigns each pair a private
/// second-factor vertex.
struct ShallowMinorWitness {
    Graph host;
    std::vector<std::vector<int>> branch_sets;
    int clique_order = 0;
    int depth = 0; // 2L
};

inline ShallowMinorWitness product_expansion_minor_witness(int n, int leg_len) {
    if (n < 2 || leg_len < 1) throw contract_error("witness needs n >= 2, leg_len >= 1");
    const long long pairs = static_cast<long long>(n) * (n - 1) / 2;
    const Graph s = spider_graph(n, leg_len);
    if (pairs > s.vertex_count())
        throw contract_error("second factor too small to host one vertex per pair");
    ShallowMinorWitness wit;
    wit.host = cartesian_product(s, s);
    wit.clique_order = n;
    wit.depth = 2 * leg_len;
    const int cols = s.vertex_count();

    // σ: pair (i<j) -> distinct second-factor vertex, by enumeration order.
    std::map<std::pair<int, int>, int> sigma;
    int next = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) sigma[{i, j}] = next++;

    wit.branch_sets.assign(n, {});
    for (int leg = 0; leg < n; ++leg) {
        const int leaf = spider_leaf(leg, leg_len);
        for (int x = 0; x < cols; ++x)
            wit.branch_sets[leg].push_back(product_id(leaf, x, cols));
    }
    // First-factor path leaf(i) .. center .. leaf(j), as vertex ids.
    auto leg_path_down = [&](int leg) { // leaf -> center, inclusive
        std::vector<int> p;
        for (int v = spider_leaf(leg, leg_len); v > leg * leg_len; --v) p.push_back(v);
        p.push_back(0);
        return p;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const int col = sigma[{i, j}];
            auto down = leg_path_down(i); // leaf_i .. center
            auto up = leg_path_down(j);   // leaf_j .. center
            std::vector<int> path(down.begin(), down.end());
            for (auto it = up.rbegin() + 1; it != up.rend(); ++it) path.push_back(*it);
            // path = leaf_i, .., center, .., leaf_j with 2L+1 vertices
            for (int idx = 1; idx <= leg_len; ++idx)
                wit.branch_sets[i].push_back(product_id(path[idx], col, cols));
            for (int idx = leg_len + 1; idx < 2 * leg_len; ++idx)
                wit.branch_sets[j].push_back(product_id(path[idx], col, cols));
        }
    for (auto& bs : wit.branch_sets) std::sort(bs.begin(), bs.end());
    return wit;
}

} // namespace gps
