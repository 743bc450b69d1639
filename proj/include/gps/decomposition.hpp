#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "gps/graph.hpp"

namespace gps {

struct TreeDecomposition {
    std::vector<std::vector<int>> bags;        // sorted vertex sets
    std::vector<std::pair<int, int>> tree_edges; // over bag node ids
    int width = -1;

    int recomputed_width() const {
        int w = -1;
        for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
        return w;
    }
};

/// Tree decomposition whose underlying tree is a path; bags in path order.
struct PathDecomposition {
    std::vector<std::vector<int>> bags;
    int width = -1;

    TreeDecomposition as_tree() const {
        TreeDecomposition td;
        td.bags = bags;
        for (int i = 0; i + 1 < static_cast<int>(bags.size()); ++i)
            td.tree_edges.emplace_back(i, i + 1);
        td.width = width;
        return td;
    }
};

/// Ordered pair of sides covering V(G); the separator is their intersection.
/// Balance uses the ceiling convention: each strict side has at most
/// ceil(2n/3) vertices.
struct Separation {
    std::vector<int> side1, side2, separator; // sorted
    bool balanced = false;

    int order() const { return static_cast<int>(separator.size()); }
};

inline int balance_threshold(int n) { return (2 * n + 2) / 3; }

namespace detail {

inline bool is_tree(int nodes, const std::vector<std::pair<int, int>>& edges) {
    if (nodes == 0) return edges.empty();
    if (static_cast<int>(edges.size()) != nodes - 1) return false;
    std::vector<std::vector<int>> adj(nodes);
    for (auto [a, b] : edges) {
        if (a < 0 || a >= nodes || b < 0 || b >= nodes || a == b) return false;
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<char> seen(nodes, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int visited = 0;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        ++visited;
        for (int w : adj[u])
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    return visited == nodes;
}

} // namespace detail

/// Checks the three decomposition axioms plus structural sanity. Never
/// throws: a malformed decomposition yields ok=false with the failing axiom
/// and a witness in the message.
inline ValidationResult validate_td(const Graph& g, const TreeDecomposition& td) {
    const int n = g.vertex_count();
    const int nodes = static_cast<int>(td.bags.size());
    for (const auto& bag : td.bags)
        for (int v : bag)
            if (v < 0 || v >= n)
                return {false, "bag vertex " + std::to_string(v) + " out of range"};
    if (!detail::is_tree(nodes, td.tree_edges))
        return {false, "tree_edges do not form a tree over " + std::to_string(nodes) + " bags"};
    if (td.width != td.recomputed_width())
        return {false, "stored width " + std::to_string(td.width) + " != recomputed " +
                           std::to_string(td.recomputed_width())};

    // Axiom: every vertex appears in a non-empty connected set of bags.
    std::vector<std::vector<int>> bags_of(n);
    for (int x = 0; x < nodes; ++x)
        for (int v : td.bags[x]) bags_of[v].push_back(x);
    std::vector<std::vector<int>> tree_adj(nodes);
    for (auto [a, b] : td.tree_edges) {
        tree_adj[a].push_back(b);
        tree_adj[b].push_back(a);
    }
    std::vector<int> mark(nodes, -1);
    for (int v = 0; v < n; ++v) {
        if (bags_of[v].empty())
            return {false, "vertex " + std::to_string(v) + " appears in no bag"};
        for (int x : bags_of[v]) mark[x] = v;
        std::vector<int> stack{bags_of[v][0]};
        mark[bags_of[v][0]] = -2 - v; // visited tag
        int visited = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : tree_adj[x])
                if (mark[y] == v) {
                    mark[y] = -2 - v;
                    stack.push_back(y);
                    ++visited;
                }
        }
        if (visited != static_cast<int>(bags_of[v].size()))
            return {false, "bags of vertex " + std::to_string(v) + " are not connected"};
    }

    // Axiom: every edge is covered by some bag.
    for (auto [u, v] : g.edges()) {
        bool covered = false;
        for (int x : bags_of[u]) {
            if (std::binary_search(td.bags[x].begin(), td.bags[x].end(), v)) {
                covered = true;
                break;
            }
        }
        if (!covered)
            return {false, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                               ") covered by no bag"};
    }
    return {};
}

inline ValidationResult validate_pd(const Graph& g, const PathDecomposition& pd) {
    return validate_td(g, pd.as_tree());
}

namespace detail {

// Splits vertex-set parts into two groups, each of total size at most 2/3 of
// the combined size, assuming no part exceeds half. Parts are taken ascending
// and accumulated until the prefix reaches a third; a crossing part that is
// itself above a third stands alone.
inline std::pair<std::vector<int>, std::vector<int>> two_group_split(
    std::vector<std::vector<int>> parts) {
    std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    long long total = 0;
    for (const auto& p : parts) total += static_cast<long long>(p.size());
    std::vector<int> group1, group2;
    long long acc = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const long long sz = static_cast<long long>(parts[i].size());
        if (3 * (acc + sz) >= total) {
            const bool solo = 3 * sz > total;
            for (std::size_t j = 0; j < parts.size(); ++j) {
                const bool to_first = solo ? (j == i) : (j <= i);
                auto& dst = to_first ? group1 : group2;
                dst.insert(dst.end(), parts[j].begin(), parts[j].end());
            }
            break;
        }
        acc += sz;
    }
    std::sort(group1.begin(), group1.end());
    std::sort(group2.begin(), group2.end());
    return {std::move(group1), std::move(group2)};
}

// Builds the decomposition induced by an elimination ordering: the bag of a
// vertex is itself plus its not-yet-eliminated neighbors in the filled graph,
// and each bag hangs off the bag of its earliest-eliminated such neighbor.
inline TreeDecomposition td_from_elimination(const Graph& g, const std::vector<int>& order) {
    const int n = g.vertex_count();
    if (n == 0) return TreeDecomposition{{{}}, {}, -1};
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    std::vector<std::set<int>> nb(n);
    for (auto [u, v] : g.edges()) {
        nb[u].insert(v);
        nb[v].insert(u);
    }
    TreeDecomposition td;
    td.bags.resize(n);
    for (int i = 0; i < n; ++i) {
        const int v = order[i];
        std::vector<int> later(nb[v].begin(), nb[v].end());
        td.bags[i] = later;
        td.bags[i].push_back(v);
        std::sort(td.bags[i].begin(), td.bags[i].end());
        if (!later.empty()) {
            int parent = *std::min_element(later.begin(), later.end(),
                                           [&](int a, int b) { return pos[a] < pos[b]; });
            td.tree_edges.emplace_back(i, pos[parent]);
            for (int a : later)
                for (int b : later)
                    if (a < b) {
                        nb[a].insert(b);
                        nb[b].insert(a);
                    }
        } else if (i + 1 < n) {
            td.tree_edges.emplace_back(i, i + 1);
        }
        for (int u : later) nb[u].erase(v);
        nb[v].clear();
    }
    td.width = td.recomputed_width();
    return td;
}

} // namespace detail

inline constexpr int kDefaultExactCap = 16;

/// Exact treewidth with a witness decomposition, via the subset dynamic
/// program over elimination prefixes: for each eliminated set S and next
/// vertex v, the cost of eliminating v is the number of outside vertices
/// reachable from v through S. Intended for n <= 16; hard memory limit 24.
inline std::pair<int, TreeDecomposition> exact_treewidth(const Graph& g,
                                                         int cap = kDefaultExactCap) {
    const int n = g.vertex_count();
    if (n > cap || n > 24)
        throw size_cap_error("exact_treewidth cap " + std::to_string(std::min(cap, 24)) +
                             " exceeded (n=" + std::to_string(n) +
                             "); use heuristic_treewidth");
    if (n == 0) return {-1, TreeDecomposition{{{}}, {}, -1}};

    std::vector<std::uint32_t> nbmask(n, 0);
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v)) nbmask[v] |= (1u << w);

    // Cost of eliminating v right after the set S.
    const auto elim_cost = [&](std::uint32_t s, int v) {
        const std::uint32_t allowed = s | (1u << v);
        std::uint32_t reach = 1u << v;
        std::uint32_t frontier = reach;
        std::uint32_t touched = nbmask[v];
        while (true) {
            std::uint32_t grow = touched & s & ~reach;
            if (!grow) break;
            reach |= grow;
            frontier = grow;
            while (frontier) {
                int u = std::countr_zero(frontier);
                frontier &= frontier - 1;
                touched |= nbmask[u];
            }
        }
        return std::popcount(touched & ~allowed);
    };

    const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
    std::vector<int> best(full + 1, 0);
    std::vector<std::int8_t> choice(full + 1, -1);
    for (std::uint32_t s = 1; s <= full; ++s) {
        int val = std::numeric_limits<int>::max();
        int pick = -1;
        for (std::uint32_t rest = s; rest;) {
            const int v = std::countr_zero(rest);
            rest &= rest - 1;
            const std::uint32_t prev = s & ~(1u << v);
            const int cand = std::max(best[prev], elim_cost(prev, v));
            if (cand < val) {
                val = cand;
                pick = v;
            }
        }
        best[s] = val;
        choice[s] = static_cast<std::int8_t>(pick);
    }

    std::vector<int> order(n);
    std::uint32_t s = full;
    for (int i = n - 1; i >= 0; --i) {
        order[i] = choice[s];
        s &= ~(1u << order[i]);
    }
    TreeDecomposition td = detail::td_from_elimination(g, order);
    return {best[full], td};
}

/// Min-fill elimination heuristic: always a valid decomposition, exact on
/// chordal graphs, width >= the exact value in general.
inline TreeDecomposition heuristic_treewidth(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return TreeDecomposition{{{}}, {}, -1};
    std::vector<std::vector<char>> mat(n, std::vector<char>(n, 0));
    std::vector<std::set<int>> nb(n);
    for (auto [u, v] : g.edges()) {
        mat[u][v] = mat[v][u] = 1;
        nb[u].insert(v);
        nb[v].insert(u);
    }
    std::vector<char> gone(n, 0);
    std::vector<int> order;
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        long long pick_fill = std::numeric_limits<long long>::max();
        for (int v = 0; v < n; ++v) {
            if (gone[v]) continue;
            long long fill = 0;
            for (auto it = nb[v].begin(); it != nb[v].end(); ++it)
                for (auto jt = std::next(it); jt != nb[v].end(); ++jt)
                    if (!mat[*it][*jt]) ++fill;
            if (fill < pick_fill) {
                pick_fill = fill;
                pick = v;
            }
        }
        order.push_back(pick);
        for (auto it = nb[pick].begin(); it != nb[pick].end(); ++it)
            for (auto jt = std::next(it); jt != nb[pick].end(); ++jt)
                if (!mat[*it][*jt]) {
                    mat[*it][*jt] = mat[*jt][*it] = 1;
                    nb[*it].insert(*jt);
                    nb[*jt].insert(*it);
                }
        for (int u : nb[pick]) nb[u].erase(pick);
        nb[pick].clear();
        gone[pick] = 1;
    }
    return detail::td_from_elimination(g, order);
}

/// Balanced separation whose separator is a single bag of the decomposition:
/// pick the bag minimizing the largest component of G - bag (some bag leaves
/// only components of size <= n/2), then split the components into two groups
/// of size at most ceil(2n/3) each.
inline Separation separator_from_td(const Graph& g, const TreeDecomposition& td) {
    auto vr = validate_td(g, td);
    if (!vr.ok) throw contract_error("separator_from_td: invalid decomposition: " + vr.violation);
    const int n = g.vertex_count();
    Separation sep;
    if (n == 0) {
        sep.balanced = true;
        return sep;
    }

    std::size_t best_bag = 0;
    int best_max = std::numeric_limits<int>::max();
    std::vector<std::vector<int>> best_parts;
    for (std::size_t i = 0; i < td.bags.size(); ++i) {
        auto [rest, old_ids] = delete_vertices(g, td.bags[i]);
        auto comps = connected_components(rest);
        int biggest = 0;
        for (const auto& c : comps) biggest = std::max(biggest, static_cast<int>(c.size()));
        if (biggest < best_max) {
            best_max = biggest;
            best_bag = i;
            best_parts.clear();
            for (auto& c : comps) {
                std::vector<int> part;
                part.reserve(c.size());
                for (int x : c) part.push_back(old_ids[x]);
                best_parts.push_back(std::move(part));
            }
        }
    }

    auto [group1, group2] = detail::two_group_split(std::move(best_parts));

    sep.separator = td.bags[best_bag];
    sep.side1 = group1;
    sep.side1.insert(sep.side1.end(), sep.separator.begin(), sep.separator.end());
    sep.side2 = group2;
    sep.side2.insert(sep.side2.end(), sep.separator.begin(), sep.separator.end());
    std::sort(sep.side1.begin(), sep.side1.end());
    std::sort(sep.side2.begin(), sep.side2.end());
    const int cap = balance_threshold(n);
    sep.balanced = static_cast<int>(group1.size()) <= cap &&
                   static_cast<int>(group2.size()) <= cap;
    return sep;
}

/// Checks the Separation invariants against a graph (sides cover V, the
/// separator is their intersection, and no edge crosses the strict sides).
inline ValidationResult validate_separation(const Graph& g, const Separation& s) {
    const int n = g.vertex_count();
    std::vector<int> in1(n, 0), in2(n, 0);
    for (int v : s.side1) {
        g.check_vertex(v);
        in1[v] = 1;
    }
    for (int v : s.side2) {
        g.check_vertex(v);
        in2[v] = 1;
    }
    for (int v = 0; v < n; ++v)
        if (!in1[v] && !in2[v]) return {false, "vertex " + std::to_string(v) + " on no side"};
    std::vector<int> expect;
    for (int v = 0; v < n; ++v)
        if (in1[v] && in2[v]) expect.push_back(v);
    if (expect != s.separator) return {false, "separator is not the side intersection"};
    for (auto [u, v] : g.edges()) {
        const bool u_strict1 = in1[u] && !in2[u], u_strict2 = in2[u] && !in1[u];
        const bool v_strict1 = in1[v] && !in2[v], v_strict2 = in2[v] && !in1[v];
        if ((u_strict1 && v_strict2) || (u_strict2 && v_strict1))
            return {false, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                               ") crosses the separation"};
    }
    return {};
}

/// Decomposition of (P_{q1} ⊠ ... ⊠ P_{qd}) ⊠ H from a decomposition of H:
/// every bag gets all grid copies of its vertices. Product ids are row-major
/// with the grid axes leading, so id(z1..zd, h) = (((z1*q2+z2)*q3+...)*nH)+h,
/// matching iterated strong_product calls in that order.
inline TreeDecomposition product_td(const TreeDecomposition& h_td,
                                    const std::vector<int>& q_sizes) {
    int n_h = 0;
    for (const auto& bag : h_td.bags)
        for (int v : bag) n_h = std::max(n_h, v + 1);
    long long cells = 1;
    for (int q : q_sizes) {
        if (q < 1) throw contract_error("product_td path sizes must be >= 1");
        cells *= q;
        if (cells > std::numeric_limits<int>::max())
            throw capacity_error("grid part of product_td overflows");
    }
    if (cells * std::max(n_h, 1) > std::numeric_limits<int>::max())
        throw capacity_error("product in product_td overflows");

    TreeDecomposition td;
    td.tree_edges = h_td.tree_edges;
    td.bags.reserve(h_td.bags.size());
    for (const auto& bag : h_td.bags) {
        std::vector<int> big;
        big.reserve(bag.size() * static_cast<std::size_t>(cells));
        for (long long cell = 0; cell < cells; ++cell)
            for (int v : bag) big.push_back(static_cast<int>(cell * n_h + v));
        std::sort(big.begin(), big.end());
        td.bags.push_back(std::move(big));
    }
    td.width = td.recomputed_width();
    return td;
}

} // namespace gps
