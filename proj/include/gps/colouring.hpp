#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <vector>

#include "gps/graph.hpp"
#include "gps/products.hpp"

namespace gps {

/// Linear ordering of V(G), stored both ways round.
struct VertexOrdering {
    std::vector<int> order;    // position -> vertex
    std::vector<int> position; // vertex -> position

    static VertexOrdering from_order(std::vector<int> order) {
        VertexOrdering o;
        o.position.assign(order.size(), -1);
        for (int i = 0; i < static_cast<int>(order.size()); ++i) {
            const int v = order[i];
            if (v < 0 || v >= static_cast<int>(order.size()) || o.position[v] != -1)
                throw contract_error("ordering is not a permutation of the vertex ids");
            o.position[v] = i;
        }
        o.order = std::move(order);
        return o;
    }

    static VertexOrdering identity(int n) {
        std::vector<int> ord(n);
        std::iota(ord.begin(), ord.end(), 0);
        return from_order(std::move(ord));
    }
};

/// Vertices (r,≤)-reachable from v: endpoints x ≤ v of paths of length at
/// most r whose internal vertices all come strictly after v. Includes v
/// itself (the length-0 path). Computed by BFS over the vertices after v,
/// collecting admissible endpoints one step off that region.
inline std::vector<int> reachable_set(const Graph& g, const VertexOrdering& ord, int v, int r) {
    g.check_vertex(v);
    if (r < 1) throw contract_error("reachable_set requires r >= 1");
    if (static_cast<int>(ord.order.size()) != g.vertex_count())
        throw contract_error("ordering size does not match graph");
    const int pv = ord.position[v];

    // dist[u] = shortest length of a path v -> u through vertices after v.
    std::vector<int> dist(g.vertex_count(), kUnreachable);
    std::queue<int> q;
    dist[v] = 0;
    q.push(v);
    std::vector<char> reach(g.vertex_count(), 0);
    reach[v] = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        if (dist[u] >= r) continue;
        for (int w : g.neighbors(u)) {
            if (ord.position[w] <= pv) {
                reach[w] = 1; // admissible endpoint, not expandable
            } else if (dist[w] == kUnreachable) {
                dist[w] = dist[u] + 1;
                if (dist[w] < r) q.push(w); // internal vertices need one spare step
            }
        }
    }
    std::vector<int> out;
    for (int u = 0; u < g.vertex_count(); ++u)
        if (reach[u] && ord.position[u] <= pv) out.push_back(u);
    return out;
}

/// Witness value of an ordering: the largest reachable-set size.
inline int eval_colr(const Graph& g, const VertexOrdering& ord, int r) {
    int best = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        best = std::max(best, static_cast<int>(reachable_set(g, ord, v, r).size()));
    return g.vertex_count() == 0 ? 0 : best;
}

inline constexpr int kDefaultColrCap = 10;

/// Exact strong r-colouring number with a witness ordering.
///
/// Subset dynamic program: when a vertex u is placed next after the set P of
/// already-placed vertices, its reachable count is fixed — admissible paths
/// run through the still-unplaced vertices into P. So the best achievable
/// maximum depends only on the unplaced set, giving a 2^n recursion instead
/// of a search over n! orderings.
inline std::pair<int, VertexOrdering> exact_colr(const Graph& g, int r,
                                                 int cap = kDefaultColrCap) {
    const int n = g.vertex_count();
    if (n > cap || n > 24)
        throw size_cap_error("exact_colr cap " + std::to_string(std::min(cap, 24)) +
                             " exceeded (n=" + std::to_string(n) + ")");
    if (r < 1) throw contract_error("exact_colr requires r >= 1");
    if (n == 0) return {0, VertexOrdering::identity(0)};

    std::vector<std::uint32_t> nbmask(n, 0);
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v)) nbmask[v] |= 1u << w;

    // Reachable count for u placed when `unplaced` (including u) remains.
    const auto place_cost = [&](int u, std::uint32_t unplaced) {
        const std::uint32_t internal = unplaced & ~(1u << u);
        const std::uint32_t placed = ~unplaced;
        std::uint32_t endpoints = 1u << u;
        std::uint32_t frontier = 1u << u;
        std::uint32_t seen = 1u << u;
        for (int step = 0; step < r && frontier; ++step) {
            std::uint32_t touched = 0;
            while (frontier) {
                const int x = std::countr_zero(frontier);
                frontier &= frontier - 1;
                touched |= nbmask[x];
            }
            endpoints |= touched & placed;
            frontier = touched & internal & ~seen;
            seen |= frontier;
        }
        return std::popcount(endpoints & (placed | (1u << u)));
    };

    const std::uint32_t full = (1u << n) - 1;
    std::vector<int> best(full + 1, 0);
    std::vector<std::int8_t> choice(full + 1, -1);
    for (std::uint32_t s = 1; s <= full; ++s) {
        int val = std::numeric_limits<int>::max();
        int pick = -1;
        for (std::uint32_t rest = s; rest;) {
            const int u = std::countr_zero(rest);
            rest &= rest - 1;
            const int cand = std::max(place_cost(u, s), best[s & ~(1u << u)]);
            if (cand < val) {
                val = cand;
                pick = u;
            }
        }
        best[s] = val;
        choice[s] = static_cast<std::int8_t>(pick);
    }

    std::vector<int> order;
    order.reserve(n);
    std::uint32_t s = full;
    while (s) {
        const int u = choice[s];
        order.push_back(u);
        s &= ~(1u << u);
    }
    return {best[full], VertexOrdering::from_order(std::move(order))};
}

/// Ordering of G ⊠ H that sorts by G-position first, H id second; the
/// product uses the row-major id encoding from strong_product.
inline VertexOrdering product_ordering(const VertexOrdering& ord_g, const Graph& h) {
    const int ng = static_cast<int>(ord_g.order.size());
    const int nh = h.vertex_count();
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(ng) * nh);
    for (int i = 0; i < ng; ++i)
        for (int x = 0; x < nh; ++x) order.push_back(product_id(ord_g.order[i], x, nh));
    return VertexOrdering::from_order(std::move(order));
}

} // namespace gps
