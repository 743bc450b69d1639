#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "gps/decomposition.hpp"
#include "gps/graph.hpp"
#include "gps/localise.hpp"
#include "gps/products.hpp"

namespace gps {

/// Outcome of the layered-deletion construction on a subgraph of Z^d ⊠ H:
/// one residue class per grid axis is removed, the leftover components each
/// fit in a (m-1)-wide coordinate window per axis, and a decomposition of
/// the whole graph is assembled from the factor decomposition.
struct LayeredDeletionReport {
    int m = 1;
    int d = 0;
    int t = 0;                    // width of the H decomposition
    std::vector<int> residues;    // chosen alpha_i per grid axis
    std::vector<int> deleted;     // X, sorted
    std::vector<std::vector<int>> components; // of G - X, sorted by least member
    TreeDecomposition td;
    bool deletion_bound_ok = true; // m|X| <= d n, exact
    bool windows_ok = true;        // component spans <= m-2 per axis, residues avoided
    double width_bound = 0;        // 2 (t+1)^{1/(d+1)} (d n)^{d/(d+1)} - 1
    bool width_ok = true;
};

namespace detail {

inline long long math_mod(Coord value, int m) {
    long long r = static_cast<long long>(value % m);
    return r < 0 ? r + m : r;
}

// Structural checks on the factor decomposition, using only what the host
// graph exposes: every factor vertex mentioned by a coordinate must live in
// a connected set of bags, and factor vertices joined by a host edge must
// share a bag.
inline void check_factor_td(const Graph& g, const TreeDecomposition& h_td, int h_axis) {
    if (h_td.bags.empty()) {
        if (g.vertex_count() > 0)
            throw contract_error("factor decomposition has no bags");
        return;
    }
    if (h_td.width != h_td.recomputed_width())
        throw contract_error("factor decomposition width field is stale");
    if (!is_tree(static_cast<int>(h_td.bags.size()), h_td.tree_edges))
        throw contract_error("factor decomposition tree_edges do not form a tree");

    int max_h = -1;
    for (const auto& bag : h_td.bags)
        for (int v : bag) max_h = std::max(max_h, v);
    std::vector<std::vector<int>> bags_of(max_h + 1);
    for (int x = 0; x < static_cast<int>(h_td.bags.size()); ++x)
        for (int v : h_td.bags[x]) bags_of[v].push_back(x);
    std::vector<std::vector<int>> tree_adj(h_td.bags.size());
    for (auto [a, b] : h_td.tree_edges) {
        tree_adj[a].push_back(b);
        tree_adj[b].push_back(a);
    }

    for (int v = 0; v < g.vertex_count(); ++v) {
        const Coord h = g.coord(v)[h_axis];
        if (h < 0 || h > max_h || bags_of[static_cast<int>(h)].empty())
            throw contract_error("factor vertex " + std::to_string(h) +
                                 " appears in no bag of the factor decomposition");
    }
    for (auto [u, v] : g.edges()) {
        const Coord hu = g.coord(u)[h_axis], hv = g.coord(v)[h_axis];
        if (hu == hv) continue;
        bool covered = false;
        for (int x : bags_of[static_cast<int>(hu)])
            if (std::binary_search(h_td.bags[x].begin(), h_td.bags[x].end(),
                                   static_cast<int>(hv))) {
                covered = true;
                break;
            }
        if (!covered)
            throw contract_error("factor vertices " + std::to_string(hu) + "," +
                                 std::to_string(hv) + " share a host edge but no bag");
    }
    // Connected-bags axiom per factor vertex actually used.
    std::vector<int> mark(h_td.bags.size(), -1);
    for (int v = 0; v < g.vertex_count(); ++v) {
        const int h = static_cast<int>(g.coord(v)[h_axis]);
        if (bags_of[h].empty() || mark[bags_of[h][0]] == -2 - h) continue;
        for (int x : bags_of[h]) mark[x] = h;
        std::vector<int> stack{bags_of[h][0]};
        mark[bags_of[h][0]] = -2 - h;
        std::size_t visited = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : tree_adj[x])
                if (mark[y] == h) {
                    mark[y] = -2 - h;
                    stack.push_back(y);
                    ++visited;
                }
        }
        if (visited != bags_of[h].size())
            throw contract_error("bags of factor vertex " + std::to_string(h) +
                                 " are not connected");
    }
}

} // namespace detail

/// Layered deletion on an n-vertex subgraph of Z^d ⊠ H: with
/// m the least integer satisfying m^{d+1} (t+1) >= d n, delete for each grid
/// axis the residue class (mod m) with the fewest vertices. Components of
/// the remainder sit in narrow windows, and gluing the factor decomposition
/// over each component (all bags widened by X) decomposes the whole graph
/// within the stated width bound. m = 1 means nothing needs deleting.
inline LayeredDeletionReport layered_deletion(const Graph& g, const TreeDecomposition& h_td) {
    if (!g.has_coords()) throw contract_error("layered_deletion requires coordinates");
    const int arity = g.vertex_count() > 0 ? g.coord_arity() : 1;
    if (arity < 1) throw contract_error("layered_deletion: empty coordinate tuples");
    const int d = arity - 1;
    const int n = g.vertex_count();

    LayeredDeletionReport rep;
    rep.d = d;
    if (n == 0) {
        rep.td = TreeDecomposition{{{}}, {}, -1};
        return rep;
    }

    // Coordinates must identify distinct product positions, and host edges
    // may move each grid coordinate by at most one.
    {
        std::map<CoordTuple, int> seen;
        for (int v = 0; v < n; ++v) {
            auto [it, fresh] = seen.emplace(g.coord(v), v);
            if (!fresh)
                throw contract_error("malformed coords: vertices " + std::to_string(it->second) +
                                     " and " + std::to_string(v) + " share a product position");
        }
        for (auto [u, v] : g.edges())
            for (int i = 0; i < d; ++i)
                if (std::abs(g.coord(u)[i] - g.coord(v)[i]) > 1)
                    throw contract_error("malformed coords: edge (" + std::to_string(u) + "," +
                                         std::to_string(v) + ") spans more than one layer");
    }
    detail::check_factor_td(g, h_td, d);
    const int t = h_td.recomputed_width();
    rep.t = t;

    // Smallest m with m^{d+1} (t+1) >= d n, in exact integer arithmetic.
    int m = 1;
    if (d > 0) {
        const long long target = static_cast<long long>(d) * n;
        while (true) {
            long long power = 1;
            bool big = false;
            for (int i = 0; i < d + 1; ++i) {
                power *= m;
                if (power >= target) {
                    big = true;
                    break;
                }
            }
            if (big || power * (t + 1) >= target) break;
            ++m;
        }
    }
    rep.m = m;

    std::vector<char> in_x(n, 0);
    rep.residues.assign(d, 0);
    if (m >= 2) {
        for (int axis = 0; axis < d; ++axis) {
            std::vector<int> count(m, 0);
            for (int v = 0; v < n; ++v) ++count[detail::math_mod(g.coord(v)[axis], m)];
            int alpha = 0;
            for (int a = 1; a < m; ++a)
                if (count[a] < count[alpha]) alpha = a;
            rep.residues[axis] = alpha;
            for (int v = 0; v < n; ++v)
                if (detail::math_mod(g.coord(v)[axis], m) == alpha) in_x[v] = 1;
        }
    }
    for (int v = 0; v < n; ++v)
        if (in_x[v]) rep.deleted.push_back(v);
    rep.deletion_bound_ok =
        static_cast<long long>(m) * static_cast<long long>(rep.deleted.size()) <=
        static_cast<long long>(d) * n;

    auto [rest, old_ids] = delete_vertices(g, rep.deleted);
    for (const auto& comp : connected_components(rest)) {
        std::vector<int> named;
        named.reserve(comp.size());
        for (int x : comp) named.push_back(old_ids[x]);
        rep.components.push_back(std::move(named));
    }

    // Window invariant: per axis, each component's coordinates span at most
    // m-2 consecutive values and avoid the deleted residue.
    if (m >= 2) {
        for (const auto& comp : rep.components) {
            for (int axis = 0; axis < d && rep.windows_ok; ++axis) {
                Coord lo = g.coord(comp[0])[axis], hi = lo;
                for (int v : comp) {
                    const Coord z = g.coord(v)[axis];
                    lo = std::min(lo, z);
                    hi = std::max(hi, z);
                    if (detail::math_mod(z, m) == rep.residues[axis]) rep.windows_ok = false;
                }
                if (hi - lo > m - 2) rep.windows_ok = false;
            }
        }
    }

    // Assemble the decomposition: one copy of the factor tree per component,
    // bags restricted to the component and widened by X; copies chained.
    if (rep.components.empty()) {
        rep.td.bags = {rep.deleted};
        rep.td.width = rep.td.recomputed_width();
    } else {
        const int nodes_per = static_cast<int>(h_td.bags.size());
        for (std::size_t c = 0; c < rep.components.size(); ++c) {
            const int offset = static_cast<int>(c) * nodes_per;
            // Sort component members by factor vertex for bag assembly.
            std::vector<std::vector<int>> by_h;
            for (int v : rep.components[c]) {
                const int h = static_cast<int>(g.coord(v)[d]);
                if (h >= static_cast<int>(by_h.size())) by_h.resize(h + 1);
                by_h[h].push_back(v);
            }
            for (int x = 0; x < nodes_per; ++x) {
                std::vector<int> bag = rep.deleted;
                for (int h : h_td.bags[x])
                    if (h < static_cast<int>(by_h.size()))
                        bag.insert(bag.end(), by_h[h].begin(), by_h[h].end());
                std::sort(bag.begin(), bag.end());
                rep.td.bags.push_back(std::move(bag));
            }
            for (auto [a, b] : h_td.tree_edges)
                rep.td.tree_edges.emplace_back(offset + a, offset + b);
            if (c > 0)
                rep.td.tree_edges.emplace_back(offset - nodes_per, offset);
        }
        rep.td.width = rep.td.recomputed_width();
    }

    rep.width_bound =
        2.0 * std::pow(static_cast<double>(t) + 1, 1.0 / (d + 1)) *
            std::pow(static_cast<double>(d) * n, static_cast<double>(d) / (d + 1)) -
        1.0;
    if (d == 0) rep.width_bound = t; // no grid axes: the factor decomposition itself
    rep.width_ok = rep.td.width <= rep.width_bound;
    return rep;
}

struct CombinedSeparatorOptions {
    double beta = 0.25;
    double growth_c = 2.0;
    int split_axes = 1; // leading axes forming the first factor
    std::uint64_t seed = 0;
    int max_draws = 10000;
    int exact_cap = kDefaultExactCap;
    std::function<TreeDecomposition(const Graph&)> td_provider; // optional override
};

/// Result of the two-stage separator: A is the preimage of a fragmenting set
/// on the small-growth factor, B a balanced separator of what remains.
struct CombinedSeparatorResult {
    Separation separation;
    std::vector<int> a_part, b_part; // sorted
    int factor_used = 0;             // 0 = leading axes, 1 = trailing axes
    int radius_target = 0;           // ceil(n^beta)
    int radius = 0;                  // radius actually used
    double growth_value = 0;         // r^c at the final radius
    int fragment_draws = 0;
    bool used_decomposition = false;
};

namespace detail {

// Largest closed-ball size per radius, saturating beyond the diameter.
struct BallProfile {
    std::vector<std::size_t> max_ball; // index = radius
    std::size_t at(int r) const {
        if (max_ball.empty()) return 0;
        return max_ball[std::min<std::size_t>(r, max_ball.size() - 1)];
    }
};

inline BallProfile ball_profile(const Graph& g) {
    BallProfile bp;
    const int n = g.vertex_count();
    int diam = 0;
    std::vector<std::vector<int>> dists;
    dists.reserve(n);
    for (int v = 0; v < n; ++v) {
        dists.push_back(bfs_distances(g, v));
        for (int x : dists.back()) diam = std::max(diam, x);
    }
    bp.max_ball.assign(diam + 1, 0);
    for (int v = 0; v < n; ++v) {
        std::vector<std::size_t> count(diam + 1, 0);
        for (int x : dists[v])
            if (x != kUnreachable) ++count[x];
        std::size_t acc = 0;
        for (int r = 0; r <= diam; ++r) {
            acc += count[r];
            bp.max_ball[r] = std::max(bp.max_ball[r], acc);
        }
    }
    return bp;
}

inline bool growth_holds(const BallProfile& bp, int r, double c) {
    return static_cast<double>(bp.at(r)) <= std::pow(static_cast<double>(r), c);
}

} // namespace detail

/// Separator for a recorded subgraph of a two-factor product. The leading
/// `split_axes` coordinates name the first factor's vertex, the rest the
/// second's. Whichever factor satisfies the r-ball growth bound at
/// r = ceil(n^beta) is fragmented (weights = fiber sizes); its preimage A
/// comes out of the graph, and if some leftover component is still above the
/// balance threshold, a separator B extracted from a decomposition of the
/// remainder finishes the job. The radius is raised above the target when
/// the sampling distribution needs it; the growth bound is re-checked there.
inline CombinedSeparatorResult combined_separator(const Graph& g,
                                                  const CombinedSeparatorOptions& opt = {}) {
    CombinedSeparatorResult res;
    const int n = g.vertex_count();
    if (n == 0) {
        res.separation.balanced = true;
        return res;
    }
    if (!g.has_coords()) throw contract_error("combined_separator requires coordinates");
    const int arity = g.coord_arity();
    if (opt.split_axes < 1 || opt.split_axes >= arity)
        throw contract_error("split_axes must leave both factors at least one axis");
    if (!(opt.beta > 0))
        throw contract_error("beta must be positive");

    res.radius_target =
        std::max(2, static_cast<int>(std::ceil(std::pow(static_cast<double>(n), opt.beta))));

    std::vector<int> lead(opt.split_axes), trail(arity - opt.split_axes);
    std::iota(lead.begin(), lead.end(), 0);
    std::iota(trail.begin(), trail.end(), opt.split_axes);
    ProjectedGraph factors[2] = {projected_graph(g, lead), projected_graph(g, trail)};
    detail::BallProfile profiles[2] = {detail::ball_profile(factors[0].graph),
                                       detail::ball_profile(factors[1].graph)};

    int chosen = -1;
    for (int f = 0; f < 2 && chosen < 0; ++f)
        if (detail::growth_holds(profiles[f], res.radius_target, opt.growth_c)) chosen = f;
    if (chosen < 0)
        throw contract_error("neither factor satisfies the growth bound at radius " +
                             std::to_string(res.radius_target));
    res.factor_used = chosen;
    const ProjectedGraph& fac = factors[chosen];
    const detail::BallProfile& prof = profiles[chosen];

    // Raise r until the canonical distribution is valid and the growth bound
    // still holds. Ball sizes saturate at the factor order, so this always
    // terminates at desk scale.
    int r = res.radius_target;
    constexpr int kRadiusCap = 1 << 20;
    for (;; ++r) {
        if (r > kRadiusCap)
            throw contract_error("no usable radius below the scan cap");
        if (!detail::growth_holds(prof, r, opt.growth_c)) continue;
        const Decimal rr(r);
        const Decimal q = 1 / boost::multiprecision::sqrt(rr);
        const Decimal p = q / Decimal(std::pow(static_cast<double>(r), opt.growth_c));
        if (p * boost::multiprecision::pow(1 + q, r) <= 1) continue;
        if (build_distribution(r, p, q).valid) break;
    }
    res.radius = r;
    res.growth_value = std::pow(static_cast<double>(r), opt.growth_c);

    std::vector<double> weights(fac.graph.vertex_count(), 0);
    for (int v = 0; v < n; ++v) weights[fac.vertex_class[v]] += 1;
    auto frag = weighted_fragment(fac.graph, weights, r, res.growth_value, opt.seed,
                                  opt.max_draws);
    res.fragment_draws = frag.draws;

    std::vector<char> fragged(fac.graph.vertex_count(), 0);
    for (int f : frag.members) fragged[f] = 1;
    for (int v = 0; v < n; ++v)
        if (fragged[fac.vertex_class[v]]) res.a_part.push_back(v);

    auto [rest, old_ids] = delete_vertices(g, res.a_part);
    std::vector<std::vector<int>> comps;
    for (const auto& c : connected_components(rest)) {
        std::vector<int> named;
        named.reserve(c.size());
        for (int x : c) named.push_back(old_ids[x]);
        comps.push_back(std::move(named));
    }
    const int threshold = balance_threshold(n);
    std::size_t largest = 0;
    for (const auto& c : comps) largest = std::max(largest, c.size());

    std::vector<int> side1, side2;
    if (static_cast<int>(largest) <= threshold) {
        // Fragmentation alone balances; no separator of the remainder needed.
        auto [g1, g2] = detail::two_group_split(std::move(comps));
        side1 = std::move(g1);
        side2 = std::move(g2);
    } else {
        res.used_decomposition = true;
        TreeDecomposition td;
        if (opt.td_provider)
            td = opt.td_provider(rest);
        else if (rest.vertex_count() <= opt.exact_cap)
            td = exact_treewidth(rest, opt.exact_cap).second;
        else
            td = heuristic_treewidth(rest);
        Separation sub = separator_from_td(rest, td);
        for (int x : sub.separator) res.b_part.push_back(old_ids[x]);
        for (int x : sub.side1)
            if (!std::binary_search(sub.separator.begin(), sub.separator.end(), x))
                side1.push_back(old_ids[x]);
        for (int x : sub.side2)
            if (!std::binary_search(sub.separator.begin(), sub.separator.end(), x))
                side2.push_back(old_ids[x]);
        std::sort(res.b_part.begin(), res.b_part.end());
        std::sort(side1.begin(), side1.end());
        std::sort(side2.begin(), side2.end());
    }

    auto& sep = res.separation;
    sep.separator = res.a_part;
    sep.separator.insert(sep.separator.end(), res.b_part.begin(), res.b_part.end());
    std::sort(sep.separator.begin(), sep.separator.end());
    sep.side1 = side1;
    sep.side1.insert(sep.side1.end(), sep.separator.begin(), sep.separator.end());
    sep.side2 = side2;
    sep.side2.insert(sep.side2.end(), sep.separator.begin(), sep.separator.end());
    std::sort(sep.side1.begin(), sep.side1.end());
    std::sort(sep.side2.begin(), sep.side2.end());
    sep.balanced = static_cast<int>(side1.size()) <= threshold &&
                   static_cast<int>(side2.size()) <= threshold;
    return res;
}

} // namespace gps
