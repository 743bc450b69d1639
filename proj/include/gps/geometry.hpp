#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <vector>

#include "gps/graph.hpp"

namespace gps {

/// Finite point set in R^d. Duplicates are allowed; coincident points end up
/// mutually adjacent in any unit-disc graph built from the set.
struct PointSet {
    std::vector<std::vector<double>> points;
    int dim = 0;

    static PointSet from_rows(std::vector<std::vector<double>> rows) {
        PointSet ps;
        if (!rows.empty()) ps.dim = static_cast<int>(rows[0].size());
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != ps.dim)
                throw contract_error("points have mixed dimension");
            for (double x : row)
                if (!std::isfinite(x)) throw contract_error("point coordinate is not finite");
        }
        ps.points = std::move(rows);
        return ps;
    }

    int size() const { return static_cast<int>(points.size()); }
};

namespace detail {

inline double squared_distance(const std::vector<double>& a, const std::vector<double>& b) {
    double acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += (a[i] - b[i]) * (a[i] - b[i]);
    return acc;
}

// Smallest integer c with c*c >= d.
inline int ceil_sqrt(int d) {
    int c = static_cast<int>(std::sqrt(static_cast<double>(d)));
    while (c * c < d) ++c;
    while (c > 1 && (c - 1) * (c - 1) >= d) --c;
    return c;
}

} // namespace detail

/// Unit-disc graph: points adjacent iff Euclidean distance <= 1, decided on
/// squared distances so no square roots enter the comparison.
inline Graph unit_disc_graph(const PointSet& ps) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < ps.size(); ++i)
        for (int j = i + 1; j < ps.size(); ++j)
            if (detail::squared_distance(ps.points[i], ps.points[j]) <= 1.0)
                edges.emplace_back(i, j);
    return Graph::from_edges(ps.size(), edges);
}

/// Vertex images in Z^d ⊠ K_t: the grid part is the unit cell, the clique
/// part a label injective within each cell.
struct ProductEmbedding {
    int dim = 0;     // d
    int t = 0;       // clique size k * ceil(sqrt(d))^d
    std::vector<std::vector<long long>> cells; // per-vertex (p_1..p_d)
    std::vector<int> labels;                   // in [1, t]
};

/// Embeds a unit-disc graph with no (k+1)-clique into Z^d ⊠ K_t,
/// t = k * ceil(sqrt(d))^d. Cells are the half-open unit cubes
/// p_i <= x_i < p_i + 1; labels are assigned in ascending point order within
/// each cell. The clique precondition is enforced per sub-cube: each unit
/// cell splits into ceil(sqrt(d))^d cubes of diameter at most 1, whose
/// occupants form cliques, so occupancy above k certifies a (k+1)-clique.
inline ProductEmbedding embed_unit_disc(const PointSet& ps, int k) {
    if (k < 1) throw contract_error("embed_unit_disc requires k >= 1");
    ProductEmbedding emb;
    emb.dim = ps.dim;
    if (ps.size() == 0) {
        emb.t = k;
        return emb;
    }
    const int d = ps.dim;
    const int c = detail::ceil_sqrt(d);
    long long t = k;
    for (int i = 0; i < d; ++i) {
        t *= c;
        if (t > std::numeric_limits<int>::max())
            throw capacity_error("clique size overflows in embed_unit_disc");
    }
    emb.t = static_cast<int>(t);

    std::map<std::vector<long long>, std::vector<int>> cell_points;
    std::map<std::vector<long long>, std::vector<int>> subcube_points;
    emb.cells.resize(ps.size());
    for (int v = 0; v < ps.size(); ++v) {
        std::vector<long long> cell(d), subcube(2 * d);
        for (int i = 0; i < d; ++i) {
            const double x = ps.points[v][i];
            const long long p = static_cast<long long>(std::floor(x));
            cell[i] = p;
            const double frac = x - static_cast<double>(p); // in [0,1)
            long long s = static_cast<long long>(std::floor(frac * c));
            s = std::min<long long>(s, c - 1);
            subcube[i] = p;
            subcube[d + i] = s;
        }
        emb.cells[v] = cell;
        cell_points[cell].push_back(v);
        subcube_points[subcube].push_back(v);
    }

    for (const auto& [key, members] : subcube_points) {
        if (static_cast<int>(members.size()) > k) {
            std::string cell_str, who;
            for (int i = 0; i < d; ++i) cell_str += (i ? "," : "") + std::to_string(key[i]);
            for (std::size_t i = 0; i <= static_cast<std::size_t>(k); ++i)
                who += (i ? "," : "") + std::to_string(members[i]);
            throw contract_error("cell (" + cell_str + ") holds a sub-cube with points {" + who +
                                 "} forming a " + std::to_string(k + 1) + "-clique");
        }
    }

    emb.labels.assign(ps.size(), 0);
    for (const auto& [cell, members] : cell_points) {
        if (static_cast<int>(members.size()) > emb.t)
            throw contract_error("cell holds more than t points"); // sub-cube check makes this unreachable
        int next = 1; // members come in ascending point order
        for (int v : members) emb.labels[v] = next++;
    }
    return emb;
}

/// Verifies that an embedding is injective and adjacency-preserving for the
/// given unit-disc graph.
inline ValidationResult validate_embedding(const PointSet& ps, const Graph& udg,
                                           const ProductEmbedding& emb) {
    if (udg.vertex_count() != ps.size() || static_cast<int>(emb.cells.size()) != ps.size() ||
        static_cast<int>(emb.labels.size()) != ps.size())
        return {false, "size mismatch between points, graph and embedding"};
    std::map<std::pair<std::vector<long long>, int>, int> seen;
    for (int v = 0; v < ps.size(); ++v) {
        if (emb.labels[v] < 1 || emb.labels[v] > emb.t)
            return {false, "label of vertex " + std::to_string(v) + " out of [1,t]"};
        auto [it, fresh] = seen.emplace(std::make_pair(emb.cells[v], emb.labels[v]), v);
        if (!fresh)
            return {false, "vertices " + std::to_string(it->second) + " and " +
                               std::to_string(v) + " share an image"};
    }
    for (auto [u, v] : udg.edges()) {
        bool same_cell = true;
        for (int i = 0; i < emb.dim; ++i) {
            const long long delta = emb.cells[u][i] - emb.cells[v][i];
            if (delta != 0) same_cell = false;
            if (delta < -1 || delta > 1)
                return {false, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                   ") moves a grid coordinate by more than one"};
        }
        if (same_cell && emb.labels[u] == emb.labels[v])
            return {false, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                               ") maps to a single product vertex"};
    }
    return {};
}

/// Symmetric closure of the directed k-nearest-neighbour relation; distance
/// ties break toward the lower point index.
inline Graph knn_graph(const PointSet& ps, int k) {
    if (k < 1) throw contract_error("knn_graph requires k >= 1");
    const int n = ps.size();
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) {
        std::vector<int> others;
        others.reserve(n - 1);
        for (int u = 0; u < n; ++u)
            if (u != v) others.push_back(u);
        const int take = std::min<int>(k, static_cast<int>(others.size()));
        std::partial_sort(others.begin(), others.begin() + take, others.end(),
                          [&](int a, int b) {
                              const double da = detail::squared_distance(ps.points[v], ps.points[a]);
                              const double db = detail::squared_distance(ps.points[v], ps.points[b]);
                              if (da != db) return da < db;
                              return a < b;
                          });
        for (int i = 0; i < take; ++i) edges.emplace_back(std::min(v, others[i]), std::max(v, others[i]));
    }
    return Graph::from_edges(n, edges);
}

} // namespace gps
