#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "gps/graph.hpp"

namespace gps {

/// Distribution arithmetic runs on 50-digit decimals: p can be far below
/// double precision and the sum-to-one test uses a 1e-30 tolerance.
using Decimal = boost::multiprecision::cpp_dec_float_50;

inline const Decimal& distribution_tolerance() {
    static const Decimal tol("1e-30");
    return tol;
}

/// Radius distribution f(r)=p, f(s)=min(q*T, 1-T) with T the tail sum above
/// s. Invalid tables (total below one) are returned flagged rather than
/// thrown, so callers can probe the validity frontier.
struct LocalisingDistribution {
    int r = 0;
    Decimal p, q;
    std::vector<Decimal> f; // f[0..r]
    Decimal total;
    bool valid = false;
};

inline LocalisingDistribution build_distribution(int r, const Decimal& p, const Decimal& q) {
    if (r < 1) throw contract_error("build_distribution requires r >= 1");
    if (p <= 0 || p >= 1 || q <= 0 || q >= 1)
        throw contract_error("build_distribution requires p,q in (0,1)");
    LocalisingDistribution d;
    d.r = r;
    d.p = p;
    d.q = q;
    d.f.assign(r + 1, Decimal(0));
    d.f[r] = p;
    Decimal tail = p;
    for (int s = r - 1; s >= 0; --s) {
        const Decimal grow = q * tail;
        const Decimal room = 1 - tail;
        d.f[s] = std::min(grow, room);
        tail += d.f[s];
    }
    d.total = tail;
    d.valid = boost::multiprecision::abs(d.total - 1) <= distribution_tolerance();
    return d;
}

inline LocalisingDistribution build_distribution(int r, double p, double q) {
    return build_distribution(r, Decimal(p), Decimal(q));
}

/// Smallest radius at which the canonical parameters p = r^(-c-1/2),
/// q = r^(-1/2) give p(1+q)^r > 1 and a distribution summing to one.
/// Found by direct scan from r = 2.
inline int min_valid_radius(double c, int r_cap = 1000000) {
    if (c < 1) throw contract_error("min_valid_radius requires c >= 1");
    for (int r = 2; r <= r_cap; ++r) {
        const Decimal rr(r);
        const Decimal p = boost::multiprecision::pow(rr, Decimal(-c - 0.5));
        const Decimal q = boost::multiprecision::pow(rr, Decimal(-0.5));
        if (p * boost::multiprecision::pow(1 + q, r) <= 1) continue;
        if (build_distribution(r, p, q).valid) return r;
    }
    throw contract_error("min_valid_radius: no valid radius up to " + std::to_string(r_cap));
}

struct ComponentCertificate {
    std::vector<int> component; // sorted
    int center;                 // all component vertices within distance < r
};

struct LocalisingSet {
    std::vector<int> members; // sorted
    std::vector<ComponentCertificate> certificate;
};

namespace detail {

// 53-bit uniform in [0,1); mt19937_64 keeps the sequence identical across
// platforms, which the byte-identical-output contract relies on.
inline double uniform01(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

inline int draw_radius(const LocalisingDistribution& dist, std::mt19937_64& gen) {
    const Decimal u(uniform01(gen));
    Decimal acc(0);
    for (int s = 0; s <= dist.r; ++s) {
        acc += dist.f[s];
        if (u < acc) return s;
    }
    return dist.r;
}

} // namespace detail

/// Draws the randomized r-localising set: each vertex v_i (ascending id)
/// receives a radius r_i ~ f; a vertex x joins X when its distance to the
/// first v_i covering it is exactly r_i. The returned certificate names, for
/// every component of G - X, a center within distance r-1 of the whole
/// component.
inline LocalisingSet sample_localising_with(const AllPairsDistances& dist_table,
                                            const Graph& g,
                                            const LocalisingDistribution& dist,
                                            std::uint64_t seed) {
    if (!dist.valid) throw contract_error("sample_localising requires a valid distribution");
    const int n = g.vertex_count();
    std::mt19937_64 gen(seed);
    std::vector<int> radius(n);
    for (int i = 0; i < n; ++i) radius[i] = detail::draw_radius(dist, gen);

    std::vector<int> first_cover(n, -1);
    for (int x = 0; x < n; ++x) {
        for (int i = 0; i < n; ++i) {
            const int d = dist_table(i, x);
            if (d != kUnreachable && d <= radius[i]) {
                first_cover[x] = i;
                break;
            }
        }
    }

    LocalisingSet out;
    std::vector<char> in_x(n, 0);
    for (int x = 0; x < n; ++x) {
        const int i = first_cover[x]; // always exists: d(x,x)=0 <= r_x
        if (dist_table(i, x) == radius[i]) {
            in_x[x] = 1;
            out.members.push_back(x);
        }
    }

    // Components of G - X and their certified centers.
    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
        if (in_x[s] || seen[s]) continue;
        std::vector<int> comp;
        std::vector<int> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int w : g.neighbors(u))
                if (!seen[w] && !in_x[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        int lead = comp[0];
        for (int u : comp)
            if (first_cover[u] < first_cover[lead]) lead = u;
        out.certificate.push_back({std::move(comp), first_cover[lead]});
    }
    return out;
}

inline LocalisingSet sample_localising(const Graph& g, const LocalisingDistribution& dist,
                                       std::uint64_t seed) {
    return sample_localising_with(AllPairsDistances(g), g, dist, seed);
}

/// Exact structural check: every component of G - X has some vertex of G
/// within distance r-1 of all its members. Exhaustive over candidate
/// centers; no randomness, no tolerance.
inline bool is_localising(const Graph& g, const std::vector<int>& x, int r) {
    const int n = g.vertex_count();
    std::vector<char> in_x(n, 0);
    for (int v : x) {
        g.check_vertex(v);
        in_x[v] = 1;
    }
    if (r <= 0) // no vertex can sit within distance < 0 of a center
        return static_cast<int>(x.size()) == n;
    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
        if (in_x[s] || seen[s]) continue;
        std::vector<int> comp;
        std::vector<int> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int w : g.neighbors(u))
                if (!seen[w] && !in_x[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        bool centred = false;
        for (int v = 0; v < n && !centred; ++v) {
            auto dv = bfs_distances(g, v, r - 1);
            centred = true;
            for (int u : comp)
                if (dv[u] == kUnreachable) {
                    centred = false;
                    break;
                }
        }
        if (!centred) return false;
    }
    return true;
}

/// Verifies a returned certificate with plain BFS.
inline bool certificate_ok(const Graph& g, const LocalisingSet& ls, int r) {
    if (r <= 0) return ls.certificate.empty();
    for (const auto& cc : ls.certificate) {
        auto dv = bfs_distances(g, cc.center, r - 1);
        for (int u : cc.component)
            if (dv[u] == kUnreachable) return false;
    }
    return true;
}

struct FragmentResult {
    std::vector<int> members;
    int draws = 0;                     // accepted on this draw (1-based)
    double weight = 0;                 // w(X)
    double weight_bound = 0;           // 2 r^(-1/2) w(V)
    std::size_t largest_component = 0; // in G - X
};

/// Low-weight fragmentation: resamples localising sets with derived seeds
/// until w(X) <= 2 r^(-1/2) w(V) and every component of G - X has at most
/// growth_value vertices. Preconditions: every closed r-ball has at most
/// growth_value vertices, and r is large enough that the canonical
/// distribution with p = r^(-1/2)/growth_value, q = r^(-1/2) is valid.
inline FragmentResult weighted_fragment(const Graph& g, const std::vector<double>& w, int r,
                                        double growth_value, std::uint64_t seed = 0,
                                        int max_draws = 10000) {
    const int n = g.vertex_count();
    if (static_cast<int>(w.size()) != n) throw contract_error("weight vector size mismatch");
    for (double wv : w)
        if (!(wv >= 0)) throw contract_error("weights must be nonnegative");
    if (r < 2) throw contract_error("weighted_fragment requires r >= 2");
    if (growth_value < 1) throw contract_error("growth value below 1 cannot bound any ball");

    AllPairsDistances apd(g);
    for (int v = 0; v < n; ++v) {
        std::size_t ball_size = 0;
        for (int u = 0; u < n; ++u)
            if (apd(v, u) != kUnreachable && apd(v, u) <= r) ++ball_size;
        if (static_cast<double>(ball_size) > growth_value)
            throw contract_error("r-ball at vertex " + std::to_string(v) + " has " +
                                 std::to_string(ball_size) + " vertices, above growth bound");
    }

    const Decimal rr(r);
    const Decimal q = 1 / boost::multiprecision::sqrt(rr);
    const Decimal p = q / Decimal(growth_value);
    auto dist = build_distribution(r, p, q);
    if (!dist.valid)
        throw contract_error("distribution invalid at r=" + std::to_string(r) +
                             " for this growth value; increase r");

    double total_weight = 0;
    for (double wv : w) total_weight += wv;
    const double bound = 2.0 / std::sqrt(static_cast<double>(r)) * total_weight;

    for (int t = 0; t < max_draws; ++t) {
        const std::uint64_t draw_seed = seed + 0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(t);
        auto ls = sample_localising_with(apd, g, dist, draw_seed);
        double weight = 0;
        for (int v : ls.members) weight += w[v];
        std::size_t largest = 0;
        for (const auto& cc : ls.certificate) largest = std::max(largest, cc.component.size());
        if (weight <= bound && static_cast<double>(largest) <= growth_value)
            return {std::move(ls.members), t + 1, weight, bound, largest};
    }
    throw sampling_error("weighted_fragment: no draw met the weight bound within " +
                         std::to_string(max_draws) + " attempts");
}

} // namespace gps
