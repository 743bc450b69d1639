#pragma once

#include <cmath>
#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

#include "gps/graph.hpp"

namespace gps {

using BigInt = boost::multiprecision::cpp_int;

struct GrowthViolation {
    int vertex;
    int radius;
    std::size_t ball_size;
};

struct GrowthResult {
    bool ok = true;
    std::optional<GrowthViolation> violation; // lexicographically first (v, r)
};

namespace detail {

// |ball| <= r^c, exact integer power for integral c, long double otherwise.
inline bool within_growth(std::size_t ball_size, int r, double c) {
    if (c == std::floor(c) && c <= 64) {
        BigInt bound = 1;
        for (int i = 0; i < static_cast<int>(c); ++i) bound *= r;
        return BigInt(ball_size) <= bound;
    }
    return std::log(static_cast<long double>(ball_size)) <=
           c * std::log(static_cast<long double>(r));
}

} // namespace detail

/// Polynomial-growth check: every r-ball has at most r^c vertices, for every
/// vertex and every r in [2, diameter]. Reports the first violating (v, r)
/// in lexicographic order.
inline GrowthResult growth_check(const Graph& g, double c) {
    if (c <= 0) throw contract_error("growth exponent must be positive");
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto dist = bfs_distances(g, v);
        int ecc = 0;
        for (int d : dist) ecc = std::max(ecc, d);
        // Ball sizes by radius via one pass over the distance table.
        std::vector<std::size_t> ball_at(ecc + 1, 0);
        for (int d : dist)
            if (d != kUnreachable) ++ball_at[d];
        for (int r = 1; r <= ecc; ++r) ball_at[r] += ball_at[r - 1];
        for (int r = 2; r <= ecc; ++r) {
            if (!detail::within_growth(ball_at[r], r, c))
                return {false, GrowthViolation{v, r, ball_at[r]}};
        }
    }
    return {};
}

/// Size bound (1+Δ)^k (2r+1)^{(k+1)(d+1)} for connected subgraphs of
/// H ⊠ Z^d with pw(H) <= k, radius <= r and max degree <= Δ. The value
/// overflows 64 bits quickly, hence exact big-integer arithmetic.
inline BigInt ball_size_bound(int k, int delta, int r, int d) {
    if (k < 0 || delta < 0 || r < 0 || d < 0)
        throw contract_error("ball_size_bound arguments must be nonnegative");
    BigInt out = 1;
    for (int i = 0; i < k; ++i) out *= (1 + delta);
    BigInt base = 2 * static_cast<long long>(r) + 1;
    const long long exponent = static_cast<long long>(k + 1) * (d + 1);
    for (long long i = 0; i < exponent; ++i) out *= base;
    return out;
}

} // namespace gps
