#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <sstream>

#include "gps/graph.hpp"
#include "gps/growth.hpp"
#include "gps/io.hpp"
#include "gps/products.hpp"
#include "gps/testgen.hpp"

#include "oracles.hpp"

using namespace gps;

TEST_CASE("from_edges normalizes and validates") {
    auto g = Graph::from_edges(3, {{0, 1}, {1, 0}, {1, 2}});
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(0, 1));
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 0}}), contract_error);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 5}}), contract_error);
}

TEST_CASE("strong product small cases") {
    auto k2 = complete_graph(2);
    auto p = strong_product(k2, k2);
    CHECK(p.vertex_count() == 4);
    CHECK(p.edge_count() == 6); // K4

    auto p3 = path_graph(3);
    auto pp = strong_product(p3, p3);
    CHECK(pp.vertex_count() == 9);
    CHECK(pp.edge_count() == oracle::strong_product_edges(p3, p3));
    CHECK(pp.edge_count() == 20);

    auto g = random_graph(6, 0.5, 7);
    auto idp = strong_product(complete_graph(1), g);
    CHECK(idp.vertex_count() == g.vertex_count());
    CHECK(idp.edges() == g.edges()); // ids (0,x) -> x
}

TEST_CASE("cartesian product small cases") {
    auto k2 = complete_graph(2);
    auto c = cartesian_product(k2, k2);
    CHECK(c.vertex_count() == 4);
    CHECK(c.edge_count() == 4); // C4

    auto p3 = path_graph(3);
    CHECK(cartesian_product(p3, p3).edge_count() == 12);
    CHECK(cartesian_product(p3, p3).edge_count() == oracle::cartesian_product_edges(p3, p3));

    auto g = random_graph(5, 0.4, 3);
    CHECK(cartesian_product(complete_graph(1), g).edges() == g.edges());
}

TEST_CASE("product count identities on random factors") {
    for (int trial = 0; trial < 25; ++trial) {
        std::mt19937_64 gen(trial);
        const int na = 1 + static_cast<int>(gen() % 12), nb = 1 + static_cast<int>(gen() % 12);
        auto a = random_graph(na, 0.4, gen());
        auto b = random_graph(nb, 0.4, gen());
        auto sp = strong_product(a, b);
        auto cp = cartesian_product(a, b);
        const std::size_t ea = a.edge_count(), eb = b.edge_count();
        CHECK(sp.vertex_count() == na * nb);
        CHECK(sp.edge_count() == na * eb + nb * ea + 2 * ea * eb);
        CHECK(cp.edge_count() == na * eb + nb * ea);
        // cartesian edges are a subset of strong edges under the shared encoding
        auto se = sp.edges();
        std::set<std::pair<int, int>> strong_set(se.begin(), se.end());
        for (auto e : cp.edges()) CHECK(strong_set.count(e));
    }
}

TEST_CASE("strong product commutes via the coordinate swap") {
    auto a = random_graph(5, 0.5, 11);
    auto b = random_graph(4, 0.5, 12);
    auto ab = strong_product(a, b);
    auto ba = strong_product(b, a);
    REQUIRE(ab.vertex_count() == ba.vertex_count());
    auto swap_id = [&](int id) {
        const int v = id / b.vertex_count(), x = id % b.vertex_count();
        return x * a.vertex_count() + v;
    };
    std::set<std::pair<int, int>> ba_edges;
    for (auto e : ba.edges()) ba_edges.insert(e);
    std::size_t mapped = 0;
    for (auto [u, v] : ab.edges()) {
        int su = swap_id(u), sv = swap_id(v);
        if (su > sv) std::swap(su, sv);
        CHECK(ba_edges.count({su, sv}));
        ++mapped;
    }
    CHECK(mapped == ba_edges.size());
}

TEST_CASE("projection values and counts") {
    Graph g = path_graph(3);
    g.set_coords({{0, 0}, {1, 0}, {1, 1}});
    auto proj = project(g, 0);
    REQUIRE(proj.value_counts.size() == 2);
    CHECK(proj.value_counts[0] == std::pair<Coord, int>{0, 1});
    CHECK(proj.value_counts[1] == std::pair<Coord, int>{1, 2});
    CHECK_THROWS_AS(project(g, 2), contract_error);
    CHECK_THROWS_AS(project(path_graph(3), 0), contract_error);

    auto pp = strong_product(path_graph(3), path_graph(3));
    auto proj1 = project(pp, 1);
    REQUIRE(proj1.value_counts.size() == 3);
    for (auto [value, count] : proj1.value_counts) CHECK(count == 3);
}

TEST_CASE("layering by axis") {
    auto pp = strong_product(path_graph(3), path_graph(3));
    auto lay = layering_by_axis(pp, 0);
    REQUIRE(lay.layers.size() == 3);
    for (const auto& layer : lay.layers) CHECK(layer.size() == 3);
    CHECK(lay.edge_span_ok(pp));

    Graph single(1);
    single.set_coords({{5}});
    auto one = layering_by_axis(single, 0);
    CHECK(one.layers.size() == 1);

    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        auto g = random_grid_product_subgraph(2, 1, 10, seed);
        auto l0 = layering_by_axis(g, 0);
        auto l1 = layering_by_axis(g, 1);
        CHECK(l0.edge_span_ok(g));
        CHECK(l1.edge_span_ok(g));
    }
}

TEST_CASE("balls by BFS") {
    auto grid = crossed_grid(7, 7);
    const int center = product_id(3, 3, 7);
    CHECK(ball(grid, center, 1).size() == 9);
    CHECK(ball(grid, center, 0) == std::vector<int>{center});
    CHECK(ball(path_graph(5), 0, 2).size() == 3);
}

TEST_CASE("growth check") {
    CHECK(growth_check(complete_graph(1), 2).ok);

    auto star9 = star_graph(9);
    auto res = growth_check(star9, 2);
    REQUIRE_FALSE(res.ok);
    CHECK(res.violation->vertex == 0); // center comes first in id order
    CHECK(res.violation->radius == 2);
    CHECK(res.violation->ball_size == 10);

    // crossed 5x5: corner 2-balls already hold 9 > 4 vertices, so c=2 fails;
    // c=5 dominates every ball size up to the diameter.
    auto g55 = crossed_grid(5, 5);
    auto r2 = growth_check(g55, 2);
    REQUIRE_FALSE(r2.ok);
    CHECK(r2.violation->vertex == 0);
    CHECK(r2.violation->radius == 2);
    CHECK(growth_check(g55, 5).ok);
}

TEST_CASE("ball size bound values") {
    CHECK(ball_size_bound(0, 3, 1, 2) == 27);
    CHECK(ball_size_bound(1, 2, 1, 0) == 27);
    CHECK(ball_size_bound(0, 7, 0, 4) == 1);
    // overflows 64-bit arithmetic comfortably
    BigInt big = ball_size_bound(3, 5, 10, 3);
    CHECK(big > BigInt(std::numeric_limits<std::uint64_t>::max()));
}

TEST_CASE("graph power") {
    auto p4 = path_graph(4);
    auto sq = graph_power(p4, 2);
    std::vector<std::pair<int, int>> want{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}};
    CHECK(sq.edges() == want);
    CHECK(graph_power(p4, 1).edges() == p4.edges());
    CHECK(graph_power(p4, 3).edge_count() == 6); // K4

    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        auto g = random_graph(8, 0.3, seed);
        for (int k = 1; k < 4; ++k) {
            auto a = graph_power(g, k).edges();
            auto b = graph_power(g, k + 1).edges();
            std::set<std::pair<int, int>> bigger(b.begin(), b.end());
            for (auto e : a) CHECK(bigger.count(e));
        }
    }
}

TEST_CASE("connected subgraphs of products respect the ball size bound") {
    // Balls are connected subgraphs of radius <= r; their induced degree and
    // the factor's exact pathwidth feed the bound.
    std::vector<Graph> factors{complete_graph(1), path_graph(2), path_graph(4),
                               complete_graph(3), star_graph(3), cycle_graph(4)};
    for (const auto& h : factors) {
        const int pw = oracle::pathwidth_all_orderings(h);
        for (int d = 0; d <= 2; ++d) {
            Graph prod = h;
            for (int i = 0; i < d; ++i) prod = strong_product(prod, path_graph(5));
            for (int center = 0; center < prod.vertex_count(); center += 7) {
                for (int r = 0; r <= 2; ++r) {
                    auto members = ball(prod, center, r);
                    auto [sub, ids] = induced_subgraph(prod, members);
                    const int delta = sub.max_degree();
                    CHECK(BigInt(members.size()) <= ball_size_bound(pw, delta, r, d));
                }
            }
        }
    }
}

TEST_CASE("text format round trip") {
    auto g = random_graph(9, 0.4, 21);
    const std::string text = graph_to_text(g);
    std::istringstream in(text);
    auto back = graph_from_text(in);
    CHECK(back == g);
    std::istringstream again(text);
    CHECK(graph_to_text(graph_from_text(again)) == text); // bit-exact canonical form

    std::istringstream bad("3");
    CHECK_THROWS_AS(graph_from_text(bad), io_error);
}

TEST_CASE("json format round trip keeps coordinates") {
    auto g = random_grid_product_subgraph(2, 2, 12, 5);
    auto j = graph_to_json(g);
    auto back = graph_from_json(j);
    CHECK(back == g);
    CHECK(graph_to_json(back).dump() == j.dump());

    // negative coordinates survive
    Graph shifted(2);
    shifted = Graph::from_edges(2, {{0, 1}});
    shifted.set_coords({{-3, 4}, {-2, 4}});
    CHECK(graph_from_json(graph_to_json(shifted)) == shifted);
}

TEST_CASE("product capacity guard") {
    Graph big(60000);
    CHECK_THROWS_AS(strong_product(big, big), capacity_error);
}
