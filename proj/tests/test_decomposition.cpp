#include <catch2/catch_amalgamated.hpp>

#include "gps/decomposition.hpp"
#include "gps/graph.hpp"
#include "gps/products.hpp"
#include "gps/testgen.hpp"

#include "oracles.hpp"

using namespace gps;

TEST_CASE("validate_td basics") {
    auto p3 = path_graph(3);
    TreeDecomposition td{{{0, 1}, {1, 2}}, {{0, 1}}, 1};
    auto res = validate_td(p3, td);
    CHECK(res.ok);

    auto k3 = complete_graph(3);
    auto bad = validate_td(k3, td);
    REQUIRE_FALSE(bad.ok);
    CHECK(bad.violation.find("edge (0,2)") != std::string::npos);

    TreeDecomposition stale{{{0, 1}, {1, 2}}, {{0, 1}}, 3};
    CHECK_FALSE(validate_td(p3, stale).ok);

    TreeDecomposition broken{{{0}, {1}, {2}}, {{0, 1}}, 0}; // not a tree
    CHECK_FALSE(validate_td(p3, broken).ok);

    TreeDecomposition disconnected{{{0, 1}, {2}, {1, 2}}, {{0, 1}, {1, 2}}, 1};
    auto dres = validate_td(p3, disconnected);
    REQUIRE_FALSE(dres.ok);
    CHECK(dres.violation.find("not connected") != std::string::npos);
}

TEST_CASE("exact treewidth on known families") {
    CHECK(exact_treewidth(path_graph(5)).first == 1);
    CHECK(exact_treewidth(complete_graph(5)).first == 4);
    CHECK(exact_treewidth(grid_graph(3, 3)).first == 3);
    CHECK(exact_treewidth(cycle_graph(6)).first == 2);
    CHECK(exact_treewidth(Graph(0)).first == -1);
    CHECK(exact_treewidth(Graph(1)).first == 0);
}

TEST_CASE("exact treewidth witness validates and matches the oracle") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const int n = 4 + static_cast<int>(seed % 4); // 4..7
        auto g = random_graph(n, 0.45, seed * 131 + 7);
        auto [w, td] = exact_treewidth(g);
        CHECK(w == oracle::treewidth_all_orderings(g));
        CHECK(td.width == w);
        CHECK(validate_td(g, td).ok);
    }
}

TEST_CASE("exact treewidth cap error suggests the heuristic") {
    try {
        exact_treewidth(random_graph(20, 0.3, 1));
        FAIL("expected size_cap_error");
    } catch (const size_cap_error& e) {
        CHECK(std::string(e.what()).find("heuristic") != std::string::npos);
    }
}

TEST_CASE("min-fill heuristic") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto tree = random_tree(6 + static_cast<int>(seed % 7), seed);
        auto td = heuristic_treewidth(tree);
        CHECK(td.width == 1); // min-fill is exact on chordal graphs
        CHECK(validate_td(tree, td).ok);
    }
    CHECK(heuristic_treewidth(complete_graph(6)).width == 5);
    CHECK(heuristic_treewidth(cycle_graph(6)).width == 2);
}

TEST_CASE("heuristic width dominates exact width") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const int n = 3 + static_cast<int>(seed % 8); // 3..10
        auto g = random_graph(n, 0.4, seed * 997 + 3);
        auto [w, td] = exact_treewidth(g);
        auto h = heuristic_treewidth(g);
        CHECK(h.width >= w);
        CHECK(validate_td(g, h).ok);
    }
}

TEST_CASE("treewidth is monotone under subgraphs") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        std::mt19937_64 gen(seed);
        const int n = 5 + static_cast<int>(gen() % 5); // 5..9
        auto g = random_graph(n, 0.5, gen());
        // random subgraph: keep a vertex subset, then drop some edges
        std::vector<int> keep;
        for (int v = 0; v < n; ++v)
            if (gen() % 4) keep.push_back(v);
        if (keep.empty()) keep.push_back(0);
        auto [induced, ids] = induced_subgraph(g, keep);
        std::vector<std::pair<int, int>> kept_edges;
        for (auto e : induced.edges())
            if (gen() % 5) kept_edges.push_back(e);
        auto h = Graph::from_edges(induced.vertex_count(), kept_edges);
        CHECK(exact_treewidth(h).first <= exact_treewidth(g).first);
    }
}

TEST_CASE("separator from a path decomposition of P9") {
    auto p9 = path_graph(9);
    TreeDecomposition td;
    for (int i = 0; i + 1 < 9; ++i) {
        td.bags.push_back({i, i + 1});
        if (i) td.tree_edges.emplace_back(i - 1, i);
    }
    td.width = 1;
    auto sep = separator_from_td(p9, td);
    CHECK(validate_separation(p9, sep).ok);
    CHECK(sep.order() <= 2);
    CHECK(sep.side1.size() - sep.order() <= 6);
    CHECK(sep.side2.size() - sep.order() <= 6);
    CHECK(sep.balanced);
}

TEST_CASE("separator of a complete graph is the single bag") {
    auto k4 = complete_graph(4);
    auto [w, td] = exact_treewidth(k4);
    auto sep = separator_from_td(k4, td);
    CHECK(sep.order() == 4);
    CHECK(sep.side1 == sep.separator);
    CHECK(sep.side2 == sep.separator);
    CHECK(sep.balanced);
}

TEST_CASE("separator on the 4x4 grid") {
    auto grid = grid_graph(4, 4);
    auto [w, td] = exact_treewidth(grid);
    auto sep = separator_from_td(grid, td);
    CHECK(validate_separation(grid, sep).ok);
    CHECK(sep.order() <= w + 1);
    CHECK(static_cast<int>(sep.side1.size()) - sep.order() <= balance_threshold(16));
    CHECK(static_cast<int>(sep.side2.size()) - sep.order() <= balance_threshold(16));
    CHECK(sep.balanced);
}

TEST_CASE("separator order and balance over random decompositions") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const int n = 6 + static_cast<int>(seed % 6);
        auto g = random_connected_graph(n, 0.2, seed * 17 + 1);
        for (auto td : {exact_treewidth(g).second, heuristic_treewidth(g)}) {
            auto sep = separator_from_td(g, td);
            CHECK(validate_separation(g, sep).ok);
            CHECK(sep.order() <= td.width + 1);
            CHECK(static_cast<int>(sep.side1.size()) - sep.order() <= balance_threshold(n));
            CHECK(static_cast<int>(sep.side2.size()) - sep.order() <= balance_threshold(n));
            CHECK(sep.balanced);
        }
    }
}

TEST_CASE("separator rejects invalid decompositions") {
    TreeDecomposition bogus{{{0}}, {}, 0};
    CHECK_THROWS_AS(separator_from_td(path_graph(3), bogus), contract_error);
}

TEST_CASE("product decomposition of path-products") {
    // width-0 factor, one path of 3: a width-2 decomposition of P3
    TreeDecomposition k1_td{{{0}}, {}, 0};
    auto td3 = product_td(k1_td, {3});
    CHECK(td3.width == 2);
    auto p3 = strong_product(path_graph(3), complete_graph(1));
    CHECK(validate_td(p3, td3).ok);

    // K2 x P2 = K4 with width (1+1)*2-1 = 3
    TreeDecomposition k2_td{{{0, 1}}, {}, 1};
    auto td4 = product_td(k2_td, {2});
    CHECK(td4.width == 3);
    auto k4 = strong_product(path_graph(2), complete_graph(2));
    CHECK(validate_td(k4, td4).ok);

    // P3 factor of width 1, grid sizes (2,2): width 2*4-1 = 7
    TreeDecomposition p3_td{{{0, 1}, {1, 2}}, {{0, 1}}, 1};
    auto td7 = product_td(p3_td, {2, 2});
    CHECK(td7.width == 7);
    auto host = strong_product(strong_product(path_graph(2), path_graph(2)), path_graph(3));
    CHECK(validate_td(host, td7).ok);
}

TEST_CASE("path decompositions validate through the tree view") {
    PathDecomposition pd{{{0, 1}, {1, 2}, {2, 3}}, 1};
    CHECK(validate_pd(path_graph(4), pd).ok);
    CHECK_FALSE(validate_pd(cycle_graph(4), pd).ok);
}
