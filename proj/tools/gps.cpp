// gps — command-line front end for the graph product structure toolkit.
//
// Subcommands: product, td, separate, localise, colr, shortcut, geo, witness.
// All outputs are JSON (graphs optionally in the plain text format); identical
// inputs, flags and seeds produce byte-identical output. JSON reports carry a
// "bounds" block restating every inequality the run checked, with both sides
// evaluated, so downstream tooling parses one place.
//
// Exit status: 0 success, 1 contract violation, 2 I/O or parse error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gps/colouring.hpp"
#include "gps/decomposition.hpp"
#include "gps/geometry.hpp"
#include "gps/graph.hpp"
#include "gps/growth.hpp"
#include "gps/io.hpp"
#include "gps/localise.hpp"
#include "gps/products.hpp"
#include "gps/separators.hpp"
#include "gps/shortcuts.hpp"
#include "gps/testgen.hpp"

namespace {

using gps::json;

struct Output {
    std::string path; // empty = stdout

    void emit(const json& j) const {
        const std::string body = j.dump(2) + "\n";
        if (path.empty()) {
            std::cout << body;
            return;
        }
        std::ofstream out(path, std::ios::binary);
        if (!out) throw gps::io_error("cannot write " + path);
        out << body;
    }

    void emit_raw(const std::string& body) const {
        if (path.empty()) {
            std::cout << body;
            return;
        }
        std::ofstream out(path, std::ios::binary);
        if (!out) throw gps::io_error("cannot write " + path);
        out << body;
    }
};

int env_exact_cap(int fallback) {
    const char* s = std::getenv("GPS_EXACT_CAP");
    if (!s || !*s) return fallback;
    try {
        return std::max(1, std::stoi(s));
    } catch (const std::exception&) {
        throw gps::io_error("GPS_EXACT_CAP is not an integer");
    }
}

json bound_entry(double lhs, double rhs, bool holds) {
    return json{{"lhs", lhs}, {"rhs", rhs}, {"holds", holds}};
}

void emit_graph(const Output& out, const gps::Graph& g, const std::string& format) {
    if (format == "text")
        out.emit_raw(gps::graph_to_text(g));
    else
        out.emit(gps::graph_to_json(g));
}

gps::VertexOrdering read_ordering(const std::string& path, int n) {
    auto ids = gps::read_list<int>(path);
    if (static_cast<int>(ids.size()) != n)
        throw gps::io_error("ordering in " + path + " has " + std::to_string(ids.size()) +
                            " entries for a graph on " + std::to_string(n) + " vertices");
    try {
        return gps::VertexOrdering::from_order(std::move(ids));
    } catch (const gps::contract_error& e) {
        throw gps::io_error(std::string("ordering: ") + e.what());
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph product structure toolkit"};
    app.require_subcommand(1);

    std::string in_format = "auto";
    app.add_option("--format", in_format, "graph input format: auto|text|json")
        ->check(CLI::IsMember({"auto", "text", "json"}));
    Output out;
    app.add_option("-o,--output", out.path, "write the result here instead of stdout");

    std::string graph_a, graph_b, aux_path, points_path;
    std::string out_format = "json";
    std::uint64_t seed = 0;
    int r = 1, k = 2, axis = 0, nwit = 2, split = 1, max_draws = 10000;
    double p = 0.5, q = 0.5, beta = 0.25, growth_c = 2.0;

    // product ---------------------------------------------------------------
    auto* product = app.add_subcommand("product", "graph products, powers, projections");
    product->require_subcommand(1);
    auto add_two_graph = [&](CLI::App* cmd) {
        cmd->add_option("a", graph_a, "first factor")->required();
        cmd->add_option("b", graph_b, "second factor")->required();
        cmd->add_option("--out-format", out_format, "json|text")
            ->check(CLI::IsMember({"json", "text"}));
    };
    auto* prod_strong = product->add_subcommand("strong", "strong product A ⊠ B");
    add_two_graph(prod_strong);
    prod_strong->callback([&] {
        emit_graph(out, gps::strong_product(gps::read_graph(graph_a, in_format),
                                            gps::read_graph(graph_b, in_format)),
                   out_format);
    });
    auto* prod_cart = product->add_subcommand("cartesian", "cartesian product A □ B");
    add_two_graph(prod_cart);
    prod_cart->callback([&] {
        emit_graph(out, gps::cartesian_product(gps::read_graph(graph_a, in_format),
                                               gps::read_graph(graph_b, in_format)),
                   out_format);
    });
    auto* prod_power = product->add_subcommand("power", "k-th power of a graph");
    prod_power->add_option("graph", graph_a)->required();
    prod_power->add_option("--k", k, "power")->required();
    prod_power->add_option("--out-format", out_format)->check(CLI::IsMember({"json", "text"}));
    prod_power->callback([&] {
        emit_graph(out, gps::graph_power(gps::read_graph(graph_a, in_format), k), out_format);
    });
    auto* prod_project = product->add_subcommand("project", "projection onto one axis");
    prod_project->add_option("graph", graph_a)->required();
    prod_project->add_option("--axis", axis)->required();
    prod_project->callback([&] {
        auto proj = gps::project(gps::read_graph(graph_a, in_format), axis);
        json j;
        j["axis"] = axis;
        j["values"] = json::array();
        for (auto [value, count] : proj.value_counts)
            j["values"].push_back(json{{"value", value}, {"count", count}});
        out.emit(j);
    });

    // td ---------------------------------------------------------------------
    auto* td_cmd = app.add_subcommand("td", "tree decompositions and treewidth");
    td_cmd->require_subcommand(1);
    auto* td_exact = td_cmd->add_subcommand("exact", "exact treewidth with witness");
    td_exact->add_option("graph", graph_a)->required();
    td_exact->callback([&] {
        auto g = gps::read_graph(graph_a, in_format);
        auto [w, td] = gps::exact_treewidth(g, env_exact_cap(gps::kDefaultExactCap));
        json j = gps::td_to_json(td);
        j["treewidth"] = w;
        out.emit(j);
    });
    auto* td_heur = td_cmd->add_subcommand("heuristic", "min-fill upper bound with witness");
    td_heur->add_option("graph", graph_a)->required();
    td_heur->callback([&] {
        auto g = gps::read_graph(graph_a, in_format);
        out.emit(gps::td_to_json(gps::heuristic_treewidth(g)));
    });
    auto* td_validate = td_cmd->add_subcommand("validate", "check the decomposition axioms");
    td_validate->add_option("graph", graph_a)->required();
    td_validate->add_option("--td", aux_path, "decomposition JSON")->required();
    td_validate->callback([&] {
        auto g = gps::read_graph(graph_a, in_format);
        auto res = gps::validate_td(g, gps::read_td(aux_path));
        out.emit(json{{"valid", res.ok}, {"violation", res.violation}});
    });
    auto* td_sep = td_cmd->add_subcommand("separator", "balanced separator from a decomposition");
    td_sep->add_option("graph", graph_a)->required();
    td_sep->add_option("--td", aux_path, "decomposition JSON")->required();
    td_sep->callback([&] {
        auto g = gps::read_graph(graph_a, in_format);
        auto td = gps::read_td(aux_path);
        auto sep = gps::separator_from_td(g, td);
        json j = gps::separation_to_json(sep);
        j["bounds"] = json{
            {"order", bound_entry(sep.order(), td.width + 1, sep.order() <= td.width + 1)},
            {"side1_strict",
             bound_entry(static_cast<double>(sep.side1.size()) - sep.order(),
                         gps::balance_threshold(g.vertex_count()),
                         static_cast<int>(sep.side1.size()) - sep.order() <=
                             gps::balance_threshold(g.vertex_count()))},
            {"side2_strict",
             bound_entry(static_cast<double>(sep.side2.size()) - sep.order(),
                         gps::balance_threshold(g.vertex_count()),
                         static_cast<int>(sep.side2.size()) - sep.order() <=
                             gps::balance_threshold(g.vertex_count()))}};
        out.emit(j);
    });

    // separate ----------------------------------------------------------------
    auto* separate = app.add_subcommand("separate", "separators for product subgraphs");
    separate->require_subcommand(1);
    auto* sep_layered = separate->add_subcommand("layered", "layered deletion on Z^d ⊠ H");
    sep_layered->add_option("graph", graph_a)->required();
    sep_layered->add_option("--h-td", aux_path, "decomposition of the H factor")->required();
    sep_layered->callback([&] {
        auto g = gps::read_graph(graph_a, in_format);
        auto rep = gps::layered_deletion(g, gps::read_td(aux_path));
        const auto vr = gps::validate_td(g, rep.td);
        json j;
        j["m"] = rep.m;
        j["d"] = rep.d;
        j["t"] = rep.t;
        j["residues"] = rep.residues;
        j["deleted"] = rep.deleted;
        j["component_count"] = rep.components.size();
        j["components"] = rep.components;
        j["decomposition"] = gps::td_to_json(rep.td);
        j["decomposition_valid"] = vr.ok;
        j["bounds"] = json{
            {"deletion",
             bound_entry(static_cast<double>(rep.m) * rep.deleted.size(),
                         static_cast<double>(rep.d) * g.vertex_count(), rep.deletion_bound_ok)},
            {"width", bound_entry(rep.td.width, rep.width_bound, rep.width_ok)},
            {"windows_ok", rep.windows_ok}};
        out.emit(j);
    });
    auto* sep_combined = separate->add_subcommand("combined", "fragment one factor, separate the rest");
    sep_combined->add_option("graph", graph_a)->required();
    sep_combined->add_option("--beta", beta, "radius exponent: r = ceil(n^beta)")->required();
    sep_combined->add_option("--growth-c", growth_c, "growth bound g(r) = r^c")->required();
    sep_combined->add_option("--seed", seed);
    sep_combined->add_option("--split", split, "leading axes forming the first factor");
    sep_combined->add_option("--max-draws", max_draws);
    sep_combined->callback([&] {
        auto g = gps::read_graph(graph_a, in_format);
        gps::CombinedSeparatorOptions opt;
        opt.beta = beta;
        opt.growth_c = growth_c;
        opt.seed = seed;
        opt.split_axes = split;
        opt.max_draws = max_draws;
        opt.exact_cap = env_exact_cap(gps::kDefaultExactCap);
        auto res = gps::combined_separator(g, opt);
        const int threshold = gps::balance_threshold(g.vertex_count());
        json j = gps::separation_to_json(res.separation);
        j["a_part"] = res.a_part;
        j["b_part"] = res.b_part;
        j["factor_used"] = res.factor_used;
        j["radius_target"] = res.radius_target;
        j["radius"] = res.radius;
        j["fragment_draws"] = res.fragment_draws;
        j["used_decomposition"] = res.used_decomposition;
        const auto strict1 = res.separation.side1.size() - res.separation.separator.size();
        const auto strict2 = res.separation.side2.size() - res.separation.separator.size();
        j["bounds"] = json{{"side1_strict", bound_entry(static_cast<double>(strict1), threshold,
                                                        static_cast<int>(strict1) <= threshold)},
                           {"side2_strict", bound_entry(static_cast<double>(strict2), threshold,
                                                        static_cast<int>(strict2) <= threshold)}};
        out.emit(j);
    });

    // localise -----------------------------------------------------------------
    auto* localise = app.add_subcommand("localise", "randomized r-localising sets");
    localise->require_subcommand(1);
    auto* loc_sample = localise->add_subcommand("sample", "draw one localising set");
    loc_sample->add_option("graph", graph_a)->required();
    loc_sample->add_option("--r", r)->required();
    loc_sample->add_option("--p", p)->required();
    loc_sample->add_option("--q", q)->required();
    loc_sample->add_option("--seed", seed);
    loc_sample->callback([&] {
        auto g = gps::read_graph(graph_a, in_format);
        auto dist = gps::build_distribution(r, p, q);
        json dj;
        dj["r"] = dist.r;
        dj["valid"] = dist.valid;
        dj["total"] = dist.total.str();
        dj["f"] = json::array();
        for (const auto& x : dist.f) dj["f"].push_back(x.str());
        auto ls = gps::sample_localising(g, dist, seed);
        json j;
        j["x"] = ls.members;
        j["certificate"] = json::array();
        for (const auto& cc : ls.certificate)
            j["certificate"].push_back(json{{"component", cc.component}, {"center", cc.center}});
        j["distribution"] = dj;
        j["seed"] = seed;
        j["bounds"] = json{{"certificate_ok", gps::certificate_ok(g, ls, r)}};
        out.emit(j);
    });
    auto* loc_frag = localise->add_subcommand("fragment", "low-weight fragmentation");
    loc_frag->add_option("graph", graph_a)->required();
    loc_frag->add_option("--r", r)->required();
    loc_frag->add_option("--growth-c", growth_c, "ball bound g(r) = r^c")->required();
    loc_frag->add_option("--weights", aux_path, "per-vertex weights (default: all ones)");
    loc_frag->add_option("--seed", seed);
    loc_frag->add_option("--max-draws", max_draws);
    loc_frag->callback([&] {
        auto g = gps::read_graph(graph_a, in_format);
        std::vector<double> w(g.vertex_count(), 1.0);
        if (!aux_path.empty()) {
            w = gps::read_list<double>(aux_path);
            if (static_cast<int>(w.size()) != g.vertex_count())
                throw gps::io_error("weights file size does not match the graph");
        }
        const double growth_value = std::pow(static_cast<double>(r), growth_c);
        auto res = gps::weighted_fragment(g, w, r, growth_value, seed, max_draws);
        json j;
        j["x"] = res.members;
        j["draws"] = res.draws;
        j["seed"] = seed;
        j["bounds"] = json{{"weight", bound_entry(res.weight, res.weight_bound,
                                                  res.weight <= res.weight_bound)},
                           {"component", bound_entry(static_cast<double>(res.largest_component),
                                                     growth_value,
                                                     static_cast<double>(res.largest_component) <=
                                                         growth_value)}};
        out.emit(j);
    });

    // colr -----------------------------------------------------------------------
    auto* colr = app.add_subcommand("colr", "strong r-colouring numbers");
    colr->require_subcommand(1);
    auto* colr_eval = colr->add_subcommand("eval", "witness value of an ordering");
    colr_eval->add_option("graph", graph_a)->required();
    colr_eval->add_option("--order", aux_path, "ordering file (ids, JSON or whitespace)")->required();
    colr_eval->add_option("--r", r)->required();
    colr_eval->callback([&] {
        auto g = gps::read_graph(graph_a, in_format);
        auto ord = read_ordering(aux_path, g.vertex_count());
        out.emit(json{{"r", r}, {"value", gps::eval_colr(g, ord, r)}});
    });
    auto* colr_exact = colr->add_subcommand("exact", "exact col_r with witness ordering");
    colr_exact->add_option("graph", graph_a)->required();
    colr_exact->add_option("--r", r)->required();
    colr_exact->callback([&] {
        auto g = gps::read_graph(graph_a, in_format);
        auto [value, ord] = gps::exact_colr(g, r, env_exact_cap(gps::kDefaultColrCap));
        out.emit(json{{"r", r}, {"value", value}, {"order", ord.order}});
    });
    auto* colr_product = colr->add_subcommand("product", "product ordering of G ⊠ H");
    colr_product->add_option("graph", graph_a)->required();
    colr_product->add_option("--order", aux_path, "ordering of G")->required();
    colr_product->add_option("--h", graph_b, "second factor H")->required();
    colr_product->callback([&] {
        auto g = gps::read_graph(graph_a, in_format);
        auto h = gps::read_graph(graph_b, in_format);
        auto ord = read_ordering(aux_path, g.vertex_count());
        auto prod_ord = gps::product_ordering(ord, h);
        out.emit(json{{"order", prod_ord.order}});
    });

    // shortcut ----------------------------------------------------------------------
    auto* shortcut = app.add_subcommand("shortcut", "(k,d)-shortcut systems");
    shortcut->require_subcommand(1);
    auto* sc_power = shortcut->add_subcommand("power", "shortcut system realizing G^k");
    sc_power->add_option("graph", graph_a)->required();
    sc_power->add_option("--k", k)->required();
    sc_power->callback([&] {
        auto g = gps::read_graph(graph_a, in_format);
        auto sys = gps::power_shortcut_system(g, k);
        const auto usage = gps::internal_usage_counts(sys, g.vertex_count());
        long long max_usage = 0;
        std::size_t max_len = 0;
        for (long long u : usage) max_usage = std::max(max_usage, u);
        for (const auto& path : sys.paths) max_len = std::max(max_len, path.size() - 1);
        json j = gps::shortcuts_to_json(sys);
        j["bounds"] = json{{"usage", bound_entry(static_cast<double>(max_usage),
                                                 static_cast<double>(sys.d), max_usage <= sys.d)},
                           {"length", bound_entry(static_cast<double>(max_len),
                                                  static_cast<double>(sys.k),
                                                  max_len <= static_cast<std::size_t>(sys.k))}};
        out.emit(j);
    });
    auto* sc_apply = shortcut->add_subcommand("apply", "G^P: add one edge per shortcut");
    sc_apply->add_option("graph", graph_a)->required();
    sc_apply->add_option("--system", aux_path, "shortcut system JSON")->required();
    sc_apply->add_option("--out-format", out_format)->check(CLI::IsMember({"json", "text"}));
    sc_apply->callback([&] {
        auto g = gps::read_graph(graph_a, in_format);
        emit_graph(out, gps::apply_shortcuts(g, gps::read_shortcuts(aux_path)), out_format);
    });
    auto* sc_validate = shortcut->add_subcommand("validate", "check the system invariants");
    sc_validate->add_option("graph", graph_a)->required();
    sc_validate->add_option("--system", aux_path, "shortcut system JSON")->required();
    sc_validate->callback([&] {
        auto g = gps::read_graph(graph_a, in_format);
        auto res = gps::validate_shortcuts(g, gps::read_shortcuts(aux_path));
        out.emit(json{{"valid", res.ok}, {"violation", res.violation}});
    });

    // geo ------------------------------------------------------------------------------
    auto* geo = app.add_subcommand("geo", "geometric graph builders and embeddings");
    geo->require_subcommand(1);
    auto* geo_udg = geo->add_subcommand("udg", "unit-disc graph of a point set");
    geo_udg->add_option("points", points_path, "CSV, one point per line")->required();
    geo_udg->add_option("--out-format", out_format)->check(CLI::IsMember({"json", "text"}));
    geo_udg->callback([&] {
        emit_graph(out, gps::unit_disc_graph(gps::read_points_csv(points_path)), out_format);
    });
    auto* geo_embed = geo->add_subcommand("embed", "embed a unit-disc graph into Z^d ⊠ K_t");
    geo_embed->add_option("points", points_path)->required();
    geo_embed->add_option("--k", k, "clique bound: no (k+1)-clique")->required();
    geo_embed->callback([&] {
        auto ps = gps::read_points_csv(points_path);
        auto emb = gps::embed_unit_disc(ps, k);
        auto udg = gps::unit_disc_graph(ps);
        auto vr = gps::validate_embedding(ps, udg, emb);
        json j;
        j["d"] = emb.dim;
        j["t"] = emb.t;
        j["cells"] = emb.cells;
        j["labels"] = emb.labels;
        j["bounds"] = json{{"embedding_valid", vr.ok}, {"violation", vr.violation}};
        out.emit(j);
    });
    auto* geo_knn = geo->add_subcommand("knn", "k-nearest-neighbour graph");
    geo_knn->add_option("points", points_path)->required();
    geo_knn->add_option("--k", k)->required();
    geo_knn->add_option("--out-format", out_format)->check(CLI::IsMember({"json", "text"}));
    geo_knn->callback([&] {
        emit_graph(out, gps::knn_graph(gps::read_points_csv(points_path), k), out_format);
    });

    // witness ---------------------------------------------------------------------------
    auto* witness = app.add_subcommand("witness", "structural witness gadgets");
    witness->require_subcommand(1);
    auto emit_witness = [&](const gps::WitnessReport& rep) {
        json j;
        j["construction"] = rep.construction;
        j["pattern"] = rep.pattern;
        j["verified"] = rep.verified;
        j["detail"] = rep.detail;
        j["host"] = gps::graph_to_json(rep.host);
        out.emit(j);
    };
    auto* wit_cart = witness->add_subcommand("star-cartesian",
                                             "1-subdivision of K_{n,n} in K_{1,n} □ K_{1,n}");
    wit_cart->add_option("--n", nwit)->required();
    wit_cart->callback([&] { emit_witness(gps::star_cartesian_subdivision_witness(nwit)); });
    auto* wit_strong = witness->add_subcommand("star-strong",
                                               "K_{n,n} and a binary tree in K_{1,n} ⊠ K_{1,n}");
    wit_strong->add_option("--n", nwit)->required();
    wit_strong->callback([&] { emit_witness(gps::strong_star_binary_tree_witness(nwit)); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const gps::io_error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const gps::error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 0;
}
