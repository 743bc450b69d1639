#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gps/decomposition.hpp"
#include "gps/geometry.hpp"
#include "gps/graph.hpp"
#include "gps/shortcuts.hpp"

namespace gps {

using json = nlohmann::json;

// --- graph text format: line 1 "n m", then m lines "u v" ---------------

inline std::string graph_to_text(const Graph& g) {
    std::ostringstream out;
    const auto es = g.edges();
    out << g.vertex_count() << ' ' << es.size() << '\n';
    for (auto [u, v] : es) out << u << ' ' << v << '\n';
    return out.str();
}

inline Graph graph_from_text(std::istream& in) {
    long long n = 0, m = 0;
    if (!(in >> n >> m)) throw io_error("graph text: missing 'n m' header");
    if (n < 0 || m < 0) throw io_error("graph text: negative counts");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) throw io_error("graph text: expected " + std::to_string(m) +
                                            " edges, got " + std::to_string(i));
        edges.emplace_back(u, v);
    }
    try {
        return Graph::from_edges(static_cast<int>(n), edges);
    } catch (const contract_error& e) {
        throw io_error(std::string("graph text: ") + e.what());
    }
}

// --- graph JSON format: {"n":…, "edges":[[u,v]…], "coords":[[…]…]?} -----

inline json graph_to_json(const Graph& g) {
    json j;
    j["n"] = g.vertex_count();
    j["edges"] = json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    if (g.has_coords()) {
        j["coords"] = json::array();
        for (int v = 0; v < g.vertex_count(); ++v) j["coords"].push_back(g.coord(v));
    }
    return j;
}

inline Graph graph_from_json(const json& j) {
    try {
        const int n = j.at("n").get<int>();
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : j.at("edges"))
            edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        Graph g = Graph::from_edges(n, edges);
        if (j.contains("coords")) {
            std::vector<CoordTuple> coords;
            for (const auto& t : j.at("coords")) coords.push_back(t.get<CoordTuple>());
            g.set_coords(std::move(coords));
        }
        return g;
    } catch (const json::exception& e) {
        throw io_error(std::string("graph json: ") + e.what());
    } catch (const contract_error& e) {
        throw io_error(std::string("graph json: ") + e.what());
    }
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// Reads a graph in either format. "auto" sniffs: JSON starts with '{'.
inline Graph read_graph(const std::string& path, std::string format = "auto") {
    const std::string body = read_file(path);
    if (format == "auto") {
        const auto first = body.find_first_not_of(" \t\r\n");
        format = (first != std::string::npos && body[first] == '{') ? "json" : "text";
    }
    if (format == "json") {
        json j = json::parse(body, nullptr, false);
        if (j.is_discarded()) throw io_error("invalid JSON in " + path);
        return graph_from_json(j);
    }
    if (format == "text") {
        std::istringstream in(body);
        return graph_from_text(in);
    }
    throw io_error("unknown graph format '" + format + "'");
}

// --- decompositions ------------------------------------------------------

inline json td_to_json(const TreeDecomposition& td) {
    json j;
    j["bags"] = td.bags;
    j["tree_edges"] = json::array();
    for (auto [a, b] : td.tree_edges) j["tree_edges"].push_back({a, b});
    j["width"] = td.width;
    return j;
}

inline TreeDecomposition td_from_json(const json& j) {
    try {
        TreeDecomposition td;
        td.bags = j.at("bags").get<std::vector<std::vector<int>>>();
        for (auto& bag : td.bags) std::sort(bag.begin(), bag.end());
        for (const auto& e : j.at("tree_edges"))
            td.tree_edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        td.width = j.at("width").get<int>();
        return td;
    } catch (const json::exception& e) {
        throw io_error(std::string("decomposition json: ") + e.what());
    }
}

inline TreeDecomposition read_td(const std::string& path) {
    json j = json::parse(read_file(path), nullptr, false);
    if (j.is_discarded()) throw io_error("invalid JSON in " + path);
    return td_from_json(j);
}

// --- separations ---------------------------------------------------------

inline json separation_to_json(const Separation& s) {
    json j;
    j["side1"] = s.side1;
    j["side2"] = s.side2;
    j["separator"] = s.separator;
    j["order"] = s.order();
    j["balanced"] = s.balanced;
    return j;
}

// --- shortcut systems ----------------------------------------------------

inline json shortcuts_to_json(const ShortcutSystem& s) {
    json j;
    j["k"] = s.k;
    j["d"] = s.d;
    j["paths"] = s.paths;
    return j;
}

inline ShortcutSystem shortcuts_from_json(const json& j) {
    try {
        ShortcutSystem s;
        s.k = j.at("k").get<int>();
        s.d = j.at("d").get<long long>();
        s.paths = j.at("paths").get<std::vector<std::vector<int>>>();
        return s;
    } catch (const json::exception& e) {
        throw io_error(std::string("shortcut json: ") + e.what());
    }
}

inline ShortcutSystem read_shortcuts(const std::string& path) {
    json j = json::parse(read_file(path), nullptr, false);
    if (j.is_discarded()) throw io_error("invalid JSON in " + path);
    return shortcuts_from_json(j);
}

// --- flat lists (orderings, weights): JSON array or whitespace text -------

template <typename T>
inline std::vector<T> read_list(const std::string& path) {
    const std::string body = read_file(path);
    const auto first = body.find_first_not_of(" \t\r\n");
    std::vector<T> out;
    if (first != std::string::npos && body[first] == '[') {
        json j = json::parse(body, nullptr, false);
        if (j.is_discarded()) throw io_error("invalid JSON list in " + path);
        try {
            out = j.get<std::vector<T>>();
        } catch (const json::exception& e) {
            throw io_error(std::string("list json: ") + e.what());
        }
    } else {
        std::istringstream in(body);
        T x;
        while (in >> x) out.push_back(x);
        if (!in.eof()) throw io_error("trailing garbage in list file " + path);
    }
    return out;
}

// --- point sets: CSV, one point per line ----------------------------------

inline PointSet read_points_csv(const std::string& path) {
    const std::string body = read_file(path);
    std::istringstream in(body);
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r,") == std::string::npos) continue;
        std::vector<double> row;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) {
            try {
                row.push_back(std::stod(cell));
            } catch (const std::exception&) {
                throw io_error("bad CSV cell '" + cell + "' in " + path);
            }
        }
        rows.push_back(std::move(row));
    }
    try {
        return PointSet::from_rows(std::move(rows));
    } catch (const contract_error& e) {
        throw io_error(std::string("points csv: ") + e.what());
    }
}

} // namespace gps
