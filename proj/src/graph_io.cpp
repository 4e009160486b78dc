#include "swcap/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace swcap {

namespace {

std::string where(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

std::int64_t get_int(const Json& j, const std::string& field) {
    if (!j.is_number_integer()) throw InputError("field '" + field + "' must be an integer");
    return j.get<std::int64_t>();
}

int get_small(const Json& j, const std::string& field) {
    auto v = get_int(j, field);
    if (v < INT32_MIN || v > INT32_MAX) throw InputError("field '" + field + "' out of range");
    return static_cast<int>(v);
}

}  // namespace

PlumbingGraph parse_graph(const std::string& text, const std::string& origin) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(origin + ": malformed JSON at " + where(text, e.byte == 0 ? 0 : e.byte - 1));
    }
    if (!doc.is_object()) throw InputError(origin + ": top level must be an object");
    if (!doc.contains("vertices") || !doc["vertices"].is_array()) throw InputError(origin + ": missing array 'vertices'");
    const auto& vs = doc["vertices"];
    if (vs.empty()) throw InputError(origin + ": 'vertices' is empty");
    PlumbingGraph g;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const std::string f = "vertices[" + std::to_string(i) + "]";
        const auto& v = vs[i];
        if (!v.is_object() || !v.contains("id") || !v.contains("euler")) throw InputError(origin + ": " + f + " needs 'id' and 'euler'");
        if (v.contains("genus") && get_int(v["genus"], f + ".genus") != 0) throw InputError(origin + ": " + f + ".genus must be 0");
        int id = get_small(v["id"], f + ".id");
        if (g.index_of(id) >= 0) throw InputError(origin + ": duplicate vertex id " + std::to_string(id));
        g.add_vertex(id, get_small(v["euler"], f + ".euler"));
    }
    auto lookup = [&](const Json& j, const std::string& f) {
        int id = get_small(j, f);
        int idx = g.index_of(id);
        if (idx < 0) throw InputError(origin + ": " + f + " references unknown vertex " + std::to_string(id));
        return idx;
    };
    if (doc.contains("edges")) {
        if (!doc["edges"].is_array()) throw InputError(origin + ": 'edges' must be an array");
        const auto& es = doc["edges"];
        for (std::size_t i = 0; i < es.size(); ++i) {
            const std::string f = "edges[" + std::to_string(i) + "]";
            if (!es[i].is_array() || es[i].size() != 2) throw InputError(origin + ": " + f + " must be a pair");
            int a = lookup(es[i][0], f + "[0]"), b = lookup(es[i][1], f + "[1]");
            if (a == b) throw InputError(origin + ": " + f + " is a loop");
            if (g.adjacent(a, b)) throw InputError(origin + ": " + f + " repeats an edge");
            g.add_edge(a, b);
        }
    }
    if (doc.contains("arrows")) {
        if (!doc["arrows"].is_array()) throw InputError(origin + ": 'arrows' must be an array");
        const auto& as = doc["arrows"];
        for (std::size_t i = 0; i < as.size(); ++i) {
            const std::string f = "arrows[" + std::to_string(i) + "]";
            if (!as[i].is_object() || !as[i].contains("vertex")) throw InputError(origin + ": " + f + " needs 'vertex'");
            std::int64_t m = as[i].contains("multiplicity") ? get_int(as[i]["multiplicity"], f + ".multiplicity") : 1;
            if (m <= 0) throw InputError(origin + ": " + f + ".multiplicity must be positive");
            g.add_arrow(lookup(as[i]["vertex"], f + ".vertex"), m);
        }
    }
    if (doc.contains("multiplicities")) {
        const auto& ms = doc["multiplicities"];
        if (!ms.is_object()) throw InputError(origin + ": 'multiplicities' must be an object keyed by vertex id");
        std::vector<std::int64_t> m(static_cast<std::size_t>(g.size()), 0);
        std::vector<char> seen(m.size(), 0);
        for (auto it = ms.begin(); it != ms.end(); ++it) {
            int id = 0;
            try {
                std::size_t pos = 0;
                id = std::stoi(it.key(), &pos);
                if (pos != it.key().size()) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw InputError(origin + ": multiplicities key '" + it.key() + "' is not a vertex id");
            }
            int idx = g.index_of(id);
            if (idx < 0) throw InputError(origin + ": multiplicities." + it.key() + " references unknown vertex");
            m[idx] = get_int(it.value(), "multiplicities." + it.key());
            seen[idx] = 1;
        }
        if (std::find(seen.begin(), seen.end(), 0) != seen.end()) throw InputError(origin + ": multiplicities must cover every vertex");
        g.set_multiplicities(std::move(m));
    }
    if (!g.is_tree()) throw InputError(origin + ": invariant violated: graph must be a tree");
    return g;
}

PlumbingGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_graph(ss.str(), path);
}

Json graph_to_json(const PlumbingGraph& g) {
    std::vector<int> order(static_cast<std::size_t>(g.size()));
    for (int v = 0; v < g.size(); ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return g.id(a) < g.id(b); });
    Json doc;
    doc["vertices"] = Json::array();
    for (int v : order) doc["vertices"].push_back({{"id", g.id(v)}, {"euler", g.euler(v)}, {"genus", 0}});
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : g.edges()) edges.emplace_back(std::min(g.id(a), g.id(b)), std::max(g.id(a), g.id(b)));
    std::sort(edges.begin(), edges.end());
    doc["edges"] = Json::array();
    for (auto [a, b] : edges) doc["edges"].push_back({a, b});
    std::vector<std::pair<int, std::int64_t>> arrows;
    for (const auto& a : g.arrows()) arrows.emplace_back(g.id(a.vertex), a.multiplicity);
    std::sort(arrows.begin(), arrows.end());
    doc["arrows"] = Json::array();
    for (auto [v, m] : arrows) doc["arrows"].push_back({{"vertex", v}, {"multiplicity", m}});
    if (g.multiplicities()) {
        Json m = Json::object();
        for (int v = 0; v < g.size(); ++v) m[std::to_string(g.id(v))] = (*g.multiplicities())[v];
        doc["multiplicities"] = m;
    }
    return doc;
}

std::string serialize_graph(const PlumbingGraph& g) { return graph_to_json(g).dump(2) + "\n"; }

void write_graph_file(const PlumbingGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << serialize_graph(g);
}

Json to_json(const Int& x) {
    if (x.fits_slong_p()) return x.get_si();
    return x.get_str();
}

Json to_json(const Rat& x) { return {{"num", to_json(Int(x.get_num()))}, {"den", to_json(Int(x.get_den()))}}; }

Json to_json(const DualVector& l) {
    Json e = Json::array(), s = Json::array();
    for (const auto& x : l.e) e.push_back(to_json(x));
    for (const auto& x : l.star) s.push_back(to_json(x));
    return {{"e", e}, {"star", s}};
}

}  // namespace swcap
