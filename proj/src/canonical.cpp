#include "swcap/canonical.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace swcap {

namespace {

std::string label(const PlumbingGraph& g, int v, bool with_mult) {
    std::string s = std::to_string(g.euler(v));
    std::vector<std::int64_t> arrows;
    for (const auto& a : g.arrows())
        if (a.vertex == v) arrows.push_back(a.multiplicity);
    std::sort(arrows.begin(), arrows.end());
    for (auto a : arrows) s += ">" + std::to_string(a);
    if (with_mult && g.multiplicities()) s += "m" + std::to_string((*g.multiplicities())[v]);
    return s;
}

std::string encode(const PlumbingGraph& g, int v, int parent, bool with_mult) {
    std::vector<std::string> kids;
    for (int w : g.neighbors(v))
        if (w != parent) kids.push_back(encode(g, w, v, with_mult));
    std::sort(kids.begin(), kids.end());
    std::string s = "(" + label(g, v, with_mult);
    for (const auto& k : kids) s += k;
    return s + ")";
}

// centre(s) of the tree on `verts`
std::vector<int> centres(const PlumbingGraph& g, const std::vector<int>& verts) {
    std::map<int, int> deg;
    for (int v : verts) deg[v] = g.degree(v);
    std::vector<int> layer;
    for (int v : verts)
        if (deg[v] <= 1) layer.push_back(v);
    std::size_t left = verts.size();
    while (left > 2) {
        std::vector<int> next;
        left -= layer.size();
        for (int v : layer)
            for (int w : g.neighbors(v))
                if (--deg[w] == 1) next.push_back(w);
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

}  // namespace

std::string canonical_form(const PlumbingGraph& g, bool with_multiplicities) {
    if (!g.is_forest()) throw StructureError("canonical form needs a forest");
    std::vector<std::string> parts;
    for (const auto& comp : g.components()) {
        std::string best;
        for (int c : centres(g, comp)) {
            auto s = encode(g, c, -1, with_multiplicities);
            if (best.empty() || s < best) best = s;
        }
        parts.push_back(best);
    }
    std::sort(parts.begin(), parts.end());
    std::string out;
    for (const auto& p : parts) out += p;
    return out;
}

bool isomorphic(const PlumbingGraph& a, const PlumbingGraph& b) {
    return a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

}  // namespace swcap
