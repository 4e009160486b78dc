#include "swcap/graph.hpp"

#include <algorithm>
#include <numeric>

namespace swcap {

int PlumbingGraph::add_vertex(int id, int euler) {
    if (index_of(id) >= 0) throw StructureError("duplicate vertex id " + std::to_string(id));
    vertices_.push_back({id, euler});
    adj_.emplace_back();
    if (mult_) mult_->push_back(0);
    return size() - 1;
}

int PlumbingGraph::add_vertex(int euler) {
    int next = 0;
    for (const auto& v : vertices_) next = std::max(next, v.id + 1);
    return add_vertex(next, euler);
}

void PlumbingGraph::add_edge(int a, int b) {
    if (a < 0 || b < 0 || a >= size() || b >= size()) throw StructureError("edge references unknown vertex");
    if (a == b) throw StructureError("loop edge at vertex " + std::to_string(id(a)));
    if (adjacent(a, b)) throw StructureError("repeated edge");
    edges_.emplace_back(a, b);
    adj_[a].push_back(b);
    adj_[b].push_back(a);
}

void PlumbingGraph::add_arrow(int vertex, std::int64_t multiplicity) {
    if (vertex < 0 || vertex >= size()) throw StructureError("arrow references unknown vertex");
    arrows_.push_back({vertex, multiplicity});
}

void PlumbingGraph::set_multiplicities(std::vector<std::int64_t> m) {
    if (static_cast<int>(m.size()) != size()) throw StructureError("multiplicity vector has wrong length");
    mult_ = std::move(m);
}

int PlumbingGraph::index_of(int id) const {
    for (int i = 0; i < size(); ++i)
        if (vertices_[i].id == id) return i;
    return -1;
}

int PlumbingGraph::arrow_count(int v) const {
    return static_cast<int>(std::count_if(arrows_.begin(), arrows_.end(), [v](const Arrow& a) { return a.vertex == v; }));
}

bool PlumbingGraph::adjacent(int a, int b) const {
    const auto& n = adj_.at(a);
    return std::find(n.begin(), n.end(), b) != n.end();
}

std::vector<std::vector<int>> PlumbingGraph::components() const {
    std::vector<int> comp(size(), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < size(); ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> members{s}, stack{s};
        comp[s] = static_cast<int>(out.size());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj_[v])
                if (comp[w] < 0) {
                    comp[w] = comp[s];
                    members.push_back(w);
                    stack.push_back(w);
                }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

bool PlumbingGraph::is_forest() const {
    return static_cast<int>(edges_.size()) + static_cast<int>(components().size()) == size();
}

bool PlumbingGraph::is_connected() const { return size() <= 1 || components().size() == 1; }

bool PlumbingGraph::is_chain() const {
    if (!is_tree()) return false;
    for (int v = 0; v < size(); ++v)
        if (degree(v) > 2) return false;
    return true;
}

std::vector<std::vector<int>> PlumbingGraph::components_without(int v) const {
    std::vector<int> keep;
    for (int i = 0; i < size(); ++i)
        if (i != v) keep.push_back(i);
    PlumbingGraph sub = induced(keep);
    std::vector<std::vector<int>> out;
    for (auto& c : sub.components()) {
        for (int& x : c) x = keep[x];
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<int> PlumbingGraph::path(int a, int b) const {
    std::vector<int> prev(size(), -2);
    std::vector<int> queue{a};
    prev[a] = -1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int v = queue[qi];
        if (v == b) break;
        for (int w : adj_[v])
            if (prev[w] == -2) {
                prev[w] = v;
                queue.push_back(w);
            }
    }
    if (prev[b] == -2) return {};
    std::vector<int> out;
    for (int v = b; v != -1; v = prev[v]) out.push_back(v);
    std::reverse(out.begin(), out.end());
    return out;
}

PlumbingGraph PlumbingGraph::induced(const std::vector<int>& subset) const {
    PlumbingGraph g;
    std::vector<int> map(size(), -1);
    for (int v : subset) {
        if (v < 0 || v >= size()) throw StructureError("subset references unknown vertex");
        if (map[v] >= 0) throw StructureError("subset repeats a vertex");
        map[v] = g.add_vertex(vertices_[v].id, vertices_[v].euler);
    }
    for (auto [a, b] : edges_)
        if (map[a] >= 0 && map[b] >= 0) g.add_edge(map[a], map[b]);
    for (const auto& ar : arrows_)
        if (map[ar.vertex] >= 0) g.add_arrow(map[ar.vertex], ar.multiplicity);
    if (mult_) {
        std::vector<std::int64_t> m;
        for (int v : subset) m.push_back((*mult_)[v]);
        g.set_multiplicities(std::move(m));
    }
    return g;
}

PlumbingGraph PlumbingGraph::without(const std::vector<int>& removed) const {
    std::vector<int> keep;
    for (int i = 0; i < size(); ++i)
        if (std::find(removed.begin(), removed.end(), i) == removed.end()) keep.push_back(i);
    return induced(keep);
}

void PlumbingGraph::require_tree() const {
    if (empty()) throw StructureError("graph has no vertices");
    if (!is_connected()) throw StructureError("graph is not connected");
    if (!is_forest()) throw StructureError("graph contains a cycle");
}

bool PlumbingGraph::operator==(const PlumbingGraph& o) const {
    if (size() != o.size()) return false;
    for (int i = 0; i < size(); ++i)
        if (vertices_[i].id != o.vertices_[i].id || vertices_[i].euler != o.vertices_[i].euler) return false;
    auto norm = [](std::vector<std::pair<int, int>> e) {
        for (auto& [a, b] : e)
            if (a > b) std::swap(a, b);
        std::sort(e.begin(), e.end());
        return e;
    };
    return norm(edges_) == norm(o.edges_);
}

PlumbingGraph chain_graph(const std::vector<int>& eulers) {
    PlumbingGraph g;
    for (std::size_t i = 0; i < eulers.size(); ++i) {
        g.add_vertex(static_cast<int>(i), eulers[i]);
        if (i > 0) g.add_edge(static_cast<int>(i) - 1, static_cast<int>(i));
    }
    return g;
}

PlumbingGraph strip_decorations(const PlumbingGraph& g) {
    PlumbingGraph out;
    for (const auto& v : g.vertices()) out.add_vertex(v.id, v.euler);
    for (auto [a, b] : g.edges()) out.add_edge(a, b);
    return out;
}

}  // namespace swcap
