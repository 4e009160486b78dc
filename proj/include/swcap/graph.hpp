#pragma once
// Decorated plumbing graphs.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace swcap {

/// Raised for malformed graph structure (not a tree, unknown vertex, ...).
class StructureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised for invalid user input (bad parameters, non-coprime pairs, ...).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Vertex {
    int id = 0;
    int euler = 0;
};

struct Arrow {
    int vertex = 0;           // index into vertices()
    std::int64_t multiplicity = 0;
};

/// A plumbing graph: vertices decorated by Euler numbers (genus is always 0),
/// undirected edges, optional arrowheads and an optional multiplicity per
/// vertex. Vertices are addressed by dense index 0..size()-1; the external
/// id of each vertex is kept for I/O.
class PlumbingGraph {
public:
    PlumbingGraph() = default;

    /// Appends a vertex; returns its index. Throws StructureError on a duplicate id.
    int add_vertex(int id, int euler);
    /// Appends a vertex with the next free id.
    int add_vertex(int euler);
    void add_edge(int a, int b);
    void add_arrow(int vertex, std::int64_t multiplicity);
    void set_multiplicities(std::vector<std::int64_t> m);

    [[nodiscard]] int size() const { return static_cast<int>(vertices_.size()); }
    [[nodiscard]] bool empty() const { return vertices_.empty(); }
    [[nodiscard]] const std::vector<Vertex>& vertices() const { return vertices_; }
    [[nodiscard]] const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    [[nodiscard]] const std::vector<Arrow>& arrows() const { return arrows_; }
    [[nodiscard]] const std::optional<std::vector<std::int64_t>>& multiplicities() const { return mult_; }

    [[nodiscard]] int euler(int v) const { return vertices_.at(v).euler; }
    void set_euler(int v, int e) { vertices_.at(v).euler = e; }
    [[nodiscard]] int id(int v) const { return vertices_.at(v).id; }
    /// Index of the vertex with external id `id`, or -1.
    [[nodiscard]] int index_of(int id) const;

    /// Number of incident edges (arrows are not counted).
    [[nodiscard]] int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
    /// Number of arrows sitting on v.
    [[nodiscard]] int arrow_count(int v) const;
    [[nodiscard]] const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    [[nodiscard]] bool adjacent(int a, int b) const;

    [[nodiscard]] bool is_forest() const;
    [[nodiscard]] bool is_connected() const;
    [[nodiscard]] bool is_tree() const { return !empty() && is_forest() && is_connected(); }
    /// A connected graph whose vertices all have degree <= 2 (includes a single vertex).
    [[nodiscard]] bool is_chain() const;

    /// Vertex sets of the connected components, each sorted ascending.
    [[nodiscard]] std::vector<std::vector<int>> components() const;
    /// Components after deleting vertex v (and its edges).
    [[nodiscard]] std::vector<std::vector<int>> components_without(int v) const;
    /// Vertices of the shortest path from a to b (inclusive); empty if disconnected.
    [[nodiscard]] std::vector<int> path(int a, int b) const;

    /// Induced subgraph on `subset` (kept in the given order); arrows and
    /// multiplicities of the retained vertices are carried along.
    [[nodiscard]] PlumbingGraph induced(const std::vector<int>& subset) const;
    /// Same graph with the listed vertices (and their edges) removed.
    [[nodiscard]] PlumbingGraph without(const std::vector<int>& removed) const;

    /// Throws StructureError unless the graph is a nonempty tree.
    void require_tree() const;

    [[nodiscard]] bool operator==(const PlumbingGraph& o) const;

private:
    std::vector<Vertex> vertices_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<Arrow> arrows_;
    std::optional<std::vector<std::int64_t>> mult_;
};

/// Chain graph with the given Euler numbers, ids 0..n-1 in order.
PlumbingGraph chain_graph(const std::vector<int>& eulers);

/// Same vertices and edges without arrows or multiplicities.
PlumbingGraph strip_decorations(const PlumbingGraph& g);

}  // namespace swcap
