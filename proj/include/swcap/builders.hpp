#pragma once
// Graph constructions: Hirzebruch-Jung chains, torus knot resolution graphs,
// surgery graphs of S^3_{-p/q}(K_1 # ... # K_nu), blow-ups.

#include <cstdint>
#include <vector>

#include "swcap/graph.hpp"
#include "swcap/lattice.hpp"

namespace swcap {

/// p/q = k_0 - 1/(k_1 - 1/(... - 1/k_s)), k_0 >= 1, k_i >= 2 for i >= 1.
std::vector<std::int64_t> hj_continued_fraction(std::int64_t p, std::int64_t q);
Rat hj_evaluate(const std::vector<std::int64_t>& k);
/// Chain with Euler numbers -k_i.
PlumbingGraph hj_chain(const std::vector<std::int64_t>& k);

struct KnotSpec {
    std::int64_t a = 2;
    std::int64_t b = 3;
};

/// Minimal embedded resolution graph of x^a + y^b: a (-1) vertex carrying the
/// arrow (multiplicity 1) with two Hirzebruch-Jung legs. Multiplicities are
/// solved from orthogonality and attached to the graph.
PlumbingGraph torus_knot_graph(KnotSpec k);

/// The part of div(f) supported on the exceptional curves: the anti-dual of
/// the arrow vertex. Throws unless the graph has det 1 and one arrow.
LatticeVector divisor_of_f(const PlumbingGraph& resolution);

/// Checks the resolution-graph invariants; returns an empty string when all
/// hold, otherwise the name of the violated invariant.
std::string check_resolution_graph(const PlumbingGraph& g);

struct SurgeryGraph {
    PlumbingGraph graph;           // carries the branch divisor: multiplicities and an arrow of weight p on u'
    std::int64_t p = 1, q = 1;
    std::vector<std::int64_t> hj;  // [k_0, ..., k_s]
    int u = 0;
    int u_prime = 0;
    std::vector<int> chain;                // u-bar_1 .. u-bar_s
    std::vector<int> u_j;                  // arrow vertex of each block
    std::vector<std::vector<int>> blocks;  // vertex indices of each G_j
    std::vector<PlumbingGraph> knots;      // the input resolution graphs
};

SurgeryGraph surgery_graph(const std::vector<PlumbingGraph>& knots, std::int64_t p, std::int64_t q);
SurgeryGraph surgery_graph(const std::vector<KnotSpec>& knots, std::int64_t p, std::int64_t q);

/// Appends a (-1) vertex adjacent to v and decrements e_v.
PlumbingGraph blow_up_vertex(const PlumbingGraph& g, int v);
/// Replaces the edge (a, b) by a - (-1) - b and decrements e_a and e_b.
PlumbingGraph blow_up_edge(const PlumbingGraph& g, int a, int b);
/// Repeatedly blows down (-1) vertices of degree <= 2 that carry no arrow.
/// Multiplicities are dropped; a single vertex is never removed.
PlumbingGraph blow_down_all(const PlumbingGraph& g);

/// delta = Delta'(1) of a resolution graph.
std::int64_t delta_invariant(const PlumbingGraph& resolution);
/// (d - 1)(d - 2) == 2 * sum of delta invariants.
bool superisolated_compat(const std::vector<PlumbingGraph>& knots, std::int64_t d);

/// Parses "(6,7)+(2,9)" or "6,7;2,9" into knot specs.
std::vector<KnotSpec> parse_knot_list(const std::string& text);

}  // namespace swcap
