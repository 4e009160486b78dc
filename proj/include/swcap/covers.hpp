#pragma once
// Cyclic branched covers of plumbed 4-manifolds, suspension graphs and
// universal abelian cover graphs.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "swcap/builders.hpp"
#include "swcap/graph.hpp"
#include "swcap/lattice.hpp"

namespace swcap {

/// The cover is not a rational homology sphere (positive genus or a cycle).
class NotQHSError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CoverResult {
    PlumbingGraph graph;                   // lifted arrows and z-multiplicities attached
    std::vector<std::vector<int>> fibers;  // base vertex -> cover vertices over it
    std::vector<std::int64_t> multiplicities;
};

/// Degree-n cyclic cover branched along the divisor carried by `base`
/// (its multiplicities plus arrows). Components over each vertex come from
/// gcd counts, edges lift to Hirzebruch-Jung strings, and the Euler numbers
/// over vertices are solved from orthogonality of the lifted divisor div(z).
CoverResult cyclic_cover(const PlumbingGraph& base, std::int64_t n);

/// Throws InputError unless (sum m_v E_v + arrows, E_w) = 0 for every w.
void check_branch_divisor(const PlumbingGraph& base);

struct SuspensionGraph {
    PlumbingGraph graph;  // one arrow: the strict transform of {z = 0}
    int w = 0;            // vertex carrying that arrow
    std::vector<std::int64_t> z;  // div(z) on the vertices
};

/// Graph of f + z^p = 0 from a resolution graph of f.
SuspensionGraph suspension_graph(const PlumbingGraph& resolution, std::int64_t p);

/// Universal abelian cover for cyclic H: the |H|-fold cover branched along
/// |H| l' for a generator [l'] with l' = sum c_v E_v^*, c_v >= 0. When
/// `star` is given it is used as the generator's anti-dual coordinates.
/// Arrows are dropped and (-1) vertices of degree <= 2 blown down.
PlumbingGraph uac_graph(const PlumbingGraph& g, const std::optional<std::vector<std::int64_t>>& star = std::nullopt);

struct SurgeryUAC {
    PlumbingGraph graph;
    int w = 0;
    int w_prime = 0;
    std::vector<int> chain;                // w-bar_1 .. w-bar_{q-1}
    std::vector<int> w_j;
    std::vector<std::vector<int>> blocks;  // vertex indices of each Gamma_j
    std::vector<SuspensionGraph> suspensions;
};

/// Blocks Gamma_j (suspension graphs), a (q-1)-chain of (-2)'s and a central
/// w with e_w = -1 - sum n_{w_j}.
SurgeryUAC uac_surgery(const SurgeryGraph& sg);

}  // namespace swcap
