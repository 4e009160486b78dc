#pragma once
// Normalized Seiberg-Witten invariants s_h by the cut-and-paste recursion,
// the integral-surgery shortcut, suspension geometric genera and CAP checks.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "swcap/builders.hpp"
#include "swcap/graph.hpp"
#include "swcap/lattice.hpp"
#include "swcap/poly.hpp"

namespace swcap {

/// Memoizing evaluator. Tables are keyed by the exact decorated graph
/// (vertex order included), since class indices depend on it.
class SWEngine {
public:
    /// s_{r_h} for every class index h of Lattice(g). `cut` overrides the
    /// recursion vertex at the top level only (-1: maximal degree, smallest index).
    std::vector<std::int64_t> class_table(const PlumbingGraph& g, int cut = -1);
    /// s_{l'}(g) for any dual vector; forests are handled componentwise.
    std::int64_t s_invariant(const PlumbingGraph& g, const DualVector& l);

    /// Per class: polynomial part H^pol_{v,h}(1) and the sum of the
    /// component terms, so that s_h = pol + components.
    struct CutTerms {
        std::vector<std::int64_t> pol;
        std::vector<std::int64_t> components;
    };
    CutTerms cut_terms(const PlumbingGraph& g, int v);

    [[nodiscard]] std::size_t memo_size() const { return memo_.size(); }

private:
    std::map<std::string, std::vector<std::int64_t>> memo_;
};

int default_cut_vertex(const PlumbingGraph& g);

/// s_{l'} = s_{[l']} + chi(l') - chi(r_{[l']}), given the table of g.
std::int64_t shift_by_chi(const Lattice& lat, const std::vector<std::int64_t>& table, const DualVector& l);

struct SWRow {
    std::int64_t cls = 0;
    std::vector<std::int64_t> residues;
    DualVector r;
    Rat i;
    std::int64_t s = 0;
    Rat sw;
};

struct SWReport {
    std::vector<std::int64_t> factors;
    Int det;
    std::vector<SWRow> rows;
    std::int64_t total = 0;
};

SWReport sw_table(const PlumbingGraph& g, SWEngine& engine);

/// Class index of h E_{u'}^* for h = 0..p-1.
std::vector<std::int64_t> surgery_classes(const SurgeryGraph& sg, const Lattice& lat);

/// sum_{h<p} chi(-floor(h (f) / p)) on the resolution graph of f.
std::int64_t suspension_pg(const PlumbingGraph& resolution, std::int64_t p);
/// sum_j chi_j(-floor(h (f_j) / d)) for one h.
Rat floor_chi_sum(const std::vector<PlumbingGraph>& knots, std::int64_t h, std::int64_t d);

struct IntegralSurgeryRow {
    std::int64_t h = 0;
    std::int64_t shortcut = 0;   // sum of q_n, n = h mod d
    std::int64_t cut_paste = 0;  // s_h(G) - c_h, i.e. s at the representative h E_u^*
    Rat c_chi;                   // chi(r_h) - chi(s_h)
    Rat c_floor;                 // sum_j chi_j(-floor(h (f_j)/d))
    std::int64_t s = 0;          // s_h(G)
};

struct IntegralSurgeryReport {
    Poly alexander;
    std::int64_t delta = 0;
    Poly q;
    std::int64_t q_at_one = 0;
    std::int64_t pol_at_one = 0;  // H^pol_u(1)
    Rat sum_c;
    std::int64_t total = 0;
    std::vector<IntegralSurgeryRow> rows;
    bool consistent = false;
};

IntegralSurgeryReport integral_surgery_table(const std::vector<PlumbingGraph>& knots, std::int64_t d, SWEngine& engine);

struct CapReport {
    std::int64_t lhs = 0;                 // s_0(Gamma)
    std::int64_t rhs = 0;                 // sum_h s_h(G)
    std::vector<std::int64_t> per_class;  // s_h(G), by h (surgery) or class index
    Int cover_det;
    std::vector<std::int64_t> cover_factors;
    PlumbingGraph cover;
    [[nodiscard]] bool holds() const { return lhs == rhs; }
};

CapReport cap_check(const SurgeryGraph& sg, SWEngine& engine);
/// Arbitrary graph with cyclic H: the cover comes from uac_graph.
CapReport cap_check(const PlumbingGraph& g, SWEngine& engine);

}  // namespace swcap
