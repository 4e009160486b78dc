#pragma once
// Exact linear algebra over the plumbing lattice L = Z<E_v> and its dual L'.
//
// A dual vector l' is stored twice: by its rational coordinates in the
// E-basis and by its integer coordinates in the anti-dual basis E_v^*,
// star_v = -(l', E_v). Both are exact; Lattice keeps them consistent.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "swcap/graph.hpp"

namespace swcap {

using Int = mpz_class;
using Rat = mpq_class;
using IntMatrix = std::vector<std::vector<Int>>;

/// Element of L: integer coefficient per vertex.
using LatticeVector = std::vector<Int>;

struct DualVector {
    std::vector<Rat> e;     // coordinates in the E-basis
    std::vector<Int> star;  // coordinates in the anti-dual basis

    [[nodiscard]] std::size_t size() const { return star.size(); }
    [[nodiscard]] bool operator==(const DualVector& o) const { return star == o.star; }
};

/// Finite abelian group Z_{d_1} x ... x Z_{d_k}, d_i > 1, d_i | d_{i+1}.
/// Elements are encoded as mixed-radix indices in [0, order()).
class FiniteAbelianGroup {
public:
    FiniteAbelianGroup() = default;
    explicit FiniteAbelianGroup(std::vector<std::int64_t> factors);

    [[nodiscard]] const std::vector<std::int64_t>& factors() const { return factors_; }
    [[nodiscard]] std::int64_t order() const { return order_; }
    [[nodiscard]] bool cyclic() const { return factors_.size() <= 1; }

    [[nodiscard]] std::int64_t encode(const std::vector<std::int64_t>& residues) const;
    [[nodiscard]] std::vector<std::int64_t> decode(std::int64_t index) const;
    [[nodiscard]] std::int64_t add(std::int64_t a, std::int64_t b) const;
    [[nodiscard]] std::int64_t neg(std::int64_t a) const;
    [[nodiscard]] std::int64_t mul(std::int64_t a, std::int64_t k) const;
    [[nodiscard]] std::int64_t order_of(std::int64_t a) const;
    /// perm[x] = x + g for every x.
    [[nodiscard]] std::vector<std::int64_t> translation(std::int64_t g) const;

private:
    std::vector<std::int64_t> factors_;
    std::int64_t order_ = 1;
};

/// Intersection matrix I of g: e_v on the diagonal, 1 on edges.
IntMatrix intersection_matrix(const PlumbingGraph& g);
/// Exact test via fraction-free elimination: every leading principal minor of
/// -I is positive.
bool is_negative_definite(const PlumbingGraph& g);

class Lattice {
public:
    /// Throws StructureError if g has a cycle and InputError if the form is
    /// not negative definite. Forests are accepted.
    explicit Lattice(const PlumbingGraph& g);

    [[nodiscard]] const PlumbingGraph& graph() const { return graph_; }
    [[nodiscard]] int rank() const { return n_; }
    [[nodiscard]] const IntMatrix& form() const { return form_; }
    /// det(-I) > 0, the order of H.
    [[nodiscard]] const Int& det() const { return det_; }
    /// det(G) * (-I)^{-1}; entry (a,b) equals -det(G) * (E_a^*, E_b^*).
    [[nodiscard]] const IntMatrix& adjugate() const { return adj_; }

    [[nodiscard]] DualVector from_star(std::vector<Int> star) const;
    /// Throws InputError if the vector is not in L'.
    [[nodiscard]] DualVector from_e(std::vector<Rat> e) const;
    [[nodiscard]] DualVector from_lattice(const LatticeVector& l) const;
    [[nodiscard]] DualVector zero() const;
    /// Anti-dual E_v^*: (E_w, E_v^*) = -1 if w = v, 0 otherwise.
    [[nodiscard]] DualVector anti_dual(int v) const;
    /// k_G with (k_G, E_v) = -e_v - 2.
    [[nodiscard]] const DualVector& canonical() const { return canonical_; }

    [[nodiscard]] Rat pair(const DualVector& a, const DualVector& b) const;
    [[nodiscard]] Rat pair_star(int a, int b) const;  // (E_a^*, E_b^*)
    [[nodiscard]] DualVector add(const DualVector& a, const DualVector& b) const;
    [[nodiscard]] DualVector scale(const DualVector& a, const Int& k) const;
    [[nodiscard]] DualVector sub(const DualVector& a, const DualVector& b) const;

    /// chi(l') = -(l', l' + k_G)/2.
    [[nodiscard]] Rat chi(const DualVector& l) const;
    /// ((k_G + 2l', k_G + 2l') + #V) / 8.
    [[nodiscard]] Rat i_invariant(const DualVector& l) const;

    // --- H = L'/L -----------------------------------------------------------
    [[nodiscard]] const FiniteAbelianGroup& group() const { return group_; }
    [[nodiscard]] std::int64_t class_of(const DualVector& l) const;
    [[nodiscard]] std::int64_t class_of_star(const std::vector<Int>& star) const;
    /// Some representative of a class (integer combination of generators).
    [[nodiscard]] DualVector representative(std::int64_t cls) const;
    /// r_h: the representative with all E-coordinates in [0, 1).
    [[nodiscard]] DualVector minimal_rep(std::int64_t cls) const;
    /// Coordinatewise fractional and integral parts in the E-basis.
    [[nodiscard]] DualVector fractional_part(const DualVector& l) const;
    [[nodiscard]] LatticeVector floor_part(const DualVector& l) const;
    [[nodiscard]] bool in_lattice(const DualVector& l) const;

private:
    PlumbingGraph graph_;
    int n_ = 0;
    IntMatrix form_;
    Int det_;
    IntMatrix adj_;
    DualVector canonical_;
    FiniteAbelianGroup group_;
    // rows of the left Smith transform restricted to nontrivial factors
    std::vector<std::vector<Int>> class_rows_;
    // star vectors of the group generators
    std::vector<std::vector<Int>> generators_;
};

struct SmithForm {
    std::vector<Int> diagonal;  // d_1 | d_2 | ... (zeros last)
    IntMatrix left;             // U with U * A * V = D
    IntMatrix left_inverse;     // U^{-1}
};

/// Smith normal form of a square integer matrix, tracking the left transform.
SmithForm smith_normal_form(const IntMatrix& a);

/// Restriction L'_G -> L'_{G_j} dual to the inclusion of the subgraph on
/// `subset`: keeps the anti-dual coordinates of vertices in the subset.
DualVector restrict_to(const Lattice& sub, const DualVector& l, const std::vector<int>& subset);

Int floor_div(const Int& a, const Int& b);

/// Prime-power orders of the cyclic factors, sorted ascending.
std::vector<std::int64_t> primary_factors(const std::vector<std::int64_t>& invariant_factors);

}  // namespace swcap
