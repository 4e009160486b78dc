#pragma once
// Rational functions in one variable with coefficients in the group ring Z[H].
//
// A GroupSeries is N(s) / prod_i (1 - s^{b_i}) with N in Z[H][s] and an
// integer denominator, where s = t^scale for the caller's base variable t.
// The h-component of the series is the Fourier average
// (1/|H|) sum_rho rho(h)^{-1} rho(X), evaluated without characters.

#include <cstdint>
#include <vector>

#include "swcap/lattice.hpp"
#include "swcap/poly.hpp"

namespace swcap {

class GroupSeries {
public:
    GroupSeries(FiniteAbelianGroup group, std::size_t scale);

    [[nodiscard]] const FiniteAbelianGroup& group() const { return group_; }
    [[nodiscard]] std::size_t scale() const { return scale_; }
    [[nodiscard]] long degree() const;
    [[nodiscard]] const std::vector<std::size_t>& denominator() const { return denom_; }
    [[nodiscard]] std::int64_t coeff(std::size_t deg, std::int64_t g) const;

    /// Multiply by (1 - g s^a).
    void multiply_binomial(std::int64_t g, std::size_t a);
    /// Divide by (1 - g s^a): the numerator is multiplied by
    /// (1 - s^{a ord g}) / (1 - g s^a) and (1 - s^{a ord g}) joins the denominator.
    void divide_binomial(std::int64_t g, std::size_t a);

    /// h-component as an integer rational function.
    [[nodiscard]] BinomialRational component(std::int64_t h) const;
    /// Sum of all components.
    [[nodiscard]] BinomialRational augmentation() const;

private:
    FiniteAbelianGroup group_;
    std::size_t order_;
    std::size_t scale_;
    std::vector<std::int64_t> num_;  // num_[deg * order_ + x]
    std::vector<std::size_t> denom_;
};

/// prod_w (1 - [E_w^*] t^{a_w})^{delta_w - 2} over the vertices of the
/// lattice's graph, with a_w = -det * (E_v^*, E_w^*) (an integer) and
/// delta_w = degree(w) + extra_degree[w] (extra_degree may be empty).
/// Every vertex must lie in the component of v.
GroupSeries zeta_series(const Lattice& lat, int v, const std::vector<int>& extra_degree = {});

/// Normalized Alexander polynomial of the knot given by the single arrow of
/// `g` (resolution graph or suspension graph): Delta(t) / (1 - t) is the
/// 0-component of prod_v (1 - [E_v^*] t^{m_v})^{delta_v - 2}, where m is the
/// anti-dual of the arrow vertex (required integral) and delta counts the arrow.
Poly alexander_polynomial(const PlumbingGraph& g);

/// (1 - t^{ab})(1 - t) / ((1 - t^a)(1 - t^b)).
Poly torus_knot_alexander(std::int64_t a, std::int64_t b);

}  // namespace swcap
