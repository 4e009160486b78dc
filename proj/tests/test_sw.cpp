#include <doctest.h>

#include "helpers.hpp"
#include "swcap/covers.hpp"
#include "swcap/group_series.hpp"
#include "swcap/selftest.hpp"
#include "swcap/sw.hpp"

using namespace swcap;

namespace {

std::vector<PlumbingGraph> knots(std::vector<KnotSpec> ks) {
    std::vector<PlumbingGraph> out;
    for (auto k : ks) out.push_back(torus_knot_graph(k));
    return out;
}

// pullback of l' along a blow-up: same anti-dual coordinates, 0 on the new vertex
DualVector pullback(const Lattice& up, const DualVector& l) {
    std::vector<Int> star = l.star;
    star.resize(static_cast<std::size_t>(up.rank()), 0);
    return up.from_star(star);
}

}  // namespace

TEST_SUITE("sw-engine") {
TEST_CASE("Alexander polynomials") {
    CHECK(alexander_polynomial(torus_knot_graph({2, 3})) == Poly(std::vector<std::int64_t>{1, -1, 1}));
    CHECK(alexander_polynomial(torus_knot_graph({6, 7})) == torus_knot_alexander(6, 7));
    auto d = torus_knot_alexander(6, 7);
    CHECK(d.eval_at_one() == 1);
    CHECK(d.derivative_at_one() == 15);
}

TEST_CASE("polynomial parts") {
    BinomialRational a{Poly::constant(1), {1}, 1};
    CHECK(a.polynomial_part().is_zero());
    BinomialRational b{Poly::monomial(1, 3), {1}, 1};
    CHECK(b.polynomial_part() == Poly(std::vector<std::int64_t>{-1, -1, -1}));
    CHECK(b.polynomial_part_at_one() == -3);
    // invariant under t -> t^k
    BinomialRational c{Poly(std::vector<std::int64_t>{0, 0, 0, 0, 0, 5, 0, -2}), {2, 3}, 1};
    CHECK(c.in_t().polynomial_part_at_one() == c.substitute_power(4).in_t().polynomial_part_at_one());
}

TEST_CASE("equivariant series") {
    // trivial H: the only component is the whole product
    auto t = torus_knot_graph({2, 5});
    Lattice lat(strip_decorations(t));
    auto s = zeta_series(lat, t.arrows()[0].vertex);
    CHECK(same_rational_function(s.component(0), s.augmentation()));
    // augmentation at u of an integral surgery graph is prod Delta_j / (1 - t)^2
    auto ks = knots({{6, 7}, {2, 9}, {2, 5}});
    auto sg = surgery_graph(ks, 8, 1);
    Lattice gl(strip_decorations(sg.graph));
    BinomialRational prod{Poly::constant(1), {1, 1}, 1};
    for (const auto& k : ks) prod.numerator = prod.numerator * alexander_polynomial(k);
    CHECK(same_rational_function(zeta_series(gl, sg.u).augmentation(), prod));
}

TEST_CASE("chains have vanishing invariants") {
    SWEngine engine;
    std::mt19937_64 rng(2);
    for (int it = 0; it < 20; ++it) {
        std::vector<int> e;
        int n = 1 + static_cast<int>(rng() % 5);
        for (int i = 0; i < n; ++i) e.push_back(-2 - static_cast<int>(rng() % 4));
        for (auto x : engine.class_table(chain_graph(e))) CHECK(x == 0);
    }
    PlumbingGraph s3;
    s3.add_vertex(-1);
    auto rep = sw_table(s3, engine);
    REQUIRE(rep.rows.size() == 1);
    CHECK(rep.rows[0].s == 0);
    CHECK(rep.rows[0].i == 0);
    CHECK(rep.rows[0].sw == 0);
}

TEST_CASE("det-2 reference graphs") {
    SWEngine engine;
    CHECK(engine.class_table(cap_fail_base()) == std::vector<std::int64_t>{15, 14});
    CHECK(engine.class_table(cap_fail_cover())[0] == 21);
    auto t = engine.class_table(cap_hold_base());
    CHECK(t == std::vector<std::int64_t>{147, 132});
    CHECK(engine.class_table(cap_hold_cover())[0] == 279);
}

TEST_CASE("recursion vertex, blow-up and representative independence") {
    SWEngine engine;
    std::mt19937_64 rng(8);
    int graphs = 0;
    while (graphs < 12) {
        auto g = testutil::draw_tree(rng, 4, 8, -5, -1, 60, [](const PlumbingGraph& x) { return !x.is_chain(); });
        ++graphs;
        Lattice lat(g);
        auto table = engine.class_table(g);
        for (int v = 0; v < g.size(); ++v)
            if (g.degree(v) >= 3) CHECK(engine.class_table(g, v) == table);
        // vertex and edge blow-ups
        std::vector<PlumbingGraph> ups{blow_up_vertex(g, static_cast<int>(rng() % static_cast<unsigned>(g.size())))};
        auto [a, b] = g.edges()[rng() % g.edges().size()];
        ups.push_back(blow_up_edge(g, a, b));
        for (const auto& up : ups) {
            Lattice ul(up);
            for (std::int64_t h = 0; h < lat.group().order(); ++h) CHECK(engine.s_invariant(up, pullback(ul, lat.minimal_rep(h))) == table[h]);
        }
        for (std::int64_t h = 0; h < lat.group().order(); ++h) {
            auto r = lat.minimal_rep(h);
            LatticeVector x(g.size());
            for (auto& c : x) c = static_cast<long>(rng() % 4);
            auto l = lat.add(r, lat.from_lattice(x));
            CHECK(Rat(engine.s_invariant(g, l)) - lat.chi(l) == Rat(table[h]) - lat.chi(r));
        }
        auto rep = sw_table(g, engine);
        for (const auto& row : rep.rows) CHECK(row.sw - row.i == row.s);
    }
}

TEST_CASE("integral surgery shortcut") {
    SWEngine engine;
    auto r1 = integral_surgery_table(knots({{2, 3}, {2, 5}}), 1, engine);
    CHECK(r1.rows.size() == 1);
    CHECK(r1.total == r1.q_at_one);
    CHECK(r1.consistent);
    auto r = integral_surgery_table(knots({{3, 4}}), 4, engine);
    CHECK(r.total == 9);
    CHECK(r.consistent);
}

TEST_CASE("summed polynomial identity and lens correction sum") {
    SWEngine engine;
    struct Case {
        std::vector<KnotSpec> k;
        std::int64_t p, q;
    };
    for (const auto& cs : std::vector<Case>{{{{3, 4}}, 4, 1}, {{{2, 7}}, 4, 1}, {{{2, 3}, {2, 5}}, 5, 2}, {{{2, 3}}, 7, 3}}) {
        auto sg = surgery_graph(cs.k, cs.p, cs.q);
        PlumbingGraph g = strip_decorations(sg.graph);
        Lattice lat(g);
        auto terms = engine.cut_terms(g, sg.u);
        std::int64_t lhs = 0;
        for (auto x : terms.pol) lhs += x;
        auto uac = uac_surgery(sg);
        Lattice cl(uac.graph);
        CHECK(lhs == zeta_series(cl, uac.w).component(0).polynomial_part_at_one());
        if (!sg.chain.empty()) {
            PlumbingGraph g0 = g.induced(sg.chain);
            Lattice l0(g0);
            std::int64_t sum = 0;
            for (std::int64_t h = 0; h < lat.group().order(); ++h) sum += engine.s_invariant(g0, restrict_to(l0, lat.minimal_rep(h), sg.chain));
            CHECK(sum == 0);
        }
    }
}

TEST_CASE("suspension geometric genus") {
    SWEngine engine;
    CHECK(suspension_pg(torus_knot_graph({2, 3}), 1) == 0);
    CHECK(suspension_pg(torus_knot_graph({3, 4}), 16) == 9);
    std::int64_t sum = 0;
    for (const auto& k : knots({{6, 7}, {2, 9}, {2, 5}})) sum += suspension_pg(k, 8);
    CHECK(sum == 34);
    // non-coprime cases against the cover pipeline
    for (auto [k, p] : std::vector<std::pair<KnotSpec, std::int64_t>>{{{6, 7}, 8}, {{2, 9}, 4}, {{3, 4}, 8}, {{2, 5}, 4}, {{3, 4}, 16}}) {
        auto res = torus_knot_graph(k);
        auto susp = suspension_graph(res, p);
        CHECK(suspension_pg(res, p) == engine.class_table(susp.graph)[0]);
    }
}
}
