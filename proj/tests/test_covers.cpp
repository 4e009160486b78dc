#include <doctest.h>

#include "swcap/canonical.hpp"
#include "swcap/covers.hpp"
#include "swcap/selftest.hpp"

using namespace swcap;

namespace {

Int det_of(const PlumbingGraph& g) { return Lattice(strip_decorations(g)).det(); }

// (sum m_v F_v + arrows, F_w) = 0 on every vertex of a cover
bool orthogonal(const PlumbingGraph& g) {
    const auto& m = *g.multiplicities();
    for (int v = 0; v < g.size(); ++v) {
        Int s = Int(g.euler(v)) * m[v];
        for (int w : g.neighbors(v)) s += m[w];
        for (const auto& a : g.arrows())
            if (a.vertex == v) s += a.multiplicity;
        if (s != 0) return false;
    }
    return true;
}

}  // namespace

TEST_SUITE("covers") {
TEST_CASE("degree one cover is the base") {
    auto t = torus_knot_graph({3, 5});
    auto c = cyclic_cover(t, 1);
    CHECK(canonical_form(c.graph, true) == canonical_form(t, true));
}

TEST_CASE("suspension graphs") {
    auto s23 = suspension_graph(torus_knot_graph({2, 3}), 5);
    CHECK(det_of(s23.graph) == 1);
    CHECK(s23.graph.is_tree());
    struct Case {
        KnotSpec k;
        std::int64_t order;
    };
    for (auto [k, order] : std::vector<Case>{{{6, 7}, 7}, {{2, 9}, 9}, {{2, 5}, 5}}) {
        auto s = suspension_graph(torus_knot_graph(k), 8);
        Lattice lat(strip_decorations(s.graph));
        CHECK(lat.group().factors() == std::vector<std::int64_t>{order});
        // div(z) is the anti-dual of w
        LatticeVector z(s.z.begin(), s.z.end());
        CHECK(lat.from_lattice(z) == lat.anti_dual(s.w));
        REQUIRE(s.graph.arrows().size() == 1);
        CHECK(s.graph.arrows()[0].vertex == s.w);
    }
}

TEST_CASE("covers carry an orthogonal lifted divisor") {
    for (auto [k, n] : std::vector<std::pair<KnotSpec, std::int64_t>>{{{2, 3}, 5}, {{3, 4}, 16}, {{6, 7}, 8}, {{2, 9}, 4}}) {
        auto res = cyclic_cover(torus_knot_graph(k), n);
        CHECK(res.graph.is_tree());
        CHECK(is_negative_definite(strip_decorations(res.graph)));
        CHECK(orthogonal(res.graph));
        CHECK(static_cast<int>(res.fibers.size()) == torus_knot_graph(k).size());
    }
}

TEST_CASE("cover errors") {
    auto t = torus_knot_graph({2, 3});
    PlumbingGraph bad = strip_decorations(t);
    bad.set_multiplicities({1, 1, 1});
    CHECK_THROWS_AS(cyclic_cover(bad, 2), InputError);
    // x^2 + y^3 + z^6 has an elliptic exceptional curve
    CHECK_THROWS_AS(suspension_graph(t, 6), NotQHSError);
    PlumbingGraph d4;
    int c = d4.add_vertex(-2);
    for (int i = 0; i < 3; ++i) d4.add_edge(c, d4.add_vertex(-2));
    CHECK_THROWS_AS(uac_graph(d4), InputError);
}

TEST_CASE("universal abelian covers of the det-2 reference graphs") {
    CHECK(isomorphic(uac_graph(cap_fail_base()), cap_fail_cover()));
    CHECK(isomorphic(uac_graph(cap_hold_base()), cap_hold_cover()));
    CHECK(Lattice(cap_fail_cover()).det() == 3);
}

TEST_CASE("surgery cover structure") {
    struct Case {
        std::vector<KnotSpec> k;
        std::int64_t p, q;
    };
    for (const auto& cs : std::vector<Case>{{{{2, 3}}, 5, 2}, {{{2, 3}, {2, 5}}, 7, 3}, {{{3, 4}}, 4, 1}, {{{2, 5}}, 3, 2}, {{{6, 7}, {2, 9}, {2, 5}}, 8, 1}}) {
        auto sg = surgery_graph(cs.k, cs.p, cs.q);
        auto uac = uac_surgery(sg);
        Lattice cl(uac.graph);
        const Int q = cs.q;
        CAPTURE(cs.p);
        CAPTURE(cs.q);
        CHECK(uac.chain.size() == static_cast<std::size_t>(cs.q - 1));
        for (int v : uac.chain) CHECK(uac.graph.euler(v) == -2);
        // det(Gamma) = prod det(Gamma_j)
        Int prod = 1;
        for (const auto& s : uac.suspensions) prod *= det_of(s.graph);
        CHECK(cl.det() == prod);
        // -<F_w*, F_w*> = q and -<F_w'*, F_w*> = 1
        CHECK(-cl.pair_star(uac.w, uac.w) == q);
        CHECK(-cl.pair_star(uac.w_prime, uac.w) == 1);
        // q <F_wj*, F_v*>_j = <F_w*, F_v*>
        for (std::size_t j = 0; j < uac.blocks.size(); ++j) {
            Lattice lj(strip_decorations(uac.suspensions[j].graph));
            const auto& blk = uac.blocks[j];
            for (std::size_t v = 0; v < blk.size(); ++v)
                CHECK(q * lj.pair_star(uac.suspensions[j].w, static_cast<int>(v)) == cl.pair_star(uac.w, blk[v]));
        }
        // edge-deletion recursion det = det(G - e) - det(G - {a, b})
        for (auto [a, b] : uac.graph.edges()) {
            PlumbingGraph cut;
            for (const auto& v : uac.graph.vertices()) cut.add_vertex(v.id, v.euler);
            for (auto [x, y] : uac.graph.edges())
                if (!(x == a && y == b)) cut.add_edge(x, y);
            CHECK(cl.det() == Lattice(cut).det() - Lattice(uac.graph.without({a, b})).det());
        }
        // general cover of the surgery graph agrees up to blowing down
        auto general = uac_graph(strip_decorations(sg.graph));
        CHECK(canonical_form(general) == canonical_form(blow_down_all(uac.graph)));
    }
}
}
