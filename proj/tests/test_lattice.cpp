#include <doctest.h>

#include "helpers.hpp"
#include "swcap/builders.hpp"
#include "swcap/lattice.hpp"

using namespace swcap;

namespace {

PlumbingGraph single(int e) {
    PlumbingGraph g;
    g.add_vertex(e);
    return g;
}

PlumbingGraph e8() {
    PlumbingGraph g = chain_graph({-2, -2, -2, -2, -2, -2, -2});
    g.add_edge(4, g.add_vertex(-2));
    return g;
}

// product of determinants of the components of g minus the a-b path
Int path_deletion_det(const PlumbingGraph& g, int a, int b) {
    auto path = g.path(a, b);
    PlumbingGraph rest = g.without(path);
    Int d = 1;
    for (const auto& c : rest.components()) d *= Lattice(rest.induced(c)).det();
    return d;
}

}  // namespace

TEST_SUITE("lattice-core") {
TEST_CASE("intersection form and definiteness") {
    CHECK(intersection_matrix(single(-3)) == IntMatrix{{-3}});
    CHECK(is_negative_definite(single(-3)));
    CHECK(intersection_matrix(chain_graph({-2, -2})) == IntMatrix{{-2, 1}, {1, -2}});
    CHECK(is_negative_definite(chain_graph({-2, -2})));
    CHECK_FALSE(is_negative_definite(single(0)));
    CHECK_THROWS_AS(Lattice(single(0)), InputError);
    PlumbingGraph cyc = chain_graph({-3, -3, -3});
    cyc.add_edge(0, 2);
    CHECK_THROWS_AS(Lattice{cyc}, StructureError);
}

TEST_CASE("determinant") {
    CHECK(Lattice(single(-3)).det() == 3);
    CHECK(Lattice(chain_graph({-2, -2})).det() == 3);
    for (std::int64_t p : {1, 2, 5, 8, 13})
        for (std::int64_t q : {1, 2, 3})
            if (std::gcd(p, q) == 1) CHECK(Lattice(strip_decorations(surgery_graph(std::vector<KnotSpec>{{2, 3}}, p, q).graph)).det() == p);
}

TEST_CASE("anti-dual vectors") {
    Lattice l1(single(-7));
    CHECK(l1.anti_dual(0).e[0] == Rat(1, 7));
    Lattice le(e8());
    CHECK(le.det() == 1);
    for (int v = 0; v < 8; ++v)
        for (const auto& x : le.anti_dual(v).e) CHECK(x.get_den() == 1);
    for (std::int64_t q : {1, 2, 3, 5}) {
        auto sg = surgery_graph(std::vector<KnotSpec>{{2, 5}}, 7, q);
        Lattice lat(strip_decorations(sg.graph));
        CHECK(-7 * lat.pair_star(sg.u, sg.u) == q);
        CHECK(-7 * lat.pair_star(sg.u_prime, sg.u) == 1);
    }
    // (E_w, E_v^*) = -delta
    std::mt19937_64 rng(3);
    for (int it = 0; it < 10; ++it) {
        auto g = testutil::draw_tree(rng, 2, 7, -5, -1, 1000, [](const PlumbingGraph&) { return true; });
        Lattice lat(g);
        for (int v = 0; v < g.size(); ++v) {
            auto d = lat.anti_dual(v);
            for (int w = 0; w < g.size(); ++w) {
                LatticeVector ew(g.size(), 0);
                ew[w] = 1;
                CHECK(lat.pair(d, lat.from_lattice(ew)) == (v == w ? -1 : 0));
                CHECK(d.e[w] > 0);
            }
        }
    }
}

TEST_CASE("canonical class") {
    Lattice l2(chain_graph({-2, -2, -2}));
    for (const auto& x : l2.canonical().e) CHECK(x == 0);
    Lattice l5(single(-5));
    CHECK(l5.canonical().e[0] == Rat(-3, 5));
    PlumbingGraph tref;
    int c = tref.add_vertex(-1);
    tref.add_edge(c, tref.add_vertex(-2));
    tref.add_edge(c, tref.add_vertex(-3));
    Lattice lt(tref);
    for (int v = 0; v < 3; ++v) {
        LatticeVector ev(3, 0);
        ev[v] = 1;
        CHECK(lt.pair(lt.canonical(), lt.from_lattice(ev)) == -tref.euler(v) - 2);
    }
}

TEST_CASE("chi") {
    std::mt19937_64 rng(5);
    for (int it = 0; it < 10; ++it) {
        auto g = testutil::draw_tree(rng, 1, 6, -6, -1, 500, [](const PlumbingGraph&) { return true; });
        Lattice lat(g);
        CHECK(lat.chi(lat.zero()) == 0);
        for (int v = 0; v < g.size(); ++v) {
            LatticeVector ev(g.size(), 0);
            ev[v] = 1;
            CHECK(lat.chi(lat.from_lattice(ev)) == 1);
        }
    }
    Lattice l3(single(-3));
    CHECK(l3.chi(l3.from_lattice({2})) == 5);
}

TEST_CASE("homology and representatives") {
    Lattice l(chain_graph({-2, -2}));
    CHECK(l.group().factors() == std::vector<std::int64_t>{3});
    CHECK(l.minimal_rep(0) == l.zero());
    for (std::int64_t p : {4, 8, 9}) {
        auto sg = surgery_graph(std::vector<KnotSpec>{{2, 3}, {2, 5}}, p, 1);
        Lattice lat(strip_decorations(sg.graph));
        CHECK(lat.group().factors() == std::vector<std::int64_t>{p});
        CHECK(lat.group().order_of(lat.class_of(lat.anti_dual(sg.u_prime))) == p);
    }
    std::mt19937_64 rng(9);
    for (int it = 0; it < 20; ++it) {
        auto g = testutil::draw_tree(rng, 1, 7, -6, -1, 200, [](const PlumbingGraph&) { return true; });
        Lattice lat(g);
        CHECK(lat.group().order() == lat.det());
        for (std::int64_t h = 0; h < lat.group().order(); ++h) {
            auto r = lat.minimal_rep(h);
            CHECK(lat.class_of(r) == h);
            for (const auto& x : r.e) CHECK((x >= 0 && x < 1));
            LatticeVector shift(g.size());
            for (auto& x : shift) x = static_cast<long>(rng() % 5) - 2;
            auto moved = lat.add(r, lat.from_lattice(shift));
            CHECK(lat.class_of(moved) == h);
            CHECK(Rat(lat.chi(moved) - lat.chi(r)).get_den() == 1);
        }
        // homomorphism
        for (int a = 0; a < g.size(); ++a)
            for (int b = 0; b < g.size(); ++b)
                CHECK(lat.class_of(lat.add(lat.anti_dual(a), lat.anti_dual(b))) ==
                      lat.group().add(lat.class_of(lat.anti_dual(a)), lat.class_of(lat.anti_dual(b))));
    }
}

TEST_CASE("i invariant") {
    Lattice l(chain_graph({-2, -2, -2, -2}));
    CHECK(l.i_invariant(l.zero()) == Rat(1, 2));
    Lattice s(single(-1));
    CHECK(s.i_invariant(s.zero()) == 0);
}

TEST_CASE("restriction to components") {
    auto sg = surgery_graph(std::vector<KnotSpec>{{2, 3}, {3, 4}}, 5, 1);
    PlumbingGraph g = strip_decorations(sg.graph);
    Lattice lat(g);
    auto f = std::vector<LatticeVector>{divisor_of_f(sg.knots[0]), divisor_of_f(sg.knots[1])};
    for (std::size_t j = 0; j < sg.blocks.size(); ++j) {
        PlumbingGraph gj = g.induced(sg.blocks[j]);
        Lattice lj(gj);
        CHECK(restrict_to(lj, lat.canonical(), sg.blocks[j]) == lj.canonical());
        CHECK(restrict_to(lj, lat.anti_dual(sg.u_prime), sg.blocks[j]) == lj.zero());
        for (std::int64_t h = 0; h < 5; ++h) {
            auto r = lat.minimal_rep(lat.class_of(lat.scale(lat.anti_dual(sg.u_prime), h)));
            LatticeVector expect;
            for (std::size_t v = 0; v < sg.blocks[j].size(); ++v) expect.push_back(-floor_div(f[j][v] * h, Int(5)));
            CHECK(restrict_to(lj, r, sg.blocks[j]) == lj.from_lattice(expect));
        }
    }
}

TEST_CASE("path-deletion determinant identity") {
    std::mt19937_64 rng(21);
    for (int it = 0; it < 20; ++it) {
        auto g = testutil::draw_tree(rng, 2, 7, -6, -1, 5000, [](const PlumbingGraph&) { return true; });
        Lattice lat(g);
        for (int a = 0; a < g.size(); ++a)
            for (int b = 0; b < g.size(); ++b) CHECK(lat.adjugate()[a][b] == path_deletion_det(g, a, b));
    }
}

TEST_CASE("forests act componentwise") {
    PlumbingGraph g = chain_graph({-2, -2});
    g.add_vertex(-5);
    CHECK(Lattice(g).det() == 15);
}

TEST_CASE("primary factors") {
    CHECK(primary_factors({315}) == std::vector<std::int64_t>{5, 7, 9});
    CHECK(primary_factors({2, 12}) == std::vector<std::int64_t>{2, 3, 4});
}
}
