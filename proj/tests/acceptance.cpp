// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "helpers.hpp"
#include "swcap/builders.hpp"
#include "swcap/covers.hpp"
#include "swcap/latcoh.hpp"
#include "swcap/selftest.hpp"
#include "swcap/sw.hpp"

using namespace swcap;

namespace {

struct Line {
    int id;
    CheckResult r;
};

CheckResult run(std::string name, const std::function<bool(std::ostream&)>& body) {
    CheckResult r;
    r.name = std::move(name);
    auto t0 = std::chrono::steady_clock::now();
    try {
        std::ostringstream os;
        r.pass = body(os);
        r.detail = os.str();
    } catch (const std::exception& e) {
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

CheckResult with_limit(CheckResult r, double limit) {
    if (r.seconds > limit) {
        r.pass = false;
        r.detail += " (over the " + std::to_string(static_cast<int>(limit)) + " s limit)";
    }
    return r;
}

KnotSpec random_torus_knot(std::mt19937_64& rng, std::int64_t max_b) {
    while (true) {
        std::int64_t a = 2 + static_cast<std::int64_t>(rng() % 3);
        std::int64_t b = a + 1 + static_cast<std::int64_t>(rng() % static_cast<unsigned>(max_b - a));
        if (std::gcd(a, b) == 1) return {a, b};
    }
}

CheckResult lens_spaces() {
    return run("random lens space graphs have s_h = 0", [](std::ostream& os) {
        SWEngine engine;
        std::mt19937_64 rng(2024);
        int bad = 0;
        for (int it = 0; it < 50; ++it) {
            std::int64_t p = 2 + static_cast<std::int64_t>(rng() % 59), q;
            do q = 1 + static_cast<std::int64_t>(rng() % static_cast<unsigned>(p - 1));
            while (std::gcd(p, q) != 1 && p > 2);
            auto g = hj_chain(hj_continued_fraction(p, q));
            Lattice lat(g);
            auto t = engine.class_table(g);
            bool ok = lat.det() == p;
            for (auto s : t) ok = ok && s == 0;
            if (!ok) {
                ++bad;
                os << "L(" << p << "," << q << ") ";
            }
        }
        os << "50 chains, " << bad << " failures";
        return bad == 0;
    });
}

CheckResult oracle() {
    return run("cut-and-paste agrees with lattice cohomology", [](std::ostream& os) {
        SWEngine engine;
        std::mt19937_64 rng(77);
        EuOptions opt;
        opt.max_points = std::size_t{1} << 22;
        int trees = 0, instances = 0, inconclusive = 0, mismatch = 0, moves = 0;
        while (trees < 40) {
            auto g = testutil::draw_tree(rng, 3, 6, -6, -1, 40, [](const PlumbingGraph&) { return true; });
            ++trees;
            Lattice lat(g);
            auto table = engine.class_table(g);
            for (std::int64_t h = 0; h < lat.group().order(); ++h) {
                ++instances;
                auto e = lattice_eu(lat, lat.minimal_rep(h), opt);
                if (!e.conclusive) {
                    ++inconclusive;
                    continue;
                }
                if (e.eu != table[h]) ++mismatch;
            }
            for (int v = 0; v < g.size(); ++v)
                if (engine.class_table(g, v) != table) ++moves;
            PlumbingGraph up;
            if (!g.edges().empty() && rng() % 2) {
                auto [a, b] = g.edges()[rng() % g.edges().size()];
                up = blow_up_edge(g, a, b);
            } else {
                up = blow_up_vertex(g, static_cast<int>(rng() % static_cast<unsigned>(g.size())));
            }
            Lattice ul(up);
            for (std::int64_t h = 0; h < lat.group().order(); ++h) {
                auto star = lat.minimal_rep(h).star;
                star.resize(static_cast<std::size_t>(ul.rank()), 0);
                if (engine.s_invariant(up, ul.from_star(star)) != table[h]) ++moves;
            }
        }
        os << trees << " trees, " << instances << " classes, " << mismatch << " mismatches, " << inconclusive << " inconclusive, "
           << moves << " move violations";
        return mismatch == 0 && moves == 0 && 10 * inconclusive < instances;
    });
}

CheckResult shortcut() {
    return run("integral surgery shortcut matches cut-and-paste", [](std::ostream& os) {
        SWEngine engine;
        struct Case {
            std::vector<KnotSpec> k;
            std::int64_t d;
        };
        std::vector<Case> cases{{{{6, 7}, {2, 9}, {2, 5}}, 8}, {{{3, 4}}, 4}, {{{2, 7}}, 4}};
        std::mt19937_64 rng(5);
        for (int i = 0; i < 10; ++i) cases.push_back({{random_torus_knot(rng, 9)}, 2 + static_cast<std::int64_t>(rng() % 9)});
        int bad = 0;
        for (const auto& cs : cases) {
            std::vector<PlumbingGraph> ks;
            for (auto k : cs.k) ks.push_back(torus_knot_graph(k));
            auto rep = integral_surgery_table(ks, cs.d, engine);
            bool ok = rep.consistent;
            for (const auto& row : rep.rows) ok = ok && row.shortcut == row.cut_paste && row.c_chi == row.c_floor;
            if (!ok) {
                ++bad;
                os << "T(" << cs.k[0].a << "," << cs.k[0].b << ") d=" << cs.d << " differs; ";
            }
        }
        os << cases.size() << " instances, " << bad << " failures";
        return bad == 0;
    });
}

CheckResult structure() {
    return run("surgery graph and cover identities for p <= 20", [](std::ostream& os) {
        SWEngine engine;
        std::mt19937_64 rng(31);
        int built = 0, not_qhs = 0, bad = 0;
        for (int it = 0; it < 24; ++it) {
            std::vector<KnotSpec> ks{random_torus_knot(rng, 6)};
            if (rng() % 3 == 0) ks.push_back(random_torus_knot(rng, 6));
            std::int64_t p = 2 + static_cast<std::int64_t>(rng() % 19), q;
            do q = 1 + static_cast<std::int64_t>(rng() % static_cast<unsigned>(p - 1));
            while (std::gcd(p, q) != 1 && p > 2);
            auto sg = surgery_graph(ks, p, q);
            ++built;
            std::ostringstream why;
            PlumbingGraph g = strip_decorations(sg.graph);
            Lattice lat(g);
            if (lat.det() != p) why << "det ";
            // (a)
            if (-p * lat.pair_star(sg.u, sg.u) != Rat(q) || -p * lat.pair_star(sg.u_prime, sg.u) != Rat(1)) why << "(a) ";
            // (b)
            for (std::size_t j = 0; j < sg.blocks.size(); ++j) {
                Lattice lj(strip_decorations(sg.knots[j]));
                const auto& blk = sg.blocks[j];
                auto uj = static_cast<int>(std::find(blk.begin(), blk.end(), sg.u_j[j]) - blk.begin());
                for (std::size_t v = 0; v < blk.size(); ++v)
                    if (q * lj.pair_star(uj, static_cast<int>(v)) != p * lat.pair_star(sg.u, blk[v])) why << "(b) ";
            }
            for (auto s : engine.class_table(g)) (void)s;  // throws on a non-integral value
            try {
                auto uac = uac_surgery(sg);
                Lattice cl(uac.graph);
                Int prod = 1;
                for (const auto& s : uac.suspensions) prod *= Lattice(strip_decorations(s.graph)).det();
                if (cl.det() != prod) why << "det(cover) ";
                // (c)
                if (-cl.pair_star(uac.w, uac.w) != Rat(q) || -cl.pair_star(uac.w_prime, uac.w) != Rat(1)) why << "(c) ";
                // (d)
                for (std::size_t j = 0; j < uac.blocks.size(); ++j) {
                    Lattice lj(strip_decorations(uac.suspensions[j].graph));
                    const auto& blk = uac.blocks[j];
                    for (std::size_t v = 0; v < blk.size(); ++v)
                        if (q * lj.pair_star(uac.suspensions[j].w, static_cast<int>(v)) != cl.pair_star(uac.w, blk[v])) why << "(d) ";
                }
            } catch (const NotQHSError&) {
                ++not_qhs;
            }
            if (!why.str().empty()) {
                ++bad;
                os << "p=" << p << " q=" << q << ": " << why.str() << "; ";
            }
        }
        os << built << " instances (" << not_qhs << " with a non-QHS cover), " << bad << " failures";
        return bad == 0;
    });
}

}  // namespace

int main() {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<Line> lines;
    auto report = [&](int id, CheckResult r) {
        std::printf("[%s] %2d  %-52s %6.2fs  %s\n", r.pass ? "PASS" : "FAIL", id, r.name.c_str(), r.seconds, r.detail.c_str());
        std::fflush(stdout);
        lines.push_back({id, std::move(r)});
    };
    SWEngine engine;
    report(1, with_limit(check_three_knot_surgery(engine), 60));
    report(2, with_limit(check_cap_failure(engine), 10));
    report(3, with_limit(check_cap_success(engine), 10));
    report(4, with_limit(check_t34_surgery(engine), 10));
    report(5, with_limit(check_t27_surgery(engine), 10));
    report(6, lens_spaces());
    report(7, oracle());
    report(8, shortcut());
    report(9, check_alexander());
    report(10, structure());
    int failed = 0;
    for (const auto& l : lines) failed += l.r.pass ? 0 : 1;
    double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%d/%zu criteria passed in %.1fs\n", static_cast<int>(lines.size()) - failed, lines.size(), total);
    return failed == 0 ? 0 : 1;
}
