#include "swcap/covers.hpp"

#include <numeric>
#include <string>

namespace swcap {

namespace {

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
    if (m == 1) return 0;
    std::int64_t g = m, x = 0, x1 = 1, r = ((a % m) + m) % m;
    while (r != 0) {
        std::int64_t q = g / r;
        std::int64_t t = g - q * r;
        g = r;
        r = t;
        t = x - q * x1;
        x = x1;
        x1 = t;
    }
    if (g != 1) throw std::logic_error("no modular inverse");
    return ((x % m) + m) % m;
}

struct Link {
    std::vector<int> euler;
    std::vector<std::int64_t> mult;  // ord of z along each string curve
    std::int64_t far_mult = 0;       // ord of z along the far end (arrow lifts)
};

// Resolution string of the normalization of z^n = x^a y^b, gcd(n, a, b) = 1,
// listed from the x = 0 side. Toric picture: the lattice is
// {(al, be) : a al + b be = 0 mod n} in the first quadrant.
Link hj_string(std::int64_t n, std::int64_t a, std::int64_t b) {
    const std::int64_t ga = std::gcd(n, a);
    const std::int64_t t1 = n / ga;
    const std::int64_t t2 = n / std::gcd(n, b);
    const std::int64_t x = t1 == 1 ? 0 : ((-(b % t1) * mod_inverse(a / ga, t1)) % t1 + t1) % t1;
    Link out;
    out.far_mult = b / std::gcd(n, b);
    if (t2 % ga != 0) throw std::logic_error("string lattice is inconsistent");
    const std::int64_t big = t2 / ga;
    if (big == 1) return out;
    const std::int64_t small = big * x / t1;
    if (small * t1 != big * x) throw std::logic_error("string lattice is inconsistent");
    auto ks = hj_continued_fraction(big, small);
    std::int64_t pa = t1, pb = 0, ca = x, cb = ga;
    for (auto k : ks) {
        out.euler.push_back(static_cast<int>(-k));
        std::int64_t num = a * ca + b * cb;
        if (num % n != 0) throw std::logic_error("string multiplicity is not integral");
        out.mult.push_back(num / n);
        std::int64_t na = k * ca - pa, nb = k * cb - pb;
        pa = ca;
        pb = cb;
        ca = na;
        cb = nb;
    }
    if (ca != 0 || cb != t2) throw std::logic_error("string does not close at the far ray");
    return out;
}

}  // namespace

void check_branch_divisor(const PlumbingGraph& base) {
    if (!base.multiplicities()) throw InputError("branch divisor needs vertex multiplicities");
    const auto& m = *base.multiplicities();
    for (int v = 0; v < base.size(); ++v) {
        if (m[v] <= 0) throw InputError("branch multiplicities must be positive");
        std::int64_t acc = static_cast<std::int64_t>(base.euler(v)) * m[v];
        for (int w : base.neighbors(v)) acc += m[w];
        for (const auto& ar : base.arrows())
            if (ar.vertex == v) acc += ar.multiplicity;
        if (acc != 0)
            throw InputError("branch divisor is not the divisor of a function (vertex " + std::to_string(base.id(v)) + ")");
    }
    for (const auto& ar : base.arrows())
        if (ar.multiplicity <= 0) throw InputError("arrow multiplicities must be positive");
}

CoverResult cyclic_cover(const PlumbingGraph& base, std::int64_t n) {
    if (n < 1) throw InputError("cover degree must be positive");
    base.require_tree();
    check_branch_divisor(base);
    const auto& m = *base.multiplicities();
    const int nb = base.size();

    CoverResult out;
    PlumbingGraph& g = out.graph;
    std::vector<std::int64_t> z;
    std::vector<int> pending;  // cover vertices whose Euler number is solved later
    std::vector<std::pair<int, std::int64_t>> lifted_arrows;

    out.fibers.resize(nb);
    std::vector<std::int64_t> comps(nb);
    for (int v = 0; v < nb; ++v) {
        const std::int64_t dv = std::gcd(n, m[v]);
        std::int64_t nv = dv;
        std::int64_t special = 0, branch = 0;
        for (int w : base.neighbors(v)) {
            nv = std::gcd(nv, m[w]);
            ++special;
        }
        for (const auto& ar : base.arrows())
            if (ar.vertex == v) {
                nv = std::gcd(nv, ar.multiplicity);
                ++special;
            }
        for (int w : base.neighbors(v)) branch += std::gcd(dv, m[w]);
        for (const auto& ar : base.arrows())
            if (ar.vertex == v) branch += std::gcd(dv, ar.multiplicity);
        // Riemann-Hurwitz on one component: 2 - 2g = deg (2 - #special) + #preimages
        const std::int64_t euler_char = (dv / nv) * (2 - special) + branch / nv;
        if (euler_char != 2)
            throw NotQHSError("cover curve over vertex " + std::to_string(base.id(v)) + " has positive genus");
        comps[v] = nv;
        for (std::int64_t k = 0; k < nv; ++k) {
            out.fibers[v].push_back(g.add_vertex(0));
            z.push_back(m[v] / dv);
            pending.push_back(out.fibers[v].back());
        }
    }

    auto attach_string = [&](int from, const Link& s) {
        int prev = from;
        for (std::size_t i = 0; i < s.euler.size(); ++i) {
            int x = g.add_vertex(s.euler[i]);
            z.push_back(s.mult[i]);
            g.add_edge(prev, x);
            prev = x;
        }
        return prev;
    };
    auto safe_edge = [&](int x, int y) {
        if (g.adjacent(x, y)) throw NotQHSError("cover graph has a cycle");
        g.add_edge(x, y);
    };

    for (auto [v, w] : base.edges()) {
        const std::int64_t gg = std::gcd(n, std::gcd(m[v], m[w]));
        Link s = hj_string(n / gg, m[v] / gg, m[w] / gg);
        for (std::int64_t k = 0; k < gg; ++k) {
            int a = out.fibers[v][k % comps[v]];
            int b = out.fibers[w][k % comps[w]];
            int end = attach_string(a, s);
            safe_edge(end, b);
        }
    }
    for (const auto& ar : base.arrows()) {
        const int v = ar.vertex;
        const std::int64_t gg = std::gcd(n, std::gcd(m[v], ar.multiplicity));
        Link s = hj_string(n / gg, m[v] / gg, ar.multiplicity / gg);
        for (std::int64_t k = 0; k < gg; ++k) {
            int end = attach_string(out.fibers[v][k % comps[v]], s);
            lifted_arrows.emplace_back(end, s.far_mult);
        }
    }
    if (!g.is_tree()) throw NotQHSError("cover graph has a cycle");

    // orthogonality of div(z) pins the Euler numbers over the base vertices
    std::vector<std::int64_t> load(g.size(), 0);
    for (int x = 0; x < g.size(); ++x)
        for (int y : g.neighbors(x)) load[x] += z[y];
    for (auto [x, mult] : lifted_arrows) load[x] += mult;
    for (int x : pending) {
        if (load[x] % z[x] != 0) throw std::logic_error("lifted divisor does not determine an integral Euler number");
        g.set_euler(x, static_cast<int>(-load[x] / z[x]));
    }
    for (int x = 0; x < g.size(); ++x)
        if (static_cast<std::int64_t>(g.euler(x)) * z[x] + load[x] != 0)
            throw std::logic_error("lifted divisor is not orthogonal to the cover");
    for (auto [x, mult] : lifted_arrows) g.add_arrow(x, mult);
    g.set_multiplicities(z);
    out.multiplicities = z;
    return out;
}

SuspensionGraph suspension_graph(const PlumbingGraph& resolution, std::int64_t p) {
    if (auto bad = check_resolution_graph(resolution); !bad.empty())
        throw InputError("resolution graph violates: " + bad);
    if (p < 1) throw InputError("suspension exponent must be positive");
    PlumbingGraph base = resolution;
    if (!base.multiplicities()) {
        std::vector<std::int64_t> mv;
        for (const auto& x : divisor_of_f(resolution)) mv.push_back(x.get_si());
        base.set_multiplicities(mv);
    }
    CoverResult c = cyclic_cover(base, p);
    if (c.graph.arrows().size() != 1) throw std::logic_error("suspension cover must carry one arrow");
    SuspensionGraph out;
    out.w = c.graph.arrows()[0].vertex;
    out.z = c.multiplicities;
    out.graph = std::move(c.graph);
    return out;
}

namespace {


}  // namespace

PlumbingGraph uac_graph(const PlumbingGraph& g, const std::optional<std::vector<std::int64_t>>& star) {
    g.require_tree();
    PlumbingGraph plain = strip_decorations(g);
    Lattice lat(plain);
    const auto& grp = lat.group();
    if (!grp.cyclic()) throw InputError("universal abelian cover needs cyclic first homology");
    const std::int64_t order = grp.order();
    if (order == 1) return plain;

    std::vector<std::int64_t> c(g.size(), 0);
    if (star) {
        if (static_cast<int>(star->size()) != g.size()) throw InputError("generator has wrong length");
        c = *star;
        for (auto x : c)
            if (x < 0) throw InputError("generator coordinates must be nonnegative");
    } else {
        // single anti-duals first, then pairs
        bool found = false;
        for (int v = 0; v < g.size() && !found; ++v)
            if (grp.order_of(lat.class_of(lat.anti_dual(v))) == order) {
                c[v] = 1;
                found = true;
            }
        for (int v = 0; v < g.size() && !found; ++v)
            for (int w = v + 1; w < g.size() && !found; ++w) {
                auto cls = grp.add(lat.class_of(lat.anti_dual(v)), lat.class_of(lat.anti_dual(w)));
                if (grp.order_of(cls) == order) {
                    c[v] = c[w] = 1;
                    found = true;
                }
            }
        if (!found) throw InputError("no small generator of the first homology found");
    }
    std::vector<Int> cs(c.begin(), c.end());
    auto l = lat.from_star(cs);
    if (grp.order_of(lat.class_of(l)) != order) throw InputError("given vector does not generate the first homology");

    PlumbingGraph base = plain;
    std::vector<std::int64_t> mv;
    for (const auto& x : l.e) {
        Rat y = x * order;
        if (y.get_den() != 1 || !y.get_num().fits_slong_p()) throw std::logic_error("branch multiplicity is not integral");
        mv.push_back(y.get_num().get_si());
    }
    base.set_multiplicities(mv);
    for (int v = 0; v < g.size(); ++v)
        if (c[v] > 0) base.add_arrow(v, order * c[v]);
    return blow_down_all(strip_decorations(cyclic_cover(base, order).graph));
}

SurgeryUAC uac_surgery(const SurgeryGraph& sg) {
    SurgeryUAC out;
    PlumbingGraph& g = out.graph;
    out.w = g.add_vertex(0, 0);
    std::int64_t ew = -1;
    for (const auto& k : sg.knots) {
        SuspensionGraph s = suspension_graph(k, sg.p);
        std::vector<int> idx;
        for (int v = 0; v < s.graph.size(); ++v) idx.push_back(g.add_vertex(s.graph.euler(v)));
        for (auto [a, b] : s.graph.edges()) g.add_edge(idx[a], idx[b]);
        out.w_j.push_back(idx[s.w]);
        g.add_edge(out.w, idx[s.w]);
        ew -= s.z[s.w];
        out.blocks.push_back(idx);
        out.suspensions.push_back(std::move(s));
    }
    g.set_euler(out.w, static_cast<int>(ew));
    int prev = out.w;
    for (std::int64_t i = 1; i < sg.q; ++i) {
        int v = g.add_vertex(-2);
        g.add_edge(prev, v);
        out.chain.push_back(v);
        prev = v;
    }
    out.w_prime = prev;
    return out;
}

}  // namespace swcap
