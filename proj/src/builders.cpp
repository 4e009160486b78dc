#include "swcap/builders.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <tuple>
#include <numeric>

#include "swcap/group_series.hpp"

namespace swcap {

namespace {

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
    std::int64_t g = m, x = 0, x1 = 1, r = ((a % m) + m) % m;
    while (r != 0) {
        std::int64_t q = g / r;
        std::tie(g, r) = std::make_pair(r, g - q * r);
        std::tie(x, x1) = std::make_pair(x1, x - q * x1);
    }
    if (g != 1) throw InputError("no modular inverse");
    return ((x % m) + m) % m;
}

int checked_euler(std::int64_t e) {
    if (e < -1000000000 || e > 1000000000) throw InputError("Euler number out of range");
    return static_cast<int>(e);
}

}  // namespace

std::vector<std::int64_t> hj_continued_fraction(std::int64_t p, std::int64_t q) {
    if (p <= 0 || q <= 0) throw InputError("continued fraction needs positive p and q");
    if (std::gcd(p, q) != 1) throw InputError("p and q must be coprime");
    std::vector<std::int64_t> k;
    while (true) {
        std::int64_t c = (p + q - 1) / q;  // ceil
        k.push_back(c);
        std::int64_t r = c * q - p;
        if (r == 0) break;
        p = q;
        q = r;
    }
    return k;
}

Rat hj_evaluate(const std::vector<std::int64_t>& k) {
    if (k.empty()) throw InputError("empty continued fraction");
    Rat x = Rat(Int(k.back()));
    for (std::size_t i = k.size() - 1; i-- > 0;) x = Rat(Int(k[i])) - 1 / x;
    return x;
}

PlumbingGraph hj_chain(const std::vector<std::int64_t>& k) {
    PlumbingGraph g;
    for (std::size_t i = 0; i < k.size(); ++i) {
        g.add_vertex(static_cast<int>(i), checked_euler(-k[i]));
        if (i > 0) g.add_edge(static_cast<int>(i) - 1, static_cast<int>(i));
    }
    return g;
}

PlumbingGraph torus_knot_graph(KnotSpec k) {
    if (k.a < 2 || k.b < 2 || std::gcd(k.a, k.b) != 1) throw InputError("torus knot needs coprime a, b >= 2");
    if (k.a > k.b) std::swap(k.a, k.b);
    PlumbingGraph g;
    int c = g.add_vertex(0, -1);
    auto leg = [&](std::int64_t alpha, std::int64_t omega) {
        if (alpha == 1) return;
        int prev = c;
        for (auto x : hj_continued_fraction(alpha, omega)) {
            int v = g.add_vertex(checked_euler(-x));
            g.add_edge(prev, v);
            prev = v;
        }
    };
    leg(k.a, (k.a - mod_inverse(k.b, k.a)) % k.a);
    leg(k.b, (k.b - mod_inverse(k.a, k.b)) % k.b);
    g.add_arrow(c, 1);
    auto m = divisor_of_f(g);
    std::vector<std::int64_t> mv;
    for (const auto& x : m) mv.push_back(x.get_si());
    g.set_multiplicities(mv);
    return g;
}

LatticeVector divisor_of_f(const PlumbingGraph& resolution) {
    if (resolution.arrows().size() != 1) throw InputError("resolution graph needs exactly one arrow");
    Lattice lat(resolution);
    if (lat.det() != 1) throw InputError("resolution graph must have determinant 1");
    auto d = lat.anti_dual(resolution.arrows()[0].vertex);
    LatticeVector out;
    for (const auto& x : d.e) out.push_back(x.get_num());
    return out;
}

std::string check_resolution_graph(const PlumbingGraph& g) {
    if (!g.is_tree()) return "tree";
    if (g.arrows().size() != 1) return "single arrow";
    if (g.arrows()[0].multiplicity != 1) return "arrow multiplicity 1";
    if (!is_negative_definite(g)) return "negative definite";
    Lattice lat(g);
    if (lat.det() != 1) return "determinant 1";
    const int a = g.arrows()[0].vertex;
    if (g.euler(a) != -1) return "arrow on a (-1)-vertex";
    if (g.multiplicities()) {
        const auto& m = *g.multiplicities();
        for (int v = 0; v < g.size(); ++v) {
            std::int64_t acc = static_cast<std::int64_t>(g.euler(v)) * m[v];
            for (int w : g.neighbors(v)) acc += m[w];
            if (v == a) acc += 1;
            if (acc != 0) return "orthogonality of div(f)";
        }
    }
    return {};
}

SurgeryGraph surgery_graph(const std::vector<PlumbingGraph>& knots, std::int64_t p, std::int64_t q) {
    if (knots.empty()) throw InputError("surgery needs at least one knot");
    SurgeryGraph out;
    out.p = p;
    out.q = q;
    out.hj = hj_continued_fraction(p, q);
    out.knots = knots;
    PlumbingGraph& g = out.graph;

    std::int64_t eu = -out.hj[0];
    std::vector<LatticeVector> divisors;
    for (const auto& k : knots) {
        if (auto bad = check_resolution_graph(k); !bad.empty()) throw InputError("knot graph violates: " + bad);
        divisors.push_back(divisor_of_f(k));
        eu -= divisors.back()[k.arrows()[0].vertex].get_si();
    }
    out.u = g.add_vertex(0, checked_euler(eu));
    for (std::size_t j = 0; j < knots.size(); ++j) {
        const auto& k = knots[j];
        std::vector<int> idx;
        for (int v = 0; v < k.size(); ++v) idx.push_back(g.add_vertex(k.euler(v)));
        for (auto [a, b] : k.edges()) g.add_edge(idx[a], idx[b]);
        out.blocks.push_back(idx);
        out.u_j.push_back(idx[k.arrows()[0].vertex]);
        g.add_edge(out.u, out.u_j.back());
    }
    int prev = out.u;
    for (std::size_t i = 1; i < out.hj.size(); ++i) {
        int v = g.add_vertex(checked_euler(-out.hj[i]));
        g.add_edge(prev, v);
        out.chain.push_back(v);
        prev = v;
    }
    out.u_prime = prev;

    // Branch divisor: (f_j) on the blocks, 1 on u, numerators of
    // [k_0, ..., k_{i-1}] on the chain, arrow of weight p on u'.
    std::vector<std::int64_t> m(g.size(), 0);
    m[out.u] = 1;
    for (std::size_t j = 0; j < knots.size(); ++j)
        for (std::size_t v = 0; v < out.blocks[j].size(); ++v) m[out.blocks[j][v]] = divisors[j][v].get_si();
    for (std::size_t i = 0; i < out.chain.size(); ++i) {
        std::vector<std::int64_t> head(out.hj.begin(), out.hj.begin() + static_cast<long>(i) + 1);
        m[out.chain[i]] = hj_evaluate(head).get_num().get_si();
    }
    g.set_multiplicities(m);
    g.add_arrow(out.u_prime, p);
    return out;
}

SurgeryGraph surgery_graph(const std::vector<KnotSpec>& knots, std::int64_t p, std::int64_t q) {
    std::vector<PlumbingGraph> gs;
    for (auto k : knots) gs.push_back(torus_knot_graph(k));
    return surgery_graph(gs, p, q);
}

PlumbingGraph blow_up_vertex(const PlumbingGraph& g, int v) {
    PlumbingGraph out = g;
    out.set_euler(v, g.euler(v) - 1);
    int x = out.add_vertex(-1);
    out.add_edge(v, x);
    return out;
}

PlumbingGraph blow_up_edge(const PlumbingGraph& g, int a, int b) {
    if (!g.adjacent(a, b)) throw StructureError("blow-up site is not an edge");
    PlumbingGraph out;
    for (const auto& v : g.vertices()) out.add_vertex(v.id, v.euler);
    for (auto [x, y] : g.edges())
        if (!((x == a && y == b) || (x == b && y == a))) out.add_edge(x, y);
    for (const auto& ar : g.arrows()) out.add_arrow(ar.vertex, ar.multiplicity);
    out.set_euler(a, g.euler(a) - 1);
    out.set_euler(b, g.euler(b) - 1);
    int x = out.add_vertex(-1);
    out.add_edge(a, x);
    out.add_edge(x, b);
    return out;
}

PlumbingGraph blow_down_all(const PlumbingGraph& g) {
    PlumbingGraph cur = g;
    while (cur.size() > 1) {
        int v = -1;
        for (int x = 0; x < cur.size() && v < 0; ++x)
            if (cur.euler(x) == -1 && cur.degree(x) <= 2 && cur.arrow_count(x) == 0) v = x;
        if (v < 0) break;
        const auto nb = cur.neighbors(v);
        PlumbingGraph out;
        std::vector<int> idx(static_cast<std::size_t>(cur.size()), -1);
        for (int x = 0; x < cur.size(); ++x) {
            if (x == v) continue;
            int e = cur.euler(x) + (std::find(nb.begin(), nb.end(), x) != nb.end() ? 1 : 0);
            idx[x] = out.add_vertex(cur.id(x), e);
        }
        for (auto [a, b] : cur.edges())
            if (a != v && b != v) out.add_edge(idx[a], idx[b]);
        if (nb.size() == 2) out.add_edge(idx[nb[0]], idx[nb[1]]);
        for (const auto& ar : cur.arrows()) out.add_arrow(idx[ar.vertex], ar.multiplicity);
        cur = std::move(out);
    }
    return cur;
}

std::int64_t delta_invariant(const PlumbingGraph& resolution) {
    return alexander_polynomial(resolution).derivative_at_one();
}

bool superisolated_compat(const std::vector<PlumbingGraph>& knots, std::int64_t d) {
    std::int64_t delta = 0;
    for (const auto& k : knots) delta += delta_invariant(k);
    return (d - 1) * (d - 2) == 2 * delta;
}

std::vector<KnotSpec> parse_knot_list(const std::string& text) {
    std::vector<std::int64_t> nums;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) return;
        try {
            nums.push_back(std::stoll(cur));
        } catch (const std::exception&) {
            throw InputError("bad knot list: " + text);
        }
        cur.clear();
    };
    for (char ch : text) {
        if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '-') cur.push_back(ch);
        else if (ch == ',' || ch == '(' || ch == ')' || ch == '+' || ch == ';' || std::isspace(static_cast<unsigned char>(ch))) flush();
        else throw InputError("bad character in knot list: " + text);
    }
    flush();
    if (nums.empty() || nums.size() % 2 != 0) throw InputError("knot list needs pairs a,b: " + text);
    std::vector<KnotSpec> out;
    for (std::size_t i = 0; i < nums.size(); i += 2) out.push_back({nums[i], nums[i + 1]});
    return out;
}

}  // namespace swcap
