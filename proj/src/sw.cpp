#include "swcap/sw.hpp"

#include <sstream>

#include "swcap/covers.hpp"
#include "swcap/group_series.hpp"

namespace swcap {

namespace {

std::string graph_key(const PlumbingGraph& g) {
    std::ostringstream os;
    os << g.size() << ':';
    for (const auto& v : g.vertices()) os << v.euler << ',';
    os << '|';
    for (auto [a, b] : g.edges()) os << std::min(a, b) << '-' << std::max(a, b) << ',';
    return os.str();
}

std::int64_t integral(const Rat& x, const char* what) {
    if (x.get_den() != 1 || !x.get_num().fits_slong_p()) throw std::logic_error(std::string(what) + " is not an integer");
    return x.get_num().get_si();
}

// the recursion only sees the form
PlumbingGraph plain(const PlumbingGraph& g) { return strip_decorations(g); }

}  // namespace

int default_cut_vertex(const PlumbingGraph& g) {
    int best = 0;
    for (int v = 1; v < g.size(); ++v)
        if (g.degree(v) > g.degree(best)) best = v;
    return best;
}

std::int64_t shift_by_chi(const Lattice& lat, const std::vector<std::int64_t>& table, const DualVector& l) {
    auto cls = lat.class_of(l);
    auto r = lat.minimal_rep(cls);
    return table.at(static_cast<std::size_t>(cls)) + integral(lat.chi(l) - lat.chi(r), "chi difference");
}

SWEngine::CutTerms SWEngine::cut_terms(const PlumbingGraph& g0, int v) {
    PlumbingGraph g = plain(g0);
    if (!g.is_tree()) throw StructureError("cut-and-paste needs a tree");
    Lattice lat(g);
    const auto order = lat.group().order();
    GroupSeries series = zeta_series(lat, v);

    struct Part {
        std::vector<int> verts;
        PlumbingGraph graph;
        std::optional<Lattice> lat;
        std::vector<std::int64_t> table;
    };
    std::vector<Part> parts;
    for (auto& comp : g.components_without(v)) {
        Part p;
        p.graph = g.induced(comp);
        p.verts = std::move(comp);
        p.lat.emplace(p.graph);
        p.table = class_table(p.graph);
        parts.push_back(std::move(p));
    }
    CutTerms out;
    for (std::int64_t h = 0; h < order; ++h) {
        auto r = lat.minimal_rep(h);
        out.pol.push_back(series.component(h).polynomial_part_at_one());
        std::int64_t acc = 0;
        for (const auto& p : parts) acc += shift_by_chi(*p.lat, p.table, restrict_to(*p.lat, r, p.verts));
        out.components.push_back(acc);
    }
    return out;
}

std::vector<std::int64_t> SWEngine::class_table(const PlumbingGraph& g0, int cut) {
    PlumbingGraph g = plain(g0);
    const std::string key = graph_key(g);
    if (cut < 0) {
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    if (!g.is_tree()) throw StructureError("s-invariant needs a tree");
    std::vector<std::int64_t> table;
    if (g.is_chain()) {
        Lattice lat(g);  // validates definiteness
        table.assign(static_cast<std::size_t>(lat.group().order()), 0);
    } else {
        auto terms = cut_terms(g, cut < 0 ? default_cut_vertex(g) : cut);
        for (std::size_t h = 0; h < terms.pol.size(); ++h) table.push_back(terms.pol[h] + terms.components[h]);
    }
    if (cut < 0) memo_.emplace(key, table);
    return table;
}

std::int64_t SWEngine::s_invariant(const PlumbingGraph& g0, const DualVector& l) {
    PlumbingGraph g = plain(g0);
    if (!g.is_forest()) throw StructureError("s-invariant needs a forest");
    if (g.is_connected()) {
        Lattice lat(g);
        return shift_by_chi(lat, class_table(g), l);
    }
    std::int64_t acc = 0;
    for (const auto& comp : g.components()) {
        PlumbingGraph sub = g.induced(comp);
        Lattice lat(sub);
        acc += shift_by_chi(lat, class_table(sub), restrict_to(lat, l, comp));
    }
    return acc;
}

SWReport sw_table(const PlumbingGraph& g, SWEngine& engine) {
    PlumbingGraph pg = plain(g);
    Lattice lat(pg);
    auto table = engine.class_table(pg);
    SWReport rep;
    rep.factors = lat.group().factors();
    rep.det = lat.det();
    for (std::int64_t h = 0; h < lat.group().order(); ++h) {
        SWRow row;
        row.cls = h;
        row.residues = lat.group().decode(h);
        row.r = lat.minimal_rep(h);
        row.i = lat.i_invariant(row.r);
        row.s = table[static_cast<std::size_t>(h)];
        row.sw = row.i + row.s;
        rep.total += row.s;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

std::vector<std::int64_t> surgery_classes(const SurgeryGraph& sg, const Lattice& lat) {
    auto gen = lat.anti_dual(sg.u_prime);
    std::vector<std::int64_t> out;
    for (std::int64_t h = 0; h < sg.p; ++h) out.push_back(lat.class_of(lat.scale(gen, h)));
    return out;
}

namespace {

// chi_j(-floor(h (f) / p)) on a det-1 graph
Rat chi_floor(const Lattice& lat, const LatticeVector& f, std::int64_t h, std::int64_t p) {
    LatticeVector v;
    for (const auto& x : f) v.push_back(-floor_div(x * h, Int(p)));
    return lat.chi(lat.from_lattice(v));
}

}  // namespace

std::int64_t suspension_pg(const PlumbingGraph& resolution, std::int64_t p) {
    if (p < 1) throw InputError("suspension exponent must be positive");
    auto f = divisor_of_f(resolution);
    Lattice lat(plain(resolution));
    Rat acc = 0;
    for (std::int64_t h = 0; h < p; ++h) acc += chi_floor(lat, f, h, p);
    return integral(acc, "geometric genus");
}

Rat floor_chi_sum(const std::vector<PlumbingGraph>& knots, std::int64_t h, std::int64_t d) {
    Rat acc = 0;
    for (const auto& k : knots) {
        Lattice lat(plain(k));
        acc += chi_floor(lat, divisor_of_f(k), h, d);
    }
    return acc;
}

IntegralSurgeryReport integral_surgery_table(const std::vector<PlumbingGraph>& knots, std::int64_t d, SWEngine& engine) {
    if (d < 1) throw InputError("surgery coefficient must be positive");
    IntegralSurgeryReport rep;
    rep.alexander = Poly::constant(1);
    for (const auto& k : knots) {
        Poly a = alexander_polynomial(k);
        rep.delta += a.derivative_at_one();
        rep.alexander = rep.alexander * a;
    }
    // Delta = 1 + delta (t - 1) + (t - 1)^2 Q
    Poly rest = rep.alexander - Poly::constant(1) - Poly(std::vector<std::int64_t>{-rep.delta, rep.delta});
    rep.q = rest.exact_div(Poly(std::vector<std::int64_t>{1, -2, 1}));
    rep.q_at_one = rep.q.eval_at_one();

    SurgeryGraph sg = surgery_graph(knots, d, 1);
    PlumbingGraph g = plain(sg.graph);
    Lattice lat(g);
    auto table = engine.class_table(g);
    auto classes = surgery_classes(sg, lat);
    auto terms = engine.cut_terms(g, sg.u);
    auto gen = lat.anti_dual(sg.u);

    rep.consistent = true;
    rep.sum_c = 0;
    for (std::int64_t h = 0; h < d; ++h) {
        IntegralSurgeryRow row;
        row.h = h;
        for (std::size_t n = static_cast<std::size_t>(h); n < rep.q.coeffs().size(); n += static_cast<std::size_t>(d))
            row.shortcut += rep.q[n];
        auto sh = lat.scale(gen, h);
        auto cls = classes[static_cast<std::size_t>(h)];
        auto r = lat.minimal_rep(cls);
        row.c_chi = lat.chi(r) - lat.chi(sh);
        row.c_floor = floor_chi_sum(knots, h, d);
        row.s = table[static_cast<std::size_t>(cls)];
        row.cut_paste = shift_by_chi(lat, table, sh);
        rep.pol_at_one += terms.pol[static_cast<std::size_t>(cls)];
        rep.total += row.s;
        rep.sum_c += row.c_chi;
        if (row.shortcut != row.cut_paste || row.c_chi != row.c_floor) rep.consistent = false;
        rep.rows.push_back(std::move(row));
    }
    if (rep.pol_at_one != rep.q_at_one) rep.consistent = false;
    if (Rat(rep.total) != Rat(rep.q_at_one) + rep.sum_c) rep.consistent = false;
    return rep;
}

CapReport cap_check(const SurgeryGraph& sg, SWEngine& engine) {
    CapReport rep;
    PlumbingGraph g = plain(sg.graph);
    Lattice lat(g);
    auto table = engine.class_table(g);
    for (auto cls : surgery_classes(sg, lat)) {
        rep.per_class.push_back(table[static_cast<std::size_t>(cls)]);
        rep.rhs += rep.per_class.back();
    }
    SurgeryUAC uac = uac_surgery(sg);
    rep.cover = uac.graph;
    Lattice cl(rep.cover);
    rep.cover_det = cl.det();
    rep.cover_factors = cl.group().factors();
    rep.lhs = engine.class_table(rep.cover)[0];
    return rep;
}

CapReport cap_check(const PlumbingGraph& g0, SWEngine& engine) {
    CapReport rep;
    PlumbingGraph g = plain(g0);
    auto table = engine.class_table(g);
    rep.per_class = table;
    for (auto x : table) rep.rhs += x;
    rep.cover = uac_graph(g);
    Lattice cl(rep.cover);
    rep.cover_det = cl.det();
    rep.cover_factors = cl.group().factors();
    rep.lhs = engine.class_table(rep.cover)[0];
    return rep;
}

}  // namespace swcap
