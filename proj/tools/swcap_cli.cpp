// swcap: command-line front end.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "swcap/builders.hpp"
#include "swcap/canonical.hpp"
#include "swcap/covers.hpp"
#include "swcap/graph_io.hpp"
#include "swcap/group_series.hpp"
#include "swcap/latcoh.hpp"
#include "swcap/selftest.hpp"
#include "swcap/sw.hpp"

using namespace swcap;

namespace {

constexpr int kOk = 0, kInputError = 1, kInconclusive = 2, kCapFails = 3;

std::string rat_str(const Rat& x) { return x.get_str(); }

std::string residues_str(const std::vector<std::int64_t>& r) {
    std::string s;
    for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
    return s.empty() ? "0" : s;
}

std::string group_str(const std::vector<std::int64_t>& factors) {
    if (factors.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < factors.size(); ++i) s += (i ? " x " : "") + std::string("Z_") + std::to_string(factors[i]);
    return s;
}

void render_graph(std::ostream& os, const PlumbingGraph& g) {
    os << "vertices " << g.size() << "\n";
    for (int v = 0; v < g.size(); ++v) {
        os << "  " << g.id(v) << ": e=" << g.euler(v);
        if (g.multiplicities()) os << " m=" << (*g.multiplicities())[v];
        for (const auto& a : g.arrows())
            if (a.vertex == v) os << " arrow(" << a.multiplicity << ")";
        os << "\n";
    }
    os << "edges";
    for (auto [a, b] : g.edges()) os << " " << g.id(a) << "-" << g.id(b);
    os << "\n";
}

std::int64_t parse_class(const Lattice& lat, const std::string& text) {
    std::vector<std::int64_t> r;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            r.push_back(std::stoll(tok));
        } catch (const std::exception&) {
            throw InputError("bad class '" + text + "'");
        }
    }
    const auto& f = lat.group().factors();
    if (f.empty() && r == std::vector<std::int64_t>{0}) return 0;
    if (r.size() != f.size()) throw InputError("class needs " + std::to_string(f.size()) + " residue(s)");
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = ((r[i] % f[i]) + f[i]) % f[i];
    return lat.group().encode(r);
}

std::vector<PlumbingGraph> knots_from(const std::vector<std::string>& knot_flags, const std::string& spec) {
    std::vector<KnotSpec> ks;
    for (const auto& k : knot_flags)
        for (auto x : parse_knot_list(k)) ks.push_back(x);
    if (!spec.empty())
        for (auto x : parse_knot_list(spec)) ks.push_back(x);
    if (ks.empty()) throw InputError("no knots given");
    std::vector<PlumbingGraph> out;
    for (auto k : ks) out.push_back(torus_knot_graph(k));
    return out;
}

Json sw_json(const SWReport& rep) {
    Json j;
    j["det"] = to_json(rep.det);
    j["factors"] = rep.factors;
    j["classes"] = Json::array();
    for (const auto& r : rep.rows)
        j["classes"].push_back({{"class", r.residues}, {"r", to_json(r.r)}, {"i", to_json(r.i)}, {"s", r.s}, {"sw", to_json(r.sw)}});
    j["total"] = rep.total;
    return j;
}

Json eu_json(const EuResult& e, const std::vector<std::int64_t>& residues) {
    Json j;
    j["class"] = residues;
    j["conclusive"] = e.conclusive;
    j["eu"] = e.eu;
    j["min_weight"] = e.min_weight;
    j["box"] = e.box;
    if (e.profile) {
        j["rank_h0_reduced"] = e.rank_h0_red;
        j["higher_alternating"] = e.higher_alt;
        Json lv = Json::array();
        for (const auto& l : e.levels) lv.push_back({{"level", l.level}, {"euler_char", l.euler_char}, {"b0", l.b0}});
        j["levels"] = lv;
    }
    if (!e.note.empty()) j["note"] = e.note;
    return j;
}

void emit(bool json, const Json& j, const std::string& text) {
    if (json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Seiberg-Witten invariants of plumbed 3-manifolds and covering additivity"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false;
    app.add_flag("--json", json, "machine-readable output");

    std::int64_t hj_p = 0, hj_q = 0;
    auto* hj = app.add_subcommand("hj", "Hirzebruch-Jung continued fraction of p/q");
    hj->add_option("p", hj_p)->required();
    hj->add_option("q", hj_q)->required();

    std::int64_t ka = 0, kb = 0;
    auto* kg = app.add_subcommand("knot-graph", "resolution graph of the (a,b) torus knot");
    kg->add_option("a", ka)->required();
    kg->add_option("b", kb)->required();

    std::vector<std::string> knot_flags;
    std::string surgery_spec;
    std::int64_t sp = 0, sq = 1;
    auto* surg = app.add_subcommand("surgery", "surgery graph of S^3_{-p/q}(K_1 # ... # K_n)");
    surg->add_option("--knot", knot_flags, "torus knot a,b (repeatable)");
    surg->add_option("--knots", surgery_spec, "knot list like (6,7)+(2,9)");
    surg->add_option("-p", sp)->required();
    surg->add_option("-q", sq);

    std::string file;
    auto* uac = app.add_subcommand("uac", "universal abelian cover graph (cyclic H)");
    uac->add_option("file", file)->required();

    std::string cls;
    auto* sw = app.add_subcommand("sw", "normalized Seiberg-Witten invariants s_h");
    sw->add_option("file", file)->required();
    sw->add_option("--class", cls, "class as residues, e.g. 1 or 0,2");

    std::int64_t max_axis = 1024;
    std::size_t max_points = std::size_t{1} << 27;
    auto* lc = app.add_subcommand("lattice", "eu of lattice cohomology (brute force)");
    lc->add_option("file", file)->required();
    lc->add_option("--class", cls, "class as residues");
    lc->add_option("--max-axis", max_axis);
    lc->add_option("--max-points", max_points);

    auto* alex = app.add_subcommand("alexander", "Alexander polynomial of the knot given by the arrow");
    alex->add_option("file", file)->required();

    std::string cap_spec;
    bool expect_hold = false;
    auto* cap = app.add_subcommand("cap", "covering additivity check");
    cap->add_option("file", file);
    cap->add_option("--surgery", cap_spec, "knot list like (6,7)+(2,9)+(2,5)");
    cap->add_option("-p", sp);
    cap->add_option("-q", sq);
    cap->add_flag("--expect-hold", expect_hold, "exit 3 if CAP fails");

    auto* self = app.add_subcommand("selftest", "reference examples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kInputError;
    }

    try {
        std::ostringstream out;
        if (*hj) {
            auto k = hj_continued_fraction(hj_p, hj_q);
            out << "[";
            for (std::size_t i = 0; i < k.size(); ++i) out << (i ? "," : "") << k[i];
            out << "]\n";
            emit(json, Json{{"p", hj_p}, {"q", hj_q}, {"fraction", k}}, out.str());
        } else if (*kg) {
            auto g = torus_knot_graph({ka, kb});
            render_graph(out, g);
            emit(json, graph_to_json(g), out.str());
        } else if (*surg) {
            if (sp < 1 || sq < 1) throw InputError("p and q must be positive");
            auto sg = surgery_graph(knots_from(knot_flags, surgery_spec), sp, sq);
            Lattice lat(strip_decorations(sg.graph));
            render_graph(out, sg.graph);
            out << "det " << lat.det() << ", u=" << sg.graph.id(sg.u) << ", u'=" << sg.graph.id(sg.u_prime) << "\n";
            Json j{{"graph", graph_to_json(sg.graph)}, {"det", to_json(lat.det())}, {"p", sp}, {"q", sq}, {"hj", sg.hj},
                   {"u", sg.graph.id(sg.u)}, {"u_prime", sg.graph.id(sg.u_prime)}};
            emit(json, j, out.str());
        } else if (*uac) {
            auto g = read_graph_file(file);
            auto cover = uac_graph(g);
            Lattice cl(cover);
            render_graph(out, cover);
            out << "det " << cl.det() << ", J = " << group_str(cl.group().factors()) << "\n";
            emit(json, Json{{"graph", graph_to_json(cover)}, {"det", to_json(cl.det())}, {"factors", cl.group().factors()}}, out.str());
        } else if (*sw) {
            auto g = strip_decorations(read_graph_file(file));
            Lattice lat(g);
            SWEngine engine;
            auto rep = sw_table(g, engine);
            if (!cls.empty()) {
                auto h = parse_class(lat, cls);
                auto row = rep.rows.at(static_cast<std::size_t>(h));
                rep.rows = {row};
                rep.total = row.s;
            }
            out << "det " << rep.det << ", H = " << group_str(rep.factors) << "\n";
            for (const auto& r : rep.rows)
                out << "s_" << residues_str(r.residues) << "=" << r.s << "  i=" << rat_str(r.i) << "  sw=" << rat_str(r.sw) << "\n";
            if (cls.empty()) out << "sum " << rep.total << "\n";
            emit(json, sw_json(rep), out.str());
        } else if (*lc) {
            auto g = strip_decorations(read_graph_file(file));
            Lattice lat(g);
            EuOptions opt;
            opt.max_axis = max_axis;
            opt.max_points = max_points;
            std::vector<std::int64_t> classes;
            if (cls.empty())
                for (std::int64_t h = 0; h < lat.group().order(); ++h) classes.push_back(h);
            else
                classes.push_back(parse_class(lat, cls));
            Json arr = Json::array();
            bool all = true;
            for (auto h : classes) {
                auto e = lattice_eu(lat, lat.minimal_rep(h), opt);
                auto res = lat.group().decode(h);
                arr.push_back(eu_json(e, res));
                if (e.conclusive)
                    out << "eu_" << residues_str(res) << "=" << e.eu << "  min=" << e.min_weight << "\n";
                else
                    out << "eu_" << residues_str(res) << " inconclusive: " << e.note << "\n";
                all = all && e.conclusive;
            }
            emit(json, Json{{"classes", arr}}, out.str());
            return all ? kOk : kInconclusive;
        } else if (*alex) {
            auto g = read_graph_file(file);
            auto d = alexander_polynomial(g);
            out << "Delta(t) = " << d.to_string() << "\ndelta = " << d.derivative_at_one() << "\n";
            emit(json, Json{{"coefficients", d.coeffs()}, {"delta", d.derivative_at_one()}}, out.str());
        } else if (*cap) {
            SWEngine engine;
            CapReport rep;
            if (!cap_spec.empty()) {
                if (!file.empty()) throw InputError("give either --surgery or a file");
                if (sp < 1 || sq < 1) throw InputError("surgery needs positive -p and -q");
                rep = cap_check(surgery_graph(knots_from({}, cap_spec), sp, sq), engine);
            } else if (!file.empty()) {
                rep = cap_check(read_graph_file(file), engine);
            } else {
                throw InputError("cap needs --surgery or a graph file");
            }
            out << rep.rhs << (rep.holds() ? " = " : " != ") << rep.lhs << (rep.holds() ? " CAP holds" : " CAP fails") << "\n";
            out << "sum_h s_h(G) = " << rep.rhs << ", s_0(cover) = " << rep.lhs << ", |J| = " << rep.cover_det << "\n";
            Json j{{"sum_s_base", rep.rhs}, {"s0_cover", rep.lhs}, {"per_class", rep.per_class}, {"cover_det", to_json(rep.cover_det)},
                   {"cover_factors", rep.cover_factors}, {"holds", rep.holds()}};
            emit(json, j, out.str());
            if (expect_hold && !rep.holds()) return kCapFails;
        } else if (*self) {
            auto checks = reference_checks();
            bool ok = true;
            Json arr = Json::array();
            for (const auto& c : checks) {
                out << (c.pass ? "PASS  " : "FAIL  ") << c.name << "\n      " << c.detail << "\n";
                arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
                ok = ok && c.pass;
            }
            emit(json, Json{{"checks", arr}, {"all_pass", ok}}, out.str());
            return ok ? kOk : kInputError;
        }
        return kOk;
    } catch (const NotQHSError& e) {
        std::cerr << "UAC not a QHS3: " << e.what() << "\n";
        return kInconclusive;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const StructureError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
}
