#include <doctest.h>

#include "helpers.hpp"
#include "swcap/canonical.hpp"
#include "swcap/graph_io.hpp"

using namespace swcap;

TEST_SUITE("graph-io") {
TEST_CASE("data files") {
    auto g = read_graph_file(SWCAP_DATA_DIR "/cap_fails.json");
    CHECK(g.size() == 6);
    CHECK(g.is_tree());
    CHECK(Lattice(g).det() == 2);
    auto t = read_graph_file(SWCAP_DATA_DIR "/trefoil.json");
    CHECK(t.arrows().size() == 1);
    CHECK(t.multiplicities().has_value());
}

TEST_CASE("diagnostics") {
    CHECK_THROWS_WITH_AS(parse_graph(R"({"vertices": []})"), doctest::Contains("empty"), InputError);
    CHECK_THROWS_WITH_AS(parse_graph("{\n  \"vertices\": [\n  {\"id\": 0,, }\n]}"), doctest::Contains("line 3"), InputError);
    CHECK_THROWS_WITH_AS(parse_graph(R"({"vertices": [{"id": 0, "euler": -2, "genus": 1}]})"), doctest::Contains("genus"), InputError);
    CHECK_THROWS_WITH_AS(parse_graph(R"({"vertices": [{"id": 0, "euler": -2}], "edges": [[0, 4]]})"), doctest::Contains("edges[0][1]"),
                         InputError);
    CHECK_THROWS_WITH_AS(parse_graph(R"({"vertices": [{"id": 0, "euler": -2}, {"id": 0, "euler": -3}]})"), doctest::Contains("duplicate"),
                         InputError);
    CHECK_THROWS_WITH_AS(parse_graph(R"({"vertices": [{"id": 0, "euler": -2}, {"id": 1, "euler": -3}]})"), doctest::Contains("tree"),
                         InputError);
}

TEST_CASE("round trip") {
    std::mt19937_64 rng(10);
    for (int it = 0; it < 5; ++it) {
        PlumbingGraph g;
        for (int i = 0; i < 10; ++i) g.add_vertex(100 - 7 * i, -1 - static_cast<int>(rng() % 6));
        for (int i = 1; i < 10; ++i) g.add_edge(i, static_cast<int>(rng() % static_cast<unsigned>(i)));
        g.add_arrow(3, 4);
        std::vector<std::int64_t> m(10);
        for (auto& x : m) x = static_cast<std::int64_t>(rng() % 50);
        g.set_multiplicities(m);
        auto back = parse_graph(serialize_graph(g));
        CHECK(canonical_form(back, true) == canonical_form(g, true));
        CHECK(serialize_graph(back) == serialize_graph(g));
    }
}

TEST_CASE("exact numbers") {
    CHECK(to_json(Rat(-3, 8)) == Json{{"num", -3}, {"den", 8}});
    CHECK(to_json(Int("123456789012345678901234567890")) == Json("123456789012345678901234567890"));
}
}
