#include <doctest.h>

#include "fixtures.hpp"
#include "keibridge/codec.hpp"
#include "keibridge/coloring.hpp"

using namespace keibridge;

TEST_CASE("single arc parses to a one-circle link") {
    auto r = parse_link("arc a\n");
    REQUIRE(r.ok());
    CHECK(r.value->arcs == std::vector<std::string>{"a"});
    CHECK(r.value->crossings.empty());
}

TEST_CASE("trefoil text matches the generated diagram on coloring counts") {
    auto r = parse_link(fixtures::trefoil_text());
    REQUIRE(r.ok());
    for (int p : {3, 5, 7})
        CHECK(count_colorings(*r.value, Kei::dihedral(p)) ==
              count_colorings(torus_2q(3), Kei::dihedral(p)));
}

TEST_CASE("undeclared arcs in a crossing produce three dangling references") {
    auto r = parse_link("x a b c\n");
    CHECK(!r.ok());
    int dangling = 0;
    for (const auto& e : r.errors)
        if (e.kind == ParseError::Kind::dangling_reference) ++dangling;
    CHECK(dangling == 3);
    for (const auto& e : r.errors) {
        CHECK(e.line == 1);
        CHECK(e.column > 0);
    }
}

TEST_CASE("independent errors are all reported") {
    auto r = parse_link("arc a\narc a\nx a a q\nfrob\n");
    CHECK(!r.ok());
    bool dup = false, dangling = false, syntax = false;
    for (const auto& e : r.errors) {
        dup |= e.kind == ParseError::Kind::duplicate_label;
        dangling |= e.kind == ParseError::Kind::dangling_reference;
        syntax |= e.kind == ParseError::Kind::syntax;
    }
    CHECK(dup);
    CHECK(dangling);
    CHECK(syntax);
}

TEST_CASE("parser rejects structurally broken diagrams") {
    // arc b consumes only one end
    auto r = parse_link("arc a\narc b\narc c\nx a b c\n");
    CHECK(!r.ok());
    bool structural = false;
    for (const auto& e : r.errors) structural |= e.kind == ParseError::Kind::structural;
    CHECK(structural);
}

TEST_CASE("diagram round trips") {
    std::vector<Diagram> fixtures_list = {
        trivial_link(3),
        torus_2q(7),
        fixtures::torus_sum(2, 3),
        connected_sum(torus_2q(3), "a0", trivial_link(1), "u0"),
        cut_to_1tangle(torus_2q(3), "a0"),
        fixtures::crossing_tangle(),
        panel_union(fixtures::caps_0123(), fixtures::caps_0312()),
    };
    for (const auto& d : fixtures_list) {
        auto text = serialize_diagram(d);
        auto r = parse_diagram(text);
        REQUIRE(r.ok());
        Diagram expected = d;
        expected.terminal = d.terminal;  // terminal round-trips by position
        CHECK(*r.value == expected);
        CHECK(serialize_diagram(*r.value) == text);
    }
}

TEST_CASE("tangle parsing distinguishes links from tangles") {
    CHECK(!parse_tangle("arc a\n").ok());
    CHECK(!parse_link(serialize_diagram(fixtures::crossing_tangle())).ok());
    auto r = parse_tangle(serialize_diagram(cut_to_1tangle(torus_2q(3), "a0")));
    REQUIRE(r.ok());
    CHECK(r.value->terminal == 0);
}

TEST_CASE("terminal accepts an arc label") {
    auto r = parse_tangle("arc a\nboundary a a\nterminal a\n");
    REQUIRE(r.ok());
    CHECK(r.value->terminal == 0);
    CHECK(!parse_tangle("arc a\nboundary a a\nterminal zz\n").ok());
}

TEST_CASE("kei JSON round trips bit-exactly") {
    for (const auto& k : {Kei::dihedral(5), fixtures::order4_nondihedral()}) {
        auto text = serialize_kei(k);
        auto r = parse_kei(text);
        REQUIRE(r.ok());
        CHECK(*r.value == k);
        CHECK(serialize_kei(*r.value) == text);
    }
}

TEST_CASE("kei parse failures carry locations") {
    auto bad = parse_kei("{\"order\": 2, \"table\": [[0,1],[1,");
    CHECK(!bad.ok());
    CHECK(bad.errors[0].kind == ParseError::Kind::syntax);
    CHECK(bad.errors[0].line >= 1);

    auto invalid = parse_kei("{\"order\": 2, \"table\": [[1,1],[0,1]]}");
    CHECK(!invalid.ok());

    auto mismatched = parse_kei("{\"order\": 3, \"table\": [[0,0],[1,1]]}");
    CHECK(!mismatched.ok());
}

TEST_CASE("tri-plane JSON round trips") {
    for (const auto& tp : {unknotted_sphere_triplane(), fixtures::two_bridge_sphere(),
                           fixtures::crossing_panel_triplane()}) {
        auto text = serialize_triplane(tp);
        auto r = parse_triplane(text);
        REQUIRE(r.ok());
        CHECK(*r.value == tp);
        CHECK(serialize_triplane(*r.value) == text);
    }
}

TEST_CASE("tri-plane structural errors") {
    auto tp = unknotted_sphere_triplane();
    tp.panels[1].ends = {};  // strand count mismatch
    auto r = parse_triplane(serialize_triplane(tp));
    CHECK(!r.ok());
    CHECK(!parse_triplane("{\"b\": 1}").ok());
    CHECK(!parse_triplane("not json").ok());
}
