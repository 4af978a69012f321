#include <doctest.h>

#include "fixtures.hpp"
#include "keibridge/coloring.hpp"
#include "keibridge/diagram.hpp"
#include "keibridge/kei.hpp"

using namespace keibridge;

TEST_CASE("trivial links") {
    auto d1 = trivial_link(1);
    CHECK(d1.arcs.size() == 1);
    CHECK(d1.crossings.empty());
    CHECK(component_count(d1) == 1);
    CHECK(component_count(trivial_link(3)) == 3);
    CHECK(validate_diagram(trivial_link(3)).empty());
    CHECK_THROWS_AS(trivial_link(0), std::invalid_argument);
}

TEST_CASE("torus knot diagrams") {
    auto t3 = torus_2q(3);
    CHECK(t3.arcs.size() == 3);
    CHECK(t3.crossings.size() == 3);
    CHECK(component_count(t3) == 1);
    CHECK(validate_diagram(t3).empty());
    auto t5 = torus_2q(5);
    CHECK(t5.arcs.size() == 5);
    CHECK(t5.crossings.size() == 5);
    CHECK(validate_diagram(t5).empty());
    CHECK_THROWS_AS(torus_2q(4), std::invalid_argument);
    CHECK_THROWS_AS(torus_2q(1), std::invalid_argument);
}

TEST_CASE("connected sums add crossing and arc counts") {
    auto a = torus_2q(3);
    auto b = torus_2q(3);
    auto sum = connected_sum(a, a.arcs.front(), b, b.arcs.front());
    CHECK(sum.crossings.size() == 6);
    CHECK(sum.arcs.size() == 6);
    CHECK(component_count(sum) == 1);
    CHECK(validate_diagram(sum).empty());

    auto with_unknot = connected_sum(a, a.arcs.front(), trivial_link(1), "u0");
    CHECK(with_unknot.crossings.size() == a.crossings.size());
    CHECK(with_unknot.arcs.size() == a.arcs.size() + 1);
    CHECK(component_count(with_unknot) == 1);
    CHECK(validate_diagram(with_unknot).empty());

    auto two_unknots = connected_sum(trivial_link(1), "u0", trivial_link(1), "u0");
    CHECK(component_count(two_unknots) == 1);
    CHECK(validate_diagram(two_unknots).empty());

    CHECK_THROWS_AS(connected_sum(trivial_link(2), "u0", a, a.arcs.front()),
                    std::invalid_argument);
    CHECK_THROWS_AS(connected_sum(a, "missing", b, b.arcs.front()), std::invalid_argument);
}

TEST_CASE("cut_to_1tangle severs one arc") {
    auto unknot = trivial_link(1);
    auto t = cut_to_1tangle(unknot, "u0");
    CHECK(t.arcs.size() == 1);
    CHECK(t.crossings.empty());
    CHECK(t.strands() == 1);
    CHECK(t.terminal.has_value());
    CHECK(validate_diagram(t).empty());

    auto trefoil = torus_2q(3);
    auto tt = cut_to_1tangle(trefoil, "a0");
    CHECK(tt.arcs.size() == 4);
    CHECK(tt.crossings.size() == 3);
    CHECK(tt.terminal_arc() == "a0");
    CHECK(validate_diagram(tt).empty());

    CHECK_THROWS_AS(cut_to_1tangle(trivial_link(2), "u0"), std::invalid_argument);
}

TEST_CASE("cutting and re-closing preserves coloring counts") {
    for (int q : {3, 5}) {
        auto d = torus_2q(q);
        auto reclosed = close_1tangle(cut_to_1tangle(d, d.arcs.front()));
        for (const auto& kei : fixtures::small_keis())
            CHECK(count_colorings(reclosed, kei) == count_colorings(d, kei));
    }
}

TEST_CASE("panel union of identity tangles is a trivial link") {
    auto caps = fixtures::caps_0123();
    auto u = panel_union(caps, caps);
    CHECK(u.arcs.size() == 4);
    CHECK(u.joins.size() == 4);
    CHECK(component_count(u) == 2);
    CHECK(validate_diagram(u).empty());

    auto v = panel_union(fixtures::caps_0123(), fixtures::caps_0312());
    CHECK(component_count(v) == 1);

    CHECK_THROWS_AS(panel_union(caps, cut_to_1tangle(trivial_link(1), "u0")),
                    std::invalid_argument);
}

TEST_CASE("unknotted sphere tri-plane") {
    auto tp = unknotted_sphere_triplane();
    CHECK(tp.b == 1);
    CHECK(tp.patch_counts == std::array<int, 3>{1, 1, 1});
    for (const auto& panel : tp.panels) {
        CHECK(panel.strands() == 1);
        CHECK(validate_diagram(panel).empty());
    }
    for (int i = 0; i < 3; ++i)
        CHECK(component_count(panel_union(tp.panels[i], tp.panels[(i + 2) % 3])) == 1);
}

TEST_CASE("tri-plane fixture pairwise unions have the declared components") {
    auto tp = fixtures::crossing_panel_triplane();
    CHECK(component_count(panel_union(tp.panels[0], tp.panels[2])) == (*tp.patch_counts)[0]);
    CHECK(component_count(panel_union(tp.panels[1], tp.panels[0])) == (*tp.patch_counts)[1]);
    CHECK(component_count(panel_union(tp.panels[2], tp.panels[1])) == (*tp.patch_counts)[2]);
}

TEST_CASE("validation catches broken diagrams") {
    Diagram d;
    d.arcs = {"a"};
    d.crossings = {{"a", "a", "b"}};
    CHECK(!validate_diagram(d).empty());

    // over-only arc is a closed circle passing over: legal
    Diagram e;
    e.arcs = {"a", "b"};
    e.crossings = {{"a", "b", "a"}};
    CHECK(validate_diagram(e).empty());

    // arc with a single consumed end is broken
    Diagram f;
    f.arcs = {"a", "b", "c"};
    f.crossings = {{"a", "b", "c"}};
    CHECK(!validate_diagram(f).empty());

    // duplicate labels
    Diagram g;
    g.arcs = {"a", "a"};
    CHECK(!validate_diagram(g).empty());

    // strand with a lone boundary end
    Diagram h;
    h.arcs = {"a"};
    h.ends = {"a"};
    CHECK(!validate_diagram(h).empty());
}

TEST_CASE("every arc end is accounted for in generated diagrams") {
    std::vector<Diagram> fixtures_list = {
        trivial_link(1), trivial_link(3), torus_2q(3), torus_2q(7),
        fixtures::torus_sum(2, 3), fixtures::torus_sum(3, 3),
        cut_to_1tangle(torus_2q(5), "a2"),
        panel_union(fixtures::caps_0123(), fixtures::caps_0312()),
    };
    for (const auto& d : fixtures_list) CHECK(validate_diagram(d).empty());
}
