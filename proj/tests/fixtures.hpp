#pragma once

#include <string>
#include <vector>

#include "keibridge/diagram.hpp"
#include "keibridge/kei.hpp"

namespace keibridge::fixtures {

// Order-4 kei that is not dihedral: R_3 together with a disjoint fixed
// element 3 acting trivially.
inline Kei order4_nondihedral() {
    return Kei::from_table(
        {
            {0, 2, 1, 0},
            {2, 1, 0, 1},
            {1, 0, 2, 2},
            {3, 3, 3, 3},
        },
        "R3+pt");
}

// k-fold connected sum of (2,q)-torus knots, summed along first arcs.
inline Diagram torus_sum(int k, int q) {
    Diagram acc = torus_2q(q);
    for (int i = 1; i < k; ++i) {
        Diagram next = torus_2q(q);
        acc = connected_sum(acc, acc.arcs.front(), next, next.arcs.front());
    }
    return acc;
}

inline std::string trefoil_text() {
    return "arc a\n"
           "arc b\n"
           "arc c\n"
           "x a b c\n"
           "x b c a\n"
           "x c a b\n";
}

// Crossingless b=2 plat panel pairing boundary positions (0,1) and (2,3).
inline Diagram caps_0123() {
    Diagram d;
    d.arcs = {"u", "v"};
    d.ends = {"u", "u", "v", "v"};
    return d;
}

// Crossingless b=2 plat panel pairing (0,3) and (1,2).
inline Diagram caps_0312() {
    Diagram d;
    d.arcs = {"u", "v"};
    d.ends = {"u", "v", "v", "u"};
    return d;
}

// Trivial 2-strand tangle with one crossing: strand A runs 0 -> 2 passing
// over strand B, which runs 1 -> 3 cut into b1, b2.
inline Diagram crossing_tangle() {
    Diagram d;
    d.arcs = {"A", "b1", "b2"};
    d.crossings = {{"b1", "A", "b2"}};
    d.ends = {"A", "b1", "A", "b2"};
    return d;
}

// Tri-plane diagram of a trivial sphere in 2-bridge position:
// (b; c1, c2, c3) = (2; 2, 1, 1).
inline TriPlane two_bridge_sphere() {
    TriPlane tp;
    tp.b = 2;
    tp.boundary = {"p0", "p1", "p2", "p3"};
    tp.panels = {caps_0123(), caps_0312(), caps_0123()};
    tp.patch_counts = {{2, 1, 1}};
    return tp;
}

// Same surface with one crossing pushed into the first panel.
inline TriPlane crossing_panel_triplane() {
    TriPlane tp;
    tp.b = 2;
    tp.boundary = {"p0", "p1", "p2", "p3"};
    tp.panels = {crossing_tangle(), caps_0312(), caps_0312()};
    // component counts of the three pairwise unions; certified by the
    // simplifier in the tests
    tp.patch_counts = {{1, 1, 2}};
    return tp;
}

// Three-strand tangle containing a type-III triangle: strand t passes over
// everything, m passes over the middle segment bm of the bottom strand.
inline Diagram triangle_tangle() {
    Diagram d;
    d.arcs = {"t", "m1", "m2", "b1", "bm", "b2"};
    d.crossings = {
        {"m1", "t", "m2"},
        {"b1", "t", "bm"},
        {"bm", "m2", "b2"},
    };
    d.ends = {"t", "m1", "b1", "b2", "m2", "t"};
    return d;
}

inline std::vector<Kei> small_keis() {
    return {Kei::dihedral(2), Kei::dihedral(3), Kei::dihedral(4), Kei::dihedral(5),
            Kei::dihedral(7), order4_nondihedral()};
}

}  // namespace keibridge::fixtures
