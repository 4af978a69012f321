#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace keibridge {

/// One crossing of a diagram: the two under-arcs and the over-arc.
/// No sign and no orientation are stored; kei relations are blind to both.
struct Crossing {
    std::string under_in;
    std::string over;
    std::string under_out;

    bool operator==(const Crossing&) const = default;
};

/// Two arc ends fused without a crossing (produced by closures and by
/// connected sums with crossingless summands).
struct Join {
    std::string a;
    std::string b;

    bool operator==(const Join&) const = default;
};

/// Combinatorial diagram of a link or of a b-strand tangle.
///
/// Arcs run from under-passage to under-passage (or to a boundary end);
/// an arc appearing in no under slot, join or boundary end is a closed
/// circle. For tangles, `ends` lists the arc at each of the 2b ordered
/// boundary positions; for links it is empty. `terminal`, when set, picks
/// a boundary position of a 1-tangle whose arc is the terminal arc.
struct Diagram {
    std::vector<std::string> arcs;
    std::vector<Crossing> crossings;
    std::vector<Join> joins;
    std::vector<std::string> ends;
    std::optional<int> terminal;

    bool is_tangle() const { return !ends.empty(); }
    int strands() const { return static_cast<int>(ends.size()) / 2; }
    const std::string& terminal_arc() const;

    bool operator==(const Diagram&) const = default;
};

/// Triple of b-strand tangle diagrams over one shared boundary.
struct TriPlane {
    int b = 0;
    std::vector<std::string> boundary;  // 2b shared endpoint labels
    std::array<Diagram, 3> panels;      // P12, P23, P31
    std::optional<std::array<int, 3>> patch_counts;

    bool operator==(const TriPlane&) const = default;
};

/// Structural well-formedness: every arc end accounted for exactly once
/// (under slot, join mention or boundary end, totalling 0 or 2 per arc),
/// all referenced arcs declared, strands proper. Returns every problem.
std::vector<std::string> validate_diagram(const Diagram& d);

/// Number of link components (tangles: strands plus closed components),
/// via union-find over under-passages and joins.
int component_count(const Diagram& d);

/// Partition of arcs into components; each inner vector is sorted.
std::vector<std::vector<std::string>> components(const Diagram& d);

// --- generators for the built-in families ---

/// c disjoint crossingless circles.
Diagram trivial_link(int c);

/// Standard q-crossing closed 2-braid diagram of the (2,q)-torus knot,
/// q odd and >= 3: arcs a0..a(q-1), crossing i reading a_i * a_{i+1} = a_{i+2}.
Diagram torus_2q(int q);

/// Connected sum of two knot diagrams along the chosen arcs.
/// Crossing and arc counts both add. Refuses multi-component inputs.
Diagram connected_sum(const Diagram& d1, const std::string& arc1,
                      const Diagram& d2, const std::string& arc2);

/// Severs the chosen arc of a knot diagram into a 1-tangle with two
/// boundary ends; position 0 is the terminal end.
Diagram cut_to_1tangle(const Diagram& d, const std::string& arc);

/// Closes a 1-tangle back up by fusing its two boundary ends.
Diagram close_1tangle(const Diagram& t);

/// Plat-closes tangle A against the mirror image of tangle B along the
/// shared boundary. Mirroring is combinatorial relabeling only; crossing
/// records of B are reused verbatim. Arcs of A keep their labels with
/// prefix "A:"; arcs of B get prefix "B:"; the 2b fusions become joins.
Diagram panel_union(const Diagram& a, const Diagram& b);

/// The b=1 tri-plane diagram of the trivially embedded sphere.
TriPlane unknotted_sphere_triplane();

}  // namespace keibridge
