#pragma once

#include <array>
#include <string>
#include <vector>

#include "keibridge/diagram.hpp"

namespace keibridge {

/// Folds join equalities into single arcs. Preserves components and
/// coloring counts; the simplifier works on this form.
Diagram quotient_joins(const Diagram& d);

/// All diagrams reachable by one sound Reidemeister move (I or II removal,
/// or a type III slide). Moves are emitted only when the combinatorial
/// data certifies the required empty regions, so every neighbor represents
/// the same link.
std::vector<Diagram> reidemeister_neighbors(const Diagram& d);

struct SimplifyResult {
    bool crossingless = false;
    Diagram best;            // fewest-crossing diagram reached
    int expansions = 0;      // search nodes expanded
};

/// Best-first search over Reidemeister moves, bounded by a node budget.
/// Never certifies what it cannot reach: an unreduced result is reported
/// as such, not guessed about.
SimplifyResult simplify_bounded(const Diagram& d, int max_expansions = 1000);

enum class PairVerdict {
    certified_trivial,
    certified_nontrivial_component_count,
    inconclusive,
    not_checked,
};

std::string to_string(PairVerdict v);

struct TriplaneReport {
    std::vector<std::string> structural;
    std::array<PairVerdict, 3> pair_verdicts = {PairVerdict::not_checked,
                                                PairVerdict::not_checked,
                                                PairVerdict::not_checked};
    std::array<int, 3> pair_components = {0, 0, 0};

    bool structurally_ok() const { return structural.empty(); }
    bool all_certified_trivial() const {
        return structural.empty() &&
               pair_verdicts[0] == PairVerdict::certified_trivial &&
               pair_verdicts[1] == PairVerdict::certified_trivial &&
               pair_verdicts[2] == PairVerdict::certified_trivial;
    }
};

/// Structural well-formedness plus, when patch counts are present,
/// bounded triviality certification of the three pairwise panel unions
/// (P12 against P31, P23 against P12, P31 against P23).
TriplaneReport validate_triplane(const TriPlane& tp, int max_expansions = 1000);

}  // namespace keibridge
