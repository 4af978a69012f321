#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "keibridge/diagram.hpp"
#include "keibridge/kei.hpp"

namespace keibridge {

/// Thrown when a search exceeds its visited-node budget.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(uint64_t budget)
        : std::runtime_error("coloring search exceeded budget of " +
                             std::to_string(budget) + " nodes") {}
};

struct SearchOptions {
    uint64_t budget = 10'000'000;  // visited nodes before giving up
};

/// A total assignment of kei elements to arc labels.
using Assignment = std::map<std::string, int>;

/// True iff the assignment is total and satisfies every crossing relation
/// and join equality of the diagram.
bool is_valid_coloring(const Diagram& d, const Kei& x, const Assignment& a);

/// The complete set of X-colorings, in lexicographic order of the color
/// tuple read along sorted arc labels.
std::vector<Assignment> enumerate_colorings(const Diagram& d, const Kei& x,
                                            const SearchOptions& opts = {});

/// Number of X-colorings. Recognizes dihedral keis and delegates to the
/// linear-algebra path; otherwise backtracks with constraint propagation.
uint64_t count_colorings(const Diagram& d, const Kei& x, const SearchOptions& opts = {});

/// The generic backtracker, regardless of kei shape.
uint64_t count_colorings_backtracking(const Diagram& d, const Kei& x,
                                      const SearchOptions& opts = {});

/// Independent oracle: scans every assignment of elements to arcs
/// (joins folded into shared variables) and filters by the relations.
uint64_t brute_force_count(const Diagram& d, const Kei& x, const SearchOptions& opts = {});

/// Dihedral fast path: one relation u_in + u_out - 2*over = 0 (mod p) per
/// crossing over the arcs, solution count via Smith-style elimination over
/// the integers, exact for composite p as well.
uint64_t count_dihedral(const Diagram& d, int p);

/// All colorings of a tangle restricting to the given boundary colors
/// (indexed by boundary position).
std::vector<Assignment> extend_boundary_coloring(const Diagram& tangle,
                                                 const std::vector<int>& boundary_colors,
                                                 const Kei& x,
                                                 const SearchOptions& opts = {});

/// Number of tri-plane colorings: triples of panel colorings agreeing at
/// every shared boundary point. Pivots on boundary color vectors.
uint64_t count_triplane_colorings(const TriPlane& tp, const Kei& x,
                                  const SearchOptions& opts = {});

/// The triples themselves, ordered panel-wise lexicographically.
std::vector<std::array<Assignment, 3>> enumerate_triplane_colorings(
    const TriPlane& tp, const Kei& x, const SearchOptions& opts = {});

}  // namespace keibridge
