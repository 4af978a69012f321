#include "keibridge/simplify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace keibridge {

namespace {

// Relabels arc y to x throughout and drops y.
void merge_arcs(Diagram& d, const std::string& x, const std::string& y) {
    if (x == y) return;
    for (auto& c : d.crossings) {
        if (c.under_in == y) c.under_in = x;
        if (c.over == y) c.over = x;
        if (c.under_out == y) c.under_out = x;
    }
    for (auto& j : d.joins) {
        if (j.a == y) j.a = x;
        if (j.b == y) j.b = x;
    }
    for (auto& e : d.ends)
        if (e == y) e = x;
    d.arcs.erase(std::remove(d.arcs.begin(), d.arcs.end(), y), d.arcs.end());
}

int over_occurrences(const Diagram& d, const std::string& arc) {
    int n = 0;
    for (const auto& c : d.crossings)
        if (c.over == arc) ++n;
    return n;
}

std::vector<int> under_slots(const Diagram& d, const std::string& arc) {
    std::vector<int> slots;
    for (int i = 0; i < static_cast<int>(d.crossings.size()); ++i) {
        if (d.crossings[i].under_in == arc) slots.push_back(i);
        if (d.crossings[i].under_out == arc) slots.push_back(i);
    }
    return slots;
}

bool has_boundary_end(const Diagram& d, const std::string& arc) {
    return std::find(d.ends.begin(), d.ends.end(), arc) != d.ends.end();
}

void drop_crossings(Diagram& d, std::vector<int> which) {
    std::sort(which.rbegin(), which.rend());
    for (int i : which) d.crossings.erase(d.crossings.begin() + i);
}

// Type I removal at crossing i: the over arc loops through its own under
// slot and the loop segment is certified empty (the loop arc passes over
// nothing else).
void collect_r1(const Diagram& d, std::vector<Diagram>& out) {
    for (int i = 0; i < static_cast<int>(d.crossings.size()); ++i) {
        const auto& c = d.crossings[i];
        if (c.over != c.under_in && c.over != c.under_out) continue;
        if (over_occurrences(d, c.over) != 1) continue;
        Diagram next = d;
        drop_crossings(next, {i});
        merge_arcs(next, c.under_in, c.under_out);
        out.push_back(std::move(next));
    }
}

// Type II removal: arcs m under b twice with nothing in the bigon. The
// empty region is certified by m appearing nowhere as an over arc and b
// passing over exactly these two crossings.
void collect_r2(const Diagram& d, std::vector<Diagram>& out) {
    for (int i = 0; i < static_cast<int>(d.crossings.size()); ++i) {
        for (int j = i + 1; j < static_cast<int>(d.crossings.size()); ++j) {
            const auto& ci = d.crossings[i];
            const auto& cj = d.crossings[j];
            if (ci.over != cj.over) continue;
            const std::string& b = ci.over;
            for (const std::string& m :
                 {ci.under_in == cj.under_in || ci.under_in == cj.under_out ? ci.under_in
                                                                            : std::string(),
                  ci.under_out == cj.under_in || ci.under_out == cj.under_out ? ci.under_out
                                                                              : std::string()}) {
                if (m.empty() || m == b) continue;
                auto slots = under_slots(d, m);
                if (slots.size() != 2) continue;
                if (!((slots[0] == i && slots[1] == j) || (slots[0] == j && slots[1] == i)))
                    continue;
                if (has_boundary_end(d, m)) continue;
                if (over_occurrences(d, m) != 0) continue;
                if (over_occurrences(d, b) != 2) continue;
                std::string x = ci.under_in == m ? ci.under_out : ci.under_in;
                std::string y = cj.under_in == m ? cj.under_out : cj.under_in;
                if (x == b || y == b) continue;
                Diagram next = d;
                drop_crossings(next, {i, j});
                merge_arcs(next, x, m);
                if (y == m) y = x;
                merge_arcs(next, x, y);
                out.push_back(std::move(next));
            }
        }
    }
}

// Type III slide. The triangle is certified empty: the top arc t passes
// over exactly the two triangle crossings, the middle-side arc mo passes
// over exactly the bottom crossing, and the bottom segment bm is a bare
// two-ended arc.
void collect_r3(const Diagram& d, std::vector<Diagram>& out) {
    const int nx = static_cast<int>(d.crossings.size());
    for (int i1 = 0; i1 < nx; ++i1) {
        const auto& c1 = d.crossings[i1];  // M under t
        const std::string& t = c1.over;
        if (over_occurrences(d, t) != 2) continue;
        if (c1.under_in == c1.under_out) continue;
        for (int i2 = 0; i2 < nx; ++i2) {
            if (i2 == i1) continue;
            const auto& c2 = d.crossings[i2];  // B under t
            if (c2.over != t) continue;
            for (int i3 = 0; i3 < nx; ++i3) {
                if (i3 == i1 || i3 == i2) continue;
                const auto& c3 = d.crossings[i3];  // B under M
                if (c3.over != c1.under_in && c3.over != c1.under_out) continue;
                const std::string& mo = c3.over;
                const std::string mo2 = (mo == c1.under_in) ? c1.under_out : c1.under_in;
                if (mo == t || mo2 == t) continue;
                if (over_occurrences(d, mo) != 1) continue;
                // bottom segment between c2 and c3
                for (const std::string& bm : {c2.under_in, c2.under_out}) {
                    if (bm != c3.under_in && bm != c3.under_out) continue;
                    auto slots = under_slots(d, bm);
                    if (slots.size() != 2) continue;
                    std::sort(slots.begin(), slots.end());
                    std::vector<int> want = {std::min(i2, i3), std::max(i2, i3)};
                    if (slots != want) continue;
                    if (has_boundary_end(d, bm)) continue;
                    if (over_occurrences(d, bm) != 0) continue;
                    if (bm == t || bm == mo || bm == mo2) continue;
                    std::string x = c2.under_in == bm ? c2.under_out : c2.under_in;
                    std::string y = c3.under_in == bm ? c3.under_out : c3.under_in;
                    if (x == bm || y == bm) continue;
                    Diagram next = d;
                    next.crossings[i2] = {x, mo2, bm};
                    next.crossings[i3] = {bm, t, y};
                    out.push_back(std::move(next));
                }
            }
        }
    }
}

std::string canonical_key(const Diagram& d) {
    // label-faithful key; good enough for deduplication inside one search
    std::vector<std::string> rows;
    for (const auto& c : d.crossings) {
        std::string lo = std::min(c.under_in, c.under_out);
        std::string hi = std::max(c.under_in, c.under_out);
        rows.push_back(lo + "|" + c.over + "|" + hi);
    }
    std::sort(rows.begin(), rows.end());
    std::ostringstream os;
    std::vector<std::string> arcs = d.arcs;
    std::sort(arcs.begin(), arcs.end());
    for (const auto& a : arcs) os << a << ";";
    os << "#";
    for (const auto& r : rows) os << r << ";";
    std::vector<std::string> ends = d.ends;
    os << "#";
    for (const auto& e : ends) os << e << ";";
    return os.str();
}

}  // namespace

Diagram quotient_joins(const Diagram& d) {
    Diagram out = d;
    while (!out.joins.empty()) {
        Join j = out.joins.back();
        out.joins.pop_back();
        if (j.a == j.b) continue;  // the arc closed into a circle
        merge_arcs(out, std::min(j.a, j.b), std::max(j.a, j.b));
    }
    return out;
}

std::vector<Diagram> reidemeister_neighbors(const Diagram& d) {
    std::vector<Diagram> out;
    collect_r1(d, out);
    collect_r2(d, out);
    collect_r3(d, out);
    return out;
}

SimplifyResult simplify_bounded(const Diagram& d, int max_expansions) {
    Diagram start = quotient_joins(d);
    SimplifyResult result;
    result.best = start;
    if (start.crossings.empty()) {
        result.crossingless = true;
        return result;
    }

    auto better = [](const Diagram& a, const Diagram& b) {
        return a.crossings.size() > b.crossings.size();
    };
    std::priority_queue<Diagram, std::vector<Diagram>, decltype(better)> frontier(better);
    std::set<std::string> seen;
    frontier.push(start);
    seen.insert(canonical_key(start));

    while (!frontier.empty() && result.expansions < max_expansions) {
        Diagram cur = frontier.top();
        frontier.pop();
        ++result.expansions;
        for (auto& next : reidemeister_neighbors(cur)) {
            if (next.crossings.size() < result.best.crossings.size()) result.best = next;
            if (next.crossings.empty()) {
                result.crossingless = true;
                return result;
            }
            auto key = canonical_key(next);
            if (seen.insert(std::move(key)).second) frontier.push(std::move(next));
        }
    }
    return result;
}

std::string to_string(PairVerdict v) {
    switch (v) {
        case PairVerdict::certified_trivial: return "certified-trivial";
        case PairVerdict::certified_nontrivial_component_count:
            return "certified-nontrivial-component-count";
        case PairVerdict::inconclusive: return "inconclusive";
        case PairVerdict::not_checked: return "not-checked";
    }
    return "?";
}

TriplaneReport validate_triplane(const TriPlane& tp, int max_expansions) {
    TriplaneReport report;
    if (tp.b < 1) report.structural.push_back("b must be positive");
    if (static_cast<int>(tp.boundary.size()) != 2 * tp.b)
        report.structural.push_back("boundary must list exactly 2b endpoint labels");
    for (int i = 0; i < 3; ++i) {
        const auto& panel = tp.panels[i];
        if (static_cast<int>(panel.ends.size()) != 2 * tp.b) {
            std::ostringstream os;
            os << "panel " << i << " has " << panel.ends.size() / 2
               << " strands, expected b = " << tp.b;
            report.structural.push_back(os.str());
            continue;
        }
        for (const auto& p : validate_diagram(panel)) {
            std::ostringstream os;
            os << "panel " << i << ": " << p;
            report.structural.push_back(os.str());
        }
    }
    if (tp.patch_counts) {
        const auto& c = *tp.patch_counts;
        for (int i = 0; i < 3; ++i)
            if (c[i] < 1 || c[i] > tp.b) {
                std::ostringstream os;
                os << "patch count c" << (i + 1) << " = " << c[i] << " outside [1, b]";
                report.structural.push_back(os.str());
            }
        if (c[0] + c[1] + c[2] - tp.b > 2)
            report.structural.push_back("Euler characteristic c1+c2+c3-b exceeds 2");
    }
    if (!report.structural.empty()) return report;

    // D_i pairs: (P12, P31) -> c1, (P23, P12) -> c2, (P31, P23) -> c3
    const std::array<std::pair<int, int>, 3> pairs = {{{0, 2}, {1, 0}, {2, 1}}};
    for (int i = 0; i < 3; ++i) {
        Diagram u = panel_union(tp.panels[pairs[i].first], tp.panels[pairs[i].second]);
        report.pair_components[i] = component_count(u);
        if (!tp.patch_counts) continue;
        if (report.pair_components[i] != (*tp.patch_counts)[i]) {
            report.pair_verdicts[i] = PairVerdict::certified_nontrivial_component_count;
            continue;
        }
        auto simplified = simplify_bounded(u, max_expansions);
        report.pair_verdicts[i] =
            simplified.crossingless ? PairVerdict::certified_trivial : PairVerdict::inconclusive;
    }
    return report;
}

}  // namespace keibridge
