#include "keibridge/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace keibridge {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::map<std::string, int> arc_index(const Diagram& d) {
    std::map<std::string, int> idx;
    for (int i = 0; i < static_cast<int>(d.arcs.size()); ++i) idx[d.arcs[i]] = i;
    return idx;
}

UnionFind strand_union(const Diagram& d, const std::map<std::string, int>& idx) {
    UnionFind uf(static_cast<int>(d.arcs.size()));
    for (const auto& c : d.crossings) uf.unite(idx.at(c.under_in), idx.at(c.under_out));
    for (const auto& j : d.joins) uf.unite(idx.at(j.a), idx.at(j.b));
    return uf;
}

// An arc end is consumed by a crossing under slot, a join mention or a
// boundary end. Handles let generators re-point one end of an arc.
struct EndHandle {
    enum class Kind { under_in, under_out, join_a, join_b } kind;
    int index;
};

std::vector<EndHandle> end_handles(const Diagram& d, const std::string& arc) {
    std::vector<EndHandle> hs;
    for (int i = 0; i < static_cast<int>(d.crossings.size()); ++i) {
        if (d.crossings[i].under_in == arc) hs.push_back({EndHandle::Kind::under_in, i});
        if (d.crossings[i].under_out == arc) hs.push_back({EndHandle::Kind::under_out, i});
    }
    for (int i = 0; i < static_cast<int>(d.joins.size()); ++i) {
        if (d.joins[i].a == arc) hs.push_back({EndHandle::Kind::join_a, i});
        if (d.joins[i].b == arc) hs.push_back({EndHandle::Kind::join_b, i});
    }
    return hs;
}

void assign_handle(Diagram& d, const EndHandle& h, const std::string& arc) {
    switch (h.kind) {
        case EndHandle::Kind::under_in: d.crossings[h.index].under_in = arc; break;
        case EndHandle::Kind::under_out: d.crossings[h.index].under_out = arc; break;
        case EndHandle::Kind::join_a: d.joins[h.index].a = arc; break;
        case EndHandle::Kind::join_b: d.joins[h.index].b = arc; break;
    }
}

std::string fresh_label(const std::set<std::string>& taken, std::string base) {
    while (taken.count(base)) base += "'";
    return base;
}

void require_knot(const Diagram& d, const char* what) {
    if (d.is_tangle()) throw std::invalid_argument(std::string(what) + ": input must be a link diagram");
    if (component_count(d) != 1)
        throw std::invalid_argument(std::string(what) + ": input must have a single component");
}

}  // namespace

const std::string& Diagram::terminal_arc() const {
    if (!terminal.has_value()) throw std::invalid_argument("diagram has no terminal end");
    return ends.at(*terminal);
}

std::vector<std::string> validate_diagram(const Diagram& d) {
    std::vector<std::string> problems;
    std::set<std::string> seen;
    for (const auto& a : d.arcs) {
        if (a.empty()) problems.push_back("empty arc label");
        if (!seen.insert(a).second) problems.push_back("duplicate arc label: " + a);
    }
    auto known = [&](const std::string& a) { return seen.count(a) != 0; };
    for (const auto& c : d.crossings)
        for (const auto& a : {c.under_in, c.over, c.under_out})
            if (!known(a)) problems.push_back("crossing references undeclared arc: " + a);
    for (const auto& j : d.joins)
        for (const auto& a : {j.a, j.b})
            if (!known(a)) problems.push_back("join references undeclared arc: " + a);
    for (const auto& a : d.ends)
        if (!known(a)) problems.push_back("boundary end on undeclared arc: " + a);
    if (d.ends.size() % 2 != 0) problems.push_back("odd number of boundary ends");
    if (d.terminal.has_value()) {
        if (d.strands() != 1) problems.push_back("terminal end requires a 1-strand tangle");
        if (*d.terminal < 0 || *d.terminal >= static_cast<int>(d.ends.size()))
            problems.push_back("terminal end index out of range");
    }
    if (!problems.empty()) return problems;

    // Each arc has exactly two ends, or none (a closed circle).
    std::map<std::string, int> ends_used;
    for (const auto& a : d.arcs) ends_used[a] = 0;
    for (const auto& c : d.crossings) {
        ends_used[c.under_in]++;
        ends_used[c.under_out]++;
    }
    for (const auto& j : d.joins) {
        ends_used[j.a]++;
        ends_used[j.b]++;
    }
    for (const auto& a : d.ends) ends_used[a]++;
    for (const auto& [arc, n] : ends_used) {
        if (n != 0 && n != 2) {
            std::ostringstream os;
            os << "arc " << arc << " has " << n << " ends consumed, expected 0 or 2";
            problems.push_back(os.str());
        }
    }
    if (!problems.empty()) return problems;

    // Each strand carries exactly two boundary ends.
    auto idx = arc_index(d);
    auto uf = strand_union(d, idx);
    std::map<int, int> boundary_per_class;
    for (const auto& a : d.ends) boundary_per_class[uf.find(idx.at(a))]++;
    for (const auto& [cls, n] : boundary_per_class) {
        if (n != 2) {
            std::ostringstream os;
            os << "strand through arc " << d.arcs[cls] << " has " << n
               << " boundary ends, expected 2";
            problems.push_back(os.str());
        }
    }
    return problems;
}

int component_count(const Diagram& d) {
    auto idx = arc_index(d);
    auto uf = strand_union(d, idx);
    std::set<int> classes;
    for (int i = 0; i < static_cast<int>(d.arcs.size()); ++i) classes.insert(uf.find(i));
    return static_cast<int>(classes.size());
}

std::vector<std::vector<std::string>> components(const Diagram& d) {
    auto idx = arc_index(d);
    auto uf = strand_union(d, idx);
    std::map<int, std::vector<std::string>> groups;
    for (int i = 0; i < static_cast<int>(d.arcs.size()); ++i)
        groups[uf.find(i)].push_back(d.arcs[i]);
    std::vector<std::vector<std::string>> out;
    for (auto& [cls, arcs] : groups) {
        std::sort(arcs.begin(), arcs.end());
        out.push_back(std::move(arcs));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Diagram trivial_link(int c) {
    if (c < 1) throw std::invalid_argument("trivial_link requires c >= 1");
    Diagram d;
    for (int i = 0; i < c; ++i) d.arcs.push_back("u" + std::to_string(i));
    return d;
}

Diagram torus_2q(int q) {
    if (q < 3 || q % 2 == 0)
        throw std::invalid_argument("torus_2q requires odd q >= 3");
    Diagram d;
    for (int i = 0; i < q; ++i) d.arcs.push_back("a" + std::to_string(i));
    for (int i = 0; i < q; ++i)
        d.crossings.push_back({d.arcs[i], d.arcs[(i + 1) % q], d.arcs[(i + 2) % q]});
    return d;
}

Diagram connected_sum(const Diagram& d1, const std::string& arc1,
                      const Diagram& d2, const std::string& arc2) {
    require_knot(d1, "connected_sum");
    require_knot(d2, "connected_sum");
    if (std::find(d1.arcs.begin(), d1.arcs.end(), arc1) == d1.arcs.end())
        throw std::invalid_argument("connected_sum: arc " + arc1 + " not in first diagram");
    if (std::find(d2.arcs.begin(), d2.arcs.end(), arc2) == d2.arcs.end())
        throw std::invalid_argument("connected_sum: arc " + arc2 + " not in second diagram");

    Diagram out = d1;
    std::set<std::string> taken(out.arcs.begin(), out.arcs.end());

    // Bring in d2 with clash-free labels.
    std::map<std::string, std::string> rename;
    for (const auto& a : d2.arcs) {
        std::string fresh = fresh_label(taken, a);
        taken.insert(fresh);
        rename[a] = fresh;
        out.arcs.push_back(fresh);
    }
    const int base_x = static_cast<int>(out.crossings.size());
    const int base_j = static_cast<int>(out.joins.size());
    for (const auto& c : d2.crossings)
        out.crossings.push_back({rename.at(c.under_in), rename.at(c.over), rename.at(c.under_out)});
    for (const auto& j : d2.joins) out.joins.push_back({rename.at(j.a), rename.at(j.b)});
    const std::string a2 = rename.at(arc2);

    // Cut both chosen arcs next to one end and splice the halves: one end
    // handle of each arc moves to the other label. Crossingless circles have
    // no handles; their cut ends fuse as joins instead.
    auto h1 = end_handles(out, arc1);
    h1.erase(std::remove_if(h1.begin(), h1.end(),
                            [&](const EndHandle& h) {
                                return (h.kind == EndHandle::Kind::under_in ||
                                        h.kind == EndHandle::Kind::under_out)
                                           ? h.index >= base_x
                                           : h.index >= base_j;
                            }),
             h1.end());
    std::vector<EndHandle> h2;
    for (const auto& h : end_handles(out, a2)) {
        bool in_d2 = (h.kind == EndHandle::Kind::under_in || h.kind == EndHandle::Kind::under_out)
                         ? h.index >= base_x
                         : h.index >= base_j;
        if (in_d2) h2.push_back(h);
    }

    if (h1.size() == 2 && h2.size() == 2) {
        assign_handle(out, h1[1], a2);
        assign_handle(out, h2[0], arc1);
    } else if (h1.size() == 2 && h2.empty()) {
        assign_handle(out, h1[1], a2);
        out.joins.push_back({arc1, a2});
    } else if (h1.empty() && h2.size() == 2) {
        assign_handle(out, h2[0], arc1);
        out.joins.push_back({a2, arc1});
    } else {
        out.joins.push_back({arc1, a2});
        out.joins.push_back({arc1, a2});
    }
    return out;
}

Diagram cut_to_1tangle(const Diagram& d, const std::string& arc) {
    require_knot(d, "cut_to_1tangle");
    if (std::find(d.arcs.begin(), d.arcs.end(), arc) == d.arcs.end())
        throw std::invalid_argument("cut_to_1tangle: no arc named " + arc);
    Diagram out = d;
    auto hs = end_handles(out, arc);
    if (hs.empty()) {
        // crossingless circle: both cut ends stay on the one arc
        out.ends = {arc, arc};
    } else {
        std::set<std::string> taken(out.arcs.begin(), out.arcs.end());
        std::string cut = fresh_label(taken, arc + "^");
        out.arcs.push_back(cut);
        assign_handle(out, hs[1], cut);
        out.ends = {arc, cut};
    }
    out.terminal = 0;
    return out;
}

Diagram close_1tangle(const Diagram& t) {
    if (t.strands() != 1) throw std::invalid_argument("close_1tangle requires a 1-strand tangle");
    Diagram out = t;
    const std::string u = out.ends[0];
    const std::string v = out.ends[1];
    out.ends.clear();
    out.terminal.reset();
    if (u != v) out.joins.push_back({u, v});
    // u == v: the lone arc closes into a circle; nothing to record.
    return out;
}

Diagram panel_union(const Diagram& a, const Diagram& b) {
    if (!a.is_tangle() || !b.is_tangle())
        throw std::invalid_argument("panel_union requires tangle diagrams");
    if (a.ends.size() != b.ends.size())
        throw std::invalid_argument("panel_union: boundary size mismatch");
    Diagram out;
    auto tag = [](const char* p, const std::string& s) { return std::string(p) + s; };
    for (const auto& arc : a.arcs) out.arcs.push_back(tag("A:", arc));
    for (const auto& arc : b.arcs) out.arcs.push_back(tag("B:", arc));
    for (const auto& c : a.crossings)
        out.crossings.push_back({tag("A:", c.under_in), tag("A:", c.over), tag("A:", c.under_out)});
    // Mirroring b is a combinatorial reflection; kei relations are symmetric
    // in the two under-arcs, so the crossing records carry over verbatim.
    for (const auto& c : b.crossings)
        out.crossings.push_back({tag("B:", c.under_in), tag("B:", c.over), tag("B:", c.under_out)});
    for (const auto& j : a.joins) out.joins.push_back({tag("A:", j.a), tag("A:", j.b)});
    for (const auto& j : b.joins) out.joins.push_back({tag("B:", j.a), tag("B:", j.b)});
    for (size_t i = 0; i < a.ends.size(); ++i)
        out.joins.push_back({tag("A:", a.ends[i]), tag("B:", b.ends[i])});
    return out;
}

TriPlane unknotted_sphere_triplane() {
    TriPlane tp;
    tp.b = 1;
    tp.boundary = {"p0", "p1"};
    Diagram panel;
    panel.arcs = {"s"};
    panel.ends = {"s", "s"};
    tp.panels = {panel, panel, panel};
    tp.patch_counts = {{1, 1, 1}};
    return tp;
}

}  // namespace keibridge
