#include "keibridge/coloring.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <set>

namespace keibridge {

namespace {

// Diagram folded to solver form: variables are join-classes of arcs,
// relations come from crossings.
struct Compiled {
    std::vector<std::string> arcs;
    std::vector<int> var_of_arc;
    int nvars = 0;
    struct Rel {
        int uin, over, uout;
    };
    std::vector<Rel> rels;
};

Compiled compile(const Diagram& d) {
    Compiled c;
    c.arcs = d.arcs;
    std::map<std::string, int> idx;
    for (int i = 0; i < static_cast<int>(d.arcs.size()); ++i) idx[d.arcs[i]] = i;

    std::vector<int> parent(d.arcs.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& j : d.joins) parent[find(idx.at(j.a))] = find(idx.at(j.b));

    std::map<int, int> var_of_root;
    c.var_of_arc.resize(d.arcs.size());
    for (int i = 0; i < static_cast<int>(d.arcs.size()); ++i) {
        int r = find(i);
        auto [it, fresh] = var_of_root.try_emplace(r, c.nvars);
        if (fresh) ++c.nvars;
        c.var_of_arc[i] = it->second;
    }
    for (const auto& x : d.crossings)
        c.rels.push_back({c.var_of_arc[idx.at(x.under_in)], c.var_of_arc[idx.at(x.over)],
                          c.var_of_arc[idx.at(x.under_out)]});
    return c;
}

// Backtracking search over variables in a spanning-traversal order: each
// next variable is the one determined by the most already-assigned
// relations, so generic counting on knot diagrams stays near-linear.
class Solver {
public:
    Solver(const Compiled& c, const Kei& x, const SearchOptions& opts)
        : c_(c), kei_(x), budget_(opts.budget) {}

    // fixed: var -> color preassignments. Returns false on contradiction
    // among the preassignments themselves.
    bool prepare(const std::map<int, int>& fixed) {
        val_.assign(c_.nvars, -1);
        for (const auto& [v, col] : fixed) {
            if (val_[v] != -1 && val_[v] != col) return false;
            val_[v] = col;
        }
        order_.clear();
        std::vector<bool> assigned(c_.nvars, false);
        for (const auto& [v, col] : fixed) assigned[v] = true;
        std::vector<int> todo;
        for (int v = 0; v < c_.nvars; ++v)
            if (!assigned[v]) todo.push_back(v);
        while (!todo.empty()) {
            int best = -1, best_full = -1, best_touch = -1;
            for (int v : todo) {
                int full = 0, touch = 0;
                for (const auto& r : c_.rels) {
                    int involved = (r.uin == v) + (r.over == v) + (r.uout == v);
                    if (!involved) continue;
                    int others_set = (r.uin == v || assigned[r.uin]) &&
                                             (r.over == v || assigned[r.over]) &&
                                             (r.uout == v || assigned[r.uout])
                                         ? 1
                                         : 0;
                    int any_set = assigned[r.uin] || assigned[r.over] || assigned[r.uout];
                    full += others_set;
                    touch += any_set;
                }
                if (full > best_full || (full == best_full && touch > best_touch)) {
                    best = v;
                    best_full = full;
                    best_touch = touch;
                }
            }
            order_.push_back(best);
            assigned[best] = true;
            todo.erase(std::find(todo.begin(), todo.end(), best));
        }
        // A relation is checked as soon as its last variable gets a value.
        std::vector<int> level_of(c_.nvars, -1);
        for (int i = 0; i < static_cast<int>(order_.size()); ++i) level_of[order_[i]] = i;
        rels_at_.assign(order_.size(), {});
        upfront_.clear();
        for (int i = 0; i < static_cast<int>(c_.rels.size()); ++i) {
            const auto& r = c_.rels[i];
            int lvl = std::max({level_of[r.uin], level_of[r.over], level_of[r.uout]});
            if (lvl < 0)
                upfront_.push_back(i);
            else
                rels_at_[lvl].push_back(i);
        }
        for (int i : upfront_)
            if (!holds(c_.rels[i])) return false;
        return true;
    }

    // Runs the search; calls sink on every complete valuation.
    void run(const std::function<void(const std::vector<int>&)>& sink) {
        nodes_ = 0;
        dfs(0, sink);
    }

private:
    bool holds(const Compiled::Rel& r) const {
        return kei_.op(val_[r.uin], val_[r.over]) == val_[r.uout];
    }

    void dfs(size_t depth, const std::function<void(const std::vector<int>&)>& sink) {
        if (depth == order_.size()) {
            sink(val_);
            return;
        }
        int v = order_[depth];
        for (int col = 0; col < kei_.order(); ++col) {
            if (++nodes_ > budget_) throw BudgetExceeded(budget_);
            val_[v] = col;
            bool ok = true;
            for (int i : rels_at_[depth]) {
                if (!holds(c_.rels[i])) {
                    ok = false;
                    break;
                }
            }
            if (ok) dfs(depth + 1, sink);
        }
        val_[v] = -1;
    }

    const Compiled& c_;
    const Kei& kei_;
    uint64_t budget_;
    uint64_t nodes_ = 0;
    std::vector<int> val_;
    std::vector<int> order_;
    std::vector<std::vector<int>> rels_at_;
    std::vector<int> upfront_;
};

Assignment to_assignment(const Compiled& c, const std::vector<int>& val) {
    Assignment a;
    for (int i = 0; i < static_cast<int>(c.arcs.size()); ++i)
        a[c.arcs[i]] = val[c.var_of_arc[i]];
    return a;
}

void sort_assignments(std::vector<Assignment>& out) {
    // Assignment is an ordered map keyed by arc label, so map comparison is
    // exactly lexicographic order along sorted arc labels.
    std::sort(out.begin(), out.end());
}

std::map<int, int> boundary_fix(const Compiled& c, const Diagram& tangle,
                                const std::vector<int>& boundary_colors, bool& consistent) {
    consistent = true;
    std::map<std::string, int> idx;
    for (int i = 0; i < static_cast<int>(tangle.arcs.size()); ++i) idx[tangle.arcs[i]] = i;
    std::map<int, int> fixed;
    for (size_t p = 0; p < tangle.ends.size(); ++p) {
        int v = c.var_of_arc[idx.at(tangle.ends[p])];
        auto [it, fresh] = fixed.try_emplace(v, boundary_colors[p]);
        if (!fresh && it->second != boundary_colors[p]) consistent = false;
    }
    return fixed;
}

}  // namespace

bool is_valid_coloring(const Diagram& d, const Kei& x, const Assignment& a) {
    for (const auto& arc : d.arcs) {
        auto it = a.find(arc);
        if (it == a.end() || it->second < 0 || it->second >= x.order()) return false;
    }
    for (const auto& j : d.joins)
        if (a.at(j.a) != a.at(j.b)) return false;
    for (const auto& c : d.crossings)
        if (x.op(a.at(c.under_in), a.at(c.over)) != a.at(c.under_out)) return false;
    return true;
}

std::vector<Assignment> enumerate_colorings(const Diagram& d, const Kei& x,
                                            const SearchOptions& opts) {
    Compiled c = compile(d);
    Solver s(c, x, opts);
    std::vector<Assignment> out;
    if (s.prepare({}))
        s.run([&](const std::vector<int>& val) { out.push_back(to_assignment(c, val)); });
    sort_assignments(out);
    return out;
}

uint64_t count_colorings_backtracking(const Diagram& d, const Kei& x,
                                      const SearchOptions& opts) {
    Compiled c = compile(d);
    Solver s(c, x, opts);
    uint64_t n = 0;
    if (s.prepare({})) s.run([&](const std::vector<int>&) { ++n; });
    return n;
}

uint64_t count_colorings(const Diagram& d, const Kei& x, const SearchOptions& opts) {
    if (x.order() >= 2 && x.is_dihedral()) {
        uint64_t n = count_dihedral(d, x.order());
#ifndef NDEBUG
        if (d.arcs.size() <= 9 && x.order() <= 9)
            assert(n == count_colorings_backtracking(d, x, opts));
#endif
        return n;
    }
    return count_colorings_backtracking(d, x, opts);
}

uint64_t brute_force_count(const Diagram& d, const Kei& x, const SearchOptions& opts) {
    Compiled c = compile(d);
    const int n = x.order();
    uint64_t total = 1;
    for (int i = 0; i < c.nvars; ++i) {
        if (total > opts.budget / std::max(n, 1)) throw BudgetExceeded(opts.budget);
        total *= static_cast<uint64_t>(n);
    }
    std::vector<int> val(c.nvars, 0);
    uint64_t count = 0;
    for (uint64_t it = 0; it < total; ++it) {
        uint64_t k = it;
        for (int i = 0; i < c.nvars; ++i) {
            val[i] = static_cast<int>(k % n);
            k /= n;
        }
        bool ok = true;
        for (const auto& r : c.rels) {
            if (x.op(val[r.uin], val[r.over]) != val[r.uout]) {
                ok = false;
                break;
            }
        }
        if (ok) ++count;
    }
    return count;
}

uint64_t count_dihedral(const Diagram& d, int p) {
    if (p < 2) throw std::invalid_argument("count_dihedral requires p >= 2");
    std::map<std::string, int> idx;
    for (int i = 0; i < static_cast<int>(d.arcs.size()); ++i) idx[d.arcs[i]] = i;
    const int n = static_cast<int>(d.arcs.size());
    std::vector<std::vector<long long>> m;
    for (const auto& c : d.crossings) {
        std::vector<long long> row(n, 0);
        row[idx.at(c.under_in)] += 1;
        row[idx.at(c.under_out)] += 1;
        row[idx.at(c.over)] -= 2;
        m.push_back(std::move(row));
    }
    for (const auto& j : d.joins) {
        std::vector<long long> row(n, 0);
        row[idx.at(j.a)] += 1;
        row[idx.at(j.b)] -= 1;
        m.push_back(std::move(row));
    }

    // Diagonalize over the integers by unimodular row/column operations;
    // the solution count mod p is then a product over diagonal entries.
    const int rows = static_cast<int>(m.size());
    int rank_limit = std::min(rows, n);
    std::vector<long long> diag;
    int r = 0;
    while (r < rank_limit) {
        int pi = -1, pj = -1;
        long long best = 0;
        for (int i = r; i < rows; ++i)
            for (int j = r; j < n; ++j)
                if (m[i][j] != 0 && (best == 0 || std::llabs(m[i][j]) < best)) {
                    best = std::llabs(m[i][j]);
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        std::swap(m[pi], m[r]);
        if (pj != r)
            for (int i = 0; i < rows; ++i) std::swap(m[i][pj], m[i][r]);
        bool clean = true;
        for (int i = r + 1; i < rows; ++i) {
            long long q = m[i][r] / m[r][r];
            if (q != 0)
                for (int j = r; j < n; ++j) m[i][j] -= q * m[r][j];
            if (m[i][r] != 0) clean = false;
        }
        for (int j = r + 1; j < n; ++j) {
            long long q = m[r][j] / m[r][r];
            if (q != 0)
                for (int i = r; i < rows; ++i) m[i][j] -= q * m[i][r];
            if (m[r][j] != 0) clean = false;
        }
        if (clean) {
            diag.push_back(std::llabs(m[r][r]));
            ++r;
        }
    }

    uint64_t count = 1;
    for (int i = 0; i < n; ++i) {
        long long di = i < static_cast<int>(diag.size()) ? diag[i] : 0;
        count *= static_cast<uint64_t>(std::gcd(di, static_cast<long long>(p)));
    }
    return count;
}

std::vector<Assignment> extend_boundary_coloring(const Diagram& tangle,
                                                 const std::vector<int>& boundary_colors,
                                                 const Kei& x, const SearchOptions& opts) {
    if (boundary_colors.size() != tangle.ends.size())
        throw std::invalid_argument("boundary coloring must cover every endpoint");
    for (int col : boundary_colors)
        if (col < 0 || col >= x.order())
            throw std::invalid_argument("boundary color out of range");
    Compiled c = compile(tangle);
    bool consistent = false;
    auto fixed = boundary_fix(c, tangle, boundary_colors, consistent);
    if (!consistent) return {};
    Solver s(c, x, opts);
    std::vector<Assignment> out;
    if (s.prepare(fixed))
        s.run([&](const std::vector<int>& val) { out.push_back(to_assignment(c, val)); });
    sort_assignments(out);
    return out;
}

namespace {

std::vector<int> boundary_vector(const Diagram& panel, const Assignment& a) {
    std::vector<int> v;
    v.reserve(panel.ends.size());
    for (const auto& arc : panel.ends) v.push_back(a.at(arc));
    return v;
}

}  // namespace

uint64_t count_triplane_colorings(const TriPlane& tp, const Kei& x,
                                  const SearchOptions& opts) {
    for (const auto& panel : tp.panels)
        if (static_cast<int>(panel.ends.size()) != 2 * tp.b)
            throw std::invalid_argument("tri-plane panel boundary size mismatch");
    auto base = enumerate_colorings(tp.panels[0], x, opts);
    std::map<std::vector<int>, uint64_t> by_boundary;
    for (const auto& a : base) ++by_boundary[boundary_vector(tp.panels[0], a)];
    uint64_t total = 0;
    for (const auto& [bvec, n0] : by_boundary) {
        uint64_t n1 = extend_boundary_coloring(tp.panels[1], bvec, x, opts).size();
        if (n1 == 0) continue;
        uint64_t n2 = extend_boundary_coloring(tp.panels[2], bvec, x, opts).size();
        total += n0 * n1 * n2;
    }
    return total;
}

std::vector<std::array<Assignment, 3>> enumerate_triplane_colorings(
    const TriPlane& tp, const Kei& x, const SearchOptions& opts) {
    std::vector<std::array<Assignment, 3>> out;
    auto base = enumerate_colorings(tp.panels[0], x, opts);
    for (const auto& c0 : base) {
        auto bvec = boundary_vector(tp.panels[0], c0);
        auto ext1 = extend_boundary_coloring(tp.panels[1], bvec, x, opts);
        if (ext1.empty()) continue;
        auto ext2 = extend_boundary_coloring(tp.panels[2], bvec, x, opts);
        for (const auto& c1 : ext1)
            for (const auto& c2 : ext2) out.push_back({c0, c1, c2});
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace keibridge
