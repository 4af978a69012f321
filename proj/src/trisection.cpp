#include "keibridge/trisection.hpp"

#include <cmath>
#include <stdexcept>

namespace keibridge {

namespace {

// count^3 <= order^e, exactly. Saturating powers keep the comparison safe.
bool cube_within_power(uint64_t count, int order, long long e) {
    if (e < 0) return false;  // count >= 1 always, order^e < 1
    unsigned __int128 lhs = static_cast<unsigned __int128>(count);
    lhs = lhs * count;
    const unsigned __int128 cap = ~static_cast<unsigned __int128>(0) / count;
    if (lhs > cap) return false;  // count^3 overflows 128 bits, order^e cannot reach it
    lhs *= count;
    unsigned __int128 rhs = 1;
    for (long long i = 0; i < e; ++i) {
        if (rhs >= lhs) return true;
        const unsigned __int128 rcap = ~static_cast<unsigned __int128>(0) / order;
        if (rhs > rcap) return true;
        rhs *= order;
    }
    return rhs >= lhs;
}

}  // namespace

void validate_params(const TrisectionParams& p) {
    if (p.b < 1) throw std::invalid_argument("trisection parameter b must be positive");
    for (int c : {p.c1, p.c2, p.c3})
        if (c < 1 || c > p.b)
            throw std::invalid_argument("trisection patch counts must lie in [1, b]");
    if (p.c1 + p.c2 + p.c3 - p.b > 2)
        throw std::invalid_argument("Euler characteristic c1+c2+c3-b exceeds 2");
}

int euler_char(const TrisectionParams& p) {
    validate_params(p);
    return p.c1 + p.c2 + p.c3 - p.b;
}

double min_patch_bound(uint64_t col_count, int kei_order) {
    if (col_count < 1) throw std::invalid_argument("coloring count must be positive");
    if (kei_order < 2) throw std::invalid_argument("kei order must be at least 2");
    return std::log(static_cast<double>(col_count)) / std::log(static_cast<double>(kei_order));
}

BoundReport bridge_lower_bound(uint64_t col_count, int kei_order, int chi) {
    if (chi > 2) throw std::invalid_argument("Euler characteristic of a surface link is <= 2");
    BoundReport r;
    r.col_count = col_count;
    r.kei_order = kei_order;
    r.chi = chi;
    r.raw_bound = 3.0 * min_patch_bound(col_count, kei_order) - chi;
    // Least t >= 1 with t == -chi (mod 3) and t >= raw, the latter decided
    // by the exact comparison count^3 <= order^(t+chi).
    int t = 1;
    while (((t + chi) % 3 + 3) % 3 != 0) ++t;
    while (!cube_within_power(col_count, kei_order, t + chi)) t += 3;
    r.refined_bound = t;
    return r;
}

bool check_congruence(int b, int chi) {
    if (b < 1) throw std::invalid_argument("bridge number must be positive");
    return ((b + chi) % 3 + 3) % 3 == 0;
}

Assignment act_on_coloring(const Diagram& tangle, const Assignment& coloring, long long m,
                           const Kei& x) {
    const std::string& terminal = tangle.terminal_arc();
    const int a_minus = coloring.at(terminal);
    Assignment out;
    for (const auto& [arc, col] : coloring) out[arc] = x.iterated_act(col, a_minus, m);
    return out;
}

uint64_t twist_spun_coloring_count(const Diagram& tangle, const Kei& x, long long m,
                                   const SearchOptions& opts) {
    auto colorings = enumerate_colorings(tangle, x, opts);
    uint64_t n = 0;
    for (const auto& c : colorings)
        if (act_on_coloring(tangle, c, m, x) == c) ++n;
    return n;
}

uint64_t parity_shortcut_count(const Diagram& tangle, const Kei& x, long long m,
                               const SearchOptions& opts) {
    if (!tangle.terminal.has_value())
        throw std::invalid_argument("parity_shortcut_count requires a 1-tangle with terminal end");
    if (m % 2 == 0) return count_colorings(tangle, x, opts);
    return static_cast<uint64_t>(x.order());
}

bool check_hypothesis(const Diagram& tangle, const Kei& x, int b_k,
                      const SearchOptions& opts) {
    if (b_k < 1) throw std::invalid_argument("bridge number must be positive");
    const uint64_t count = count_colorings(tangle, x, opts);
    unsigned __int128 power = 1;
    for (int i = 0; i < b_k; ++i) {
        power *= static_cast<unsigned>(x.order());
        if (power > static_cast<unsigned __int128>(count)) return false;
    }
    return power == static_cast<unsigned __int128>(count);
}

TwistSpunBridgeNumbers twist_spun_bridge_numbers(int b_k, bool hypothesis_ok) {
    if (b_k < 1) throw std::invalid_argument("bridge number must be positive");
    if (!hypothesis_ok)
        throw std::invalid_argument(
            "twist-spun bridge numbers require the verified hypothesis "
            "(#X)^b(K) = #Col_X(T_K); without it only the lower bound applies");
    return {3 * b_k - 2, 3 * b_k - 1, 3 * b_k};
}

int connected_sum_upper_bound(int b_a, int b_b) {
    if (b_a < 1 || b_b < 1) throw std::invalid_argument("bridge numbers must be positive");
    return b_a + b_b - 1;
}

int torus_sum_bridge_number(int k) {
    if (k < 1) throw std::invalid_argument("connected-sum multiplicity must be positive");
    return k + 1;
}

}  // namespace keibridge
