#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "keibridge/coloring.hpp"
#include "keibridge/diagram.hpp"
#include "keibridge/kei.hpp"

namespace keibridge {

/// Parameters (b; c1, c2, c3) of a bridge trisection.
struct TrisectionParams {
    int b = 1;
    int c1 = 1, c2 = 1, c3 = 1;

    bool operator==(const TrisectionParams&) const = default;
};

/// Lower-bound record for the bridge number of a surface link.
struct BoundReport {
    uint64_t col_count = 0;
    int kei_order = 0;
    int chi = 0;
    double raw_bound = 0.0;  // 3*log_{kei_order}(col_count) - chi
    int refined_bound = 0;   // least integer >= raw, == -chi (mod 3), >= 1

    bool operator==(const BoundReport&) const = default;
};

// Built-in constants: bridge numbers of the trivial stabilizing surfaces
// and Euler characteristics of the standard closed surfaces.
inline constexpr int bridge_number_P = 2;  // trivially embedded RP^2
inline constexpr int bridge_number_T = 3;  // trivially embedded torus
inline constexpr int chi_sphere = 2;
inline constexpr int chi_rp2 = 1;
inline constexpr int chi_torus = 0;

/// chi = 2b - 3b + (c1 + c2 + c3) from the trisection's cell decomposition.
int euler_char(const TrisectionParams& params);

void validate_params(const TrisectionParams& params);

/// min{c1,c2,c3} >= log_{#X}(#Col_X), returned as a real number.
double min_patch_bound(uint64_t col_count, int kei_order);

/// 3*log_{#X}(#Col_X) - chi, with the refined integer bound computed by
/// exact integer power comparison (no floating-point rounding).
BoundReport bridge_lower_bound(uint64_t col_count, int kei_order, int chi);

/// b == -chi (mod 3).
bool check_congruence(int b, int chi);

/// Entrywise m-fold right-translation of a 1-tangle coloring by the color
/// of its terminal arc. Throws if the tangle has no terminal end.
Assignment act_on_coloring(const Diagram& tangle, const Assignment& coloring, long long m,
                           const Kei& x);

/// #Col_X of the m-twist spin of K: colorings of the 1-tangle T_K fixed by
/// the m-fold terminal action.
uint64_t twist_spun_coloring_count(const Diagram& tangle, const Kei& x, long long m,
                                   const SearchOptions& opts = {});

/// The parity form of the same count: #Col_X(T_K) for even m, #X for odd.
uint64_t parity_shortcut_count(const Diagram& tangle, const Kei& x, long long m,
                               const SearchOptions& opts = {});

/// True iff (#X)^{b_K} equals #Col_X(T_K) exactly.
bool check_hypothesis(const Diagram& tangle, const Kei& x, int b_k,
                      const SearchOptions& opts = {});

struct TwistSpunBridgeNumbers {
    int sphere;  // b(S_{2m}(K))       = 3 b(K) - 2
    int with_p;  // b(S_{2m}(K) # P)   = 3 b(K) - 1
    int with_t;  // b(S_{2m}(K) # T)   = 3 b(K)

    bool operator==(const TwistSpunBridgeNumbers&) const = default;
};

/// The three equalities, asserted only under the verified hypothesis;
/// refuses otherwise.
TwistSpunBridgeNumbers twist_spun_bridge_numbers(int b_k, bool hypothesis_ok);

/// b(A # B) <= b(A) + b(B) - 1.
int connected_sum_upper_bound(int b_a, int b_b);

/// Classical bridge number of the built-in family #_k T_{2,q}: k+1.
int torus_sum_bridge_number(int k);

}  // namespace keibridge
