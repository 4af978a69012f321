#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "keibridge/trisection.hpp"

using namespace keibridge;

TEST_CASE("euler characteristic of trisection parameters") {
    CHECK(euler_char({1, 1, 1, 1}) == 2);   // unknotted sphere
    CHECK(euler_char({2, 2, 1, 1}) == 2);   // stabilized sphere
    CHECK(euler_char({2, 1, 1, 1}) == 1);   // b(P) = 2 realizes RP^2
    CHECK(euler_char({3, 1, 1, 1}) == 0);   // b(T) = 3 realizes the torus
    CHECK(euler_char({4, 2, 2, 2}) == 2);
    CHECK_THROWS_AS(validate_params({0, 1, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(validate_params({2, 0, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(validate_params({1, 2, 1, 1}), std::invalid_argument);
}

TEST_CASE("congruence b == -chi mod 3") {
    CHECK(check_congruence(1, chi_sphere));
    CHECK(check_congruence(4, chi_sphere));
    CHECK(!check_congruence(2, chi_sphere));
    CHECK(!check_congruence(3, chi_sphere));
    CHECK(check_congruence(2, chi_rp2));
    CHECK(check_congruence(3, chi_torus));
    CHECK(check_congruence(3, -3));
    CHECK(check_congruence(4, -1));
}

TEST_CASE("min patch bound is the base-#X logarithm") {
    CHECK(min_patch_bound(9, 3) == doctest::Approx(2.0));
    CHECK(min_patch_bound(3, 3) == doctest::Approx(1.0));
    CHECK(min_patch_bound(27, 3) == doctest::Approx(3.0));
    CHECK(min_patch_bound(5, 5) == doctest::Approx(1.0));
}

TEST_CASE("bridge lower bound: exact refined values") {
    // count 9 over R_3, sphere: raw = 3*2 - 2 = 4, already == -2 mod 3
    auto sphere = bridge_lower_bound(9, 3, chi_sphere);
    CHECK(sphere.raw_bound == doctest::Approx(4.0));
    CHECK(sphere.refined_bound == 4);
    CHECK(check_congruence(sphere.refined_bound, chi_sphere));

    // count 27 over R_3, torus: raw = 9 - 0 = 9, == 0 mod 3
    auto torus = bridge_lower_bound(27, 3, chi_torus);
    CHECK(torus.refined_bound == 9);

    // count 3 (constants only), sphere: raw = 1, rounded up to 1
    CHECK(bridge_lower_bound(3, 3, chi_sphere).refined_bound == 1);

    // count 27 over R_3, sphere: raw = 7, next b == 1 mod 3 is 7
    CHECK(bridge_lower_bound(27, 3, chi_sphere).refined_bound == 7);

    // non-power count rounds up: 10 colorings over R_3, sphere:
    // raw = 3*log_3(10) - 2 in (4, 5); refined must reach 7
    auto np = bridge_lower_bound(10, 3, chi_sphere);
    CHECK(np.raw_bound > 4.0);
    CHECK(np.refined_bound == 7);

    // RP^2: count 9 over R_3 gives raw 5, and 5 == -1 mod 3 holds
    CHECK(bridge_lower_bound(9, 3, chi_rp2).refined_bound == 5);

    CHECK_THROWS_AS(bridge_lower_bound(0, 3, chi_sphere), std::invalid_argument);
    CHECK_THROWS_AS(bridge_lower_bound(9, 1, chi_sphere), std::invalid_argument);
}

TEST_CASE("refined bound never regresses under stabilization") {
    // adding a trivial handle (chi -> chi - 2) shifts the congruence class;
    // the refined bound changes by at most 3 and never below 1
    for (uint64_t count : {3ull, 9ull, 27ull, 81ull, 10ull})
        for (int chi : {2, 1, 0, -1, -2}) {
            auto a = bridge_lower_bound(count, 3, chi);
            auto b = bridge_lower_bound(count, 3, chi - 2);
            CHECK(b.refined_bound >= 1);
            CHECK(std::abs(a.refined_bound - b.refined_bound) <= 3);
        }
}

TEST_CASE("terminal action: identity at m=0, involution pairing") {
    auto r3 = Kei::dihedral(3);
    auto tk = cut_to_1tangle(torus_2q(3), "a0");
    for (const auto& a : enumerate_colorings(tk, r3)) {
        CHECK(act_on_coloring(tk, a, 0, r3) == a);
        auto once = act_on_coloring(tk, a, 1, r3);
        CHECK(is_valid_coloring(tk, r3, once));
        CHECK(act_on_coloring(tk, once, 1, r3) == a);  // involution
        CHECK(act_on_coloring(tk, a, 2, r3) == a);
        CHECK(act_on_coloring(tk, a, -1, r3) == once);
    }
    CHECK_THROWS_AS(act_on_coloring(trivial_link(1), {{"u0", 0}}, 1, r3),
                    std::invalid_argument);
}

TEST_CASE("twist-spun count equals its parity form") {
    std::vector<Diagram> tangles = {
        cut_to_1tangle(trivial_link(1), "u0"),
        cut_to_1tangle(torus_2q(3), "a0"),
        cut_to_1tangle(torus_2q(5), "a1"),
        cut_to_1tangle(fixtures::torus_sum(2, 3), fixtures::torus_sum(2, 3).arcs.front()),
    };
    for (const auto& t : tangles)
        for (const auto& kei : fixtures::small_keis())
            for (long long m = -4; m <= 5; ++m)
                CHECK(twist_spun_coloring_count(t, kei, m) ==
                      parity_shortcut_count(t, kei, m));
}

TEST_CASE("even twist spins keep the tangle count, odd collapse to #X") {
    auto r3 = Kei::dihedral(3);
    auto tk = cut_to_1tangle(torus_2q(3), "a0");
    CHECK(twist_spun_coloring_count(tk, r3, 2) == count_colorings(tk, r3));
    CHECK(twist_spun_coloring_count(tk, r3, 2) == 9);
    CHECK(twist_spun_coloring_count(tk, r3, 3) == 3);
    CHECK(twist_spun_coloring_count(tk, r3, 0) == 9);
}

TEST_CASE("hypothesis (#X)^{b} == #Col(T_K) for the torus family") {
    for (int q : {3, 5, 7}) {
        auto rq = Kei::dihedral(q);
        auto tk = cut_to_1tangle(torus_2q(q), "a0");
        CHECK(count_colorings(tk, rq) == static_cast<uint64_t>(q) * q);
        CHECK(check_hypothesis(tk, rq, 2));
        CHECK(!check_hypothesis(tk, rq, 3));
    }
    for (int k : {1, 2, 3}) {
        auto sum = fixtures::torus_sum(k, 3);
        auto tk = cut_to_1tangle(sum, sum.arcs.front());
        CHECK(check_hypothesis(tk, Kei::dihedral(3), torus_sum_bridge_number(k)));
    }
    // unknot over any kei: #Col = #X, so b = 1 works
    auto u = cut_to_1tangle(trivial_link(1), "u0");
    for (const auto& kei : fixtures::small_keis()) CHECK(check_hypothesis(u, kei, 1));
}

TEST_CASE("twist-spun bridge numbers under the verified hypothesis") {
    auto bn = twist_spun_bridge_numbers(2, true);
    CHECK(bn.sphere == 4);
    CHECK(bn.with_p == 5);
    CHECK(bn.with_t == 6);
    CHECK(check_congruence(bn.sphere, chi_sphere));
    CHECK(check_congruence(bn.with_p, chi_rp2));
    CHECK(check_congruence(bn.with_t, chi_torus));

    for (int k : {1, 2, 3, 4}) {
        auto r = twist_spun_bridge_numbers(k + 1, true);
        CHECK(r.sphere == 3 * (k + 1) - 2);
        CHECK(r.with_p == 3 * (k + 1) - 1);
        CHECK(r.with_t == 3 * (k + 1));
    }

    CHECK_THROWS_AS(twist_spun_bridge_numbers(2, false), std::invalid_argument);
    CHECK_THROWS_AS(twist_spun_bridge_numbers(0, true), std::invalid_argument);
}

TEST_CASE("connected sum upper bound") {
    CHECK(connected_sum_upper_bound(4, bridge_number_P) == 5);
    CHECK(connected_sum_upper_bound(4, bridge_number_T) == 6);
    CHECK(connected_sum_upper_bound(1, 1) == 1);
}

TEST_CASE("bounds are sharp for twist spins of the torus family") {
    // b(S_{2m}(#_k T_{2,q})) = 3(k+1) - 2: the coloring bound meets the
    // stabilization upper bound
    for (int k : {1, 2}) {
        int q = 3;
        auto sum = fixtures::torus_sum(k, q);
        auto tk = cut_to_1tangle(sum, sum.arcs.front());
        auto rq = Kei::dihedral(q);
        uint64_t count = twist_spun_coloring_count(tk, rq, 2);
        auto rep = bridge_lower_bound(count, q, chi_sphere);
        int b_k = torus_sum_bridge_number(k);
        CHECK(rep.refined_bound == 3 * b_k - 2);
        // summing with a trivial P or T keeps the count, shifts chi, and
        // raises the refined bound by one each
        CHECK(bridge_lower_bound(count, q, chi_rp2).refined_bound == 3 * b_k - 1);
        CHECK(bridge_lower_bound(count, q, chi_torus).refined_bound == 3 * b_k);
    }
}
