#include <gtest/gtest.h>

#include <numeric>

#include "oracles.h"
#include "qsurf/class_enumerator.h"
#include "qsurf/weight_enumerator.h"

using namespace qsurf;

namespace {

std::vector<uint64_t> poly(int n, std::initializer_list<std::pair<int, uint64_t>> terms) {
    std::vector<uint64_t> v(n + 1, 0);
    for (auto [w, c] : terms) v[w] = c;
    return v;
}

}  // namespace

TEST(WeightEnumerator, Rotated9) {
    WeightEnumerator we = coset_enumerate(build_rotated(3, 3));
    EXPECT_EQ(we.L, poly(9, {{3, 24}, {5, 192}, {7, 408}, {9, 144}}));
    EXPECT_EQ(we.min_logical_weight(), 3);
}

TEST(WeightEnumerator, Surface13) {
    WeightEnumerator we = coset_enumerate(build_surface(3, 3));
    EXPECT_EQ(we.L, poly(13, {{3, 6}, {4, 24}, {5, 75}, {6, 240}, {7, 648}, {8, 1440}, {9, 2538}, {10, 3216},
                              {11, 2634}, {12, 1224}, {13, 243}}));
    EXPECT_EQ(std::accumulate(we.L.begin(), we.L.end(), uint64_t{0}), 12288u);
}

TEST(WeightEnumerator, XzzxPreservesHistograms) {
    for (Family f : {Family::Surface, Family::RotatedSurface}) {
        for (auto [dx, dz] : {std::pair{3, 3}, {3, 5}}) {
            StabilizerCode c = build_code(f, dx, dz);
            WeightEnumerator a = coset_enumerate(c);
            WeightEnumerator b = coset_enumerate(apply_xzzx(c));
            EXPECT_EQ(a.A, b.A) << c.label();
            EXPECT_EQ(a.L, b.L) << c.label();
        }
    }
}

TEST(WeightEnumerator, BasicIdentities) {
    for (Family f : {Family::Surface, Family::RotatedSurface, Family::Xzzx, Family::RotatedXzzx}) {
        StabilizerCode c = build_code(f, 3, 5);
        WeightEnumerator we = coset_enumerate(c);
        EXPECT_EQ(we.A[0], 1u);
        uint64_t sum_l = std::accumulate(we.L.begin(), we.L.end(), uint64_t{0});
        uint64_t sum_a = std::accumulate(we.A.begin(), we.A.end(), uint64_t{0});
        EXPECT_EQ(sum_l, 3 * (uint64_t{1} << (c.n - c.k)));
        EXPECT_EQ(sum_a, uint64_t{1} << (c.n - c.k));
        for (int w = 0; w <= c.n; ++w) EXPECT_EQ(we.B[w], we.A[w] + we.L[w]);
        for (int w = 0; w < we.min_logical_weight(); ++w) EXPECT_EQ(we.L[w], 0u);
    }
}

// The Gray-code walk against direct expansion of the group and a scan of all 4^n Paulis.
TEST(WeightEnumerator, AgreesWithBruteForceOracles) {
    for (Family f : {Family::RotatedSurface, Family::RotatedXzzx}) {
        StabilizerCode c = build_code(f, 3, 3);
        WeightEnumerator we = coset_enumerate(c);
        EXPECT_EQ(we.A, oracle::brute_force_stabilizer(c));
        EXPECT_EQ(we.L, oracle::brute_force_undetectable(c));
    }
    StabilizerCode c13 = build_surface(3, 3);
    EXPECT_EQ(coset_enumerate(c13).A, oracle::brute_force_stabilizer(c13));
}

TEST(WeightEnumerator, MacWilliamsAgreesWithCosets) {
    for (Family f : {Family::Surface, Family::RotatedSurface, Family::Xzzx, Family::RotatedXzzx}) {
        for (auto [dx, dz] : {std::pair{3, 3}, {3, 5}}) {
            StabilizerCode c = build_code(f, dx, dz);
            WeightEnumerator we = coset_enumerate(c);
            WeightEnumerator mw = macwilliams_check(we.A, c.n, c.k);
            EXPECT_EQ(mw.B, we.B) << c.label();
            EXPECT_EQ(mw.L, we.L) << c.label();
            uint64_t b11 = std::accumulate(mw.B.begin(), mw.B.end(), uint64_t{0});
            EXPECT_EQ(b11, uint64_t{1} << (c.n + c.k));
        }
    }
}

TEST(WeightEnumerator, MacWilliamsRejectsNonCode) {
    // A = x^2 on 2 qubits with k = 1 gives half-integer coefficients.
    EXPECT_THROW(macwilliams_check({1, 0, 0}, 2, 1), std::logic_error);
}

TEST(WeightEnumerator, TrueDistances) {
    EXPECT_EQ(true_distances(build_rotated(3, 5)), (CodeDistances{3, 3, 5}));
    EXPECT_EQ(true_distances(apply_xzzx(build_rotated(3, 5))), (CodeDistances{3, 3, 3}));
    EXPECT_EQ(true_distances(build_surface(3, 3)), (CodeDistances{3, 3, 3}));
    EXPECT_EQ(true_distances(build_surface(3, 5)), (CodeDistances{3, 3, 5}));
    EXPECT_EQ(true_distances(apply_xzzx(build_surface(3, 5))), (CodeDistances{3, 3, 5}));
    EXPECT_EQ(coset_enumerate(apply_xzzx(build_rotated(3, 5))).min_logical_weight(), 3);
}

TEST(WeightEnumerator, ParallelDeterminism) {
    StabilizerCode c = build_surface(3, 5);
    WeightEnumerator a = coset_enumerate(c, 1);
    WeightEnumerator b = coset_enumerate(c, 8);
    EXPECT_EQ(a.A, b.A);
    EXPECT_EQ(a.L, b.L);
}

TEST(WeightEnumerator, RefusesLargeCodes) {
    EXPECT_THROW(coset_enumerate(build_surface(5, 5)), BudgetExceeded);
}
