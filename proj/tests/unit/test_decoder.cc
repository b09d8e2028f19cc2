#include <gtest/gtest.h>

#include <map>
#include <random>

#include "qsurf/class_enumerator.h"
#include "qsurf/decoder.h"

using namespace qsurf;

namespace {

const Family kAllFamilies[] = {Family::Surface, Family::RotatedSurface, Family::Xzzx, Family::RotatedXzzx};

PauliOperator random_error(std::mt19937_64& rng, int n, double p) {
    std::uniform_real_distribution<double> u(0, 1);
    PauliOperator e(n);
    for (int q = 0; q < n; ++q) {
        double v = u(rng);
        if (v < p) e.set_letter(q, "XYZ"[int(v / p * 3) % 3]);
    }
    return e;
}

int t_of(const StabilizerCode& c) { return (std::min(c.d_x, c.d_z) - 1) / 2; }

}  // namespace

TEST(Decoder, Z7TriggersA6A7AndIsCorrected) {
    StabilizerCode c = build_surface(3, 3);
    PauliOperator z7 = PauliOperator::single(13, 6, 'Z');
    Syndrome s = extract_syndrome(c, z7);
    EXPECT_EQ(s.bits(), (uint64_t{1} << 5) | (uint64_t{1} << 6));
    MatchingDecoder dec(c);
    EXPECT_EQ(dec.decode(s), z7);
}

TEST(Decoder, TrivialSyndromes) {
    for (Family f : kAllFamilies) {
        StabilizerCode c = build_code(f, 3, 5);
        MatchingDecoder dec(c);
        EXPECT_TRUE(extract_syndrome(c, PauliOperator(c.n)).is_zero());
        for (const auto& g : c.generators) EXPECT_TRUE(extract_syndrome(c, g).is_zero());
        EXPECT_TRUE(dec.decode(Syndrome(int(c.generators.size()), 0)).is_identity());
        EXPECT_EQ(classify_failure(c, c.generators[0], PauliOperator(c.n)), Outcome::Success);
    }
}

TEST(Decoder, RejectsMismatchedSyndrome) {
    StabilizerCode c = build_rotated(3, 3);
    MatchingDecoder dec(c);
    EXPECT_THROW(dec.decode(Syndrome(5, 0)), std::invalid_argument);
}

// Z4 Z5 on the 9-qubit code: the decoder adds Z6 and completes the middle-row logical.
TEST(Decoder, RotatedWeightTwoFailure) {
    StabilizerCode c = build_rotated(3, 3);
    PauliOperator e = PauliOperator::from_string("IIIZZIIII");
    MatchingDecoder dec(c);
    PauliOperator corr = dec.decode(extract_syndrome(c, e));
    EXPECT_EQ(corr.weight(), 1);
    EXPECT_EQ(corr.str(), "IIZIIIIII");
    EXPECT_EQ(classify_failure(c, e, corr), Outcome::LogicalZ);
}

// Y1 Y2: the X part is a boundary check and is corrected, the Z part is completed to a logical.
TEST(Decoder, CombinedPatternOnlyZPartFails) {
    StabilizerCode c = build_rotated(3, 3);
    EXPECT_EQ(spot_check(c, PauliOperator::from_string("XXIIIIIII")).outcome, Outcome::Success);
    SpotCheck y = spot_check(c, PauliOperator::from_string("YYIIIIIII"));
    EXPECT_EQ(y.outcome, Outcome::LogicalZ);
    EXPECT_EQ(y.trace.correction.str(), "IIZIIIIII");
}

TEST(Decoder, ClassifyFailureOutcomes) {
    StabilizerCode c = build_surface(3, 3);
    PauliOperator id(c.n);
    EXPECT_EQ(classify_failure(c, c.logical_z, id), Outcome::LogicalZ);
    EXPECT_EQ(classify_failure(c, c.logical_x, id), Outcome::LogicalX);
    EXPECT_EQ(classify_failure(c, multiply(c.logical_x, c.logical_z), id), Outcome::LogicalY);
    EXPECT_THROW(classify_failure(c, PauliOperator::single(c.n, 0, 'Z'), id), std::logic_error);
}

TEST(Decoder, XzzxRectangularRotatedHasWeightTwoZzFailure) {
    StabilizerCode c = build_code(Family::RotatedXzzx, 3, 5);
    int failures = 0;
    for (int a = 0; a < c.n; ++a) {
        for (int b = a + 1; b < c.n; ++b) {
            PauliOperator e(c.n);
            e.set_letter(a, 'Z');
            e.set_letter(b, 'Z');
            if (spot_check(c, e).outcome != Outcome::Success) ++failures;
        }
    }
    EXPECT_GT(failures, 0);
}

// Every pattern of weight <= t is corrected, exhaustively, for each family and size.
TEST(Decoder, CorrectsUpToT) {
    for (Family f : kAllFamilies) {
        for (auto [dx, dz] : {std::pair{3, 3}, {3, 5}, {5, 3}, {5, 5}}) {
            StabilizerCode c = build_code(f, dx, dz);
            ErrorClassTable t = enumerate_classes(c, t_of(c));
            for (const auto& row : t.classes) EXPECT_EQ(row.failures, 0u) << c.label() << " " << row.label();
        }
    }
}

TEST(Decoder, ResolvesSyndromeAndIsDeterministic) {
    std::mt19937_64 rng(99);
    for (Family f : kAllFamilies) {
        for (auto [dx, dz] : {std::pair{3, 3}, {3, 5}, {5, 5}}) {
            StabilizerCode c = build_code(f, dx, dz);
            MatchingDecoder dec(c);
            for (int trial = 0; trial < 300; ++trial) {
                PauliOperator e = random_error(rng, c.n, 0.15);
                Syndrome s = extract_syndrome(c, e);
                PauliOperator corr = dec.decode(s);
                EXPECT_TRUE(extract_syndrome(c, multiply(e, corr)).is_zero());
                EXPECT_EQ(dec.decode(s), corr);
                EXPECT_EQ(dec.decode_with_trace(s).correction, corr);
            }
        }
    }
}

// Decoding a syndrome on the XZZX variant returns the mask-conjugate of the CSS decoding.
TEST(Decoder, FrameEquivalence) {
    std::mt19937_64 rng(5);
    for (Family f : {Family::Surface, Family::RotatedSurface}) {
        for (auto [dx, dz] : {std::pair{3, 3}, {3, 5}, {5, 5}}) {
            StabilizerCode css = build_code(f, dx, dz);
            StabilizerCode xz = apply_xzzx(css);
            MatchingDecoder dc(css), dx_(xz);
            for (int trial = 0; trial < 300; ++trial) {
                PauliOperator e = random_error(rng, css.n, 0.1);
                Syndrome s = extract_syndrome(css, e);
                EXPECT_EQ(extract_syndrome(xz, e.hadamard_conjugated(xz.hadamard_mask)), s);
                EXPECT_EQ(dx_.decode(s), dc.decode(s).hadamard_conjugated(xz.hadamard_mask));
            }
        }
    }
}

// Two weight-2 errors with the same syndrome get the same correction, so when they differ by a
// logical operator exactly one of them fails.
TEST(Decoder, DegenerateTiesResolveOnce) {
    for (Family f : kAllFamilies) {
        StabilizerCode c = build_code(f, 3, 3);
        MatchingDecoder dec(c);
        std::map<uint64_t, std::vector<PauliOperator>> by_syndrome;
        for (int a = 0; a < c.n; ++a)
            for (int b = a + 1; b < c.n; ++b)
                for (char la : {'X', 'Y', 'Z'})
                    for (char lb : {'X', 'Y', 'Z'}) {
                        PauliOperator e(c.n);
                        e.set_letter(a, la);
                        e.set_letter(b, lb);
                        by_syndrome[extract_syndrome(c, e).bits()].push_back(e);
                    }
        int logical_pairs = 0;
        for (const auto& [bits, errors] : by_syndrome) {
            PauliOperator corr = dec.decode(Syndrome(int(c.generators.size()), bits));
            for (size_t u = 0; u < errors.size(); ++u) {
                for (size_t v = u + 1; v < errors.size(); ++v) {
                    PauliOperator prod = multiply(errors[u], errors[v]);
                    bool logical = classify_failure(c, prod, PauliOperator(c.n)) != Outcome::Success;
                    bool fu = classify_failure(c, errors[u], corr) != Outcome::Success;
                    bool fv = classify_failure(c, errors[v], corr) != Outcome::Success;
                    if (logical) {
                        ++logical_pairs;
                        EXPECT_TRUE(fu || fv);
                        if (classify_failure(c, prod, PauliOperator(c.n)) == classify_failure(c, errors[u], corr))
                            EXPECT_FALSE(fv);
                    } else {
                        EXPECT_EQ(classify_failure(c, errors[u], corr), classify_failure(c, errors[v], corr));
                    }
                }
            }
        }
        EXPECT_GT(logical_pairs, 0) << c.label();
    }
}

TEST(Decoder, TraceGraphsAreConsistent) {
    StabilizerCode c = build_surface(5, 5);
    MatchingDecoder dec(c);
    PauliOperator e = PauliOperator::from_string("ZIIIIIIIIIIIIIIIIIIIXIIIIIIIIIIIYIIIIIIII");
    DecodeTrace tr = dec.decode_with_trace(extract_syndrome(c, e));
    for (const SpeciesTrace* s : {&tr.z_errors, &tr.x_errors}) {
        const DetectorGraph& g = s->graph;
        EXPECT_EQ(s->matching.total_weight, min_weight_perfect_matching(g.to_matrix()).total_weight);
        for (int i = 0; i < g.real_count(); ++i) {
            EXPECT_GE(g.boundary_weights[i], 1);
            EXPECT_EQ(int(g.boundary_paths[i].size()), g.boundary_weights[i]);
            for (int j = i + 1; j < g.real_count(); ++j) {
                EXPECT_EQ(g.weights[i][j], g.weights[j][i]);
                EXPECT_GT(g.weights[i][j], 0);
                EXPECT_EQ(int(g.paths[i][j].size()), g.weights[i][j]);
            }
        }
    }
    EXPECT_EQ(classify_failure(c, e, tr.correction), Outcome::Success);
}
