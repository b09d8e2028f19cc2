#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "qsurf/code_library.h"

using namespace qsurf;

namespace {

int count_kind(const StabilizerCode& c, AncillaKind kind) {
    return int(std::count_if(c.geometry.ancillas.begin(), c.geometry.ancillas.end(),
                             [&](const Ancilla& a) { return a.kind == kind; }));
}

const Family kAllFamilies[] = {Family::Surface, Family::RotatedSurface, Family::Xzzx, Family::RotatedXzzx};

}  // namespace

TEST(CodeLibrary, SurfaceSizes) {
    StabilizerCode c = build_surface(3, 3);
    EXPECT_EQ(c.n, 13);
    EXPECT_EQ(c.k, 1);
    EXPECT_EQ(c.generators.size(), 12u);
    EXPECT_EQ(count_kind(c, AncillaKind::Site), 6);
    EXPECT_EQ(count_kind(c, AncillaKind::Plaquette), 6);
    EXPECT_EQ(c.name, "[[13,1,3]]");
    EXPECT_EQ(build_surface(3, 5).n, 23);
    EXPECT_EQ(build_surface(3, 5).name, "[[23,1,3/5]]");
    EXPECT_EQ(build_surface(5, 5).n, 41);
    for (int dx = 2; dx <= 6; ++dx)
        for (int dz = 2; dz <= 6; ++dz) EXPECT_EQ(build_surface(dx, dz).n, dx * dz + (dx - 1) * (dz - 1));
}

TEST(CodeLibrary, RotatedSizes) {
    EXPECT_EQ(build_rotated(3, 3).name, "[[9,1,3]]");
    EXPECT_EQ(build_rotated(3, 5).name, "[[15,1,3/5]]");
    EXPECT_EQ(build_rotated(5, 5).name, "[[25,1,5]]");
    for (int dx = 2; dx <= 7; ++dx)
        for (int dz = 2; dz <= 7; ++dz) {
            StabilizerCode c = build_rotated(dx, dz);
            EXPECT_EQ(c.n, dx * dz);
            EXPECT_EQ(int(c.generators.size()), c.n - 1);
        }
}

TEST(CodeLibrary, AncillaDegrees) {
    for (Family f : kAllFamilies) {
        StabilizerCode c = build_code(f, 5, 5);
        const size_t boundary_degree = is_rotated_family(f) ? 2 : 3;
        for (const auto& a : c.geometry.ancillas) {
            EXPECT_TRUE(a.qubits.size() == 4 || a.qubits.size() == boundary_degree) << c.label();
        }
    }
}

TEST(CodeLibrary, RejectsBadDimensions) {
    EXPECT_THROW(build_surface(1, 3), std::invalid_argument);
    EXPECT_THROW(build_rotated(3, 1), std::invalid_argument);
    EXPECT_NO_THROW(build_surface(6, 6));  // n = 61
    EXPECT_THROW(build_surface(6, 7), std::invalid_argument);  // n = 72 exceeds the mask width
    EXPECT_THROW(build_rotated(8, 9), std::invalid_argument);
}

TEST(CodeLibrary, ParseFamily) {
    for (Family f : kAllFamilies) EXPECT_EQ(parse_family(family_name(f)), f);
    EXPECT_THROW(parse_family("toric"), std::invalid_argument);
}

TEST(CodeLibrary, VerifiedInvariantsAllFamilies) {
    for (Family f : kAllFamilies) {
        for (auto [dx, dz] : {std::pair{2, 2}, {3, 3}, {3, 5}, {5, 3}, {4, 4}, {5, 5}}) {
            StabilizerCode c = build_code(f, dx, dz);
            CodeReport r = verify_code(c);
            EXPECT_TRUE(r.ok()) << c.label() << ": " << (r.violations.empty() ? "" : r.violations.front());
            EXPECT_EQ(r.generator_rank, c.n - c.k);
        }
    }
}

TEST(CodeLibrary, AllGeneratorPairsCommute13) {
    StabilizerCode c = build_surface(3, 3);
    for (const auto& a : c.generators)
        for (const auto& b : c.generators) EXPECT_TRUE(commutes(a, b));
    EXPECT_EQ(symplectic_rank(c.generators), 12);
    EXPECT_TRUE(anticommutes(c.logical_x, c.logical_z));
}

TEST(CodeLibrary, CssLogicalWeights) {
    for (Family f : {Family::Surface, Family::RotatedSurface}) {
        for (auto [dx, dz] : {std::pair{3, 3}, {3, 5}, {5, 5}}) {
            StabilizerCode c = build_code(f, dx, dz);
            EXPECT_EQ(c.logical_x.weight(), dx);
            EXPECT_EQ(c.logical_z.weight(), dz);
        }
    }
}

// Z1 Z2 Z3 is a logical of the 13-qubit code and Z7 is detected by ancillas A6 and A7.
TEST(CodeLibrary, SurfaceQubitLabels) {
    StabilizerCode c = build_surface(3, 3);
    EXPECT_EQ(c.logical_z.str(), "ZZZIIIIIIIIII");
    EXPECT_EQ(c.logical_x.str(), "XIIIIXIIIIXII");
    auto z7 = PauliOperator::single(13, 6, 'Z');
    std::vector<int> flagged;
    for (size_t g = 0; g < c.generators.size(); ++g)
        if (anticommutes(c.generators[g], z7)) flagged.push_back(int(g) + 1);
    EXPECT_EQ(flagged, (std::vector<int>{6, 7}));
}

TEST(CodeLibrary, XzzxMaskOnOddRows) {
    StabilizerCode x = apply_xzzx(build_surface(3, 3));
    EXPECT_EQ(x.family(), Family::Xzzx);
    EXPECT_EQ(x.hadamard_mask, (1u << 3) | (1u << 4) | (1u << 8) | (1u << 9));
    EXPECT_FALSE(x.is_css());
    for (const auto& g : x.generators) {
        if (g.weight() != 4) continue;
        PauliClass k = g.classify();
        EXPECT_EQ(k.i, 2) << g.str();
        EXPECT_EQ(k.ell, 2) << g.str();
    }
    EXPECT_THROW(apply_xzzx(x), std::invalid_argument);
}

// Every bulk check of the rotated XZZX code has two X and two Z.
TEST(CodeLibrary, RotatedXzzxBulkChecks) {
    StabilizerCode c = build_code(Family::RotatedXzzx, 5, 5);
    for (size_t g = 0; g < c.generators.size(); ++g) {
        if (c.geometry.ancillas[g].qubits.size() != 4) continue;
        EXPECT_EQ(c.generators[g].classify().i, 2);
        EXPECT_EQ(c.generators[g].classify().ell, 2);
    }
}

TEST(CodeLibrary, XzzxPreservesStructure) {
    for (auto [dx, dz] : {std::pair{3, 3}, {3, 5}, {5, 5}}) {
        for (Family f : {Family::Surface, Family::RotatedSurface}) {
            StabilizerCode c = build_code(f, dx, dz);
            StabilizerCode x = apply_xzzx(c);
            EXPECT_EQ(x.n, c.n);
            EXPECT_EQ(x.k, c.k);
            ASSERT_EQ(x.generators.size(), c.generators.size());
            for (size_t g = 0; g < c.generators.size(); ++g) {
                EXPECT_EQ(x.generators[g], c.generators[g].hadamard_conjugated(x.hadamard_mask));
            }
        }
    }
    StabilizerCode r = apply_xzzx(build_rotated(3, 5));
    EXPECT_EQ(r.d_x, 3);
    EXPECT_EQ(r.d_z, 3);
    EXPECT_EQ(r.name, "[[15,1,3]]");
    StabilizerCode s = apply_xzzx(build_surface(3, 5));
    EXPECT_EQ(s.name, "[[23,1,3/5]]");
}

// A square CSS code maps onto itself under X<->Z combined with some symmetry of the square.
TEST(CodeLibrary, SquareCssSelfDual) {
    for (Family f : {Family::Surface, Family::RotatedSurface}) {
        for (int d : {3, 5}) {
            StabilizerCode c = build_code(f, d, d);
            std::map<std::pair<int, int>, int> index;
            int min_r = 1 << 20, min_c = 1 << 20, max_r = 0, max_c = 0;
            for (size_t q = 0; q < c.geometry.qubit_coords.size(); ++q) {
                auto [r, col] = c.geometry.qubit_coords[q];
                index[{r, col}] = int(q);
                min_r = std::min(min_r, r);
                min_c = std::min(min_c, col);
                max_r = std::max(max_r, r);
                max_c = std::max(max_c, col);
            }
            std::set<std::pair<uint64_t, uint64_t>> original;
            for (const auto& g : c.generators) original.insert({g.x_mask(), g.z_mask()});
            bool found = false;
            for (int t = 0; t < 8 && !found; ++t) {
                std::vector<int> perm(c.n);
                bool valid = true;
                for (int q = 0; q < c.n; ++q) {
                    auto [r, col] = c.geometry.qubit_coords[q];
                    if (t & 1) std::swap(r, col);
                    if (t & 2) r = min_r + max_r - r;
                    if (t & 4) col = min_c + max_c - col;
                    auto it = index.find({r, col});
                    if (it == index.end()) {
                        valid = false;
                        break;
                    }
                    perm[q] = it->second;
                }
                if (!valid) continue;
                std::set<std::pair<uint64_t, uint64_t>> mapped;
                for (const auto& g : c.generators) {
                    uint64_t x = 0, z = 0;
                    for (int q = 0; q < c.n; ++q) {
                        // X <-> Z swap while moving qubit q to perm[q]
                        if ((g.z_mask() >> q) & 1) x |= uint64_t{1} << perm[q];
                        if ((g.x_mask() >> q) & 1) z |= uint64_t{1} << perm[q];
                    }
                    mapped.insert({x, z});
                }
                found = mapped == original;
            }
            EXPECT_TRUE(found) << c.label();
        }
    }
}
