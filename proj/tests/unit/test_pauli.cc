#include <gtest/gtest.h>

#include "qsurf/pauli.h"

using namespace qsurf;

TEST(Pauli, LetterEncoding) {
    PauliOperator p = PauliOperator::from_string("IXZY");
    EXPECT_EQ(p.letter(0), 'I');
    EXPECT_EQ(p.letter(1), 'X');
    EXPECT_EQ(p.letter(2), 'Z');
    EXPECT_EQ(p.letter(3), 'Y');
    EXPECT_EQ(p.x_mask(), 0b1010u);
    EXPECT_EQ(p.z_mask(), 0b1100u);
    EXPECT_EQ(p.weight(), 3);
    EXPECT_EQ(p.str(), "IXZY");
    EXPECT_EQ(PauliOperator::from_string("_X_"), PauliOperator::from_string("IXI"));
}

TEST(Pauli, RejectsBadInput) {
    EXPECT_THROW(PauliOperator::from_string("IXQ"), std::invalid_argument);
    EXPECT_THROW(PauliOperator(65), std::invalid_argument);
    EXPECT_THROW(multiply(PauliOperator(3), PauliOperator(4)), std::invalid_argument);
    EXPECT_THROW(commutes(PauliOperator(3), PauliOperator(4)), std::invalid_argument);
}

TEST(Pauli, MasksStayWithinN) {
    EXPECT_THROW(PauliOperator(5, 0b100000, 0), std::invalid_argument);
    PauliOperator p(64, ~uint64_t{0}, ~uint64_t{0});
    EXPECT_EQ(p.weight(), 64);
    EXPECT_EQ(PauliOperator(5, low_bits(5), 0).weight(), 5);
}

TEST(Pauli, MultiplyTable) {
    auto x1 = PauliOperator::single(1, 0, 'X');
    auto z1 = PauliOperator::single(1, 0, 'Z');
    EXPECT_EQ(multiply(x1, z1).letter(0), 'Y');
    auto zz23 = PauliOperator::from_string("IZZIIIIII");
    auto zz34 = PauliOperator::from_string("IIZZIIIII");
    EXPECT_EQ(multiply(zz23, zz34).str(), "IZIZIIIII");
}

TEST(Pauli, SelfInverse) {
    for (uint64_t x = 0; x < 16; ++x) {
        for (uint64_t z = 0; z < 16; ++z) {
            PauliOperator p(4, x, z);
            EXPECT_TRUE(multiply(p, p).is_identity());
        }
    }
}

TEST(Pauli, Commutation) {
    EXPECT_FALSE(commutes(PauliOperator::from_string("X"), PauliOperator::from_string("Z")));
    EXPECT_TRUE(commutes(PauliOperator::from_string("XI"), PauliOperator::from_string("IZ")));
    EXPECT_TRUE(commutes(PauliOperator::from_string("XX"), PauliOperator::from_string("ZZ")));
    EXPECT_TRUE(anticommutes(PauliOperator::from_string("XY"), PauliOperator::from_string("XZ")));
}

// Over all operators on 3 qubits: symmetry, parity additivity, and associativity/commutativity
// of the mask product.
TEST(Pauli, AlgebraExhaustiveN3) {
    std::vector<PauliOperator> all;
    for (uint64_t x = 0; x < 8; ++x)
        for (uint64_t z = 0; z < 8; ++z) all.emplace_back(3, x, z);
    for (const auto& a : all) {
        for (const auto& b : all) {
            EXPECT_EQ(commutes(a, b), commutes(b, a));
            EXPECT_EQ(multiply(a, b), multiply(b, a));
            for (size_t k = 0; k < all.size(); k += 7) {
                const auto& c = all[k];
                EXPECT_EQ(commutes(a, multiply(b, c)), commutes(a, b) == commutes(a, c));
                EXPECT_EQ(multiply(multiply(a, b), c), multiply(a, multiply(b, c)));
            }
        }
    }
}

TEST(Pauli, Classify) {
    PauliOperator p(9);
    p.set_letter(2, 'Z');
    p.set_letter(6, 'Y');
    EXPECT_EQ(p.classify(), (PauliClass{2, 1, 0}));
    EXPECT_EQ(PauliOperator::from_string("XXIIX").classify(), (PauliClass{3, 0, 3}));
    EXPECT_EQ(PauliOperator(4).classify(), (PauliClass{0, 0, 0}));
}

TEST(Pauli, ClassifySumsExhaustiveN4) {
    for (uint64_t x = 0; x < 16; ++x) {
        for (uint64_t z = 0; z < 16; ++z) {
            PauliOperator p(4, x, z);
            PauliClass c = p.classify();
            int y = 0, zs = 0, xs = 0;
            for (int q = 0; q < 4; ++q) {
                char l = p.letter(q);
                y += l == 'Y';
                zs += l == 'Z';
                xs += l == 'X';
            }
            EXPECT_EQ(c.j, p.weight());
            EXPECT_EQ(c.i, zs);
            EXPECT_EQ(c.ell, xs);
            EXPECT_EQ(c.j, c.i + c.ell + y);
        }
    }
}

TEST(Pauli, HadamardSwapsLettersOnMask) {
    PauliOperator p = PauliOperator::from_string("XZYI");
    EXPECT_EQ(p.hadamard_conjugated(0b0011).str(), "ZXYI");
    EXPECT_EQ(p.hadamard_conjugated(0).str(), "XZYI");
    EXPECT_EQ(p.hadamard_conjugated(0b1111).hadamard_conjugated(0b1111), p);
}
