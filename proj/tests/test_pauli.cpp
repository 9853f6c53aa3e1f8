#include <gtest/gtest.h>

#include <stdexcept>

#include "cliffperm/pauli.hpp"

namespace cliffperm {
namespace {

TEST(PhasedPauli, ConstructionNormalizesPhase) {
    const PhasedPauli p(2, 0b01u, 0b10u, 7);
    EXPECT_EQ(p.delta(), 3);
    EXPECT_EQ(PhasedPauli(1, 0u, 0u, -1).delta(), 3);
    EXPECT_EQ(PhasedPauli(1, 0u, 0u, 4).delta(), 0);
}

TEST(PhasedPauli, GeneratorsAndPredicates) {
    const PhasedPauli x = PhasedPauli::x_op(3, 2);
    EXPECT_TRUE(x.x(2));
    EXPECT_FALSE(x.z(2));
    EXPECT_FALSE(x.x(1));
    EXPECT_FALSE(x.is_scalar());
    EXPECT_TRUE(x.is_hermitian());

    const PhasedPauli y = PhasedPauli::y_op(1, 1);
    EXPECT_EQ(y.delta(), 1);  // Y = i X Z
    EXPECT_TRUE(y.is_hermitian());

    EXPECT_TRUE(PhasedPauli(2).is_identity());
    EXPECT_TRUE(PhasedPauli(2, 0u, 0u, 2).is_scalar());
    EXPECT_FALSE(PhasedPauli(2, 0u, 0u, 2).is_identity());
}

TEST(PhasedPauli, InputValidation) {
    EXPECT_THROW(PhasedPauli(0), std::invalid_argument);
    EXPECT_THROW(PhasedPauli(17), std::invalid_argument);
    EXPECT_THROW(PhasedPauli(1, 0b10u, 0u, 0), std::invalid_argument);
    EXPECT_THROW(PhasedPauli::x_op(2, 3), std::invalid_argument);
    EXPECT_THROW(pauli_mul(PhasedPauli(1), PhasedPauli(2)), std::invalid_argument);
    EXPECT_THROW(commutes(PhasedPauli(1), PhasedPauli(2)), std::invalid_argument);
}

TEST(PhasedPauli, MultiplicationPhases) {
    const PhasedPauli x = PhasedPauli::x_op(1, 1);
    const PhasedPauli z = PhasedPauli::z_op(1, 1);
    const PhasedPauli xz = pauli_mul(x, z);
    EXPECT_EQ(xz.delta(), 0);  // X Z is the stored normal form
    EXPECT_TRUE(xz.x(1));
    EXPECT_TRUE(xz.z(1));

    const PhasedPauli zx = pauli_mul(z, x);
    EXPECT_EQ(zx.delta(), 2);  // Z X = - X Z

    EXPECT_TRUE(pauli_mul(x, x).is_identity());
    EXPECT_TRUE(pauli_mul(z, z).is_identity());
    const PhasedPauli y = PhasedPauli::y_op(1, 1);
    EXPECT_TRUE(pauli_mul(y, y).is_identity());

    // (XZ)(XZ) = -1: X and Z anticommute.
    const PhasedPauli sq = pauli_mul(xz, xz);
    EXPECT_TRUE(sq.is_scalar());
    EXPECT_EQ(sq.delta(), 2);
}

TEST(PhasedPauli, MultiplicationAssociative) {
    // All 64 phase-free triples on two qubits.
    for (int a = 0; a < 16; ++a)
        for (int b = 0; b < 16; ++b)
            for (int c = 0; c < 16; ++c) {
                const PhasedPauli pa(2, static_cast<std::uint32_t>(a & 3),
                                     static_cast<std::uint32_t>(a >> 2), 0);
                const PhasedPauli pb(2, static_cast<std::uint32_t>(b & 3),
                                     static_cast<std::uint32_t>(b >> 2), 0);
                const PhasedPauli pc(2, static_cast<std::uint32_t>(c & 3),
                                     static_cast<std::uint32_t>(c >> 2), 0);
                EXPECT_EQ(pauli_mul(pauli_mul(pa, pb), pc), pauli_mul(pa, pauli_mul(pb, pc)));
            }
}

TEST(PhasedPauli, Commutation) {
    const PhasedPauli x1 = PhasedPauli::x_op(2, 1);
    const PhasedPauli z1 = PhasedPauli::z_op(2, 1);
    const PhasedPauli z2 = PhasedPauli::z_op(2, 2);
    EXPECT_FALSE(commutes(x1, z1));
    EXPECT_TRUE(commutes(x1, z2));
    EXPECT_TRUE(commutes(x1, x1));
    // X1 Z1 and X1 Z2 anticommute: the symplectic form over the two qubits
    // picks up exactly one crossing (X1 against Z1).
    EXPECT_FALSE(commutes(pauli_mul(x1, z1), pauli_mul(x1, z2)));
    EXPECT_TRUE(commutes(pauli_mul(x1, z1), pauli_mul(z1, x1)));
}

TEST(PhasedPauli, TextRoundTrip) {
    const PhasedPauli y2 = PhasedPauli::y_op(3, 2);
    EXPECT_EQ(PhasedPauli::parse(y2.str()), y2);
    const PhasedPauli p(2, 0b11u, 0b01u, 3);
    EXPECT_EQ(PhasedPauli::parse(p.str()), p);
    EXPECT_EQ(PhasedPauli::parse(PhasedPauli(1).str()), PhasedPauli(1));
}

}  // namespace
}  // namespace cliffperm
