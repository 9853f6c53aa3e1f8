#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "cliffperm/matrix_oracle.hpp"
#include "cliffperm/word.hpp"

namespace cliffperm {
namespace {

static_assert(kOracleTolerance == 1e-9, "oracle tolerance is pinned");
static_assert(kMaxOracleQubits == 3, "oracle stays at desk scale");

Word random_word(int n, int len, std::mt19937_64& rng) {
    const auto gens = standard_generators(n);
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    Word w(n);
    for (int i = 0; i < len; ++i) w.append(gens[pick(rng)].second);
    return w;
}

TEST(MatrixOracle, GateMatrixEntries) {
    const double r = 1.0 / std::sqrt(2.0);
    const Matrix h = gate_matrix(Letter{Gate::H, 1, 0}, 1);
    EXPECT_NEAR(h.at(0, 0).real(), r, 1e-12);
    EXPECT_NEAR(h.at(1, 1).real(), -r, 1e-12);
    const Matrix s = gate_matrix(Letter{Gate::S, 1, 0}, 1);
    EXPECT_NEAR(s.at(0, 0).real(), 1.0, 1e-12);
    EXPECT_NEAR(s.at(1, 1).imag(), 1.0, 1e-12);
    // cz flips the sign only on |11>.
    const Matrix cz = gate_matrix(Letter{Gate::CZ, 1, 2}, 2);
    for (int k = 0; k < 4; ++k) EXPECT_NEAR(cz.at(k, k).real(), k == 3 ? -1.0 : 1.0, 1e-12);
}

TEST(MatrixOracle, OmegaPowers) {
    EXPECT_NEAR(omega_power(0).real(), 1.0, 1e-12);
    EXPECT_NEAR(omega_power(4).real(), -1.0, 1e-12);
    EXPECT_NEAR(omega_power(2).imag(), 1.0, 1e-12);
    const auto w = omega_power(1);
    EXPECT_NEAR(w.real(), std::sqrt(0.5), 1e-12);
    EXPECT_NEAR(w.imag(), std::sqrt(0.5), 1e-12);
}

TEST(MatrixOracle, WordLiftsLeftToRight) {
    // U_{h s} = U_h * U_s.
    const Matrix lhs = matrix_of_word(Word(1).h(1).s(1));
    const Matrix rhs = gate_matrix(Letter{Gate::H, 1, 0}, 1) * gate_matrix(Letter{Gate::S, 1, 0}, 1);
    EXPECT_TRUE(lhs.approx_equal(rhs, 1e-12));
}

TEST(MatrixOracle, EqualUpToPhase) {
    const Matrix h = gate_matrix(Letter{Gate::H, 1, 0}, 1);
    for (int k = 0; k < 8; ++k) EXPECT_TRUE(equal_up_to_phase(h, h.scaled(omega_power(k)), 1e-9));
    const Matrix s = gate_matrix(Letter{Gate::S, 1, 0}, 1);
    EXPECT_FALSE(equal_up_to_phase(h, s, 1e-9));
}

TEST(MatrixOracle, GeneratorsPhaseExact) {
    for (int n = 1; n <= 3; ++n)
        for (const auto& [name, w] : standard_generators(n))
            EXPECT_TRUE(check_tableau(w, kOracleTolerance)) << name << " n=" << n;
}

TEST(MatrixOracle, CompositeGatesPhaseExact) {
    for (int n = 1; n <= 3; ++n) {
        EXPECT_TRUE(check_tableau(generator_word(GeneratorKind::Z, {1}, n)));
        EXPECT_TRUE(check_tableau(generator_word(GeneratorKind::X, {1}, n)));
        EXPECT_TRUE(check_tableau(generator_word(GeneratorKind::GConj, {}, n)));
        if (n >= 2) {
            EXPECT_TRUE(check_tableau(generator_word(GeneratorKind::CX, {1, 2}, n)));
            EXPECT_TRUE(check_tableau(generator_word(GeneratorKind::Swap, {1, 2}, n)));
            EXPECT_TRUE(check_tableau(generator_word(GeneratorKind::M, {}, n)));
        }
    }
    EXPECT_TRUE(check_tableau(generator_word(GeneratorKind::Swap, {1, 3}, 3)));
}

TEST(MatrixOracle, ControlledXWordAgreesAndImpostorDetected) {
    const Matrix cx = cx_matrix(1, 2, 2);
    EXPECT_TRUE(
        equal_up_to_phase(matrix_of_word(generator_word(GeneratorKind::CX, {1, 2}, 2)), cx, 1e-9));
    // h2 z1 h2 is not a controlled-X; the oracle must flag the difference.
    EXPECT_FALSE(equal_up_to_phase(matrix_of_word(Word(2).h(2).s(1).s(1).h(2)), cx, 1e-9));
    EXPECT_TRUE(equal_up_to_phase(matrix_of_word(generator_word(GeneratorKind::Swap, {1, 2}, 2)),
                                  swap_matrix(1, 2, 2), 1e-9));
}

TEST(MatrixOracle, PauliMatrices) {
    // Y = i X Z entrywise.
    const Matrix y = matrix_of_pauli(PhasedPauli::y_op(1, 1));
    EXPECT_NEAR(y.at(0, 1).imag(), -1.0, 1e-12);
    EXPECT_NEAR(y.at(1, 0).imag(), 1.0, 1e-12);
    const Matrix mz = matrix_of_pauli(PhasedPauli(1, 0u, 1u, 2));
    EXPECT_NEAR(mz.at(0, 0).real(), -1.0, 1e-12);
    EXPECT_NEAR(mz.at(1, 1).real(), 1.0, 1e-12);
}

TEST(MatrixOracle, ExhaustiveSingleQubitWords) {
    std::size_t checked = 0;
    for (int len = 1; len <= 8; ++len) {
        for (std::uint32_t mask = 0; mask < (1u << len); ++mask) {
            Word w(1);
            for (int i = 0; i < len; ++i) {
                if ((mask >> i) & 1u)
                    w.s(1);
                else
                    w.h(1);
            }
            ++checked;
            ASSERT_TRUE(check_tableau(w, kOracleTolerance)) << w.str();
        }
    }
    EXPECT_EQ(checked, 510u);
}

TEST(MatrixOracle, RandomWordsTwoQubits) {
    std::mt19937_64 rng(0);
    for (int t = 0; t < 1000; ++t) ASSERT_TRUE(check_tableau(random_word(2, 24, rng)));
}

TEST(MatrixOracle, RandomWordsThreeQubits) {
    std::mt19937_64 rng(0);
    for (int t = 0; t < 100; ++t) ASSERT_TRUE(check_tableau(random_word(3, 24, rng)));
}

}  // namespace
}  // namespace cliffperm
