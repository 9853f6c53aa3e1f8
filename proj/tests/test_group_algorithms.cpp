#include <gtest/gtest.h>

#include <stdexcept>
#include <vector>

#include "cliffperm/bsgs.hpp"
#include "cliffperm/class_index.hpp"
#include "cliffperm/orders.hpp"
#include "cliffperm/todd_coxeter.hpp"

namespace cliffperm {
namespace {

std::vector<Permutation> generator_images(int n, const ClassIndex& idx) {
    std::vector<Permutation> out;
    for (const auto& [name, w] : standard_generators(n))
        out.push_back(permutation_of(word_eval(w), idx));
    return out;
}

Permutation image_of(const Word& w, const ClassIndex& idx) {
    return permutation_of(word_eval(w), idx);
}

TEST(Bsgs, SymmetricGroupOnThreePoints) {
    const Permutation a = Permutation::parse("(1,2)", PermFormat::Cycles, 3);
    const Permutation b = Permutation::parse("(1,2,3)", PermFormat::Cycles, 3);
    const BSGS chain({a, b});
    EXPECT_EQ(chain.order(), bigint(6));
    EXPECT_TRUE(chain.contains(compose(a, b)));
    EXPECT_TRUE(chain.contains(Permutation::identity(3)));
    EXPECT_EQ(group_order(schreier_sims({a, b})), bigint(6));

    const BSGS trivial({});
    EXPECT_EQ(trivial.order(), bigint(1));
    EXPECT_TRUE(trivial.contains(Permutation::identity(1)));

    const BSGS cyclic({b});
    EXPECT_EQ(cyclic.order(), bigint(3));
    EXPECT_FALSE(cyclic.contains(a));
}

TEST(Bsgs, CliffordImageOrders) {
    for (int n = 1; n <= 3; ++n) {
        const ClassIndex idx = enumerate_class(word_eval(Word(n).s(1)));
        const BSGS chain(generator_images(n, idx));
        EXPECT_EQ(chain.order(), order_Cn(n)) << "n=" << n;
    }
}

TEST(Bsgs, OrbitStabilizerProduct) {
    const ClassIndex idx = enumerate_class(word_eval(Word(2).s(1)));
    const auto gens = generator_images(2, idx);
    const int point = idx.point_of(word_eval(Word(2).s(1)));
    const BSGS chain(gens, {point});
    const BSGS stab(stabilizer(gens, {point}));
    EXPECT_EQ(bigint(chain.orbit_size(0)) * stab.order(), chain.order());
    EXPECT_EQ(chain.orbit_size(0), idx.size());
}

TEST(Bsgs, PointStabilizerOrders) {
    for (int n = 1; n <= 2; ++n) {
        const ClassIndex idx = enumerate_class(word_eval(Word(n).s(1)));
        const auto gens = generator_images(n, idx);
        const int p_s = idx.point_of(word_eval(Word(n).s(1)));
        const int p_hsh = idx.point_of(word_eval(Word(n).h(1).s(1).h(1)));

        const BSGS one(stabilizer(gens, {p_s}));
        EXPECT_EQ(one.order(), order_Fn(n)) << "n=" << n;

        const BSGS two(stabilizer(gens, {p_s, p_hsh}));
        EXPECT_EQ(two.order(), order_Cn(n - 1)) << "n=" << n;
    }
}

TEST(Bsgs, StabilizerOfFullBaseIsTrivial) {
    const ClassIndex idx = enumerate_class(word_eval(Word(1).s(1)));
    const auto gens = generator_images(1, idx);
    std::vector<int> all_points;
    for (int p = 1; p <= static_cast<int>(idx.size()); ++p) all_points.push_back(p);
    EXPECT_TRUE(stabilizer(gens, all_points).empty());
    EXPECT_EQ(BSGS(gens, all_points).order(), order_Cn(1));
}

TEST(Bsgs, NormalityTests) {
    const ClassIndex idx = enumerate_class(word_eval(Word(2).s(1)));
    const auto group = generator_images(2, idx);

    // The Pauli image is a normal subgroup of order 4^n.
    const std::vector<Permutation> pauli = {
        image_of(Word(2).s(1).s(1), idx),              // z1
        image_of(Word(2).h(1).s(1).s(1).h(1), idx),    // x1
        image_of(Word(2).s(2).s(2), idx),              // z2
        image_of(Word(2).h(2).s(2).s(2).h(2), idx),    // x2
    };
    EXPECT_EQ(BSGS(pauli).order(), order_Pn(2));
    EXPECT_TRUE(is_normal(pauli, group));

    // A single phase-gate image generates a non-normal cyclic subgroup.
    EXPECT_FALSE(is_normal({image_of(Word(2).s(1), idx)}, group));
}

TEST(Bsgs, MembershipInGeneratedSubgroup) {
    const ClassIndex idx = enumerate_class(word_eval(Word(3).s(1)));
    const std::vector<Permutation> sub = {
        image_of(Word(3).h(1), idx),
        image_of(Word(3).h(2), idx),
        image_of(Word(3).h(3), idx),
        image_of(generator_word(GeneratorKind::M, {}, 3), idx),
        image_of(Word(3).cz(2, 3), idx),
    };
    const BSGS chain(sub);
    // The conjugated squared phase gate is reachable from this generating set.
    EXPECT_TRUE(membership(image_of(Word(3).h(1).s(1).s(1).h(1), idx), chain));

    // A phase-gate image has order four, so it cannot sit inside the
    // elementary abelian Pauli image.
    const BSGS pauli(std::vector<Permutation>{
        image_of(Word(3).s(1).s(1), idx),
        image_of(Word(3).h(1).s(1).s(1).h(1), idx),
        image_of(Word(3).s(2).s(2), idx),
        image_of(Word(3).h(2).s(2).s(2).h(2), idx),
        image_of(Word(3).s(3).s(3), idx),
        image_of(Word(3).h(3).s(3).s(3).h(3), idx),
    });
    EXPECT_EQ(pauli.order(), order_Pn(3));
    const Permutation sigma_s1 = image_of(Word(3).s(1), idx);
    EXPECT_EQ(sigma_s1.order(), bigint(4));
    EXPECT_FALSE(membership(sigma_s1, pauli));
}

TEST(ToddCoxeter, ClassicalPresentations) {
    // Cyclic group of order six, then its index-two subgroup.
    EXPECT_EQ(coset_enumerate(1, {{1, 1, 1, 1, 1, 1}}, {}).num_cosets, 6u);
    const TCResult sub = coset_enumerate(1, {{1, 1, 1, 1, 1, 1}}, {{1, 1}});
    EXPECT_EQ(sub.status, TCStatus::Closed);
    EXPECT_EQ(sub.num_cosets, 2u);

    // Triangle groups (2,3,3) and (2,3,4).
    EXPECT_EQ(coset_enumerate(2, {{1, 1}, {2, 2, 2}, {1, 2, 1, 2, 1, 2}}, {}).num_cosets, 12u);
    EXPECT_EQ(coset_enumerate(2, {{1, 1}, {2, 2, 2}, {1, 2, 1, 2, 1, 2, 1, 2}}, {}).num_cosets,
              24u);
    EXPECT_EQ(coset_enumerate(2, {{1, 1}, {2, 2, 2}, {1, 2, 1, 2, 1, 2, 1, 2}}, {{2}}).num_cosets,
              8u);

    // Symmetric group on three letters from two involutions.
    EXPECT_EQ(coset_enumerate(2, {{1, 1}, {2, 2}, {1, 2, 1, 2, 1, 2}}, {}).num_cosets, 6u);

    // Quaternion group: a^4, a^2 b^-2, b^-1 a b a.
    EXPECT_EQ(coset_enumerate(2, {{1, 1, 1, 1}, {1, 1, -2, -2}, {-2, 1, 2, 1}}, {}).num_cosets,
              8u);

    // Rank-three hyperoctahedral Coxeter presentation.
    EXPECT_EQ(coset_enumerate(3,
                              {{1, 1},
                               {2, 2},
                               {3, 3},
                               {1, 2, 1, 2, 1, 2, 1, 2},
                               {2, 3, 2, 3, 2, 3},
                               {1, 3, 1, 3}},
                              {})
                  .num_cosets,
              48u);
}

TEST(ToddCoxeter, CapExceededIsInconclusiveNotFatal) {
    const TCResult free_group = coset_enumerate(2, {}, {}, 100);
    EXPECT_EQ(free_group.status, TCStatus::CapExceeded);
    EXPECT_GE(free_group.cosets_defined, 100u);
    EXPECT_EQ(free_group.num_cosets, 0u);
}

TEST(ToddCoxeter, InputValidation) {
    EXPECT_THROW(coset_enumerate(2, {{3}}, {}), std::invalid_argument);
    EXPECT_THROW(coset_enumerate(0, {}, {}), std::invalid_argument);
    EXPECT_THROW(coset_enumerate(1, {{1}}, {}, 0), std::invalid_argument);
}

TEST(ToddCoxeter, FreeReduction) {
    EXPECT_EQ(free_reduce({1, -1}), (std::vector<int>{}));
    EXPECT_EQ(free_reduce({1, 2, -2, -1, 3}), (std::vector<int>{3}));
    EXPECT_EQ(free_reduce({1, 2, -1}), (std::vector<int>{1, 2, -1}));
    EXPECT_EQ(free_reduce({}), (std::vector<int>{}));
    EXPECT_EQ(free_reduce({-2, 2, -2, 2}), (std::vector<int>{}));
}

}  // namespace
}  // namespace cliffperm
