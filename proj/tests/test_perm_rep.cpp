#include <gtest/gtest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "cliffperm/class_index.hpp"
#include "cliffperm/orders.hpp"
#include "cliffperm/permutation.hpp"

namespace cliffperm {
namespace {

Word random_word(int n, int len, std::mt19937_64& rng) {
    const auto gens = standard_generators(n);
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    Word w(n);
    for (int i = 0; i < len; ++i) w.append(gens[pick(rng)].second);
    return w;
}

TEST(Permutation, BasicsAndFormats) {
    const Permutation id = Permutation::identity(4);
    EXPECT_TRUE(id.is_identity());
    EXPECT_EQ(id.cycles_str(), "()");
    EXPECT_EQ(id.arrays_str(), "1 2 3 4");
    EXPECT_EQ(id.order(), bigint(1));

    const Permutation p = Permutation::parse("(1,2,3)", PermFormat::Cycles, 5);
    EXPECT_EQ(p.apply(1), 2);
    EXPECT_EQ(p.apply(3), 1);
    EXPECT_EQ(p.apply(4), 4);
    EXPECT_EQ(p.order(), bigint(3));
    EXPECT_EQ(Permutation::parse(p.arrays_str(), PermFormat::Arrays, 5), p);
    EXPECT_EQ(Permutation::parse(p.cycles_str(), PermFormat::Cycles, 5), p);
    EXPECT_TRUE(compose(p, p.inverse()).is_identity());
}

TEST(Permutation, CompositionIsLeftToRight) {
    const Permutation a = Permutation::parse("(1,2,3)", PermFormat::Cycles, 5);
    const Permutation b = Permutation::parse("(3,4,5)", PermFormat::Cycles, 5);
    const Permutation ab = compose(a, b);
    // Image of i under "a then b".
    EXPECT_EQ(ab.apply(1), 2);
    EXPECT_EQ(ab.apply(2), 4);
    EXPECT_EQ(ab.cycles_str(), "(1,2,4,5,3)");
    EXPECT_EQ(ab.order(), bigint(5));
}

TEST(Permutation, ParseRejectsMalformedText) {
    EXPECT_THROW(Permutation::parse("(1)", PermFormat::Cycles, 4), std::invalid_argument);
    EXPECT_THROW(Permutation::parse("(1,9)", PermFormat::Cycles, 4), std::invalid_argument);
    EXPECT_THROW(Permutation::parse("(1,2)(2,3)", PermFormat::Cycles, 4), std::invalid_argument);
    EXPECT_THROW(Permutation::parse("", PermFormat::Cycles, 4), std::invalid_argument);
    EXPECT_THROW(Permutation::parse("1 1 2", PermFormat::Arrays, 3), std::invalid_argument);
    EXPECT_THROW(Permutation::parse("1 2 x", PermFormat::Arrays, 3), std::invalid_argument);
    EXPECT_THROW(perm_format_from_string("rows"), std::invalid_argument);
    // The identity in cycle notation parses back.
    EXPECT_TRUE(Permutation::parse("()", PermFormat::Cycles, 4).is_identity());
}

TEST(ClassEnumeration, SizesMatchClosedForms) {
    for (int n = 1; n <= 3; ++n) {
        const ClassIndex s_class = enumerate_class(word_eval(Word(n).s(1)));
        EXPECT_EQ(bigint(s_class.size()), class_size_s(n)) << "n=" << n;
        EXPECT_TRUE(s_class.validate_closure());

        const ClassIndex z_class = enumerate_class(word_eval(Word(n).s(1).s(1)));
        EXPECT_EQ(bigint(z_class.size()), class_size_z(n)) << "n=" << n;
        EXPECT_TRUE(z_class.validate_closure());
    }
}

TEST(ClassEnumeration, SquaresOfClassMembersArePauli) {
    // Every member is conjugate to the phase gate, whose square is a Pauli.
    for (int n = 1; n <= 2; ++n) {
        const ClassIndex idx = enumerate_class(word_eval(Word(n).s(1)));
        for (const auto& v : idx.elements()) {
            EXPECT_TRUE(compose(v, v).is_pauli());
            EXPECT_FALSE(v.is_pauli());
        }
    }
}

TEST(ClassEnumeration, GuardThrowsCapacityError) {
    EXPECT_THROW(enumerate_class(word_eval(Word(2).s(1)), 10), capacity_error);
}

TEST(PermRep, IdentityAndHomomorphism) {
    for (int n = 1; n <= 2; ++n) {
        const ClassIndex idx = enumerate_class(word_eval(Word(n).s(1)));
        EXPECT_TRUE(permutation_of(CliffordTableau::identity(n), idx).is_identity());

        std::mt19937_64 rng(314159);
        for (int t = 0; t < 20; ++t) {
            const CliffordTableau f = word_eval(random_word(n, 12, rng));
            const CliffordTableau g = word_eval(random_word(n, 12, rng));
            // Right conjugation action: the permutation of a product is the
            // left-to-right composition of the factor permutations.
            EXPECT_EQ(permutation_of(compose(f, g), idx),
                      compose(permutation_of(f, idx), permutation_of(g, idx)));
        }
    }
}

TEST(PermRep, ExportGeneratorsShapeAndDeterminism) {
    const ClassIndex idx = enumerate_class(word_eval(Word(1).s(1)));
    const std::string text = export_generators(idx, PermFormat::Cycles);
    EXPECT_EQ(text, export_generators(idx, PermFormat::Cycles));
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    // One line per standard generator: h1 and s1 on a single qubit.
    ASSERT_EQ(lines.size(), 2u);
    for (const auto& line : lines) {
        const Permutation p = Permutation::parse(line, PermFormat::Cycles,
                                                 static_cast<int>(idx.size()));
        EXPECT_FALSE(p.is_identity());
    }
    const std::string arrays = export_generators(idx, PermFormat::Arrays);
    EXPECT_NE(arrays, text);
    EXPECT_NE(arrays.find(' '), std::string::npos);
}

TEST(PermRep, IndexOrderIsIndependentOfDiscoveryOrder) {
    const ClassIndex idx = enumerate_class(word_eval(Word(2).s(1)));
    std::vector<CliffordTableau> shuffled = idx.elements();
    std::mt19937_64 rng(99);
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const ClassIndex again(2, idx.seed(), std::move(shuffled));
    EXPECT_EQ(export_generators(again, PermFormat::Cycles),
              export_generators(idx, PermFormat::Cycles));
    for (std::size_t i = 0; i < idx.size(); ++i)
        EXPECT_EQ(again.element(static_cast<int>(i) + 1),
                  idx.element(static_cast<int>(i) + 1));
}

TEST(PermRep, CacheRoundTripAndValidation) {
    const ClassIndex idx = enumerate_class(word_eval(Word(2).s(1)));
    const std::string text = class_cache_text(idx);
    const ClassIndex loaded = load_class_cache_text(text);
    EXPECT_EQ(loaded.size(), idx.size());
    EXPECT_EQ(class_cache_text(loaded), text);

    // A corrupted body line must be rejected by revalidation.
    std::string tampered = text;
    const std::size_t second_line = tampered.find('\n') + 1;
    std::swap(tampered[second_line], tampered[second_line + 1]);
    if (tampered != text) EXPECT_ANY_THROW(load_class_cache_text(tampered));
    EXPECT_THROW(load_class_cache_text("bogus header\n"), std::runtime_error);

    const auto path = std::filesystem::temp_directory_path() / "cliffperm_test_cache.txt";
    save_class_cache(idx, path.string());
    const ClassIndex from_file = load_class_cache(path.string());
    EXPECT_EQ(from_file.size(), idx.size());
    std::filesystem::remove(path);
}

TEST(PermRep, PointLookupIsConsistent) {
    const ClassIndex idx = enumerate_class(word_eval(Word(1).s(1)));
    for (int p = 1; p <= static_cast<int>(idx.size()); ++p)
        EXPECT_EQ(idx.point_of(idx.element(p)), p);
    EXPECT_EQ(idx.find("not a key"), 0);
    EXPECT_THROW(idx.point_of(CliffordTableau::identity(1)), std::invalid_argument);
}

}  // namespace
}  // namespace cliffperm
