#include <gtest/gtest.h>

#include <map>
#include <sstream>

#include "oracles.hpp"
#include "tensorwalk/sn_characters.hpp"

using namespace tensorwalk;

namespace {

std::map<std::vector<int>, long> class_sizes_by_enumeration(int n) {
    std::map<std::vector<int>, long> sizes;
    for (const auto& p : oracle::all_permutations(n)) ++sizes[p.cycle_type.parts()];
    return sizes;
}

}  // namespace

TEST(ConjugacyClasses, SizesMatchPermutationCensus) {
    for (int n = 1; n <= 7; ++n) {
        const auto census = class_sizes_by_enumeration(n);
        BigInt total = 0;
        for (const auto& c : conjugacy_classes(n)) {
            EXPECT_EQ(c.class_size, census.at(c.cycle_type.parts())) << c.cycle_type.to_string();
            total += c.class_size;
            int weighted = 0;
            for (const auto& [j, count] : c.cycle_counts) weighted += j * count;
            EXPECT_EQ(weighted, n);
            EXPECT_EQ(c.fixed_points, c.cycle_type.multiplicity(1));
            EXPECT_EQ(c.sign, (n - c.num_cycles) % 2 == 0 ? 1 : -1);
        }
        EXPECT_EQ(total, factorial(n));
    }
}

TEST(ConjugacyClasses, SThree) {
    const auto classes = conjugacy_classes(3);
    ASSERT_EQ(classes.size(), 3U);
    EXPECT_EQ(classes[0].cycle_type, Partition({3}));
    EXPECT_EQ(classes[0].class_size, 2);
    EXPECT_EQ(classes[1].class_size, 3);
    EXPECT_EQ(classes[2].class_size, 1);  // identity
}

TEST(ConjugacyClasses, SizeLimit) {
    EXPECT_THROW(conjugacy_classes(0), size_limit_error);
    EXPECT_THROW(conjugacy_classes(max_multi_route_n() + 1), size_limit_error);
    EXPECT_THROW(character_table(max_multi_route_n() + 1), size_limit_error);
}

TEST(CharacterTable, SThreeRowOfTwoOne) {
    const auto t = character_table(3);
    const std::size_t row = t.index_of(Partition({2, 1}));
    // columns follow (3), (2,1), (1^3)
    EXPECT_EQ(t(row, 2), 2);
    EXPECT_EQ(t(row, 1), 0);
    EXPECT_EQ(t(row, 0), -1);
}

TEST(CharacterTable, TrivialSignAndDimensions) {
    for (int n = 1; n <= 9; ++n) {
        const auto t = character_table(n);
        const std::size_t triv = t.index_of(Partition::single_row(n));
        const std::size_t sgn = t.index_of(Partition::single_column(n));
        for (std::size_t c = 0; c < t.classes().size(); ++c) {
            EXPECT_EQ(t(triv, c), 1);
            EXPECT_EQ(t(sgn, c), t.classes()[c].sign);
        }
        for (std::size_t l = 0; l < t.irreps().size(); ++l) EXPECT_EQ(BigInt(t.dimension(l)), count_syt(t.irreps()[l]));
    }
}

TEST(CharacterTable, RowOrthogonality) {
    for (int n = 1; n <= 8; ++n) {
        const auto t = character_table(n);
        const std::size_t k = t.irreps().size();
        for (std::size_t a = 0; a < k; ++a) {
            for (std::size_t b = a; b < k; ++b) {
                BigInt total = 0;
                for (std::size_t c = 0; c < k; ++c) total += t.classes()[c].class_size * t(a, c) * t(b, c);
                EXPECT_EQ(total, a == b ? factorial(n) : BigInt(0)) << n << " " << a << " " << b;
            }
        }
    }
}

TEST(CharacterTable, ColumnOrthogonality) {
    for (int n = 1; n <= 7; ++n) {
        const auto t = character_table(n);
        const std::size_t k = t.irreps().size();
        for (std::size_t c1 = 0; c1 < k; ++c1) {
            for (std::size_t c2 = 0; c2 < k; ++c2) {
                long total = 0;
                for (std::size_t l = 0; l < k; ++l) total += t(l, c1) * t(l, c2);
                // sum_lambda chi(C1) chi(C2) = delta * |centralizer| = n!/|C|
                const BigInt expected = c1 == c2 ? BigInt(factorial(n) / t.classes()[c1].class_size) : BigInt(0);
                EXPECT_EQ(BigInt(total), expected);
            }
        }
    }
}

TEST(CharacterTable, CsvExport) {
    std::ostringstream os;
    character_table(3).write_csv(os);
    EXPECT_EQ(os.str(),
              "lambda,\"[3]\",\"[2,1]\",\"[1,1,1]\"\n"
              "\"[3]\",1,1,1\n"
              "\"[2,1]\",-1,0,2\n"
              "\"[1,1,1]\",1,-1,1\n");
}

TEST(FixedPointCharacterSum, Examples) {
    const auto t3 = character_table(3);
    EXPECT_EQ(fixed_point_character_sum(t3, Partition({2, 1}), 1), 0);
    EXPECT_EQ(fixed_point_character_sum(t3, Partition({1, 1, 1}), 0), 2);
    // trivial character counts permutations with exactly i fixed points
    for (int n = 1; n <= 6; ++n) {
        const auto t = character_table(n);
        std::map<int, long> by_fixed;
        for (const auto& p : oracle::all_permutations(n)) ++by_fixed[p.fixed_points];
        for (int i = 0; i <= n; ++i) EXPECT_EQ(fixed_point_character_sum(t, Partition::single_row(n), i), by_fixed[i]);
    }
}

TEST(FixedPointCharacterSum, BothRoutesAgreeExhaustively) {
    // The function throws consistency_error on a route mismatch.
    for (int n = 1; n <= 7; ++n) {
        const auto t = character_table(n);
        for (const auto& lambda : t.irreps()) {
            for (int i = 0; i <= n; ++i) EXPECT_NO_THROW(fixed_point_character_sum(t, lambda, i));
        }
    }
}

TEST(FixedPointCharacterSum, MatchesPermutationByPermutationSum) {
    for (int n = 2; n <= 6; ++n) {
        const auto t = character_table(n);
        const auto perms = oracle::all_permutations(n);
        for (std::size_t l = 0; l < t.irreps().size(); ++l) {
            std::map<int, long> sums;
            for (const auto& p : perms) sums[p.fixed_points] += character_value(t.irreps()[l], p.cycle_type);
            for (int i = 0; i <= n; ++i) EXPECT_EQ(fixed_point_character_sum(t, t.irreps()[l], i), sums[i]);
        }
    }
}

TEST(FixedPointCharacterSum, RejectsBadArguments) {
    const auto t = character_table(4);
    EXPECT_THROW(fixed_point_character_sum(t, Partition({2, 1}), 0), invalid_input_error);
    EXPECT_THROW(fixed_point_character_sum(t, Partition({4}), 5), invalid_input_error);
}

TEST(SignedFixedPointSum, Examples) {
    EXPECT_EQ(signed_fixed_point_sum(4, 0), -3);
    EXPECT_EQ(signed_fixed_point_sum(3, 1), -3);
    for (int n = 1; n <= 8; ++n) EXPECT_EQ(signed_fixed_point_sum(n, n), 1);
}

TEST(SignedFixedPointSum, ClosedFormMatchesClassSums) {
    for (int n = 1; n <= 8; ++n) {
        std::map<int, BigInt> sums;
        for (const auto& c : conjugacy_classes(n)) sums[c.fixed_points] += c.class_size * c.sign;
        for (int i = 0; i <= n; ++i) EXPECT_EQ(signed_fixed_point_sum(n, i), sums[i]) << n << "," << i;
    }
}

TEST(TensorMultiplicity, Examples) {
    const auto t = character_table(3);
    const auto eta = defining_character(t);
    EXPECT_EQ(eta, (std::vector<ExactScalar>{0, 1, 3}));
    EXPECT_EQ(tensor_multiplicity(t, Partition({3}), eta, Partition({2, 1})), 1);
    EXPECT_EQ(tensor_multiplicity(t, Partition({1, 1, 1}), eta, Partition({3})), 0);

    const std::vector<ExactScalar> trivial(t.classes().size(), ExactScalar(1));
    for (const auto& l : t.irreps()) {
        for (const auto& r : t.irreps()) EXPECT_EQ(tensor_multiplicity(t, l, trivial, r), l == r ? 1 : 0);
    }
}

TEST(TensorMultiplicity, NonCharacterIsRejected) {
    const auto t = character_table(3);
    const std::vector<ExactScalar> half{ExactScalar(0), ExactScalar(0), make_rational(1, 2)};
    EXPECT_THROW(tensor_multiplicity(t, Partition({3}), half, Partition({3})), consistency_error);
}

TEST(TensorMultiplicity, DimensionConsistency) {
    for (int n = 1; n <= 6; ++n) {
        const auto t = character_table(n);
        const auto eta = defining_character(t);
        for (std::size_t l = 0; l < t.irreps().size(); ++l) {
            BigInt total = 0;
            for (std::size_t r = 0; r < t.irreps().size(); ++r) {
                total += t.dimension(r) * tensor_multiplicity(t, t.irreps()[l], eta, t.irreps()[r]);
            }
            EXPECT_EQ(total, BigInt(t.dimension(l) * n));
        }
    }
}
