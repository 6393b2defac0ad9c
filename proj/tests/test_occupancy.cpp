#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "tensorwalk/occupancy.hpp"

using namespace tensorwalk;

namespace {
constexpr std::uint64_t kSeed = 0x5eed2026ULL;
constexpr std::uint64_t kSamples = 100000;

void expect_within_4se(const McEstimate& est, const ExactScalar& exact) {
    const double p = to_double(exact);
    // standard error of the exact p, so a lucky all-zero run cannot pass a nonzero target
    const double se = std::sqrt(p * (1 - p) / static_cast<double>(est.samples));
    EXPECT_LE(std::abs(est.estimate() - p), 4 * se) << "estimate " << est.estimate() << " exact " << p;
}
}  // namespace

TEST(OccupancyExact, Examples) {
    EXPECT_EQ(occupancy_exact(1, 1, 5), 1);
    EXPECT_EQ(occupancy_exact(2, 2, 2), make_rational(1, 2));
    EXPECT_EQ(occupancy_exact(2, 3, 3), make_rational(2, 3));
    EXPECT_EQ(oracle::occupancy_by_enumeration(2, 2, 2), make_rational(1, 2));
    EXPECT_EQ(oracle::occupancy_by_enumeration(2, 3, 3), make_rational(2, 3));
    EXPECT_EQ(occupancy_exact(0, 0, 4), 1);
    EXPECT_EQ(occupancy_exact(2, 0, 4), 0);
    EXPECT_EQ(occupancy_exact(4, 3, 5), 0);
}

TEST(OccupancyExact, MatchesDropSequenceEnumeration) {
    for (int n = 1; n <= 5; ++n) {
        for (int r = 0; r <= 6; ++r) {
            for (int a = 0; a <= n; ++a) EXPECT_EQ(occupancy_exact(a, r, n), oracle::occupancy_by_enumeration(a, r, n));
        }
    }
}

TEST(OccupancyExact, SumsToOne) {
    for (int n = 1; n <= 12; ++n) {
        for (int r = 0; r <= 60; r += 3) {
            ExactScalar total = 0;
            for (int a = 0; a <= n; ++a) total += occupancy_exact(a, r, n);
            EXPECT_EQ(total, 1);
        }
    }
}

TEST(OccupancyExact, RejectsBadArguments) {
    EXPECT_THROW(occupancy_exact(3, 1, 2), invalid_input_error);
    EXPECT_THROW(occupancy_exact(0, -1, 2), invalid_input_error);
    EXPECT_THROW(occupancy_exact(0, 1, 0), invalid_input_error);
}

TEST(OccupancyChain, Examples) {
    EXPECT_EQ(occupancy_chain_power(4, 0), (std::vector<ExactScalar>{1, 0, 0, 0, 0}));
    EXPECT_EQ(occupancy_chain_power(2, 2), (std::vector<ExactScalar>{0, make_rational(1, 2), make_rational(1, 2)}));
}

TEST(OccupancyChain, EqualsClosedForm) {
    for (int n = 1; n <= 10; ++n) {
        for (int r = 0; r <= 40; ++r) {
            const auto dist = occupancy_chain_power(n, r);
            for (int a = 0; a <= n; ++a) EXPECT_EQ(dist[static_cast<std::size_t>(a)], occupancy_exact(a, r, n));
        }
    }
}

TEST(QSpanExact, Examples) {
    for (long q : {2L, 3L}) {
        for (int n = 1; n <= 4; ++n) {
            for (int r = 0; r <= 4; ++r) EXPECT_EQ(qspan_exact(0, r, n, q), pow_exact(ExactScalar(q), -r * n));
        }
    }
    EXPECT_EQ(qspan_exact(2, 2, 2, 2), make_rational(3, 8));
    EXPECT_EQ(oracle::qspan_by_enumeration(2, 2, 2, 2), make_rational(3, 8));
    EXPECT_EQ(qspan_exact(3, 2, 4, 3), 0);
}

TEST(QSpanExact, MatchesVectorTupleEnumeration) {
    for (int q : {2, 3}) {
        for (int n = 1; n <= 3; ++n) {
            for (int r = 0; r <= 3; ++r) {
                if (oracle::ipow(oracle::ipow(q, n), r) > 30000) continue;
                for (int a = 0; a <= n; ++a) EXPECT_EQ(qspan_exact(a, r, n, q), oracle::qspan_by_enumeration(a, r, n, q));
            }
        }
    }
}

TEST(QSpanExact, SumsToOneAndMatchesChain) {
    for (long q : {2L, 3L, 5L}) {
        for (int n = 0; n <= 8; ++n) {
            for (int r = 0; r <= 12; ++r) {
                const auto chain = qspan_chain_power(n, r, q);
                ExactScalar total = 0;
                for (int a = 0; a <= n; ++a) {
                    const auto p = qspan_exact(a, r, n, q);
                    EXPECT_EQ(p, chain[static_cast<std::size_t>(a)]);
                    total += p;
                }
                EXPECT_EQ(total, 1);
            }
        }
    }
}

TEST(OccupancyMc, DeterministicEvents) {
    const RandomSource src{kSeed, 0};
    const auto sure = occupancy_mc(1, 1, 5, 1000, src);
    EXPECT_EQ(sure.estimate(), 1.0);
    EXPECT_EQ(sure.standard_error(), 0.0);
    EXPECT_EQ(occupancy_mc(0, 1, 5, 1000, src).estimate(), 0.0);
}

TEST(OccupancyMc, WithinFourStandardErrors) {
    expect_within_4se(occupancy_mc(2, 2, 2, kSamples, {kSeed, 0}), make_rational(1, 2));
    expect_within_4se(occupancy_mc(2, 3, 3, kSamples, {kSeed, 1}), make_rational(2, 3));
    expect_within_4se(occupancy_mc(5, 12, 8, kSamples, {kSeed, 2}), occupancy_exact(5, 12, 8));
}

TEST(OccupancyMc, ReproducibleAndStreamsDiffer) {
    const auto a = occupancy_mc(3, 6, 5, 5000, {kSeed, 3});
    const auto b = occupancy_mc(3, 6, 5, 5000, {kSeed, 3});
    const auto c = occupancy_mc(3, 6, 5, 5000, {kSeed, 4});
    EXPECT_EQ(a.hits, b.hits);
    EXPECT_NE(a.hits, c.hits);
    EXPECT_EQ(occupancy_mc_histogram(6, 5, 5000, kSeed, 3), occupancy_mc_histogram(6, 5, 5000, kSeed, 3));
}

TEST(OccupancyMc, HistogramMergesStreams) {
    const auto h = occupancy_mc_histogram(4, 4, 40000, kSeed, 4);
    std::uint64_t total = 0;
    for (auto v : h) total += v;
    EXPECT_EQ(total, 40000U);
    for (int a = 0; a <= 4; ++a) {
        expect_within_4se(McEstimate{h[static_cast<std::size_t>(a)], 40000}, occupancy_exact(a, 4, 4));
    }
}

TEST(QSpanMc, WithinFourStandardErrors) {
    expect_within_4se(qspan_mc(2, 2, 2, 2, kSamples, {kSeed, 0}), make_rational(3, 8));
    expect_within_4se(qspan_mc(0, 1, 3, 3, kSamples, {kSeed, 1}), make_rational(1, 27));
    expect_within_4se(qspan_mc(3, 4, 4, 5, kSamples, {kSeed, 2}), qspan_exact(3, 4, 4, 5));
    EXPECT_EQ(qspan_mc(3, 3, 2, 2, 1000, {kSeed, 0}).estimate(), 0.0);
}

TEST(QSpanMc, RejectsNonPrimeField) {
    EXPECT_THROW(qspan_mc(1, 1, 2, 4, 10, {kSeed, 0}), unsupported_field_error);
    EXPECT_THROW(qspan_mc_histogram(1, 2, 9, 10, kSeed), unsupported_field_error);
}

TEST(PoissonNot01, Values) {
    EXPECT_NEAR(poisson_not01(0.0), 1.0 - 2.0 / std::exp(1.0), 1e-15);
    EXPECT_NEAR(poisson_not01(0.0), 0.2642411, 1e-7);
    // reference values from 30-digit evaluation of the closed form
    EXPECT_NEAR(poisson_not01(-2.0), 0.994815739590541, 1e-14);
    EXPECT_NEAR(poisson_not01(1.0), 0.0531529924010712, 1e-14);
    EXPECT_EQ(poisson_not01(INFINITY), 0.0);
    EXPECT_LT(poisson_not01(40.0), 1e-30);
    EXPECT_GT(poisson_not01(40.0), 0.0);
}

TEST(PoissonNot01, SeriesBranchIsContinuous) {
    const double c = -std::log(0.5);  // switch point m = 0.5
    EXPECT_NEAR(poisson_not01(c - 1e-9), poisson_not01(c + 1e-9), 1e-9);
}
