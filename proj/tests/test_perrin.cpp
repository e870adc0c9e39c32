#include "perrin_cordial/perrin.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <thread>

using namespace perrin_cordial;
namespace ts = testing_support;

TEST(PerrinValue, FirstTerms) {
    const int expected[] = {0, 3, 0, 2, 3, 2, 5, 5, 7, 10, 12, 17, 22, 29};
    for (Index i = 0; i < std::size(expected); ++i) EXPECT_EQ(perrin_value(i), expected[i]) << "i=" << i;
}

TEST(PerrinValue, MatchesMachineWordRecurrence) {
    const auto ref = ts::perrin_u64(158);
    for (Index i = 0; i <= 158; ++i) EXPECT_EQ(perrin_value(i), BigInt(ref[i])) << "i=" << i;
}

TEST(PerrinValue, BeyondMachineWords) {
    // Frozen from an independent arbitrary-precision run of the recurrence.
    EXPECT_EQ(perrin_value(300), BigInt("3272680502915963342698042273071569217"));
    EXPECT_EQ(perrin_value(1000).str().size(), 123u);
    EXPECT_EQ(perrin_value(1000) % 1000000007, 303012696);
}

TEST(PerrinValue, StrictlyIncreasingFromSeven) {
    for (Index i = 7; i < 1000; ++i) ASSERT_LT(perrin_value(i), perrin_value(i + 1)) << "i=" << i;
}

TEST(PerrinParity, AgreesWithValues) {
    for (Index i = 0; i <= 500; ++i) {
        const Parity want = perrin_value(i) % 2 == 0 ? Parity::even : Parity::odd;
        ASSERT_EQ(perrin_parity(i), want) << "i=" << i;
    }
}

TEST(PerrinParity, PeriodSevenFromIndexOne) {
    for (Index i = 1; i <= 1000; ++i) ASSERT_EQ(perrin_parity(i), perrin_parity(i + 7)) << "i=" << i;
    // Index 0 is the exception: P_0 even, P_7 odd.
    EXPECT_EQ(perrin_parity(0), Parity::even);
    EXPECT_EQ(perrin_parity(7), Parity::odd);
}

TEST(EvenCount, Examples) {
    EXPECT_EQ(even_count(0), 1u);
    EXPECT_EQ(even_count(9), 5u);
    EXPECT_EQ(even_count(13), 7u);
    EXPECT_EQ(even_count_scan(0), 1u);
    EXPECT_EQ(even_count_scan(6), 4u);
    EXPECT_EQ(even_count_scan(13), 7u);
    static_assert(even_count(7) == 4);
}

TEST(EvenCount, ClosedFormMatchesScan) {
    std::size_t running = 0;
    for (Index n = 0; n <= 10000; ++n) {
        running += perrin_parity(n) == Parity::even;
        ASSERT_EQ(even_count(n), running) << "n=" << n;
    }
    EXPECT_EQ(even_count_scan(10000), even_count(10000));
}

TEST(EvenCount, StepsByZeroOrOne) {
    for (Index n = 0; n < 10000; ++n) {
        const auto d = even_count(n + 1) - even_count(n);
        ASSERT_TRUE(d == 0 || d == 1) << "n=" << n;
    }
}

TEST(EvenIndices, Examples) {
    EXPECT_EQ(even_indices(6), (std::vector<Index>{0, 2, 3, 5}));
    EXPECT_EQ(even_indices(0), (std::vector<Index>{0}));
    EXPECT_EQ(even_indices(13), (std::vector<Index>{0, 2, 3, 5, 9, 10, 12}));
    EXPECT_EQ(odd_indices(6), (std::vector<Index>{1, 4, 6}));
}

TEST(EvenIndices, PartitionTheIndexRange) {
    for (Index n = 0; n <= 200; ++n) {
        const auto ev = even_indices(n), od = odd_indices(n);
        ASSERT_EQ(ev.size(), even_count(n));
        ASSERT_EQ(ev.size() + od.size(), n + 1);
        for (auto i : ev) ASSERT_TRUE(ts::index_even(i));
        for (auto i : od) ASSERT_FALSE(ts::index_even(i));
    }
}

TEST(PerrinSequence, ConcurrentGrowthIsConsistent) {
    PerrinSequence seq;
    std::vector<std::thread> pool;
    std::vector<BigInt> got(8);
    for (std::size_t t = 0; t < got.size(); ++t)
        pool.emplace_back([&, t] { got[t] = seq.value(400 + t % 2); });
    for (auto& th : pool) th.join();
    for (std::size_t t = 0; t < got.size(); ++t) EXPECT_EQ(got[t], perrin_value(400 + t % 2));
}
