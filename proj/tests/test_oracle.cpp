#include <vector>

#include <gtest/gtest.h>

#include <qlambert/constructors.hpp>
#include <qlambert/oracle.hpp>

#include "support.hpp"

using namespace qlambert;
using qlambert::oracle::oracle_divisor_lambert;
using qlambert::oracle::oracle_expand;
using qlambert::oracle::oracle_partitions;
using qlambert::test::as_longs;
using qlambert::test::count_partitions;

TEST(OracleExpand, YDefLowOrder)
{
    EXPECT_EQ(as_longs(oracle_expand(series_id::Y_DEF, 6)), (std::vector<long>{0, 0, 0, -1, 0, -2}));
}

TEST(OracleExpand, B1LowestTerm)
{
    EXPECT_EQ(as_longs(oracle_expand(series_id::B1, 3)), (std::vector<long>{0, 0, 1}));
}

TEST(OracleExpand, ZIsSumOfAAndB)
{
    for (std::size_t n : {1u, 8u, 51u, 300u}) {
        EXPECT_EQ(oracle_expand(series_id::Z, n), oracle_expand(series_id::A, n) + oracle_expand(series_id::B, n))
            << "N=" << n;
    }
}

TEST(OracleExpand, MatchesConstructors)
{
    const std::size_t n = 300;
    for (auto id : {series_id::Y_DEF, series_id::Z, series_id::A, series_id::B, series_id::B1}) {
        auto c = compare(oracle_expand(id, n), named_series(id, n), n);
        EXPECT_TRUE(c.equal()) << to_string(id) << " first mismatch at " << c.first_mismatch->index;
    }
}

TEST(OracleExpand, UnsupportedIds)
{
    EXPECT_THROW(oracle_expand(series_id::D1, 10), unsupported_series);
    EXPECT_THROW(oracle_expand(series_id::PHI, 10), unsupported_series);
}

TEST(OraclePartitions, Examples)
{
    EXPECT_EQ(as_longs(oracle_partitions(1, 1, 6)), (std::vector<long>{1, 1, 2, 3, 5, 7}));
    // parts 2 and 4, two colors each: 4a, 4b, 2a+2a, 2a+2b, 2b+2b
    EXPECT_EQ(oracle_partitions(2, 2, 6)[4], 5);
    for (std::size_t colors : {1u, 2u, 5u}) {
        for (std::size_t mod : {1u, 3u}) {
            EXPECT_EQ(oracle_partitions(colors, mod, 10)[0], 1);
        }
    }
    for (long k = 0; k < 25; ++k) {
        EXPECT_EQ(oracle_partitions(1, 1, 25)[k], count_partitions(k, k));
    }
}

TEST(OraclePartitions, TwoColoredEvenPartsInvertPochhammerSquare)
{
    const std::size_t n = 500;
    const auto p2 = pochhammer(signed_monomial::plus(2), 2, n);
    EXPECT_EQ(oracle_partitions(2, 2, n), invert(mul(p2, p2)));
}

TEST(OraclePartitions, PhiFromPartitionCounts)
{
    // (q^4;q^4)^4 times the two-colored even-part partition series.
    const std::size_t n = 8;
    const auto p4 = pochhammer(signed_monomial::plus(4), 4, n);
    const auto quartic = mul(mul(p4, p4), mul(p4, p4));
    const auto two_colored = oracle_partitions(2, 2, n);
    EXPECT_EQ(as_longs(two_colored), (std::vector<long>{1, 0, 2, 0, 5, 0, 10, 0}));
    EXPECT_EQ(as_longs(mul(quartic, two_colored)), (std::vector<long>{1, 0, 2, 0, 1, 0, 2, 0}));
    EXPECT_EQ(mul(quartic, two_colored), phi(n));
}

TEST(OracleDivisorLambert, Examples)
{
    EXPECT_EQ(oracle_divisor_lambert(-1, 1, 13)[12], 2);
    const auto d = oracle_divisor_lambert(1, 1, 13);
    EXPECT_EQ(as_longs(d), (std::vector<long>{0, 1, 2, 2, 3, 2, 4, 2, 4, 3, 4, 2, 6}));
    EXPECT_EQ(oracle_divisor_lambert(-1, 2, 8)[6], -2);
    EXPECT_EQ(oracle_divisor_lambert(-1, 2, 8)[5], 0);
}

TEST(OracleDivisorLambert, MatchesLambertSums)
{
    const std::size_t n = 500;
    for (int sigma : {1, -1}) {
        for (long t : {1L, 2L, 3L}) {
            // sum_k sigma^k q^(tk) / (1 - q^(tk))
            lambert_spec spec{1, sigma, 0, t, 1, 0, t};
            auto c = compare(oracle_divisor_lambert(sigma, static_cast<std::size_t>(t), n), lambert_sum(spec, n));
            EXPECT_TRUE(c.equal()) << "sigma=" << sigma << " t=" << t << " index " << c.first_mismatch->index;
        }
    }
    EXPECT_EQ(oracle_divisor_lambert(-1, 1, n), named_series(series_id::L1, n));
    EXPECT_EQ(oracle_divisor_lambert(-1, 2, n), -named_series(series_id::L3, n));
}
