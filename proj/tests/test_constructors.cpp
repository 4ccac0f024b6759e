#include <vector>

#include <gtest/gtest.h>

#include <qlambert/constructors.hpp>
#include <qlambert/series.hpp>

#include "support.hpp"

using namespace qlambert;
using qlambert::test::as_longs;
using qlambert::test::count_partitions;
using sm = qlambert::signed_monomial;

namespace
{

// sum_{d | n} sign(d), brute force
long signed_divisor_count(long n, bool negate_odd, bool negate_even)
{
    long total = 0;
    for (long d = 1; d <= n; ++d) {
        if (n % d != 0) {
            continue;
        }
        const bool neg = (d % 2 == 1) ? negate_odd : negate_even;
        total += neg ? -1 : 1;
    }
    return total;
}

} // namespace

TEST(SignedMonomial, RejectsBadSign)
{
    EXPECT_THROW(sm(0, 1), parameter_out_of_range);
    EXPECT_THROW(sm(2, 1), parameter_out_of_range);
    EXPECT_EQ(to_string(sm::minus(3)), "-q^3");
    EXPECT_EQ(to_string(sm::plus(1)), "+q");
}

TEST(LambertTerm, Examples)
{
    EXPECT_EQ(as_longs(lambert_term(1, 1, 1, 5)), (std::vector<long>{0, 1, 1, 1, 1}));
    EXPECT_EQ(as_longs(lambert_term(2, 3, -1, 10)), (std::vector<long>{0, 0, 1, 0, 0, -1, 0, 0, 1, 0}));
    EXPECT_TRUE(lambert_term(12, 1, 1, 5).is_zero());
    EXPECT_THROW(lambert_term(1, 0, 1, 5), invalid_exponent);
}

TEST(LambertSum, NamedSums)
{
    EXPECT_EQ(as_longs(lambert_sum(l1_spec(), 6)), (std::vector<long>{0, -1, 0, -2, 1, -2}));
    EXPECT_EQ(as_longs(lambert_sum(s_spec(), 6)), (std::vector<long>{0, -1, 0, -2, 0, -1}));
    EXPECT_EQ(as_longs(lambert_sum(l3_spec(), 8)), (std::vector<long>{0, 0, 1, 0, 0, 0, 2, 0}));
}

TEST(LambertSum, DivisorCounts)
{
    const long n = 400;
    const auto l1 = lambert_sum(l1_spec(), n);
    const auto l3 = lambert_sum(l3_spec(), n);
    const auto d = lambert_sum({1, 1, 0, 1, 1, 0, 1}, n);
    for (long k = 1; k < n; ++k) {
        ASSERT_EQ(l1[k], signed_divisor_count(k, true, false)) << k;
        ASSERT_EQ(d[k], signed_divisor_count(k, false, false)) << k;
        if (k % 2 == 0) {
            ASSERT_EQ(l3[k], signed_divisor_count(k / 2, false, true)) << k;
        } else {
            ASSERT_EQ(l3[k], 0) << k;
        }
    }
}

TEST(LambertSum, ScalarMultiplies)
{
    auto spec = l2_spec();
    spec.c = 7;
    EXPECT_EQ(lambert_sum(spec, 50), linear_combine(7, lambert_sum(l2_spec(), 50), 0, lambert_sum(l2_spec(), 50)));
}

TEST(LambertSum, RejectsDivergentSpecs)
{
    EXPECT_THROW(lambert_sum({1, 1, 0, 0, 1, 0, 1}, 10), divergent_spec);  // a1 = 0
    EXPECT_THROW(lambert_sum({1, 1, -1, 1, 1, 0, 1}, 10), divergent_spec); // first numerator q^0
    EXPECT_THROW(lambert_sum({1, 1, 0, 1, 1, -2, 2}, 10), divergent_spec); // b0 + b1 = 0
    EXPECT_THROW(lambert_sum({1, 1, 0, 1, 1, 3, -1}, 10), divergent_spec); // b1 < 0
    EXPECT_THROW(lambert_sum({1, 2, 0, 1, 1, 0, 1}, 10), divergent_spec);  // sign not +-1
    EXPECT_NO_THROW(lambert_sum(s_spec(), 10));
}

TEST(Pochhammer, EulerFunction)
{
    EXPECT_EQ(as_longs(pochhammer(sm::plus(1), 1, 8)), (std::vector<long>{1, -1, -1, 0, 0, 1, 0, 1}));
}

TEST(Pochhammer, MinusOneHasFactorTwo)
{
    const std::size_t n = 30;
    EXPECT_EQ(pochhammer(sm::minus(0), 1, n), linear_combine(2, pochhammer(sm::minus(1), 1, n), 0, truncated_series(n)));
    EXPECT_THROW(pochhammer(sm::plus(0), 1, n), zero_factor);
    EXPECT_THROW(pochhammer(sm::plus(1), 0, n), invalid_exponent);
}

TEST(Pochhammer, InverseCountsPartitions)
{
    const auto p = invert(pochhammer(sm::plus(1), 1, 32));
    for (long k = 0; k < 32; ++k) {
        ASSERT_EQ(p[k], count_partitions(k, k)) << k;
    }
}

TEST(Phi, LowOrder)
{
    EXPECT_EQ(as_longs(phi(8)), (std::vector<long>{1, 0, 2, 0, 1, 0, 2, 0}));
    for (std::size_t n : {1u, 2u, 9u, 64u, 301u}) {
        EXPECT_EQ(parity_of(phi(n)).kind, parity_kind::even) << n;
    }
}

TEST(NamedSeries, LowOrderValues)
{
    EXPECT_EQ(as_longs(named_series(series_id::Y_DEF, 6)), (std::vector<long>{0, 0, 0, -1, 0, -2}));
    EXPECT_EQ(as_longs(named_series(series_id::A, 3)), (std::vector<long>{0, 0, 1}));
    EXPECT_EQ(as_longs(named_series(series_id::B, 5)), (std::vector<long>{0, 0, 0, 0, 1}));
    EXPECT_EQ(as_longs(named_series(series_id::B1, 3)), (std::vector<long>{0, 0, 1}));
    EXPECT_EQ(named_series(series_id::PHI, 40), phi(40));
}

TEST(NamedSeries, EveryIdBuildsAtTinyOrders)
{
    for (auto id : all_series_ids) {
        for (std::size_t n : {1u, 2u, 3u, 4u}) {
            auto f = named_series(id, n);
            EXPECT_EQ(f.order(), n) << to_string(id);
        }
        EXPECT_EQ(parse_series_id(to_string(id)), id);
    }
    EXPECT_FALSE(parse_series_id("Y"));
}

TEST(NamedSeries, ThreeFormsOfYAgree)
{
    const std::size_t n = 300;
    const auto y = named_series(series_id::Y_DEF, n);
    EXPECT_EQ(named_series(series_id::Y_EQ1, n), y);
    EXPECT_EQ(named_series(series_id::Y_EQ2, n), y);
}

TEST(NamedSeries, TruncationsNest)
{
    for (auto id : all_series_ids) {
        EXPECT_EQ(named_series(id, 120).truncate(37), named_series(id, 37)) << to_string(id);
    }
}

TEST(NamedSeries, D2DisplaysAgree)
{
    const std::size_t n = 250;
    const auto d2 = named_series(series_id::D2, n);
    EXPECT_EQ(d2, named_series(series_id::B, n) + named_series(series_id::B1, n));
    EXPECT_EQ(d2, d2_middle_form(n));
}

TEST(NamedSeries, DisplayAsTypesetIsNotOdd)
{
    const auto printed = conjecture_display_as_printed(40);
    const auto y = named_series(series_id::Y_DEF, 40);
    auto c = compare(printed, y);
    ASSERT_FALSE(c.equal());
    EXPECT_EQ(c.first_mismatch->index, 6u);
    EXPECT_EQ(printed[6], 1);
    EXPECT_EQ(parity_of(printed).kind, parity_kind::neither);
    EXPECT_EQ(printed.truncate(6), y.truncate(6));
}

TEST(Bilateral, MinusQPlusQBaseTwoIsTwicePhi)
{
    const auto x = sm::minus(1), y = sm::plus(1);
    EXPECT_EQ(as_longs(bilateral_sum(x, y, 2, 8)), (std::vector<long>{2, 0, 4, 0, 2, 0, 4, 0}));
    EXPECT_EQ(as_longs(entry29_rhs(x, y, 2, 8)), (std::vector<long>{2, 0, 4, 0, 2, 0, 4, 0}));
    EXPECT_EQ(bilateral_sum(x, y, 2, 300), linear_combine(2, phi(300), 0, phi(300)));
}

TEST(Bilateral, AgreesWithProductSide)
{
    EXPECT_EQ(bilateral_sum(sm::plus(1), sm::plus(1), 3, 200), entry29_rhs(sm::plus(1), sm::plus(1), 3, 200));
    EXPECT_EQ(bilateral_sum(sm::plus(1), sm::minus(1), 2, 200), entry29_rhs(sm::plus(1), sm::minus(1), 2, 200));
    EXPECT_EQ(bilateral_sum(sm::minus(2), sm::minus(3), 7, 150), entry29_rhs(sm::minus(2), sm::minus(3), 7, 150));
}

TEST(Bilateral, ParameterChecks)
{
    EXPECT_THROW(entry29_rhs(sm::plus(1), sm::plus(1), 2, 8), zero_factor);
    EXPECT_THROW(bilateral_sum(sm::plus(2), sm::plus(1), 2, 8), parameter_out_of_range);
    EXPECT_THROW(bilateral_sum(sm::plus(1), sm::plus(0), 2, 8), parameter_out_of_range);
    EXPECT_THROW(bilateral_sum(sm::plus(1), sm::plus(1), 1, 8), parameter_out_of_range);
    EXPECT_THROW(entry29_rhs(sm::plus(2), sm::plus(2), 3, 8), parameter_out_of_range);
}

TEST(Bilateral, WindowedHalvingOfSTerm)
{
    const std::size_t n = 120;
    const auto spec = s_bilateral_spec();
    for (long m = 1; m <= 60; ++m) {
        const auto window = bilateral_partial_sum(spec, 1 - m, m, n);
        const auto one_sided = bilateral_partial_sum(spec, 1, m, n);
        ASSERT_EQ(window, linear_combine(2, one_sided, 0, one_sided)) << "M=" << m;
    }
    // Terms m and 1 - m coincide one by one.
    for (long m = 1; m <= 20; ++m) {
        ASSERT_EQ(bilateral_partial_sum(spec, m, m, n), bilateral_partial_sum(spec, 1 - m, 1 - m, n));
    }
    EXPECT_EQ(bilateral_partial_sum(spec, 1, static_cast<long>(n), n), s_series(n));
}

TEST(Bilateral, TermWithZeroDenominatorExponentIsRejected)
{
    EXPECT_THROW(bilateral_partial_sum({1, 0, 1, 1, -2, 2}, 0, 2, 10), divergent_spec);
}
