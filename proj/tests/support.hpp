#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include <qlambert/series.hpp>

namespace qlambert::test
{

inline truncated_series random_series(std::mt19937_64 &rng, std::size_t order, long lo = -9, long hi = 9)
{
    std::uniform_int_distribution<long> dist(lo, hi);
    std::vector<integer> v(order);
    for (auto &c : v) {
        c = dist(rng);
    }
    return truncated_series(std::move(v));
}

// Random series whose constant term is +1 or -1.
inline truncated_series random_unit(std::mt19937_64 &rng, std::size_t order)
{
    auto v = std::move(random_series(rng, order)).take_coeffs();
    v[0] = (rng() & 1) ? 1 : -1;
    return truncated_series(std::move(v));
}

// Number of partitions of n into parts <= max_part, by plain recursion.
inline long count_partitions(long n, long max_part)
{
    if (n == 0) {
        return 1;
    }
    long total = 0;
    for (long p = std::min(n, max_part); p >= 1; --p) {
        total += count_partitions(n - p, p);
    }
    return total;
}

inline std::vector<long> as_longs(const truncated_series &f)
{
    std::vector<long> out;
    for (const auto &c : f.coeffs()) {
        out.push_back(c.get_si());
    }
    return out;
}

} // namespace qlambert::test
