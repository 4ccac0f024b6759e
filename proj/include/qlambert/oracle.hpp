#pragma once

// Brute-force ground truth. Each multi-sum is expanded by enumerating the
// integer lattice points of its display, geometric denominators included
// as extra summation indices, and accumulating +-1 per point. Shares no
// code with constructors.hpp.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <qlambert/errors.hpp>
#include <qlambert/series.hpp>
#include <qlambert/series_id.hpp>

namespace qlambert::oracle
{

namespace detail
{

class lattice_accumulator
{
public:
    explicit lattice_accumulator(std::size_t order) : m_counts(::qlambert::detail::checked_order(order)) {}

    std::int64_t bound() const noexcept
    {
        return static_cast<std::int64_t>(m_counts.size());
    }

    void add(std::int64_t exponent, bool negative)
    {
        m_counts[static_cast<std::size_t>(exponent)] += negative ? -1 : 1;
    }

    truncated_series finish() const
    {
        std::vector<integer> v;
        v.reserve(m_counts.size());
        for (auto c : m_counts) {
            v.emplace_back(static_cast<long>(c));
        }
        return truncated_series(std::move(v));
    }

private:
    std::vector<std::int64_t> m_counts;
};

inline bool odd(std::int64_t v)
{
    return (v & 1) != 0;
}

// sum_{m,n>=1; k,l>=0} (-1)^(m+k) q^(2mn + nk + 2ml + m - l),
// exponent written as m + 2mn + nk + l(2m-1).
inline truncated_series y_def(std::size_t order)
{
    lattice_accumulator acc(order);
    const auto N = acc.bound();
    for (std::int64_t m = 1; 3 * m < N; ++m) {
        for (std::int64_t n = 1; m + 2 * m * n < N; ++n) {
            for (std::int64_t k = 0; m + 2 * m * n + n * k < N; ++k) {
                for (std::int64_t l = 0;; ++l) {
                    const auto e = m + 2 * m * n + n * k + l * (2 * m - 1);
                    if (e >= N) {
                        break;
                    }
                    acc.add(e, odd(m + k));
                }
            }
        }
    }
    return acc.finish();
}

// sum_{i>=0, j>i} q^(j+1) / ((1+q^(2i+1))(1+q^(2j+1))), with the two
// denominators expanded by indices a, b.
inline truncated_series a_def(std::size_t order)
{
    lattice_accumulator acc(order);
    const auto N = acc.bound();
    for (std::int64_t i = 0; i + 2 < N; ++i) {
        for (std::int64_t j = i + 1; j + 1 < N; ++j) {
            for (std::int64_t a = 0; j + 1 + a * (2 * i + 1) < N; ++a) {
                for (std::int64_t b = 0;; ++b) {
                    const auto e = j + 1 + a * (2 * i + 1) + b * (2 * j + 1);
                    if (e >= N) {
                        break;
                    }
                    acc.add(e, odd(a + b));
                }
            }
        }
    }
    return acc.finish();
}

// sum over j > i (B) or j <= i (B1) of q^(i+2j+2) / ((1+q^(2i+1))(1+q^(2j+1))).
inline truncated_series b_family(std::size_t order, bool upper)
{
    lattice_accumulator acc(order);
    const auto N = acc.bound();
    for (std::int64_t i = 0; i + 2 < N; ++i) {
        const std::int64_t j0 = upper ? i + 1 : 0;
        for (std::int64_t j = j0; (upper || j <= i) && i + 2 * j + 2 < N; ++j) {
            const auto base = i + 2 * j + 2;
            for (std::int64_t a = 0; base + a * (2 * i + 1) < N; ++a) {
                for (std::int64_t b = 0;; ++b) {
                    const auto e = base + a * (2 * i + 1) + b * (2 * j + 1);
                    if (e >= N) {
                        break;
                    }
                    acc.add(e, odd(a + b));
                }
            }
        }
    }
    return acc.finish();
}

// The two quadruple sums whose total is Z:
//   sum_{k>=1; m,i,j>=0} (-1)^(m+k+1) q^(3k+m+2mi+2ki+2kj-i-j-1)
// + sum_{m,k>=1; i,j>=0} (-1)^(m+k)   q^(3k+m+2mi+2ki+2kj-i).
inline truncated_series z_quadruple(std::size_t order)
{
    lattice_accumulator acc(order);
    const auto N = acc.bound();
    // Exponent is increasing in every index: coefficients 3+2i+2j, 1+2i,
    // 2m+2k-1, 2k-1 (first sum) and 3+2i+2j, 1+2i, 2m+2k-1, 2k (second).
    for (std::int64_t k = 1;; ++k) {
        const auto low = 3 * k - 1;
        if (low >= N) {
            break;
        }
        for (std::int64_t m = 0; 3 * k + m - 1 < N; ++m) {
            for (std::int64_t i = 0; 3 * k + m + 2 * m * i + 2 * k * i - i - 1 < N; ++i) {
                for (std::int64_t j = 0;; ++j) {
                    const auto e = 3 * k + m + 2 * m * i + 2 * k * i + 2 * k * j - i - j - 1;
                    if (e >= N) {
                        break;
                    }
                    acc.add(e, !odd(m + k));
                }
            }
        }
        for (std::int64_t m = 1; 3 * k + m < N; ++m) {
            for (std::int64_t i = 0; 3 * k + m + 2 * m * i + 2 * k * i - i < N; ++i) {
                for (std::int64_t j = 0;; ++j) {
                    const auto e = 3 * k + m + 2 * m * i + 2 * k * i + 2 * k * j - i;
                    if (e >= N) {
                        break;
                    }
                    acc.add(e, odd(m + k));
                }
            }
        }
    }
    return acc.finish();
}

} // namespace detail

inline truncated_series oracle_expand(series_id id, std::size_t order)
{
    switch (id) {
        case series_id::Y_DEF:
            return detail::y_def(order);
        case series_id::Z:
            return detail::z_quadruple(order);
        case series_id::A:
            return detail::a_def(order);
        case series_id::B:
            return detail::b_family(order, true);
        case series_id::B1:
            return detail::b_family(order, false);
        default:
            break;
    }
    throw unsupported_series("no lattice oracle for series " + std::string(to_string(id)));
}

// Multisets of parts drawn from {d, 2d, 3d, ...}, each part in `colors`
// colors, counted by weight. Plain coin-change dynamic programming.
inline truncated_series oracle_partitions(std::size_t colors, std::size_t part_modulus, std::size_t order)
{
    if (colors < 1 || part_modulus < 1) {
        throw parameter_out_of_range("colors and part_modulus must be >= 1");
    }
    ::qlambert::detail::checked_order(order);
    std::vector<integer> ways(order);
    ways[0] = 1;
    for (std::size_t part = part_modulus; part < order; part += part_modulus) {
        for (std::size_t c = 0; c < colors; ++c) {
            for (std::size_t w = part; w < order; ++w) {
                ways[w] += ways[w - part];
            }
        }
    }
    return truncated_series(std::move(ways));
}

// Coefficient of q^(t n) is sum_{d | n} sigma^d, by trial division.
inline truncated_series oracle_divisor_lambert(int sigma, std::size_t t, std::size_t order)
{
    if (t < 1) {
        throw invalid_exponent("t must be >= 1");
    }
    if (sigma != 1 && sigma != -1) {
        throw parameter_out_of_range("sigma must be +1 or -1");
    }
    ::qlambert::detail::checked_order(order);
    std::vector<integer> v(order);
    for (std::size_t n = 1; t * n < order; ++n) {
        long total = 0;
        for (std::size_t d = 1; d <= n; ++d) {
            if (n % d == 0) {
                total += (sigma < 0 && d % 2 == 1) ? -1 : 1;
            }
        }
        v[t * n] = total;
    }
    return truncated_series(std::move(v));
}

} // namespace qlambert::oracle
