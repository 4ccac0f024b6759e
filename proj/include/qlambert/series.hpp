#pragma once

// Exact arithmetic in Z[[q]] / (q^N): dense power series with arbitrary
// precision integer coefficients, truncated after the q^(N-1) term.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include <qlambert/errors.hpp>

namespace qlambert
{

using integer = mpz_class;

class truncated_series
{
public:
    // Zero series with `order` retained coefficients.
    explicit truncated_series(std::size_t order) : m_coeffs(check_order(order)) {}

    explicit truncated_series(std::vector<integer> coeffs) : m_coeffs(std::move(coeffs))
    {
        check_order(m_coeffs.size());
    }

    // Small literal series, zero-padded up to `order` (or exactly the list
    // length when `order` is 0).
    static truncated_series from_ints(std::initializer_list<long> cs, std::size_t order = 0)
    {
        std::vector<integer> v(std::max(order, cs.size()));
        std::size_t i = 0;
        for (auto c : cs) {
            if (i >= v.size()) {
                break;
            }
            v[i++] = c;
        }
        if (order != 0) {
            v.resize(order);
        }
        return truncated_series(std::move(v));
    }

    static truncated_series one(std::size_t order)
    {
        return monomial(order, 0, integer(1));
    }

    // coeff * q^exponent, or the zero series when exponent >= order.
    static truncated_series monomial(std::size_t order, std::size_t exponent, const integer &coeff)
    {
        std::vector<integer> v(check_order(order));
        if (exponent < order) {
            v[exponent] = coeff;
        }
        return truncated_series(std::move(v));
    }

    std::size_t order() const noexcept
    {
        return m_coeffs.size();
    }

    std::span<const integer> coeffs() const noexcept
    {
        return m_coeffs;
    }

    const integer &operator[](std::size_t n) const
    {
        return m_coeffs[n];
    }

    bool is_zero() const
    {
        return std::all_of(m_coeffs.begin(), m_coeffs.end(), [](const integer &c) { return c == 0; });
    }

    // First m coefficients as a series of order m (m <= order()).
    truncated_series truncate(std::size_t m) const
    {
        if (m > order()) {
            throw order_too_small("cannot truncate a series of order " + std::to_string(order()) + " to order "
                                  + std::to_string(m));
        }
        return truncated_series(std::vector<integer>(m_coeffs.begin(), m_coeffs.begin() + static_cast<std::ptrdiff_t>(m)));
    }

    // Releases the coefficient storage; used by builders that start from an
    // existing series.
    std::vector<integer> take_coeffs() &&
    {
        return std::move(m_coeffs);
    }

    friend bool operator==(const truncated_series &, const truncated_series &) = default;

private:
    static std::size_t check_order(std::size_t order)
    {
        if (order == 0) {
            throw order_too_small("truncation order must be positive");
        }
        return order;
    }

    std::vector<integer> m_coeffs;
};

namespace detail
{

inline std::size_t checked_order(std::size_t order)
{
    if (order == 0) {
        throw order_too_small("truncation order must be positive");
    }
    return order;
}

inline std::vector<integer> low_coeffs(const truncated_series &f, std::size_t n)
{
    return std::vector<integer>(f.coeffs().begin(), f.coeffs().begin() + static_cast<std::ptrdiff_t>(n));
}

// out[0 .. a.size()+b.size()-1) += a * b
inline void schoolbook_full(std::span<const integer> a, std::span<const integer> b, std::span<integer> out)
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) {
            continue;
        }
        const auto ai = a[i].get_mpz_t();
        for (std::size_t j = 0; j < b.size(); ++j) {
            mpz_addmul(out[i + j].get_mpz_t(), ai, b[j].get_mpz_t());
        }
    }
}

inline constexpr std::size_t karatsuba_threshold = 32;

// out[0 .. 2n-1) += a * b, where a.size() == b.size() == n.
inline void karatsuba_full(std::span<const integer> a, std::span<const integer> b, std::span<integer> out)
{
    const auto n = a.size();
    if (n <= karatsuba_threshold) {
        schoolbook_full(a, b, out);
        return;
    }
    const auto m = n / 2;
    const auto h = n - m;
    const auto a0 = a.first(m), a1 = a.subspan(m);
    const auto b0 = b.first(m), b1 = b.subspan(m);

    std::vector<integer> z0(2 * m - 1), z2(2 * h - 1), z1(2 * h - 1);
    karatsuba_full(a0, b0, z0);
    karatsuba_full(a1, b1, z2);

    std::vector<integer> sa(a1.begin(), a1.end()), sb(b1.begin(), b1.end());
    for (std::size_t i = 0; i < m; ++i) {
        sa[i] += a0[i];
        sb[i] += b0[i];
    }
    karatsuba_full(sa, sb, z1);
    for (std::size_t i = 0; i < z0.size(); ++i) {
        z1[i] -= z0[i];
    }
    for (std::size_t i = 0; i < z2.size(); ++i) {
        z1[i] -= z2[i];
    }

    for (std::size_t i = 0; i < z0.size(); ++i) {
        out[i] += z0[i];
    }
    for (std::size_t i = 0; i < z1.size(); ++i) {
        out[i + m] += z1[i];
    }
    for (std::size_t i = 0; i < z2.size(); ++i) {
        out[i + 2 * m] += z2[i];
    }
}

} // namespace detail

enum class mul_algorithm { schoolbook, karatsuba };

// c1*f + c2*g, truncated to the smaller order.
inline truncated_series linear_combine(const integer &c1, const truncated_series &f, const integer &c2,
                                       const truncated_series &g)
{
    const auto n = std::min(f.order(), g.order());
    std::vector<integer> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = c1 * f[i] + c2 * g[i];
    }
    return truncated_series(std::move(out));
}

inline truncated_series mul(const truncated_series &f, const truncated_series &g,
                            mul_algorithm algo = mul_algorithm::schoolbook)
{
    const auto n = std::min(f.order(), g.order());
    std::vector<integer> out(n);
    if (algo == mul_algorithm::karatsuba) {
        std::vector<integer> full(2 * n - 1);
        detail::karatsuba_full(f.coeffs().first(n), g.coeffs().first(n), full);
        std::move(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(n), out.begin());
        return truncated_series(std::move(out));
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(f[i]) == 0) {
            continue;
        }
        const auto fi = f[i].get_mpz_t();
        for (std::size_t j = 0; i + j < n; ++j) {
            mpz_addmul(out[i + j].get_mpz_t(), fi, g[j].get_mpz_t());
        }
    }
    return truncated_series(std::move(out));
}

// Multiplicative inverse; the constant term must be +1 or -1.
inline truncated_series invert(const truncated_series &f)
{
    const auto &f0 = f[0];
    if (f0 != 1 && f0 != -1) {
        throw not_a_unit("constant coefficient " + f0.get_str() + " is not a unit in Z");
    }
    const auto n = f.order();
    std::vector<integer> g(n);
    g[0] = f0;
    integer acc;
    for (std::size_t k = 1; k < n; ++k) {
        acc = 0;
        for (std::size_t i = 1; i <= k; ++i) {
            if (sgn(f[i]) != 0) {
                mpz_addmul(acc.get_mpz_t(), f[i].get_mpz_t(), g[k - i].get_mpz_t());
            }
        }
        // f0^-1 == f0 for a unit.
        g[k] = -f0 * acc;
    }
    return truncated_series(std::move(g));
}

// q -> -q
inline truncated_series compose_sign(const truncated_series &f)
{
    auto v = detail::low_coeffs(f, f.order());
    for (std::size_t i = 1; i < v.size(); i += 2) {
        v[i] = -v[i];
    }
    return truncated_series(std::move(v));
}

// q -> q^t
inline truncated_series compose_power(const truncated_series &f, std::size_t t)
{
    if (t < 1) {
        throw invalid_exponent("compose_power requires t >= 1");
    }
    std::vector<integer> v(f.order());
    for (std::size_t i = 0; i * t < v.size(); ++i) {
        v[i * t] = f[i];
    }
    return truncated_series(std::move(v));
}

// q^k * f
inline truncated_series shift(const truncated_series &f, std::size_t k)
{
    std::vector<integer> v(f.order());
    for (std::size_t i = k; i < v.size(); ++i) {
        v[i] = f[i - k];
    }
    return truncated_series(std::move(v));
}

// f * (1 + s q^b + q^(2b) + ...) = f / (1 - s q^b), for s = +1 or -1 and b >= 1.
inline truncated_series mul_geometric(const truncated_series &f, int s, std::size_t b)
{
    if (b < 1) {
        throw invalid_exponent("geometric ratio exponent must be >= 1");
    }
    auto v = detail::low_coeffs(f, f.order());
    for (std::size_t i = b; i < v.size(); ++i) {
        if (s > 0) {
            v[i] += v[i - b];
        } else {
            v[i] -= v[i - b];
        }
    }
    return truncated_series(std::move(v));
}

inline truncated_series operator+(const truncated_series &f, const truncated_series &g)
{
    return linear_combine(1, f, 1, g);
}

inline truncated_series operator-(const truncated_series &f, const truncated_series &g)
{
    return linear_combine(1, f, -1, g);
}

inline truncated_series operator-(const truncated_series &f)
{
    return linear_combine(-1, f, 0, f);
}

inline truncated_series operator*(const truncated_series &f, const truncated_series &g)
{
    return mul(f, g);
}

struct mismatch {
    std::size_t index;
    integer lhs;
    integer rhs;

    friend bool operator==(const mismatch &, const mismatch &) = default;
};

struct comparison {
    // Empty when the series agree through q^(checked - 1).
    std::optional<mismatch> first_mismatch;
    std::size_t checked = 0;

    bool equal() const noexcept
    {
        return !first_mismatch;
    }
};

inline comparison compare(const truncated_series &f, const truncated_series &g, std::size_t m)
{
    if (m > f.order() || m > g.order()) {
        throw order_too_small("comparison through order " + std::to_string(m) + " exceeds operand orders "
                              + std::to_string(f.order()) + " and " + std::to_string(g.order()));
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (f[i] != g[i]) {
            return {mismatch{i, f[i], g[i]}, m};
        }
    }
    return {std::nullopt, m};
}

inline comparison compare(const truncated_series &f, const truncated_series &g)
{
    return compare(f, g, std::min(f.order(), g.order()));
}

enum class parity_kind { odd, even, odd_and_even, neither };

struct parity_verdict {
    parity_kind kind;
    std::optional<std::size_t> first_nonzero_even;
    std::optional<std::size_t> first_nonzero_odd;

    // For `neither`: the smallest index that breaks both parities' patterns.
    std::optional<std::size_t> first_violation() const
    {
        if (kind != parity_kind::neither) {
            return std::nullopt;
        }
        return std::min(*first_nonzero_even, *first_nonzero_odd);
    }
};

inline parity_verdict parity_of(const truncated_series &f)
{
    parity_verdict v{parity_kind::neither, std::nullopt, std::nullopt};
    for (std::size_t i = 0; i < f.order(); ++i) {
        if (sgn(f[i]) == 0) {
            continue;
        }
        auto &slot = (i % 2 == 0) ? v.first_nonzero_even : v.first_nonzero_odd;
        if (!slot) {
            slot = i;
        }
        if (v.first_nonzero_even && v.first_nonzero_odd) {
            break;
        }
    }
    if (!v.first_nonzero_even && !v.first_nonzero_odd) {
        v.kind = parity_kind::odd_and_even;
    } else if (!v.first_nonzero_even) {
        v.kind = parity_kind::odd;
    } else if (!v.first_nonzero_odd) {
        v.kind = parity_kind::even;
    }
    return v;
}

inline const char *to_string(parity_kind k)
{
    switch (k) {
        case parity_kind::odd:
            return "ODD";
        case parity_kind::even:
            return "EVEN";
        case parity_kind::odd_and_even:
            return "ODD_AND_EVEN";
        case parity_kind::neither:
            return "NEITHER";
    }
    return "?";
}

// Human-readable form, e.g. "1 + 2*q^2 - q^3 + O(q^4)".
inline std::ostream &operator<<(std::ostream &os, const truncated_series &f)
{
    bool first = true;
    for (std::size_t i = 0; i < f.order(); ++i) {
        const auto &c = f[i];
        if (sgn(c) == 0) {
            continue;
        }
        integer mag = abs(c);
        if (first) {
            os << (sgn(c) < 0 ? "-" : "");
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) {
            os << mag << '*';
        }
        os << 'q';
        if (i > 1) {
            os << '^' << i;
        }
    }
    if (first) {
        os << '0';
    }
    return os << " + O(q^" << f.order() << ')';
}

} // namespace qlambert
