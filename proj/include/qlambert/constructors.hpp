#pragma once

// Builders for Lambert sums, q-Pochhammer products, the bilateral sum and
// its product side, and every named series of the double Lambert series
// parity proof. Every sum is expanded exactly: an index range is enumerated
// until the minimal exponent of its terms reaches the truncation order.

#include <array>
#include <cstddef>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <qlambert/errors.hpp>
#include <qlambert/series.hpp>
#include <qlambert/series_id.hpp>

namespace qlambert
{

// sign * q^exponent, sign in {+1, -1}.
class signed_monomial
{
public:
    signed_monomial(int sign, std::size_t exponent) : m_sign(sign), m_exponent(exponent)
    {
        if (sign != 1 && sign != -1) {
            throw parameter_out_of_range("monomial sign must be +1 or -1, got " + std::to_string(sign));
        }
    }

    static signed_monomial plus(std::size_t exponent)
    {
        return {1, exponent};
    }
    static signed_monomial minus(std::size_t exponent)
    {
        return {-1, exponent};
    }

    int sign() const noexcept
    {
        return m_sign;
    }
    std::size_t exponent() const noexcept
    {
        return m_exponent;
    }

    friend bool operator==(const signed_monomial &, const signed_monomial &) = default;

private:
    int m_sign;
    std::size_t m_exponent;
};

inline std::string to_string(const signed_monomial &x)
{
    std::string s = x.sign() < 0 ? "-" : "+";
    if (x.exponent() == 0) {
        return s + "1";
    }
    s += "q";
    if (x.exponent() > 1) {
        s += "^" + std::to_string(x.exponent());
    }
    return s;
}

// c * sum_{k>=1} sigma^k q^(a0 + a1 k) / (1 - tau q^(b0 + b1 k))
struct lambert_spec {
    integer c = 1;
    int sigma = 1;
    long a0 = 0;
    long a1 = 1;
    int tau = 1;
    long b0 = 0;
    long b1 = 1;
};

inline void validate(const lambert_spec &s)
{
    if ((s.sigma != 1 && s.sigma != -1) || (s.tau != 1 && s.tau != -1)) {
        throw divergent_spec("Lambert signs must be +1 or -1");
    }
    if (s.a1 < 1 || s.a0 + s.a1 < 1) {
        throw divergent_spec("numerator exponent a0 + a1 k must start >= 1 and strictly increase");
    }
    if (s.b1 < 0 || s.b0 + s.b1 < 1) {
        throw divergent_spec("denominator exponent b0 + b1 k must be >= 1 for every k >= 1");
    }
}

// sigma^n q^(a0 + a1 n) / (1 - tau q^(b0 + b1 n)) for n in Z.
struct bilateral_spec {
    int sigma = 1;
    long a0 = 0;
    long a1 = 1;
    int tau = 1;
    long b0 = 0;
    long b1 = 1;
};

namespace detail
{

inline int sign_pow(int s, long n)
{
    return (s < 0 && (std::labs(n) % 2 == 1)) ? -1 : 1;
}

// v += c * q^a / (1 - s q^b), truncated at v.size().
inline void add_geometric(std::vector<integer> &v, const integer &c, long a, long b, int s)
{
    if (b < 1) {
        throw invalid_exponent("geometric ratio exponent must be >= 1, got " + std::to_string(b));
    }
    if (a < 0) {
        throw invalid_exponent("negative power q^" + std::to_string(a) + " is not representable");
    }
    const auto n = static_cast<long>(v.size());
    bool neg = false;
    for (long e = a; e < n; e += b) {
        if (neg) {
            v[static_cast<std::size_t>(e)] -= c;
        } else {
            v[static_cast<std::size_t>(e)] += c;
        }
        if (s < 0) {
            neg = !neg;
        }
    }
}

// v /= (1 - s q^b) in place.
inline void geometric_inplace(std::vector<integer> &v, int s, std::size_t b)
{
    for (std::size_t i = b; i < v.size(); ++i) {
        if (s > 0) {
            v[i] += v[i - b];
        } else {
            v[i] -= v[i - b];
        }
    }
}

// acc += sign * q^k * f
inline void add_shifted(std::vector<integer> &acc, const std::vector<integer> &f, std::size_t k, int sign = 1)
{
    for (std::size_t i = k; i < acc.size(); ++i) {
        if (sign > 0) {
            acc[i] += f[i - k];
        } else {
            acc[i] -= f[i - k];
        }
    }
}

inline void add_lambert_sum(std::vector<integer> &v, const lambert_spec &s)
{
    validate(s);
    const auto n = static_cast<long>(v.size());
    const integer neg_c = -s.c;
    for (long k = 1; s.a0 + s.a1 * k < n; ++k) {
        add_geometric(v, sign_pow(s.sigma, k) > 0 ? s.c : neg_c, s.a0 + s.a1 * k, s.b0 + s.b1 * k, s.tau);
    }
}

inline void add_bilateral_term(std::vector<integer> &v, const bilateral_spec &s, long n)
{
    const long num = s.a0 + s.a1 * n;
    const long den = s.b0 + s.b1 * n;
    const int sign = sign_pow(s.sigma, n);
    if (den > 0) {
        add_geometric(v, integer(sign), num, den, s.tau);
    } else if (den < 0) {
        // 1/(1 - tau q^-e) = -tau q^e / (1 - tau q^e)
        add_geometric(v, integer(-sign * s.tau), num - den, -den, s.tau);
    } else {
        throw divergent_spec("bilateral term " + std::to_string(n) + " has denominator exponent 0");
    }
}

} // namespace detail

// q^a / (1 - s q^b)
inline truncated_series lambert_term(long a, long b, int s, std::size_t order)
{
    if (b < 1) {
        throw invalid_exponent("lambert_term requires b >= 1, got " + std::to_string(b));
    }
    std::vector<integer> v(detail::checked_order(order));
    detail::add_geometric(v, integer(1), a, b, s);
    return truncated_series(std::move(v));
}

inline truncated_series lambert_sum(const lambert_spec &spec, std::size_t order)
{
    std::vector<integer> v(detail::checked_order(order));
    detail::add_lambert_sum(v, spec);
    return truncated_series(std::move(v));
}

// (arg; q^step)_inf = prod_{n>=0} (1 - arg q^(n step)), truncated.
inline truncated_series pochhammer(const signed_monomial &arg, std::size_t step, std::size_t order)
{
    if (step < 1) {
        throw invalid_exponent("Pochhammer step must be >= 1");
    }
    if (arg.sign() > 0 && arg.exponent() == 0) {
        throw zero_factor("(1; q)_inf has the factor 1 - 1 = 0");
    }
    std::vector<integer> v(detail::checked_order(order));
    v[0] = 1;
    const int s = arg.sign();
    for (std::size_t e = arg.exponent(); e < v.size(); e += step) {
        if (e == 0) {
            // 1 - (-1) q^0 = 2
            for (auto &c : v) {
                c *= 2;
            }
            continue;
        }
        for (std::size_t i = v.size() - 1; i >= e; --i) {
            if (s > 0) {
                v[i] -= v[i - e];
            } else {
                v[i] += v[i - e];
            }
        }
    }
    return truncated_series(std::move(v));
}

// (q^4; q^4)^4 / (q^2; q^2)^2
inline truncated_series phi(std::size_t order)
{
    const auto p4 = pochhammer(signed_monomial::plus(4), 4, order);
    const auto p2 = pochhammer(signed_monomial::plus(2), 2, order);
    const auto p4sq = mul(p4, p4);
    return mul(mul(p4sq, p4sq), invert(mul(p2, p2)));
}

// Specs of the single Lambert sums.
inline lambert_spec l1_spec()
{
    return {1, -1, 0, 1, 1, 0, 1};
}
inline lambert_spec l2_spec()
{
    return {1, -1, 0, 1, 1, 0, 2};
}
inline lambert_spec l3_spec()
{
    return {-1, -1, 0, 2, 1, 0, 2};
}
inline lambert_spec s_spec()
{
    return {1, -1, 0, 1, 1, -1, 2};
}

namespace detail
{

// sum_{m,n>=1} (-1)^m q^(2mn+m) / ((1+q^n)(1-q^(2m-1)))
inline truncated_series build_y_def(std::size_t order)
{
    const auto n = static_cast<long>(order);
    std::vector<integer> acc(order), inner(order);
    for (long m = 1; 3 * m < n; ++m) {
        std::fill(inner.begin(), inner.end(), 0);
        add_lambert_sum(inner, {sign_pow(-1, m), 1, m, 2 * m, -1, 0, 1});
        geometric_inplace(inner, 1, static_cast<std::size_t>(2 * m - 1));
        add_shifted(acc, inner, 0);
    }
    return truncated_series(std::move(acc));
}

// -sum_{k>=2} q^k/(1+q^(2k-1)) sum_{n=1}^{k-1} q^n/(1+q^n)
inline truncated_series build_y_eq2(std::size_t order)
{
    const auto n = static_cast<long>(order);
    std::vector<integer> acc(order), partial(order), tmp(order);
    for (long k = 2; k + 1 < n; ++k) {
        add_geometric(partial, integer(1), k - 1, k - 1, -1);
        std::fill(tmp.begin(), tmp.end(), 0);
        add_shifted(tmp, partial, static_cast<std::size_t>(k));
        geometric_inplace(tmp, -1, static_cast<std::size_t>(2 * k - 1));
        add_shifted(acc, tmp, 0, -1);
    }
    return truncated_series(std::move(acc));
}

// sum_{m>=1,k>=0} (-1)^(m+k) q^(3m+k) / ((1-q^(2m-1))(1-q^(2m+k)))
inline truncated_series build_y_eq1(std::size_t order)
{
    const auto n = static_cast<long>(order);
    std::vector<integer> acc(order), inner(order);
    for (long m = 1; 3 * m < n; ++m) {
        std::fill(inner.begin(), inner.end(), 0);
        // k' = k + 1 >= 1
        add_lambert_sum(inner, {sign_pow(-1, m - 1), -1, 3 * m - 1, 1, 1, 2 * m - 1, 1});
        geometric_inplace(inner, 1, static_cast<std::size_t>(2 * m - 1));
        add_shifted(acc, inner, 0);
    }
    return truncated_series(std::move(acc));
}

// sum_{m>=1} (-1)^m q^m/(1-q^(2m-1)) sum_{k=1}^{2m-1} (-1)^k q^k/(1-q^k)
inline truncated_series build_z(std::size_t order)
{
    const auto n = static_cast<long>(order);
    std::vector<integer> acc(order), partial(order), tmp(order);
    long next_k = 1;
    for (long m = 1; m + 1 < n; ++m) {
        for (; next_k <= 2 * m - 1; ++next_k) {
            add_geometric(partial, integer(sign_pow(-1, next_k)), next_k, next_k, 1);
        }
        std::fill(tmp.begin(), tmp.end(), 0);
        add_shifted(tmp, partial, static_cast<std::size_t>(m), sign_pow(-1, m));
        geometric_inplace(tmp, 1, static_cast<std::size_t>(2 * m - 1));
        add_shifted(acc, tmp, 0);
    }
    return truncated_series(std::move(acc));
}

// sum_{i>=0} sum_{j>i} q^(j+1) / ((1+q^(2i+1))(1+q^(2j+1)))
inline truncated_series build_a(std::size_t order)
{
    const auto n = static_cast<long>(order);
    std::vector<integer> acc(order), tail(order), tmp(order);
    for (long i = n - 1; i >= 0; --i) {
        // tail = sum_{j>i} q^(j+1)/(1+q^(2j+1))
        add_geometric(tail, integer(1), i + 2, 2 * i + 3, -1);
        if (i + 2 >= n) {
            continue;
        }
        tmp = tail;
        geometric_inplace(tmp, -1, static_cast<std::size_t>(2 * i + 1));
        add_shifted(acc, tmp, 0);
    }
    return truncated_series(std::move(acc));
}

// sum_{i>=0} sum_{j>i} q^(i+2j+2) / ((1+q^(2i+1))(1+q^(2j+1)))
inline truncated_series build_b(std::size_t order)
{
    const auto n = static_cast<long>(order);
    std::vector<integer> acc(order), tail(order), tmp(order);
    for (long i = n - 1; i >= 0; --i) {
        // tail = sum_{j>i} q^(2j+2)/(1+q^(2j+1))
        add_geometric(tail, integer(1), 2 * i + 4, 2 * i + 3, -1);
        if (3 * i + 4 >= n) {
            continue;
        }
        std::fill(tmp.begin(), tmp.end(), 0);
        add_shifted(tmp, tail, static_cast<std::size_t>(i));
        geometric_inplace(tmp, -1, static_cast<std::size_t>(2 * i + 1));
        add_shifted(acc, tmp, 0);
    }
    return truncated_series(std::move(acc));
}

// sum_{i>=0} sum_{j=0}^{i} q^(i+2j+2) / ((1+q^(2i+1))(1+q^(2j+1)))
inline truncated_series build_b1(std::size_t order)
{
    const auto n = static_cast<long>(order);
    std::vector<integer> acc(order), head(order), tmp(order);
    for (long i = 0; i + 2 < n; ++i) {
        add_geometric(head, integer(1), 2 * i + 2, 2 * i + 1, -1);
        std::fill(tmp.begin(), tmp.end(), 0);
        add_shifted(tmp, head, static_cast<std::size_t>(i));
        geometric_inplace(tmp, -1, static_cast<std::size_t>(2 * i + 1));
        add_shifted(acc, tmp, 0);
    }
    return truncated_series(std::move(acc));
}

} // namespace detail

// The outer factor of D1 and D2 (also the summand of the halving step):
// sum_{m>=1} (-1)^m q^m / (1 - q^(2m-1)).
inline truncated_series s_series(std::size_t order)
{
    return lambert_sum(s_spec(), order);
}

inline truncated_series named_series(series_id id, std::size_t order)
{
    switch (id) {
        case series_id::Y_DEF:
            return detail::build_y_def(order);
        case series_id::Y_EQ1:
            return detail::build_y_eq1(order);
        case series_id::Y_EQ2:
            return detail::build_y_eq2(order);
        case series_id::Z:
            return detail::build_z(order);
        case series_id::A:
            return detail::build_a(order);
        case series_id::B:
            return detail::build_b(order);
        case series_id::B1:
            return detail::build_b1(order);
        case series_id::D1:
            return mul(s_series(order), lambert_sum(l1_spec(), order));
        case series_id::D2:
            return mul(s_series(order), lambert_sum(l2_spec(), order));
        case series_id::S:
            return s_series(order);
        case series_id::L1:
            return lambert_sum(l1_spec(), order);
        case series_id::L2:
            return lambert_sum(l2_spec(), order);
        case series_id::L3:
            return lambert_sum(l3_spec(), order);
        case series_id::PHI:
            return phi(order);
    }
    throw unsupported_series("unknown series id");
}

// D2 through its middle display:
// sum_{i>=0} q^i/(1+q^(2i+1)) * sum_{j>=0} q^(2j+2)/(1+q^(2j+1)).
inline truncated_series d2_middle_form(std::size_t order)
{
    const auto n = static_cast<long>(order);
    std::vector<integer> left(detail::checked_order(order)), right(order);
    for (long i = 0; i < n; ++i) {
        detail::add_geometric(left, integer(1), i, 2 * i + 1, -1);
    }
    for (long j = 0; 2 * j + 2 < n; ++j) {
        detail::add_geometric(right, integer(1), 2 * j + 2, 2 * j + 1, -1);
    }
    return mul(truncated_series(std::move(left)), truncated_series(std::move(right)));
}

// The conjectured odd series exactly as its defining display is typeset,
// sum_{m,n>=1} (-q)^(2mn+m) / ((1+q^m)(1-q^(2m-1))). Its n-sum is geometric,
// it is not odd, and it disagrees with Y_DEF from q^6 on; kept for
// diagnostics only.
inline truncated_series conjecture_display_as_printed(std::size_t order)
{
    const auto n = static_cast<long>(order);
    std::vector<integer> acc(detail::checked_order(order)), inner(order);
    for (long m = 1; 3 * m < n; ++m) {
        std::fill(inner.begin(), inner.end(), 0);
        for (long k = 1; 2 * m * k + m < n; ++k) {
            inner[static_cast<std::size_t>(2 * m * k + m)] += detail::sign_pow(-1, m);
        }
        detail::geometric_inplace(inner, -1, static_cast<std::size_t>(m));
        detail::geometric_inplace(inner, 1, static_cast<std::size_t>(2 * m - 1));
        detail::add_shifted(acc, inner, 0);
    }
    return truncated_series(std::move(acc));
}

// Sum of bilateral terms with index in [lo, hi]. Negative denominator
// exponents are rewritten as 1/(1 - t q^-e) = -t q^e/(1 - t q^e).
inline truncated_series bilateral_partial_sum(const bilateral_spec &spec, long lo, long hi, std::size_t order)
{
    std::vector<integer> v(detail::checked_order(order));
    for (long n = lo; n <= hi; ++n) {
        detail::add_bilateral_term(v, spec, n);
    }
    return truncated_series(std::move(v));
}

// The summand (-1)^m q^m / (1 - q^(2m-1)) over m in Z.
inline bilateral_spec s_bilateral_spec()
{
    return {-1, 0, 1, 1, -1, 2};
}

// sum_{n in Z} x^n / (1 - y Q^n), Q = q^base.
inline truncated_series bilateral_sum(const signed_monomial &x, const signed_monomial &y, std::size_t base,
                                      std::size_t order)
{
    if (base < 2 || x.exponent() < 1 || x.exponent() > base - 1 || y.exponent() < 1 || y.exponent() > base - 1) {
        throw parameter_out_of_range("bilateral sum needs 1 <= exponent(x), exponent(y) <= base - 1");
    }
    const auto xe = static_cast<long>(x.exponent());
    const auto ye = static_cast<long>(y.exponent());
    const auto bq = static_cast<long>(base);
    const auto n = static_cast<long>(order);
    const bilateral_spec spec{x.sign(), 0, xe, y.sign(), ye, bq};

    std::vector<integer> v(detail::checked_order(order));
    for (long k = 0; xe * k < n; ++k) {
        detail::add_bilateral_term(v, spec, k);
    }
    // Minimal degree of term -k is (base - xe) k - ye, increasing in k.
    for (long k = 1; (bq - xe) * k - ye < n; ++k) {
        detail::add_bilateral_term(v, spec, -k);
    }
    return truncated_series(std::move(v));
}

// (Q, Q, xy, Q/xy; Q)_inf / (x, Q/x, y, Q/y; Q)_inf, Q = q^base.
inline truncated_series entry29_rhs(const signed_monomial &x, const signed_monomial &y, std::size_t base,
                                    std::size_t order)
{
    if (base < 2 || x.exponent() < 1 || x.exponent() > base - 1 || y.exponent() < 1 || y.exponent() > base - 1) {
        throw parameter_out_of_range("product side needs 1 <= exponent(x), exponent(y) <= base - 1");
    }
    const auto exy = x.exponent() + y.exponent();
    if (exy > base) {
        throw parameter_out_of_range("product side needs exponent(x) + exponent(y) <= base");
    }
    const int sxy = x.sign() * y.sign();
    const signed_monomial xy(sxy, exy);
    // Q/xy has sign 1/(sx sy) = sx sy.
    const signed_monomial q_over_xy(sxy, base - exy);
    if (q_over_xy.sign() > 0 && q_over_xy.exponent() == 0) {
        throw zero_factor("(Q/xy; Q)_inf contains 1 - q^0");
    }

    const auto qq = pochhammer(signed_monomial::plus(base), base, order);
    auto num = mul(mul(qq, qq), mul(pochhammer(xy, base, order), pochhammer(q_over_xy, base, order)));

    const std::array dens = {x, signed_monomial(x.sign(), base - x.exponent()), y,
                             signed_monomial(y.sign(), base - y.exponent())};
    for (const auto &d : dens) {
        num = mul(num, invert(pochhammer(d, base, order)));
    }
    return num;
}

} // namespace qlambert
