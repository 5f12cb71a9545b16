#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <bernmom/rational.hpp>

namespace bernmom
{

// Formal power series in t truncated at a fixed order N: coefficients of
// t^0..t^N are known, everything above is unknown (not zero).
//
// The coefficient ring C needs +, -, *, multiplication by a Rational, a
// constructor from Rational and an is_zero() overload. Rational, UniPoly and
// MultiPoly all qualify, so the same exp/log code builds the numeric series,
// the Q[w]-valued Q(t,w) and the symbolic series of the Chern construction.
template <typename C>
class Series
{
public:
    using coefficient_type = C;

    // Zero series of the given order.
    explicit Series(int order = 0) : m_coeffs(check_order(order) + 1, C(Rational(0))) {}

    explicit Series(std::vector<C> coeffs) : m_coeffs(std::move(coeffs))
    {
        if (m_coeffs.empty()) {
            throw std::invalid_argument("series needs at least one coefficient");
        }
    }

    static Series constant(const C &c, int order)
    {
        Series s(order);
        s.m_coeffs[0] = c;
        return s;
    }

    static Series one(int order)
    {
        return constant(C(Rational(1)), order);
    }

    // The series t (zero when order is 0).
    static Series variable(int order)
    {
        Series s(order);
        if (order >= 1) {
            s.m_coeffs[1] = C(Rational(1));
        }
        return s;
    }

    int order() const
    {
        return static_cast<int>(m_coeffs.size()) - 1;
    }

    const C &operator[](int k) const
    {
        return m_coeffs.at(static_cast<std::size_t>(k));
    }

    C &operator[](int k)
    {
        return m_coeffs.at(static_cast<std::size_t>(k));
    }

    const std::vector<C> &coeffs() const
    {
        return m_coeffs;
    }

    Series truncated(int order) const
    {
        if (order > this->order()) {
            throw std::invalid_argument("cannot extend a truncated series");
        }
        return Series(std::vector<C>(m_coeffs.begin(), m_coeffs.begin() + order + 1));
    }

    friend Series operator+(const Series &a, const Series &b)
    {
        require_same_order(a, b);
        Series r(a);
        for (int k = 0; k <= a.order(); ++k) {
            r.m_coeffs[k] = C(r.m_coeffs[k] + b.m_coeffs[k]);
        }
        return r;
    }

    friend Series operator-(const Series &a, const Series &b)
    {
        require_same_order(a, b);
        Series r(a);
        for (int k = 0; k <= a.order(); ++k) {
            r.m_coeffs[k] = C(r.m_coeffs[k] - b.m_coeffs[k]);
        }
        return r;
    }

    friend Series operator-(const Series &a)
    {
        return a * Rational(-1);
    }

    // Cauchy product truncated at the common order.
    friend Series operator*(const Series &a, const Series &b)
    {
        require_same_order(a, b);
        const int n = a.order();
        Series r(n);
        for (int i = 0; i <= n; ++i) {
            if (is_zero(a.m_coeffs[i])) {
                continue;
            }
            for (int j = 0; i + j <= n; ++j) {
                if (is_zero(b.m_coeffs[j])) {
                    continue;
                }
                r.m_coeffs[i + j] = C(r.m_coeffs[i + j] + C(a.m_coeffs[i] * b.m_coeffs[j]));
            }
        }
        return r;
    }

    friend Series operator*(const Series &a, const Rational &q)
    {
        Series r(a);
        for (auto &c : r.m_coeffs) {
            c = C(c * q);
        }
        return r;
    }

    friend Series operator*(const Rational &q, const Series &a)
    {
        return a * q;
    }

    // Multiply every coefficient by a ring element.
    friend Series scale(const Series &a, const C &c)
    {
        Series r(a);
        for (auto &x : r.m_coeffs) {
            x = C(x * c);
        }
        return r;
    }

    friend bool operator==(const Series &a, const Series &b)
    {
        if (a.order() != b.order()) {
            return false;
        }
        for (int k = 0; k <= a.order(); ++k) {
            if (!is_zero(C(a.m_coeffs[k] - b.m_coeffs[k]))) {
                return false;
            }
        }
        return true;
    }

private:
    static int check_order(int order)
    {
        if (order < 0) {
            throw std::invalid_argument("series order must be nonnegative");
        }
        return order;
    }

    static void require_same_order(const Series &a, const Series &b)
    {
        if (a.order() != b.order()) {
            throw std::invalid_argument("series order mismatch: " + std::to_string(a.order()) + " vs "
                                        + std::to_string(b.order()));
        }
    }

    std::vector<C> m_coeffs;
};

// exp(s) for s with zero constant term, via (exp s)' = s' exp s:
//   e_k = (1/k) sum_{j=1..k} j s_j e_{k-j}.
template <typename C>
Series<C> exp(const Series<C> &s)
{
    if (!is_zero(s[0])) {
        throw std::domain_error("series exp needs a zero constant term");
    }
    const int n = s.order();
    Series<C> e(n);
    e[0] = C(Rational(1));
    for (int k = 1; k <= n; ++k) {
        C acc(Rational(0));
        for (int j = 1; j <= k; ++j) {
            if (is_zero(s[j])) {
                continue;
            }
            acc = C(acc + C(C(s[j] * e[k - j]) * Rational(j)));
        }
        e[k] = C(acc * frac(1, k));
    }
    return e;
}

// log(s) for s with constant term 1, from s' = s * (log s)':
//   l_k = s_k - (1/k) sum_{j=1..k-1} j l_j s_{k-j}.
template <typename C>
Series<C> log(const Series<C> &s)
{
    if (!is_zero(C(s[0] - C(Rational(1))))) {
        throw std::domain_error("series log needs constant term 1");
    }
    const int n = s.order();
    Series<C> l(n);
    for (int k = 1; k <= n; ++k) {
        C acc(Rational(0));
        for (int j = 1; j < k; ++j) {
            if (is_zero(l[j]) || is_zero(s[k - j])) {
                continue;
            }
            acc = C(acc + C(C(l[j] * s[k - j]) * Rational(j)));
        }
        l[k] = C(s[k] - C(acc * frac(1, k)));
    }
    return l;
}

// s(lambda * t).
template <typename C>
Series<C> scale_arg(const Series<C> &s, const Rational &lambda)
{
    Series<C> r(s);
    Rational p(1);
    for (int k = 0; k <= s.order(); ++k) {
        r[k] = C(s[k] * p);
        p *= lambda;
    }
    return r;
}

using TruncatedSeries = Series<Rational>;

// Truncation of e^{a t}: coefficient k is a^k / k!.
TruncatedSeries exp_linear(const Rational &a, int order);

// k! * coeff[k], the factorial-normalized coefficient (the V_{2k}, Gamma_{2k}
// numbers are read this way).
Rational moment(const TruncatedSeries &s, int k);

// Inverse of moment(): builds the series whose k-th moment is values[k].
TruncatedSeries from_moments(const std::vector<Rational> &values);

} // namespace bernmom
