#include <bernmom/chern.hpp>

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

#include <bernmom/bernoulli.hpp>
#include <bernmom/bernoulli_poly.hpp>
#include <bernmom/series.hpp>

namespace bernmom
{

namespace
{

SymPoly y(int i)
{
    return SymPoly::variable(static_cast<std::size_t>(i));
}

// Series product keeping only y-degree <= m.
Series<SymPoly> mul_truncated(const Series<SymPoly> &a, const Series<SymPoly> &b, const std::vector<long> &w,
                              long m)
{
    const int n = a.order();
    Series<SymPoly> r(n);
    for (int i = 0; i <= n; ++i) {
        if (a[i].is_zero()) {
            continue;
        }
        for (int j = 0; i + j <= n; ++j) {
            if (!b[j].is_zero()) {
                r[i + j] += (a[i] * b[j]).weighted_truncate(w, m);
            }
        }
    }
    return r;
}

// exp(s) for s without constant term, y-degree truncated at m after every
// product (same recurrence as the generic series exp).
Series<SymPoly> exp_truncated(const Series<SymPoly> &s, const std::vector<long> &w, long m)
{
    const int n = s.order();
    Series<SymPoly> e(n);
    e[0] = SymPoly(Rational(1));
    for (int k = 1; k <= n; ++k) {
        SymPoly acc;
        for (int j = 1; j <= k; ++j) {
            if (!s[j].is_zero() && !e[k - j].is_zero()) {
                acc += (s[j] * e[k - j]).weighted_truncate(w, m) * Rational(j);
            }
        }
        e[k] = acc * frac(1, k);
    }
    return e;
}

// sum_{k'} (-B_{2k'} / (2k' (2k')!)) sum_j t^j a_{k',2k'-j}, y-degree <= m.
Series<SymPoly> b_exponent(int order, int m)
{
    Series<SymPoly> e(order);
    for (int j = 1; j <= order; ++j) {
        // a_{k',2k'-j} needs 2k'-1 >= j and has y-degree 2k'-j <= m.
        for (int kk = (j + 2) / 2; 2 * kk - j <= m; ++kk) {
            const Rational c = -bernoulli_number(2 * kk) / (2 * kk) / Rational(factorial(2 * kk));
            e[j] += a_sym(kk, j, m) * c;
        }
    }
    return e;
}

// A_j(0, -nu)/j! as polynomials in nu (variable 0).
Series<SymPoly> theta_factor(int order)
{
    Series<SymPoly> s(order);
    for (int j = 0; j <= order; ++j) {
        const UniPoly a = a_poly(j).substitute(var_x, Rational(0)).to_univariate(var_nu);
        SymPoly p;
        for (int d = 0; d <= a.degree(); ++d) {
            const Rational sign = d % 2 == 0 ? 1 : -1;
            p += SymPoly::monomial(a.coeff(d) * sign, {static_cast<std::uint32_t>(d)});
        }
        s[j] = p * frac(1, factorial(j));
    }
    return s;
}

struct SeriesCache
{
    std::mutex mutex;
    std::map<int, Series<SymPoly>> b; // keyed by m
    std::map<int, Series<SymPoly>> c;
};

SeriesCache &cache()
{
    static SeriesCache instance;
    return instance;
}

Series<SymPoly> b_series(int order, int m)
{
    auto &c = cache();
    std::lock_guard lock(c.mutex);
    auto it = c.b.find(m);
    if (it == c.b.end() || it->second.order() < order) {
        const auto w = y_weights(m);
        c.b.insert_or_assign(m, exp_truncated(b_exponent(order, m), w, m));
        it = c.b.find(m);
    }
    return it->second.truncated(order);
}

Series<SymPoly> c_series(int order, int m)
{
    const auto b = b_series(order, m);
    auto &c = cache();
    std::lock_guard lock(c.mutex);
    auto it = c.c.find(m);
    if (it == c.c.end() || it->second.order() < order) {
        c.c.insert_or_assign(m, mul_truncated(b, theta_factor(order), y_weights(m), m));
        it = c.c.find(m);
    }
    return it->second.truncated(order);
}

void check_graded_index(int k, int l, int m)
{
    if (k < 0 || l < 0 || m < 0) {
        throw std::invalid_argument("indices must be nonnegative");
    }
    if (l > m) {
        throw std::invalid_argument("y-degree " + std::to_string(l) + " exceeds m = " + std::to_string(m));
    }
}

} // namespace

std::vector<long> y_weights(int m)
{
    std::vector<long> w(static_cast<std::size_t>(m) + 1);
    std::iota(w.begin(), w.end(), 0L);
    return w;
}

SymPoly power_sum_in_elementary(int r, int m)
{
    if (r < 1 || m < 0) {
        throw std::invalid_argument("power_sum_in_elementary needs r >= 1 and m >= 0");
    }
    auto e = [m](int i) { return i <= m ? y(i) : SymPoly(); };
    std::vector<SymPoly> p(static_cast<std::size_t>(r) + 1);
    for (int s = 1; s <= r; ++s) {
        SymPoly v = e(s) * Rational(s % 2 == 1 ? s : -s);
        for (int i = 1; i < s; ++i) {
            v += e(i) * p[s - i] * Rational(i % 2 == 1 ? 1 : -1);
        }
        p[s] = v;
    }
    return p[r];
}

SymPoly a_sym(int k, int j, int m)
{
    if (k < 1 || j < 1 || j > 2 * k - 1) {
        throw std::invalid_argument("a_sym needs k >= 1 and 1 <= j <= 2k-1");
    }
    const Rational c = -Rational(binomial(2 * k, j)) * (j % 2 == 0 ? 1 : -1);
    return power_sum_in_elementary(2 * k - j, m) * c;
}

SymPoly b_sym(int k, int l, int m)
{
    check_graded_index(k, l, m);
    return b_series(k, m)[k].weighted_part(y_weights(m), l);
}

SymPoly c_sym(int k, int l, int m)
{
    check_graded_index(k, l, m);
    return c_series(k, m)[k].weighted_part(y_weights(m), l);
}

SymPoly c_sym_from_b(int k, int l, int m)
{
    check_graded_index(k, l, m);
    const auto theta = theta_factor(k);
    if (l == 0) {
        return theta[k];
    }
    SymPoly total;
    for (int j = 0; j < k; ++j) {
        total += theta[j] * b_sym(k - j, l, m);
    }
    return total;
}

SymPoly d_sym(int k, int j, int m)
{
    if (k < 1 || j < 0 || j > k - 1) {
        throw std::invalid_argument("d_sym needs k >= 1 and 0 <= j <= k-1");
    }
    return c_sym(k - j, j, m) * (Rational(factorial(k)) * (j % 2 == 0 ? 1 : -1));
}

SymPoly q_poly(int k, int j, int k_cap)
{
    if (k < 1 || j < 0 || j > 2 * k - 1) {
        throw std::invalid_argument("q_poly needs k >= 1 and 0 <= j <= 2k-1");
    }
    if (k > k_cap) {
        throw std::invalid_argument("q_poly: k = " + std::to_string(k) + " exceeds the cap " + std::to_string(k_cap));
    }
    return d_sym(2 * k, j, j);
}

ChernData::ChernData(int n, std::map<Partition, Rational> numbers) : m_n(n)
{
    if (n < 1) {
        throw std::invalid_argument("Chern data needs n >= 1");
    }
    for (auto &[key, value] : numbers) {
        Partition p = key;
        std::sort(p.begin(), p.end(), std::greater<>());
        if (p.empty() || p.back() < 1 || std::accumulate(p.begin(), p.end(), 0) != n) {
            throw std::invalid_argument("Chern number key is not a partition of " + std::to_string(n));
        }
        if (!m_numbers.emplace(std::move(p), value).second) {
            throw std::invalid_argument("repeated partition in Chern data");
        }
    }
}

const Rational &ChernData::integral(Partition parts) const
{
    std::sort(parts.begin(), parts.end(), std::greater<>());
    const auto it = m_numbers.find(parts);
    if (it == m_numbers.end()) {
        std::string key;
        for (int p : parts) {
            key += (key.empty() ? "" : ",") + std::to_string(p);
        }
        throw std::invalid_argument("missing Chern number for partition " + key);
    }
    return it->second;
}

std::vector<ChernData::Partition> partitions(int n)
{
    std::vector<ChernData::Partition> out;
    ChernData::Partition current;
    std::function<void(int, int)> rec = [&](int remaining, int largest) {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        for (int part = std::min(remaining, largest); part >= 1; --part) {
            current.push_back(part);
            rec(remaining - part, part);
            current.pop_back();
        }
    };
    if (n >= 1) {
        rec(n, n);
    }
    return out;
}

ChernData chern_data_builtin(const ManifoldSpec &m)
{
    std::map<ChernData::Partition, Rational> numbers;
    switch (m.kind) {
    case ManifoldSpec::Kind::projective:
        for (const auto &p : partitions(m.parameter)) {
            Integer v = 1;
            for (int j : p) {
                v *= binomial(m.parameter + 1, j);
            }
            numbers.emplace(p, Rational(v));
        }
        break;
    case ManifoldSpec::Kind::k3:
        numbers.emplace(ChernData::Partition{2}, Rational(24));
        numbers.emplace(ChernData::Partition{1, 1}, Rational(0));
        break;
    case ManifoldSpec::Kind::curve:
        numbers.emplace(ChernData::Partition{1}, Rational(2 - 2 * m.parameter));
        break;
    }
    return ChernData(m.dimension(), std::move(numbers));
}

Rational gamma_mfd_from_chern(const ChernData &x, const Rational &nu, int k, int k_cap)
{
    if (k < 0) {
        throw std::invalid_argument("k must be nonnegative");
    }
    const int n = x.n();
    if (k == 0) {
        return x.integral({n});
    }
    Rational total(0);
    for (int j = 0; j <= std::min(2 * k - 1, n); ++j) {
        const SymPoly q = q_poly(k, j, k_cap).substitute(sym_var_nu, Rational(n) - nu);
        for (const auto &[exps, coeff] : q.terms()) {
            ChernData::Partition parts;
            for (std::size_t i = 1; i < exps.size(); ++i) {
                parts.insert(parts.end(), exps[i], static_cast<int>(i));
            }
            if (n - j > 0) {
                parts.push_back(n - j);
            }
            total += coeff * x.integral(parts);
        }
    }
    return total;
}

Rational v_mfd_from_chern(const ChernData &x, int k, int k_cap)
{
    return gamma_mfd_from_chern(x, Rational(0), k, k_cap);
}

} // namespace bernmom
