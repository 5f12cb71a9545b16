#include <bernmom/spectrum.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace bernmom
{

namespace
{

// Sparse polynomial in S with integer coefficients, exponent -> coefficient.
using SPoly = std::map<long, Integer>;

void add_to(SPoly &p, long e, const Integer &c)
{
    if (c == 0) {
        return;
    }
    auto [it, inserted] = p.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            p.erase(it);
        }
    }
}

SPoly multiply(const SPoly &a, const SPoly &b)
{
    SPoly r;
    for (const auto &[ea, ca] : a) {
        for (const auto &[eb, cb] : b) {
            add_to(r, ea + eb, ca * cb);
        }
    }
    return r;
}

SPoly combine(const SPoly &a, const SPoly &b, int sign)
{
    SPoly r = a;
    for (const auto &[e, c] : b) {
        add_to(r, e, sign > 0 ? Integer(c) : Integer(-c));
    }
    return r;
}

// num / den for polynomials in S whose denominator has constant term 1.
// Division runs from the low end; the quotient must be a polynomial, so any
// nonzero coefficient beyond deg(num) - deg(den) is a remainder.
SPoly exact_quotient(const SPoly &num, const SPoly &den)
{
    if (den.empty() || den.begin()->first != 0 || den.begin()->second != 1) {
        throw std::logic_error("exact_quotient: denominator must have constant term 1");
    }
    if (num.empty()) {
        return {};
    }
    if (num.begin()->first < 0) {
        throw std::logic_error("exact_quotient: negative exponent");
    }
    const long deg_num = num.rbegin()->first;
    const long deg_den = den.rbegin()->first;
    const long deg_q = deg_num - deg_den;
    if (deg_q < 0) {
        throw std::logic_error("spectrum expansion: division leaves a remainder");
    }
    std::vector<Integer> q(static_cast<std::size_t>(deg_num) + 1);
    for (const auto &[e, c] : num) {
        q[static_cast<std::size_t>(e)] = c;
    }
    for (long k = 0; k <= deg_num; ++k) {
        Integer &qk = q[static_cast<std::size_t>(k)];
        for (auto it = std::next(den.begin()); it != den.end() && it->first <= k; ++it) {
            const Integer &prev = q[static_cast<std::size_t>(k - it->first)];
            if (prev != 0) {
                qk -= it->second * prev;
            }
        }
        if (k > deg_q && qk != 0) {
            throw std::logic_error("spectrum expansion: division leaves a remainder");
        }
    }
    SPoly r;
    for (long k = 0; k <= deg_q; ++k) {
        add_to(r, k, q[static_cast<std::size_t>(k)]);
    }
    return r;
}

// (S^a - S^D) / (1 - S^a): T^{a/D} factor of the generating functions.
SPoly factor_numerator(long a, long d)
{
    SPoly p;
    add_to(p, a, 1);
    add_to(p, d, -1);
    return p;
}

SPoly factor_denominator(long a)
{
    SPoly p;
    add_to(p, 0, 1);
    add_to(p, a, -1);
    return p;
}

// (T^{1/a} - T) / (1 - T^{1/a}) in S = T^{1/D}, a | D.
SPoly geometric_factor(long a, long d)
{
    return exact_quotient(factor_numerator(d / a, d), factor_denominator(d / a));
}

// Sum c_e S^e read as a spectrum with alpha = e/D - 1.
Spectrum spectrum_from_series(int n, const SPoly &p, long d)
{
    std::vector<Spectrum::Entry> entries;
    for (const auto &[e, c] : p) {
        if (c < 0) {
            throw std::logic_error("spectrum expansion produced a negative multiplicity");
        }
        entries.emplace_back(frac(e, d) - 1, Rational(c));
    }
    return Spectrum(n, std::move(entries));
}

long checked_lcm(long a, long b)
{
    const long g = std::gcd(a, b);
    long r = 0;
    if (__builtin_mul_overflow(a / g, b, &r)) {
        throw std::invalid_argument("common denominator too large");
    }
    return r;
}

long to_long(const Integer &z)
{
    if (!z.fits_slong_p()) {
        throw std::invalid_argument("value out of range");
    }
    return z.get_si();
}

} // namespace

Spectrum::Spectrum(int n, std::vector<Entry> entries, bool allow_rational_multiplicities) : m_n(n)
{
    std::sort(entries.begin(), entries.end(), [](const Entry &a, const Entry &b) { return a.first < b.first; });
    for (auto &e : entries) {
        if (sgn(e.second) <= 0) {
            throw std::invalid_argument("spectrum: multiplicities must be positive");
        }
        if (!allow_rational_multiplicities && !is_integer(e.second)) {
            throw std::invalid_argument("spectrum: multiplicity " + to_string(e.second) + " is not an integer");
        }
        if (!m_entries.empty() && m_entries.back().first == e.first) {
            m_entries.back().second += e.second;
        } else {
            m_entries.push_back(std::move(e));
        }
    }
    if (m_entries.empty()) {
        throw std::invalid_argument("spectrum: no spectral numbers");
    }
    if (!(alpha_min() > -1) || !(alpha_max() < n)) {
        throw std::invalid_argument("spectrum: spectral numbers must lie in (-1, n)");
    }
    const Rational mirror(n - 1);
    const std::size_t size = m_entries.size();
    for (std::size_t i = 0; i < size; ++i) {
        const Entry &a = m_entries[i];
        const Entry &b = m_entries[size - 1 - i];
        if (a.first + b.first != mirror || a.second != b.second) {
            throw std::invalid_argument("spectrum: not symmetric under alpha -> n-1-alpha");
        }
    }
}

Rational Spectrum::mu() const
{
    Rational total(0);
    for (const auto &e : m_entries) {
        total += e.second;
    }
    return total;
}

bool Spectrum::has_integral_multiplicities() const
{
    return std::all_of(m_entries.begin(), m_entries.end(), [](const Entry &e) { return is_integer(e.second); });
}

WeightSystem::WeightSystem(std::vector<Rational> weights) : m_weights(std::move(weights))
{
    if (m_weights.empty()) {
        throw std::invalid_argument("weight system needs at least one weight");
    }
    for (const auto &w : m_weights) {
        if (sgn(w) <= 0 || w > frac(1, 2)) {
            throw std::invalid_argument("weight " + to_string(w) + " outside (0, 1/2]");
        }
    }
}

Rational WeightSystem::mu() const
{
    Rational m(1);
    for (const auto &w : m_weights) {
        m *= 1 / w - 1;
    }
    return m;
}

Rational WeightSystem::spread() const
{
    Rational s(0);
    for (const auto &w : m_weights) {
        s += 1 - 2 * w;
    }
    return s;
}

TpqrParams::TpqrParams(long p_, long q_, long r_) : p(p_), q(q_), r(r_)
{
    if (p < 2 || q < 2 || r < 2) {
        throw std::invalid_argument("T_pqr needs p, q, r >= 2");
    }
}

bool TpqrParams::is_hyperbolic() const
{
    return frac(1, p) + frac(1, q) + frac(1, r) < 1;
}

PuiseuxData::PuiseuxData(std::vector<std::pair<long, long>> pairs) : m_pairs(std::move(pairs))
{
    const int g = genus();
    if (g == 0) {
        throw std::invalid_argument("Puiseux data needs at least one pair");
    }
    for (const auto &[ni, ri] : m_pairs) {
        if (ni < 2) {
            throw std::invalid_argument("Puiseux pair needs n_i >= 2");
        }
        if (ri < 1 || std::gcd(ni, ri) != 1) {
            throw std::invalid_argument("Puiseux pair (" + std::to_string(ni) + "," + std::to_string(ri)
                                        + ") needs gcd(n_i, r_i) = 1");
        }
    }
    if (m_pairs[0].second <= m_pairs[0].first) {
        throw std::invalid_argument("Puiseux data needs r_1 > n_1");
    }
    auto n = [this](int k) { return m_pairs[static_cast<std::size_t>(k - 1)].first; };
    auto r = [this](int k) { return m_pairs[static_cast<std::size_t>(k - 1)].second; };

    std::vector<Integer> w(static_cast<std::size_t>(g) + 1);
    w[1] = r(1);
    for (int k = 1; k < g; ++k) {
        w[k + 1] = Integer(r(k + 1)) - Integer(r(k)) * n(k + 1) + Integer(n(k)) * n(k + 1) * w[k];
    }
    std::vector<Integer> np(static_cast<std::size_t>(g) + 1);
    np[g] = 1;
    for (int k = g - 1; k >= 0; --k) {
        np[k] = np[k + 1] * n(k + 1);
    }
    m_w.assign(static_cast<std::size_t>(g) + 1, 0);
    m_nprime.assign(static_cast<std::size_t>(g) + 1, 0);
    for (int k = 0; k <= g; ++k) {
        if (k >= 1) {
            m_w[k] = to_long(w[k]);
        }
        m_nprime[k] = to_long(np[k]);
    }
    for (int k = 1; k < g; ++k) {
        if (delta(k) <= 0) {
            throw std::invalid_argument("Puiseux data violates Delta_" + std::to_string(k)
                                        + " = w_{k+1} - w_k n_k n_{k+1} = " + std::to_string(delta(k))
                                        + " > 0");
        }
    }
}

long PuiseuxData::delta(int k) const
{
    if (k < 1 || k >= genus()) {
        throw std::out_of_range("Delta_k needs 1 <= k < g");
    }
    return w(k + 1) - w(k) * m_pairs[k - 1].first * m_pairs[k].first;
}

Spectrum spectrum_from_weights(const WeightSystem &ws)
{
    long d = 1;
    for (const auto &w : ws.weights()) {
        d = checked_lcm(d, to_long(w.get_den()));
    }
    SPoly num{{0, 1}};
    SPoly den{{0, 1}};
    for (const auto &w : ws.weights()) {
        const long a = to_long(w.get_num()) * (d / to_long(w.get_den()));
        num = multiply(num, factor_numerator(a, d));
        den = multiply(den, factor_denominator(a));
    }
    return spectrum_from_series(ws.n(), exact_quotient(num, den), d);
}

Spectrum spectrum_tpqr(const TpqrParams &t)
{
    std::vector<Spectrum::Entry> entries{{Rational(0), Rational(1)}, {Rational(1), Rational(1)}};
    for (long m : {t.p, t.q, t.r}) {
        for (long i = 1; i < m; ++i) {
            entries.emplace_back(frac(i, m), Rational(1));
        }
    }
    return Spectrum(2, std::move(entries));
}

Spectrum spectrum_curve(const PuiseuxData &data)
{
    const int g = data.genus();
    // Denominators of the factors (T^{1/a} - T)/(1 - T^{1/a}) in the sum.
    struct Term
    {
        long left;
        long right;
        int sign;
    };
    std::vector<Term> terms{{data.n_prime(0), data.w(1) * data.n_prime(1), 1}};
    for (int k = 1; k < g; ++k) {
        terms.push_back({data.w(k + 1) * data.n_prime(k + 1), data.n_prime(k), 1});
        terms.push_back({data.w(k) * data.n_prime(k - 1), data.n_prime(k), -1});
    }
    long d = 1;
    for (const auto &t : terms) {
        d = checked_lcm(checked_lcm(d, t.left), t.right);
    }
    SPoly total;
    for (const auto &t : terms) {
        total = combine(total, multiply(geometric_factor(t.left, d), geometric_factor(t.right, d)), t.sign);
    }
    return spectrum_from_series(1, total, d);
}

Spectrum thom_sebastiani(const Spectrum &a, const Spectrum &b)
{
    std::vector<Spectrum::Entry> entries;
    entries.reserve(a.entries().size() * b.entries().size());
    for (const auto &[alpha, ma] : a.entries()) {
        for (const auto &[beta, mb] : b.entries()) {
            entries.emplace_back(alpha + beta + 1, ma * mb);
        }
    }
    const bool integral = a.has_integral_multiplicities() && b.has_integral_multiplicities();
    return Spectrum(a.n() + b.n() + 1, std::move(entries), !integral);
}

Spectrum spectrum_abstract(int n, std::vector<Spectrum::Entry> entries)
{
    return Spectrum(n, std::move(entries), true);
}

} // namespace bernmom
