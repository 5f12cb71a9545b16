#include <bernmom/poly.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bernmom
{

// ---------------------------------------------------------------- UniPoly

UniPoly::UniPoly(const Rational &c)
{
    if (!bernmom::is_zero(c)) {
        m_coeffs.push_back(c);
    }
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : m_coeffs(std::move(coeffs))
{
    trim();
}

UniPoly UniPoly::monomial(const Rational &c, int degree)
{
    if (degree < 0) {
        throw std::invalid_argument("negative monomial degree");
    }
    std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::x()
{
    return monomial(Rational(1), 1);
}

void UniPoly::trim()
{
    while (!m_coeffs.empty() && bernmom::is_zero(m_coeffs.back())) {
        m_coeffs.pop_back();
    }
}

Rational UniPoly::coeff(int k) const
{
    if (k < 0 || k > degree()) {
        return Rational(0);
    }
    return m_coeffs[static_cast<std::size_t>(k)];
}

Rational UniPoly::eval(const Rational &x) const
{
    Rational acc(0);
    for (auto it = m_coeffs.rbegin(); it != m_coeffs.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

double UniPoly::eval(double x) const
{
    double acc = 0.0;
    for (auto it = m_coeffs.rbegin(); it != m_coeffs.rend(); ++it) {
        acc = acc * x + to_double(*it);
    }
    return acc;
}

UniPoly UniPoly::derivative() const
{
    if (m_coeffs.size() <= 1) {
        return {};
    }
    std::vector<Rational> d(m_coeffs.size() - 1);
    for (std::size_t k = 1; k < m_coeffs.size(); ++k) {
        d[k - 1] = m_coeffs[k] * Rational(static_cast<long>(k));
    }
    return UniPoly(std::move(d));
}

UniPoly UniPoly::shifted(const Rational &c) const
{
    // Horner with the linear polynomial x + c.
    const UniPoly lin(std::vector<Rational>{c, Rational(1)});
    UniPoly acc;
    for (auto it = m_coeffs.rbegin(); it != m_coeffs.rend(); ++it) {
        acc = acc * lin + UniPoly(*it);
    }
    return acc;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly &divisor) const
{
    if (divisor.is_zero()) {
        throw std::domain_error("polynomial division by zero");
    }
    std::vector<Rational> rem = m_coeffs;
    const int dd = divisor.degree();
    const Rational lead = divisor.m_coeffs.back();
    if (degree() < dd) {
        return {UniPoly(), *this};
    }
    std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd) + 1);
    for (int k = degree(); k >= dd; --k) {
        const Rational c = rem[static_cast<std::size_t>(k)] / lead;
        if (bernmom::is_zero(c)) {
            continue;
        }
        quot[static_cast<std::size_t>(k - dd)] = c;
        for (int j = 0; j <= dd; ++j) {
            rem[static_cast<std::size_t>(k - dd + j)] -= c * divisor.m_coeffs[static_cast<std::size_t>(j)];
        }
    }
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::interpolate(const std::vector<std::pair<Rational, Rational>> &points)
{
    // Newton divided differences.
    const std::size_t n = points.size();
    std::vector<Rational> dd(n);
    for (std::size_t i = 0; i < n; ++i) {
        dd[i] = points[i].second;
    }
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = n - 1; i >= level; --i) {
            const Rational dx = points[i].first - points[i - level].first;
            if (bernmom::is_zero(dx)) {
                throw std::invalid_argument("interpolation nodes must be distinct");
            }
            dd[i] = (dd[i] - dd[i - 1]) / dx;
        }
    }
    UniPoly acc;
    for (std::size_t i = n; i-- > 0;) {
        acc = acc * UniPoly(std::vector<Rational>{-points[i].first, Rational(1)}) + UniPoly(dd[i]);
    }
    return acc;
}

std::string UniPoly::to_string(const std::string &var) const
{
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational &c = m_coeffs[static_cast<std::size_t>(k)];
        if (bernmom::is_zero(c)) {
            continue;
        }
        if (!first) {
            os << (sgn(c) < 0 ? " - " : " + ");
        } else if (sgn(c) < 0) {
            os << "-";
        }
        const Rational a = abs(c);
        if (k == 0 || a != 1) {
            os << bernmom::to_string(a);
            if (k > 0) {
                os << "*";
            }
        }
        if (k > 0) {
            os << var;
            if (k > 1) {
                os << "^" << k;
            }
        }
        first = false;
    }
    return os.str();
}

UniPoly operator+(const UniPoly &a, const UniPoly &b)
{
    std::vector<Rational> v(std::max(a.m_coeffs.size(), b.m_coeffs.size()));
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k < a.m_coeffs.size()) {
            v[k] += a.m_coeffs[k];
        }
        if (k < b.m_coeffs.size()) {
            v[k] += b.m_coeffs[k];
        }
    }
    return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly &a)
{
    return a * Rational(-1);
}

UniPoly operator-(const UniPoly &a, const UniPoly &b)
{
    return a + (-b);
}

UniPoly operator*(const UniPoly &a, const UniPoly &b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<Rational> v(a.m_coeffs.size() + b.m_coeffs.size() - 1);
    for (std::size_t i = 0; i < a.m_coeffs.size(); ++i) {
        if (bernmom::is_zero(a.m_coeffs[i])) {
            continue;
        }
        for (std::size_t j = 0; j < b.m_coeffs.size(); ++j) {
            v[i + j] += a.m_coeffs[i] * b.m_coeffs[j];
        }
    }
    return UniPoly(std::move(v));
}

UniPoly operator*(const UniPoly &a, const Rational &q)
{
    std::vector<Rational> v(a.m_coeffs);
    for (auto &c : v) {
        c *= q;
    }
    return UniPoly(std::move(v));
}

// -------------------------------------------------------------- MultiPoly

namespace
{

void trim_exponents(MultiPoly::Exponents &e)
{
    while (!e.empty() && e.back() == 0) {
        e.pop_back();
    }
}

MultiPoly::Exponents add_exponents(const MultiPoly::Exponents &a, const MultiPoly::Exponents &b)
{
    MultiPoly::Exponents r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] += a[i];
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        r[i] += b[i];
    }
    return r;
}

long weight_of(const MultiPoly::Exponents &e, const std::vector<long> &weights)
{
    long w = 0;
    for (std::size_t i = 0; i < e.size() && i < weights.size(); ++i) {
        w += weights[i] * static_cast<long>(e[i]);
    }
    return w;
}

} // namespace

MultiPoly::MultiPoly(const Rational &c)
{
    if (!bernmom::is_zero(c)) {
        m_terms.emplace(Exponents{}, c);
    }
}

MultiPoly MultiPoly::variable(std::size_t index)
{
    Exponents e(index + 1, 0);
    e[index] = 1;
    return monomial(Rational(1), std::move(e));
}

MultiPoly MultiPoly::monomial(const Rational &c, Exponents exps)
{
    MultiPoly p;
    trim_exponents(exps);
    p.add_term(exps, c);
    return p;
}

void MultiPoly::add_term(const Exponents &exps, const Rational &c)
{
    if (bernmom::is_zero(c)) {
        return;
    }
    auto [it, inserted] = m_terms.emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (bernmom::is_zero(it->second)) {
            m_terms.erase(it);
        }
    }
}

Rational MultiPoly::coeff(const Exponents &exps) const
{
    Exponents e = exps;
    trim_exponents(e);
    const auto it = m_terms.find(e);
    return it == m_terms.end() ? Rational(0) : it->second;
}

int MultiPoly::degree_in(std::size_t var) const
{
    int d = -1;
    for (const auto &[e, c] : m_terms) {
        d = std::max(d, var < e.size() ? static_cast<int>(e[var]) : 0);
    }
    return d;
}

long MultiPoly::weighted_degree(const std::vector<long> &weights) const
{
    long d = -1;
    for (const auto &[e, c] : m_terms) {
        d = std::max(d, weight_of(e, weights));
    }
    return d;
}

MultiPoly MultiPoly::weighted_part(const std::vector<long> &weights, long degree) const
{
    MultiPoly r;
    for (const auto &[e, c] : m_terms) {
        if (weight_of(e, weights) == degree) {
            r.m_terms.emplace(e, c);
        }
    }
    return r;
}

MultiPoly MultiPoly::weighted_truncate(const std::vector<long> &weights, long max_degree) const
{
    MultiPoly r;
    for (const auto &[e, c] : m_terms) {
        if (weight_of(e, weights) <= max_degree) {
            r.m_terms.emplace(e, c);
        }
    }
    return r;
}

MultiPoly MultiPoly::derivative(std::size_t var) const
{
    MultiPoly r;
    for (const auto &[e, c] : m_terms) {
        if (var >= e.size() || e[var] == 0) {
            continue;
        }
        Exponents d = e;
        const long k = d[var];
        --d[var];
        trim_exponents(d);
        r.add_term(d, c * Rational(k));
    }
    return r;
}

MultiPoly MultiPoly::substitute(std::size_t var, const MultiPoly &value) const
{
    // Group by the exponent of var, then sum group * value^k with cached powers.
    std::map<std::uint32_t, MultiPoly> groups;
    for (const auto &[e, c] : m_terms) {
        const std::uint32_t k = var < e.size() ? e[var] : 0;
        Exponents rest = e;
        if (var < rest.size()) {
            rest[var] = 0;
        }
        trim_exponents(rest);
        groups[k].add_term(rest, c);
    }
    MultiPoly result;
    MultiPoly power(Rational(1));
    std::uint32_t at = 0;
    for (const auto &[k, g] : groups) {
        while (at < k) {
            power = power * value;
            ++at;
        }
        result += g * power;
    }
    return result;
}

MultiPoly MultiPoly::substitute(std::size_t var, const Rational &value) const
{
    return substitute(var, MultiPoly(value));
}

Rational MultiPoly::eval(const std::vector<Rational> &values) const
{
    Rational acc(0);
    for (const auto &[e, c] : m_terms) {
        Rational term = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) {
                continue;
            }
            if (i >= values.size()) {
                throw std::invalid_argument("no value for variable " + std::to_string(i));
            }
            term *= pow(values[i], static_cast<long>(e[i]));
        }
        acc += term;
    }
    return acc;
}

UniPoly MultiPoly::to_univariate(std::size_t var) const
{
    std::vector<Rational> v(static_cast<std::size_t>(std::max(degree_in(var), 0)) + 1);
    for (const auto &[e, c] : m_terms) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i != var && e[i] != 0) {
                throw std::invalid_argument("polynomial is not univariate in the requested variable");
            }
        }
        v[var < e.size() ? e[var] : 0] += c;
    }
    return UniPoly(std::move(v));
}

std::string MultiPoly::to_string(const std::vector<std::string> &names) const
{
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    // Highest total degree first reads more naturally.
    std::vector<std::pair<Exponents, Rational>> sorted(m_terms.begin(), m_terms.end());
    std::stable_sort(sorted.begin(), sorted.end(), [](const auto &a, const auto &b) {
        long da = 0, db = 0;
        for (auto x : a.first) da += x;
        for (auto x : b.first) db += x;
        return da > db;
    });
    for (const auto &[e, c] : sorted) {
        if (!first) {
            os << (sgn(c) < 0 ? " - " : " + ");
        } else if (sgn(c) < 0) {
            os << "-";
        }
        const Rational a = abs(c);
        bool wrote = false;
        if (e.empty() || a != 1) {
            os << bernmom::to_string(a);
            wrote = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) {
                continue;
            }
            if (wrote) {
                os << "*";
            }
            os << (i < names.size() ? names[i] : "v" + std::to_string(i));
            if (e[i] > 1) {
                os << "^" << e[i];
            }
            wrote = true;
        }
        first = false;
    }
    return os.str();
}

MultiPoly &MultiPoly::operator+=(const MultiPoly &b)
{
    for (const auto &[e, c] : b.m_terms) {
        add_term(e, c);
    }
    return *this;
}

MultiPoly operator+(const MultiPoly &a, const MultiPoly &b)
{
    MultiPoly r(a);
    r += b;
    return r;
}

MultiPoly operator-(const MultiPoly &a)
{
    return a * Rational(-1);
}

MultiPoly operator-(const MultiPoly &a, const MultiPoly &b)
{
    return a + (-b);
}

MultiPoly operator*(const MultiPoly &a, const MultiPoly &b)
{
    MultiPoly r;
    for (const auto &[ea, ca] : a.m_terms) {
        for (const auto &[eb, cb] : b.m_terms) {
            r.add_term(add_exponents(ea, eb), ca * cb);
        }
    }
    return r;
}

MultiPoly operator*(const MultiPoly &a, const Rational &q)
{
    MultiPoly r;
    if (is_zero(q)) {
        return r;
    }
    for (const auto &[e, c] : a.m_terms) {
        r.m_terms.emplace(e, c * q);
    }
    return r;
}

MultiPoly pow(const MultiPoly &base, unsigned exponent)
{
    MultiPoly r(Rational(1));
    for (unsigned i = 0; i < exponent; ++i) {
        r = r * base;
    }
    return r;
}

} // namespace bernmom
