#include <bernmom/moments.hpp>

#include <stdexcept>
#include <string>

#include <bernmom/bernoulli.hpp>
#include <bernmom/bernoulli_poly.hpp>

namespace bernmom
{

namespace
{

void require_even_order(int order)
{
    if (order < 0 || order % 2 != 0) {
        throw std::invalid_argument("moment series order must be even and nonnegative, got "
                                    + std::to_string(order));
    }
}

// Series with moment(2k) = values(k) for 2k <= order.
template <typename F>
TruncatedSeries even_series(int order, F values)
{
    TruncatedSeries s(order);
    for (int k = 0; 2 * k <= order; ++k) {
        s[2 * k] = values(k) / Rational(factorial(2 * k));
    }
    return s;
}

TruncatedSeries product(const std::vector<TruncatedSeries> &factors, int order)
{
    TruncatedSeries p = TruncatedSeries::one(order);
    for (const auto &f : factors) {
        p = p * f;
    }
    return p;
}

} // namespace

MomentSeries::MomentSeries(TruncatedSeries series, MomentKind kind, Rational nu)
    : m_series(std::move(series)), m_kind(kind), m_nu(std::move(nu))
{
    for (int k = 1; k <= m_series.order(); k += 2) {
        if (!is_zero(m_series[k])) {
            throw std::invalid_argument("moment series must be even");
        }
    }
}

Rational MomentSeries::moment(int index) const
{
    if (index < 0 || index > order()) {
        throw std::out_of_range("moment index " + std::to_string(index) + " outside 0.." + std::to_string(order()));
    }
    return bernmom::moment(m_series, index);
}

std::vector<Rational> MomentSeries::even_moments() const
{
    std::vector<Rational> out;
    for (int k = 0; k <= order(); k += 2) {
        out.push_back(moment(k));
    }
    return out;
}

ChiVector::ChiVector(std::vector<Integer> chi) : m_chi(std::move(chi))
{
    if (m_chi.empty()) {
        throw std::invalid_argument("chi vector must be nonempty");
    }
    for (std::size_t p = 0; p < m_chi.size(); ++p) {
        if (m_chi[p] != m_chi[m_chi.size() - 1 - p]) {
            throw std::invalid_argument("chi vector violates chi_p = chi_{n-p}");
        }
    }
}

MomentSeries v_sing(const Spectrum &s, int order)
{
    require_even_order(order);
    TruncatedSeries v(order);
    for (const auto &[alpha, m] : s.entries()) {
        v = v + exp_linear(alpha - s.center(), order) * m;
    }
    return MomentSeries(v);
}

MomentSeries gamma_ber(const MomentSeries &v, const Rational &nu)
{
    if (v.kind() != MomentKind::raw) {
        throw std::invalid_argument("gamma_ber needs a raw moment series");
    }
    const TruncatedSeries g = v.series() * exp(theta_ber(v.order()) * nu);
    return MomentSeries(g, MomentKind::bernoulli, nu);
}

Rational gamma_ber_direct(const Spectrum &s, const Rational &nu, int k)
{
    if (k < 0) {
        throw std::invalid_argument("gamma_ber_direct: k must be nonnegative");
    }
    const UniPoly a = a_poly_at_nu(2 * k, nu);
    Rational total(0);
    for (const auto &[alpha, m] : s.entries()) {
        total += m * a.eval(alpha - s.center());
    }
    return total;
}

MomentSeries v_sing_closed_qh(const WeightSystem &ws, int order)
{
    require_even_order(order);
    std::vector<TruncatedSeries> factors;
    for (const auto &w : ws.weights()) {
        const Rational x = 1 / (2 * w);
        factors.push_back(even_series(order, [&](int k) -> Rational {
            return pow(w, 2 * k) * frac(2, 2 * k + 1) * bernoulli_poly_value(2 * k + 1, x);
        }));
    }
    return MomentSeries(product(factors, order));
}

MomentSeries gamma_w_closed_qh(const WeightSystem &ws, int order)
{
    require_even_order(order);
    std::vector<TruncatedSeries> factors;
    for (const auto &w : ws.weights()) {
        factors.push_back(
            even_series(order, [&](int k) -> Rational { return -bernoulli_number(2 * k) * (1 - pow(w, 2 * k - 1)); }));
    }
    return MomentSeries(product(factors, order), MomentKind::bernoulli, Rational(ws.n() + 1));
}

UniPoly p_poly(int k)
{
    if (k < 1) {
        throw std::invalid_argument("p_poly: k must be at least 1");
    }
    const UniPoly w = UniPoly::x();
    UniPoly power_w(Rational(1));
    UniPoly power_1mw(Rational(1));
    const UniPoly one_minus_w = UniPoly(Rational(1)) - w;
    for (int i = 0; i < 2 * k; ++i) {
        power_w = power_w * w;
        power_1mw = power_1mw * one_minus_w;
    }
    return UniPoly(Rational(1)) - w * Rational(2) + power_w - power_1mw;
}

Series<UniPoly> q_series_symbolic(int order)
{
    if (order < 0) {
        throw std::invalid_argument("q_series: order must be nonnegative");
    }
    Series<UniPoly> exponent(order);
    for (int k = 1; 2 * k <= order; ++k) {
        exponent[2 * k] = p_poly(k) * (-bernoulli_number(2 * k) / (2 * k) / Rational(factorial(2 * k)));
    }
    return exp(exponent);
}

TruncatedSeries q_series(const Rational &w, int order)
{
    if (order < 0) {
        throw std::invalid_argument("q_series: order must be nonnegative");
    }
    TruncatedSeries exponent(order);
    for (int k = 1; 2 * k <= order; ++k) {
        exponent[2 * k] = -bernoulli_number(2 * k) / (2 * k) * p_poly(k).eval(w) / Rational(factorial(2 * k));
    }
    return exp(exponent);
}

MomentSeries gamma_s_closed_qh(const WeightSystem &ws, int order)
{
    require_even_order(order);
    std::vector<TruncatedSeries> factors;
    for (const auto &w : ws.weights()) {
        factors.push_back(q_series(w, order));
    }
    return MomentSeries(product(factors, order) * ws.mu(), MomentKind::bernoulli, ws.spread());
}

MomentSeries gamma_tpqr_closed(const TpqrParams &t, int order)
{
    require_even_order(order);
    const TruncatedSeries s = even_series(order, [&](int k) -> Rational {
        const long e = 1 - 2 * k;
        return bernoulli_number(2 * k) * (-1 + pow(Rational(t.p), e) + pow(Rational(t.q), e) + pow(Rational(t.r), e));
    });
    return MomentSeries(s, MomentKind::bernoulli, Rational(1));
}

MomentSeries v_mfd(const ChiVector &chi, int order)
{
    require_even_order(order);
    TruncatedSeries v(order);
    const int n = chi.n();
    for (int p = 0; p <= n; ++p) {
        v = v + exp_linear(Rational(p) - frac(n, 2), order) * Rational(chi.chi()[p]);
    }
    return MomentSeries(v);
}

ManifoldSpec ManifoldSpec::projective(int n)
{
    if (n < 1) {
        throw std::invalid_argument("P^n needs n >= 1");
    }
    return {Kind::projective, n};
}

ManifoldSpec ManifoldSpec::k3()
{
    return {Kind::k3, 2};
}

ManifoldSpec ManifoldSpec::curve(int genus)
{
    if (genus < 0) {
        throw std::invalid_argument("genus must be nonnegative");
    }
    return {Kind::curve, genus};
}

int ManifoldSpec::dimension() const
{
    switch (kind) {
    case Kind::projective:
        return parameter;
    case Kind::k3:
        return 2;
    case Kind::curve:
        return 1;
    }
    throw std::logic_error("unknown manifold kind");
}

std::string ManifoldSpec::name() const
{
    switch (kind) {
    case Kind::projective:
        return "P^" + std::to_string(parameter);
    case Kind::k3:
        return "K3";
    case Kind::curve:
        return "genus " + std::to_string(parameter) + " curve";
    }
    throw std::logic_error("unknown manifold kind");
}

ChiVector chi_vector(const ManifoldSpec &m)
{
    switch (m.kind) {
    case ManifoldSpec::Kind::projective:
        return ChiVector(std::vector<Integer>(static_cast<std::size_t>(m.parameter) + 1, 1));
    case ManifoldSpec::Kind::k3:
        return ChiVector({2, 20, 2});
    case ManifoldSpec::Kind::curve:
        return ChiVector({1 - m.parameter, 1 - m.parameter});
    }
    throw std::logic_error("unknown manifold kind");
}

MomentSeries gamma_mfd_closed(const ManifoldSpec &m, int order)
{
    require_even_order(order);
    TruncatedSeries s(order);
    switch (m.kind) {
    case ManifoldSpec::Kind::projective: {
        const Rational nu(m.parameter + 1);
        s = even_series(order, [&](int k) -> Rational { return frac(-2, 2 * k + 1) * norlund_b(2 * k + 1, nu, 0); });
        break;
    }
    case ManifoldSpec::Kind::k3:
        s = even_series(order, [&](int k) -> Rational {
            return frac(-4, 2 * k + 1) * norlund_b(2 * k + 1, 3, 0) + 18 * norlund_b(2 * k, 2, 1);
        });
        break;
    case ManifoldSpec::Kind::curve:
        s = even_series(order, [&](int k) -> Rational { return (1 - m.parameter) * 2 * bernoulli_number(2 * k); });
        break;
    }
    return MomentSeries(s, MomentKind::bernoulli, Rational(m.dimension()));
}

} // namespace bernmom
