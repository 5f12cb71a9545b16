#pragma once

#include <string>
#include <vector>

#include <bernmom/poly.hpp>
#include <bernmom/rational.hpp>
#include <bernmom/series.hpp>
#include <bernmom/spectrum.hpp>

namespace bernmom
{

enum class MomentKind
{
    raw,       // a moment generating function V
    bernoulli, // Gamma^Ber(V, nu)
};

// Even truncated series read through factorial-normalized moments:
// moment(2k) = coeff[2k] * (2k)!, i.e. V_{2k} or Gamma_{2k}.
class MomentSeries
{
public:
    // Throws std::invalid_argument if an odd coefficient is nonzero.
    explicit MomentSeries(TruncatedSeries series, MomentKind kind = MomentKind::raw, Rational nu = 0);

    const TruncatedSeries &series() const
    {
        return m_series;
    }
    MomentKind kind() const
    {
        return m_kind;
    }
    // The nu of a bernoulli-kind series (0 for raw).
    const Rational &nu() const
    {
        return m_nu;
    }
    int order() const
    {
        return m_series.order();
    }
    // coeff[index] * index!; index must not exceed the order.
    Rational moment(int index) const;
    // moment(0), moment(2), ..., up to the order.
    std::vector<Rational> even_moments() const;

    friend bool operator==(const MomentSeries &a, const MomentSeries &b)
    {
        return a.m_kind == b.m_kind && a.m_nu == b.m_nu && a.m_series == b.m_series;
    }

private:
    TruncatedSeries m_series;
    MomentKind m_kind;
    Rational m_nu;
};

// Signed Euler characteristics chi_0..chi_n of a compact complex manifold.
class ChiVector
{
public:
    // Throws std::invalid_argument unless chi_p = chi_{n-p}.
    explicit ChiVector(std::vector<Integer> chi);

    int n() const
    {
        return static_cast<int>(m_chi.size()) - 1;
    }
    const std::vector<Integer> &chi() const
    {
        return m_chi;
    }

private:
    std::vector<Integer> m_chi;
};

// sum_i m_i exp(t (alpha_i - (n-1)/2)); order must be even.
MomentSeries v_sing(const Spectrum &s, int order);

// V * exp(nu Theta^Ber). v must be raw.
MomentSeries gamma_ber(const MomentSeries &v, const Rational &nu);

// Gamma_{2k} = sum_j m_j A_{2k}(alpha_j - (n-1)/2, nu).
Rational gamma_ber_direct(const Spectrum &s, const Rational &nu, int k);

// Product formula for V of a quasihomogeneous singularity, each factor
// sum_k w^{2k} 2/(2k+1) B_{2k+1}(1/(2w)) t^{2k}/(2k)!.
MomentSeries v_sing_closed_qh(const WeightSystem &w, int order);

// Gamma(V, n+1) of a quasihomogeneous singularity as
// prod_i sum_k (-B_{2k})(1 - w_i^{2k-1}) t^{2k}/(2k)!.
MomentSeries gamma_w_closed_qh(const WeightSystem &w, int order);

// p_{2k}(w) = 1 - 2w + w^{2k} - (1-w)^{2k}; k >= 1.
UniPoly p_poly(int k);

// Q(t, w) = exp(sum_{k>=1} (-B_{2k}/(2k)) p_{2k}(w) t^{2k}/(2k)!).
TruncatedSeries q_series(const Rational &w, int order);
// Q(t, w) with w symbolic: the t^j coefficient is a polynomial in w.
Series<UniPoly> q_series_symbolic(int order);

// Gamma(V, alpha_mu - alpha_1) of a quasihomogeneous singularity as
// mu prod_i Q(t, w_i).
MomentSeries gamma_s_closed_qh(const WeightSystem &w, int order);

// Gamma(V, 1) of T_pqr: Gamma_{2k} = B_{2k}(-1 + p^{1-2k} + q^{1-2k} + r^{1-2k}).
MomentSeries gamma_tpqr_closed(const TpqrParams &params, int order);

// sum_p chi_p exp(t (p - n/2)); order must be even.
MomentSeries v_mfd(const ChiVector &chi, int order);

struct ManifoldSpec
{
    enum class Kind
    {
        projective, // P^n, parameter n >= 1
        k3,
        curve, // Riemann surface, parameter g >= 0
    };

    static ManifoldSpec projective(int n);
    static ManifoldSpec k3();
    static ManifoldSpec curve(int genus);

    Kind kind;
    int parameter;

    int dimension() const;
    std::string name() const;
};

ChiVector chi_vector(const ManifoldSpec &m);

// Closed form of Gamma(V^mfd, n) for P^n, K3 and curves, via generalized
// Bernoulli numbers.
MomentSeries gamma_mfd_closed(const ManifoldSpec &m, int order);

} // namespace bernmom
