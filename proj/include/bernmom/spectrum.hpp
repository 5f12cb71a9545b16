#pragma once

#include <utility>
#include <vector>

#include <bernmom/rational.hpp>

namespace bernmom
{

// Spectrum of an isolated hypersurface singularity f in n+1 variables, as a
// sorted list of distinct spectral numbers with positive multiplicities.
class Spectrum
{
public:
    using Entry = std::pair<Rational, Rational>; // (alpha, multiplicity)

    // Sorts, merges repeated alphas and validates: -1 < alpha < n, symmetry
    // alpha -> n-1-alpha, positive multiplicities, nonempty. Multiplicities
    // must be integers unless allow_rational_multiplicities is set.
    // Throws std::invalid_argument on violation.
    Spectrum(int n, std::vector<Entry> entries, bool allow_rational_multiplicities = false);

    int n() const
    {
        return m_n;
    }
    const std::vector<Entry> &entries() const
    {
        return m_entries;
    }

    Rational mu() const;
    Rational alpha_min() const
    {
        return m_entries.front().first;
    }
    Rational alpha_max() const
    {
        return m_entries.back().first;
    }
    // (n-1)/2, the symmetry centre.
    Rational center() const
    {
        return frac(m_n - 1, 2);
    }
    // nu of the strong conjecture, alpha_mu - alpha_1.
    Rational nu_strong() const
    {
        return alpha_max() - alpha_min();
    }
    // nu of the weak conjecture, n + 1.
    Rational nu_weak() const
    {
        return Rational(m_n + 1);
    }
    bool has_integral_multiplicities() const;

    friend bool operator==(const Spectrum &a, const Spectrum &b)
    {
        return a.m_n == b.m_n && a.m_entries == b.m_entries;
    }

private:
    int m_n;
    std::vector<Entry> m_entries;
};

// Normalized weights w_0..w_n of a quasihomogeneous singularity, each in
// (0, 1/2].
class WeightSystem
{
public:
    explicit WeightSystem(std::vector<Rational> weights);

    const std::vector<Rational> &weights() const
    {
        return m_weights;
    }
    int n() const
    {
        return static_cast<int>(m_weights.size()) - 1;
    }
    // prod (1/w_i - 1)
    Rational mu() const;
    // sum (1 - 2 w_i) = alpha_mu - alpha_1
    Rational spread() const;

private:
    std::vector<Rational> m_weights;
};

struct TpqrParams
{
    TpqrParams(long p, long q, long r);

    long p;
    long q;
    long r;

    bool is_hyperbolic() const;
    long mu() const
    {
        return p + q + r - 1;
    }
};

// Puiseux pairs (n_i, r_i), i = 1..g, of an irreducible plane curve germ,
// with the derived integers w_k, n'_k.
class PuiseuxData
{
public:
    // Validates gcd(n_i, r_i) = 1, n_i >= 2, r_1 > n_1 and
    // Delta_k = w_{k+1} - w_k n_k n_{k+1} > 0.
    explicit PuiseuxData(std::vector<std::pair<long, long>> pairs);

    int genus() const
    {
        return static_cast<int>(m_pairs.size());
    }
    const std::vector<std::pair<long, long>> &pairs() const
    {
        return m_pairs;
    }
    // w_k for k = 1..g (index k).
    long w(int k) const
    {
        return m_w.at(static_cast<std::size_t>(k));
    }
    // n'_k for k = 0..g; n'_0 = n_1...n_g.
    long n_prime(int k) const
    {
        return m_nprime.at(static_cast<std::size_t>(k));
    }
    // Delta_k for k = 1..g-1.
    long delta(int k) const;

private:
    std::vector<std::pair<long, long>> m_pairs;
    std::vector<long> m_w;      // index 0 unused
    std::vector<long> m_nprime; // index 0..g
};

Spectrum spectrum_from_weights(const WeightSystem &w);
Spectrum spectrum_tpqr(const TpqrParams &params);
Spectrum spectrum_curve(const PuiseuxData &data);
Spectrum thom_sebastiani(const Spectrum &a, const Spectrum &b);
// Spectrum with possibly rational multiplicities.
Spectrum spectrum_abstract(int n, std::vector<Spectrum::Entry> entries);

} // namespace bernmom
