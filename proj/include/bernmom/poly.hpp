#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <bernmom/rational.hpp>

namespace bernmom
{

// Dense univariate polynomial over Q, coefficients low degree first, with no
// trailing zeros (the zero polynomial has no coefficients).
class UniPoly
{
public:
    UniPoly() = default;
    UniPoly(const Rational &c);
    explicit UniPoly(std::vector<Rational> coeffs);

    // The monomial c * x^degree.
    static UniPoly monomial(const Rational &c, int degree);
    static UniPoly x();

    // Unique polynomial of degree < points.size() through the given
    // (x, y) nodes. Node abscissae must be distinct.
    static UniPoly interpolate(const std::vector<std::pair<Rational, Rational>> &points);

    // -1 for the zero polynomial.
    int degree() const
    {
        return static_cast<int>(m_coeffs.size()) - 1;
    }

    Rational coeff(int k) const;
    const std::vector<Rational> &coeffs() const
    {
        return m_coeffs;
    }

    bool is_zero() const
    {
        return m_coeffs.empty();
    }

    Rational eval(const Rational &x) const;
    double eval(double x) const;

    UniPoly derivative() const;
    // p(x + c)
    UniPoly shifted(const Rational &c) const;

    // Exact Euclidean division; returns {quotient, remainder}.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly &divisor) const;

    std::string to_string(const std::string &var = "x") const;

    friend UniPoly operator+(const UniPoly &a, const UniPoly &b);
    friend UniPoly operator-(const UniPoly &a, const UniPoly &b);
    friend UniPoly operator-(const UniPoly &a);
    friend UniPoly operator*(const UniPoly &a, const UniPoly &b);
    friend UniPoly operator*(const UniPoly &a, const Rational &q);
    friend UniPoly operator*(const Rational &q, const UniPoly &a)
    {
        return a * q;
    }
    friend bool operator==(const UniPoly &a, const UniPoly &b)
    {
        return a.m_coeffs == b.m_coeffs;
    }

private:
    void trim();

    std::vector<Rational> m_coeffs;
};

inline bool is_zero(const UniPoly &p)
{
    return p.is_zero();
}

// Sparse multivariate polynomial over Q. Variables are numbered 0, 1, 2, ...;
// an exponent vector lists the exponents of variables 0..k with trailing
// zeros removed, so the number of variables is open-ended and the constant
// monomial is the empty vector. No zero coefficients are stored.
class MultiPoly
{
public:
    using Exponents = std::vector<std::uint32_t>;
    using Terms = std::map<Exponents, Rational>;

    MultiPoly() = default;
    MultiPoly(const Rational &c);

    static MultiPoly variable(std::size_t index);
    static MultiPoly monomial(const Rational &c, Exponents exps);

    const Terms &terms() const
    {
        return m_terms;
    }
    bool is_zero() const
    {
        return m_terms.empty();
    }
    std::size_t size() const
    {
        return m_terms.size();
    }

    Rational coeff(const Exponents &exps) const;

    // Highest exponent of the given variable (-1 for the zero polynomial).
    int degree_in(std::size_t var) const;
    // Highest sum_i weights[i] * exps[i] over all terms; variables past
    // weights.size() carry weight 0.
    long weighted_degree(const std::vector<long> &weights) const;

    // Keep only terms with the given weighted degree.
    MultiPoly weighted_part(const std::vector<long> &weights, long degree) const;
    // Drop terms with weighted degree above max_degree.
    MultiPoly weighted_truncate(const std::vector<long> &weights, long max_degree) const;

    MultiPoly derivative(std::size_t var) const;

    // Replace variable var by the polynomial value.
    MultiPoly substitute(std::size_t var, const MultiPoly &value) const;
    MultiPoly substitute(std::size_t var, const Rational &value) const;

    // Full evaluation; values[i] is the value of variable i. Throws if a
    // variable without a value occurs.
    Rational eval(const std::vector<Rational> &values) const;

    // Coefficients in var as a univariate polynomial; every other variable
    // must be absent.
    UniPoly to_univariate(std::size_t var) const;

    // Human readable form "3/2*x0^2*x1 - x2" using the given names.
    std::string to_string(const std::vector<std::string> &names) const;

    friend MultiPoly operator+(const MultiPoly &a, const MultiPoly &b);
    friend MultiPoly operator-(const MultiPoly &a, const MultiPoly &b);
    friend MultiPoly operator-(const MultiPoly &a);
    friend MultiPoly operator*(const MultiPoly &a, const MultiPoly &b);
    friend MultiPoly operator*(const MultiPoly &a, const Rational &q);
    friend MultiPoly operator*(const Rational &q, const MultiPoly &a)
    {
        return a * q;
    }
    friend bool operator==(const MultiPoly &a, const MultiPoly &b)
    {
        return a.m_terms == b.m_terms;
    }

    MultiPoly &operator+=(const MultiPoly &b);

private:
    void add_term(const Exponents &exps, const Rational &c);

    Terms m_terms;
};

inline bool is_zero(const MultiPoly &p)
{
    return p.is_zero();
}

MultiPoly pow(const MultiPoly &base, unsigned exponent);

} // namespace bernmom
