#pragma once

#include <cstddef>

#include <bernmom/poly.hpp>
#include <bernmom/rational.hpp>

namespace bernmom
{

// Element of Q[x, nu]: variable 0 is x, variable 1 is nu.
using BivariatePolynomial = MultiPoly;
inline constexpr std::size_t var_x = 0;
inline constexpr std::size_t var_nu = 1;

// Generalized Bernoulli polynomial A_k(x, nu), the t^k/k! coefficient of
// e^{xt} exp(nu * Theta(t)). Built by expanding the generating function with
// symbolic x and nu; memoized by k (thread safe).
BivariatePolynomial a_poly(int k);

// Same polynomial assembled independently: A_{2j}(0, nu) is integrated from
// its nu-derivative recursion, then A_k = sum_j C(k,2j) A_{2j}(0,nu) x^{k-2j}.
// Used to cross-check a_poly.
BivariatePolynomial a_poly_assembled(int k);

// A_k(x, nu0) as a polynomial in x.
UniPoly a_poly_at_nu(int k, const Rational &nu);

Rational a_eval(int k, const Rational &x, const Rational &nu);

// Noerlund's B_k^{(nu)}(x) = A_k(x - nu/2, nu).
Rational norlund_b(int k, const Rational &nu, const Rational &x);

// Classical Bernoulli polynomial B_k(x) = A_k(x - 1/2, 1).
Rational bernoulli_poly_value(int k, const Rational &x);

// (-1)^k A_{2k}(x,nu) (2 pi)^{2k} Gamma(nu) / (2 (2k)! (2k)^{nu-1}).
// x and nu are converted exactly to rationals, A_{2k} is evaluated exactly and
// only the normalization runs in log-domain floating point. Tends to
// cos(2 pi x) as k grows. Throws std::domain_error for nu in {0, -1, -2, ...}
// and std::invalid_argument for k < 1.
double normalized_a(int k, double x, double nu);

// Odd companion: (-1)^{k-1} A_{2k-1}(x,nu) (2 pi)^{2k-1} Gamma(nu) /
// (2 (2k-1)! (2k-1)^{nu-1}), which tends to sin(2 pi x).
double normalized_a_odd(int k, double x, double nu);

// x reduced into (-1/2, 1/2] by subtracting the nearest integer; the
// boundary maps to +1/2.
double reduce_periodic(double x);

// f_k(x): the 1-periodic function equal to A_k(x, 1) on (-1/2, 1/2].
double periodic_a1(int k, double x);

// Partial sum with `terms` harmonics of the Fourier series of f_k. Requires
// k >= 1 (k = 1 converges only off the half-integers) and terms >= 1.
double fourier_partial_sum(int k, double x, int terms);

// Checks the multiplication formula expressing A_k(x,nu) through A_j(x,nu)
// and A_{k-j}(x + (nu-1)/2 - l, 1) as an exact identity in x, for the
// unshifted formula (l = 0) and every shift l = 1..nu-1.
// Requires nu >= 1 and k >= nu.
bool verify_multiplication_formula(int k, int nu);

} // namespace bernmom
