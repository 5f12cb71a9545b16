#include <bernmom/bernoulli_poly.hpp>

#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <bernmom/bernoulli.hpp>
#include <bernmom/series.hpp>

namespace bernmom
{

namespace
{

std::mutex g_apoly_mutex;
std::vector<BivariatePolynomial> g_apoly_cache;

// A_0..A_{order} from e^{xt} * exp(nu * Theta(t)) with symbolic x, nu.
std::vector<BivariatePolynomial> expand_generating_function(int order)
{
    const auto theta = theta_ber(order);
    const MultiPoly nu = MultiPoly::variable(var_nu);
    Series<MultiPoly> exponent(order);
    for (int k = 0; k <= order; ++k) {
        exponent[k] = nu * theta[k];
    }
    const auto e_nu = exp(exponent);

    Series<MultiPoly> e_x(order);
    MultiPoly x_power(Rational(1));
    for (int k = 0; k <= order; ++k) {
        e_x[k] = x_power * frac(1, factorial(static_cast<unsigned long>(k)));
        x_power = x_power * MultiPoly::variable(var_x);
    }
    const auto product = e_x * e_nu;

    std::vector<BivariatePolynomial> out;
    out.reserve(static_cast<std::size_t>(order) + 1);
    for (int k = 0; k <= order; ++k) {
        out.push_back(product[k] * Rational(factorial(static_cast<unsigned long>(k))));
    }
    return out;
}

Rational rational_from_double(double v)
{
    if (!std::isfinite(v)) {
        throw std::invalid_argument("non-finite floating point argument");
    }
    return Rational(v);
}

void check_gamma_argument(double nu)
{
    if (nu <= 0.0 && std::floor(nu) == nu) {
        throw std::domain_error("nu must not be a nonpositive integer");
    }
}

double gamma_sign(double nu)
{
    if (nu > 0.0) {
        return 1.0;
    }
    return static_cast<long>(std::ceil(-nu)) % 2 == 0 ? 1.0 : -1.0;
}

// sign * value * (2 pi)^m Gamma(nu) / (2 m! m^{nu-1}), in log domain.
double normalize(const Rational &value, int m, double nu, double sign)
{
    if (is_zero(value)) {
        return 0.0;
    }
    const double two_pi = 2.0 * std::numbers::pi;
    const double log_mag = log_abs(value) + m * std::log(two_pi) + std::lgamma(nu) - std::log(2.0)
                           - std::lgamma(m + 1.0) - (nu - 1.0) * std::log(static_cast<double>(m));
    const double s = sign * (sgn(value) < 0 ? -1.0 : 1.0) * gamma_sign(nu);
    return s * std::exp(log_mag);
}

} // namespace

BivariatePolynomial a_poly(int k)
{
    if (k < 0) {
        throw std::invalid_argument("a_poly: k must be nonnegative");
    }
    std::lock_guard lock(g_apoly_mutex);
    if (static_cast<int>(g_apoly_cache.size()) <= k) {
        const int order = std::max(k, 2 * static_cast<int>(g_apoly_cache.size()));
        g_apoly_cache = expand_generating_function(order);
    }
    return g_apoly_cache[static_cast<std::size_t>(k)];
}

BivariatePolynomial a_poly_assembled(int k)
{
    if (k < 0) {
        throw std::invalid_argument("a_poly_assembled: k must be nonnegative");
    }
    // A_j(0, nu) for j = 0..k as polynomials in nu. Odd ones vanish; even
    // ones integrate d/dnu A_j = sum_{i>=1} C(j,2i) (-B_{2i}/(2i)) A_{j-2i}
    // with A_j(0, 0) = 0 for j >= 1.
    const auto b = bernoulli_numbers(k + 1);
    std::vector<UniPoly> at_zero(static_cast<std::size_t>(k) + 1);
    at_zero[0] = UniPoly(Rational(1));
    for (int j = 2; j <= k; j += 2) {
        UniPoly deriv;
        for (int i = 1; 2 * i <= j; ++i) {
            const Rational c = Rational(binomial(j, 2 * i)) * (-b[static_cast<std::size_t>(2 * i)])
                               / Rational(2 * i);
            deriv = deriv + at_zero[static_cast<std::size_t>(j - 2 * i)] * c;
        }
        std::vector<Rational> integral(static_cast<std::size_t>(deriv.degree()) + 2);
        for (int d = 0; d <= deriv.degree(); ++d) {
            integral[static_cast<std::size_t>(d) + 1] = deriv.coeff(d) / Rational(d + 1);
        }
        at_zero[static_cast<std::size_t>(j)] = UniPoly(std::move(integral));
    }

    BivariatePolynomial result;
    for (int j = 0; 2 * j <= k; ++j) {
        const UniPoly &a = at_zero[static_cast<std::size_t>(2 * j)];
        const Rational c = Rational(binomial(k, 2 * j));
        for (int d = 0; d <= a.degree(); ++d) {
            MultiPoly::Exponents e{static_cast<std::uint32_t>(k - 2 * j), static_cast<std::uint32_t>(d)};
            result += MultiPoly::monomial(c * a.coeff(d), e);
        }
    }
    return result;
}

UniPoly a_poly_at_nu(int k, const Rational &nu)
{
    return a_poly(k).substitute(var_nu, nu).to_univariate(var_x);
}

Rational a_eval(int k, const Rational &x, const Rational &nu)
{
    return a_poly(k).eval({x, nu});
}

Rational norlund_b(int k, const Rational &nu, const Rational &x)
{
    return a_eval(k, x - nu / 2, nu);
}

Rational bernoulli_poly_value(int k, const Rational &x)
{
    return a_eval(k, x - frac(1, 2), Rational(1));
}

double normalized_a(int k, double x, double nu)
{
    if (k < 1) {
        throw std::invalid_argument("normalized_a: k must be at least 1");
    }
    check_gamma_argument(nu);
    const Rational value = a_eval(2 * k, rational_from_double(x), rational_from_double(nu));
    return normalize(value, 2 * k, nu, k % 2 == 0 ? 1.0 : -1.0);
}

double normalized_a_odd(int k, double x, double nu)
{
    if (k < 1) {
        throw std::invalid_argument("normalized_a_odd: k must be at least 1");
    }
    check_gamma_argument(nu);
    const Rational value = a_eval(2 * k - 1, rational_from_double(x), rational_from_double(nu));
    return normalize(value, 2 * k - 1, nu, (k - 1) % 2 == 0 ? 1.0 : -1.0);
}

double reduce_periodic(double x)
{
    double r = x - std::round(x);
    if (r <= -0.5) {
        r += 1.0;
    }
    return r;
}

double periodic_a1(int k, double x)
{
    if (k < 0) {
        throw std::invalid_argument("periodic_a1: k must be nonnegative");
    }
    return a_poly_at_nu(k, Rational(1)).eval(reduce_periodic(x));
}

double fourier_partial_sum(int k, double x, int terms)
{
    if (k < 1) {
        throw std::invalid_argument("fourier_partial_sum: k must be at least 1");
    }
    if (terms < 1) {
        throw std::invalid_argument("fourier_partial_sum: need at least one term");
    }
    const double two_pi = 2.0 * std::numbers::pi;
    // Prefactor 2 k! / (2 pi)^k with the sign (-1)^{m-1} (k = 2m) or
    // (-1)^m (k = 2m - 1).
    const int m = (k + 1) / 2;
    const bool even = k % 2 == 0;
    const double sign = even ? ((m - 1) % 2 == 0 ? 1.0 : -1.0) : (m % 2 == 0 ? 1.0 : -1.0);
    const double prefactor = sign * 2.0 * std::exp(std::lgamma(k + 1.0) - k * std::log(two_pi));
    // Sum the small tail first.
    double sum = 0.0;
    for (int n = terms; n >= 1; --n) {
        const double alt = n % 2 == 0 ? 1.0 : -1.0;
        const double angle = two_pi * n * x;
        const double harmonic = even ? std::cos(angle) : std::sin(angle);
        sum += alt * harmonic / std::pow(static_cast<double>(n), k);
    }
    return prefactor * sum;
}

bool verify_multiplication_formula(int k, int nu)
{
    if (nu < 1 || k < nu) {
        throw std::invalid_argument("verify_multiplication_formula: need nu >= 1 and k >= nu");
    }
    const Rational nu_q(nu);
    const UniPoly lhs = a_poly_at_nu(k, nu_q);
    const Rational outer = Rational(binomial(k - 1, nu - 1));
    for (int l = 0; l < nu; ++l) {
        const Rational shift = frac(nu - 1, 2) - Rational(l);
        UniPoly rhs;
        for (int j = 0; j < nu; ++j) {
            const Rational sign = (nu - 1 - j) % 2 == 0 ? Rational(1) : Rational(-1);
            const Rational c = outer * sign * Rational(binomial(nu - 1, j)) * frac(k, k - j);
            rhs = rhs + a_poly_at_nu(j, nu_q) * a_poly_at_nu(k - j, Rational(1)).shifted(shift) * c;
        }
        if (!(rhs == lhs)) {
            return false;
        }
    }
    return true;
}

} // namespace bernmom
