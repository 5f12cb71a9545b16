#include <bernmom/harness.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <bernmom/bernoulli.hpp>
#include <bernmom/moments.hpp>

namespace bernmom
{

namespace
{

int alternating(int k)
{
    return k % 2 == 0 ? 1 : -1;
}

bool sign_ok(const Rational &gamma, int k, ConjectureMode mode)
{
    const int s = sgn(gamma) * alternating(k);
    return mode == ConjectureMode::weak ? s > 0 : s >= 0;
}

bool holds_between(const MomentSeries &v, const Rational &nu, int k, int k_cap)
{
    const auto g = gamma_ber(v, nu);
    for (int j = k; j <= k_cap; ++j) {
        if (sgn(g.moment(2 * j)) * alternating(j) < 0) {
            return false;
        }
    }
    return true;
}

Rational geometric_sum(const Rational &ratio_num, const Rational &ratio_den, int terms)
{
    // sum_{j=0}^{terms-1} num^j den^{terms-1-j}
    Rational total(0);
    for (int j = 0; j < terms; ++j) {
        total += pow(ratio_num, j) * pow(ratio_den, terms - 1 - j);
    }
    return total;
}

} // namespace

std::string to_string(ConjectureMode mode)
{
    return mode == ConjectureMode::weak ? "W" : "S";
}

ConjectureMode parse_mode(const std::string &text)
{
    if (text == "W" || text == "w") {
        return ConjectureMode::weak;
    }
    if (text == "S" || text == "s") {
        return ConjectureMode::strong;
    }
    throw std::invalid_argument("mode must be W or S, got '" + text + "'");
}

Rational conjecture_nu(const Spectrum &s, ConjectureMode mode)
{
    return mode == ConjectureMode::weak ? s.nu_weak() : s.nu_strong();
}

ConjectureReport check_signs_at(const Spectrum &s, const Rational &nu, ConjectureMode mode, int k_max)
{
    if (k_max < 0) {
        throw std::invalid_argument("k_max must be nonnegative");
    }
    const auto g = gamma_ber(v_sing(s, 2 * k_max), nu);
    ConjectureReport r{mode, nu, k_max, {}, true};
    for (int k = 0; k <= k_max; ++k) {
        const Rational gk = g.moment(2 * k);
        // Gamma_0 = mu > 0 in both modes.
        const bool ok = k == 0 ? sgn(gk) > 0 : sign_ok(gk, k, mode);
        r.verdicts.push_back({k, gk, ok});
        r.overall = r.overall && ok;
    }
    return r;
}

ConjectureReport check_conjecture(const Spectrum &s, ConjectureMode mode, int k_max)
{
    return check_signs_at(s, conjecture_nu(s, mode), mode, k_max);
}

Rational nu_threshold(const Spectrum &s, int k, const Rational &nu_hi, int steps, int k_cap)
{
    if (k < 0) {
        throw std::invalid_argument("nu_threshold: k must be nonnegative");
    }
    if (steps < 1) {
        throw std::invalid_argument("nu_threshold: steps must be at least 1");
    }
    if (k_cap < 0) {
        k_cap = k;
    }
    if (k_cap < k) {
        throw std::invalid_argument("nu_threshold: k_cap must be at least k");
    }
    const auto v = v_sing(s, 2 * k_cap);
    if (!holds_between(v, nu_hi, k, k_cap)) {
        throw std::invalid_argument("nu_threshold: sign property fails at nu_hi = " + bernmom::to_string(nu_hi));
    }
    if (holds_between(v, Rational(0), k, k_cap)) {
        return Rational(0);
    }
    Rational lo(0);
    Rational hi = nu_hi;
    for (int i = 0; i < steps; ++i) {
        const Rational mid = (lo + hi) / 2;
        if (holds_between(v, mid, k, k_cap)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

std::vector<double> trace_convergence(const Spectrum &s, const Rational &nu, int k_max)
{
    if (sgn(nu) <= 0) {
        throw std::invalid_argument("trace_convergence needs nu > 0");
    }
    if (k_max < 1) {
        throw std::invalid_argument("trace_convergence needs k_max >= 1");
    }
    const auto g = gamma_ber(v_sing(s, 2 * k_max), nu);
    const double nu_d = to_double(nu);
    const double log_two_pi = std::log(2.0 * std::numbers::pi);
    std::vector<double> out;
    for (int k = 1; k <= k_max; ++k) {
        const Rational gk = g.moment(2 * k);
        if (is_zero(gk)) {
            out.push_back(0.0);
            continue;
        }
        const double log_mag = log_abs(gk) + 2 * k * log_two_pi + std::lgamma(nu_d) - std::log(2.0)
                               - std::lgamma(2.0 * k + 1.0) - (nu_d - 1.0) * std::log(2.0 * k);
        out.push_back(alternating(k) * sgn(gk) * std::exp(log_mag));
    }
    return out;
}

double trace_target(const Spectrum &s)
{
    double total = 0.0;
    for (const auto &[alpha, m] : s.entries()) {
        total += to_double(m) * std::cos(2.0 * std::numbers::pi * to_double(alpha - s.center()));
    }
    return total;
}

Rational curve_correction_gamma(long n1, long n2, long w1, long w2, int k)
{
    if (k < 0) {
        throw std::invalid_argument("k must be nonnegative");
    }
    const Rational a(Integer(w1) * n1 * n2);
    Rational total(0);
    for (int i = 0; i <= k; ++i) {
        total += Rational(binomial(2 * k, 2 * i)) * bernoulli_number(2 * i) * bernoulli_number(2 * (k - i))
                 * (pow(a, 1 - 2 * i) - pow(Rational(w2), 1 - 2 * i))
                 * (1 - pow(Rational(n2), 1 - 2 * (k - i)));
    }
    return total;
}

std::vector<Rational> curve_correction_terms(long n1, long n2, long w1, long w2, int k)
{
    if (k < 1) {
        throw std::invalid_argument("k must be at least 1");
    }
    const Rational a(Integer(w1) * n1 * n2);
    const Rational n2q(n2), w2q(w2);
    const Rational prod = w2q * a;
    std::vector<Rational> terms;
    terms.push_back(-bernoulli_number(2 * k)
                    * (geometric_sum(n2q, 1, 2 * k - 1) / pow(n2q, 2 * k - 1)
                       + geometric_sum(w2q, a, 2 * k - 1) / pow(prod, 2 * k - 1)));
    for (int i = 1; i < k; ++i) {
        terms.push_back(Rational(binomial(2 * k, 2 * i)) * bernoulli_number(2 * i) * bernoulli_number(2 * (k - i))
                        * geometric_sum(w2q, a, 2 * i - 1) / pow(prod, 2 * i - 1)
                        * geometric_sum(n2q, 1, 2 * (k - i) - 1) / pow(n2q, 2 * (k - i) - 1));
    }
    return terms;
}

} // namespace bernmom
