#pragma once

#include <string>
#include <vector>

#include <bernmom/rational.hpp>
#include <bernmom/spectrum.hpp>

namespace bernmom
{

enum class ConjectureMode
{
    weak,   // (-1)^k Gamma_{2k}(V, n+1) > 0
    strong, // (-1)^k Gamma_{2k}(V, alpha_mu - alpha_1) >= 0
};

// "W" / "S"; parse throws std::invalid_argument.
std::string to_string(ConjectureMode mode);
ConjectureMode parse_mode(const std::string &text);

// nu used by the mode: n+1 for weak, alpha_mu - alpha_1 for strong.
Rational conjecture_nu(const Spectrum &s, ConjectureMode mode);

struct KVerdict
{
    int k;
    Rational gamma; // Gamma_{2k}
    bool sign_ok;
};

struct ConjectureReport
{
    ConjectureMode mode;
    Rational nu;
    int k_max;
    std::vector<KVerdict> verdicts; // k = 0..k_max
    bool overall;
};

ConjectureReport check_conjecture(const Spectrum &s, ConjectureMode mode, int k_max);

// Sign check at an arbitrary nu with the rule of the given mode.
ConjectureReport check_signs_at(const Spectrum &s, const Rational &nu, ConjectureMode mode, int k_max);

// Upper estimate of the least nu with (-1)^{k'} Gamma_{2k'}(V, nu) >= 0 for
// k <= k' <= k_cap, by bisection on [0, nu_hi]. Returns 0 if the property
// holds at 0; otherwise the estimate lies within nu_hi / 2^steps of the
// infimum. k_cap < 0 means k_cap = k. Throws std::invalid_argument if the
// property fails at nu_hi, steps < 1 or k < 0.
Rational nu_threshold(const Spectrum &s, int k, const Rational &nu_hi, int steps, int k_cap = -1);

// (-1)^k Gamma_{2k} (2 pi)^{2k} Gamma(nu) / (2 (2k)! (2k)^{nu-1}) for
// k = 1..k_max; requires nu > 0 and k_max >= 1.
std::vector<double> trace_convergence(const Spectrum &s, const Rational &nu, int k_max);

// sum_j m_j cos(2 pi (alpha_j - (n-1)/2)), the limit of trace_convergence.
double trace_target(const Spectrum &s);

// Bernoulli moment at nu = 2 of the curve correction term
// (F(w2) - F(w1 n1 n2)) F(n2), with F(a) = sum_{i<a} T^{i/a}, written as
// sum_i C(2k,2i) B_{2i} B_{2k-2i} (a^{1-2i} - w2^{1-2i}) (1 - n2^{1-2(k-i)}),
// a = w1 n1 n2.
Rational curve_correction_gamma(long n1, long n2, long w1, long w2, int k);

// The same quantity divided by Delta (n2 - 1), Delta = w2 - w1 n1 n2, split
// into the k summands of its factored form; each has sign (-1)^k when
// Delta > 0. Requires k >= 1.
std::vector<Rational> curve_correction_terms(long n1, long n2, long w1, long w2, int k);

} // namespace bernmom
