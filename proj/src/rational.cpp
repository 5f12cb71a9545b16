#include <bernmom/rational.hpp>

#include <cmath>
#include <stdexcept>

namespace bernmom
{

std::string to_string(const Rational &q)
{
    return q.get_str();
}

namespace
{

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

bool is_integer_literal(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (c < '0' || c > '9') {
            return false;
        }
    }
    return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    const auto s = trim(text);
    const auto slash = s.find('/');
    const auto num = s.substr(0, slash);
    const auto den = slash == std::string_view::npos ? std::string_view{"1"} : s.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den)) {
        throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
    }
    auto strip_plus = [](std::string_view v) {
        return std::string(!v.empty() && v.front() == '+' ? v.substr(1) : v);
    };
    Integer p(strip_plus(num));
    Integer d(strip_plus(den));
    if (d == 0) {
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    Rational q(p, d);
    q.canonicalize();
    return q;
}

std::vector<Rational> parse_rational_list(std::string_view text)
{
    std::vector<Rational> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto end = comma == std::string_view::npos ? text.size() : comma;
        out.push_back(parse_rational(text.substr(start, end - start)));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

Rational pow(const Rational &base, long exponent)
{
    if (exponent < 0) {
        if (is_zero(base)) {
            throw std::domain_error("negative power of zero");
        }
        return pow(Rational(1) / base, -exponent);
    }
    Rational q;
    mpz_pow_ui(q.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(q.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return q;
}

Integer factorial(unsigned long n)
{
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

Integer binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

namespace
{

double log_abs_integer(const Integer &z)
{
    long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, z.get_mpz_t());
    return std::log(std::fabs(mant)) + static_cast<double>(exp2) * std::log(2.0);
}

} // namespace

double log_abs(const Rational &q)
{
    if (is_zero(q)) {
        throw std::domain_error("log of zero");
    }
    return log_abs_integer(q.get_num()) - log_abs_integer(q.get_den());
}

double to_double(const Rational &q)
{
    if (is_zero(q)) {
        return 0.0;
    }
    const double l = log_abs(q);
    if (std::fabs(l) < 700.0) {
        return q.get_d();
    }
    const double mag = std::exp(l);
    return sgn(q) < 0 ? -mag : mag;
}

} // namespace bernmom
