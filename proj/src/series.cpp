#include <bernmom/series.hpp>

namespace bernmom
{

TruncatedSeries exp_linear(const Rational &a, int order)
{
    TruncatedSeries s(order);
    Rational term(1);
    for (int k = 0; k <= order; ++k) {
        s[k] = term;
        term = term * a / Rational(k + 1);
    }
    return s;
}

Rational moment(const TruncatedSeries &s, int k)
{
    return s[k] * Rational(factorial(static_cast<unsigned long>(k)));
}

TruncatedSeries from_moments(const std::vector<Rational> &values)
{
    TruncatedSeries s(static_cast<int>(values.size()) - 1);
    for (std::size_t k = 0; k < values.size(); ++k) {
        s[static_cast<int>(k)] = values[k] / Rational(factorial(k));
    }
    return s;
}

} // namespace bernmom
