#include <bernmom/bernoulli.hpp>

#include <mutex>
#include <stdexcept>

namespace bernmom
{

namespace
{

std::mutex g_bernoulli_mutex;
std::vector<Rational> g_bernoulli_cache{Rational(1)};

} // namespace

std::vector<Rational> bernoulli_numbers(int count)
{
    if (count < 1) {
        throw std::invalid_argument("bernoulli_numbers: count must be at least 1");
    }
    std::lock_guard lock(g_bernoulli_mutex);
    auto &b = g_bernoulli_cache;
    while (static_cast<int>(b.size()) < count) {
        // B_{k-1} from 0 = sum_{j=0}^{k-1} C(k,j) B_j.
        const long k = static_cast<long>(b.size()) + 1;
        Rational acc(0);
        for (long j = 0; j + 1 < k; ++j) {
            acc += Rational(binomial(k, j)) * b[static_cast<std::size_t>(j)];
        }
        b.push_back(-acc / Rational(k));
    }
    return {b.begin(), b.begin() + count};
}

Rational bernoulli_number(int k)
{
    if (k < 0) {
        throw std::invalid_argument("bernoulli_number: negative index");
    }
    return bernoulli_numbers(k + 1).back();
}

TruncatedSeries theta_ber(int order)
{
    TruncatedSeries s(order);
    const auto b = bernoulli_numbers(order + 1);
    for (int k = 2; k <= order; k += 2) {
        s[k] = -b[static_cast<std::size_t>(k)] / (Rational(k) * Rational(factorial(static_cast<unsigned long>(k))));
    }
    return s;
}

} // namespace bernmom
