#pragma once

#include <vector>

#include <bernmom/rational.hpp>
#include <bernmom/series.hpp>

namespace bernmom
{

// B_0, ..., B_{count-1} from the recursion sum_{j<k} C(k,j) B_j = 0 (k >= 2),
// so B_1 = -1/2. Results are cached; safe to call from several threads.
std::vector<Rational> bernoulli_numbers(int count);

// B_k alone (uses the same cache).
Rational bernoulli_number(int k);

// log((t/2) / sinh(t/2)) truncated at the given order. Even, no constant
// term; the t^{2k} coefficient is -B_{2k} / (2k (2k)!).
TruncatedSeries theta_ber(int order);

} // namespace bernmom
