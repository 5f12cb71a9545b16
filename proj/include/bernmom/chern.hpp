#pragma once

#include <map>
#include <vector>

#include <bernmom/moments.hpp>
#include <bernmom/poly.hpp>
#include <bernmom/rational.hpp>

namespace bernmom
{

// Polynomial in nu (variable 0) and y_1, y_2, ... (variable i), graded by
// deg y_i = i.
using SymPoly = MultiPoly;
inline constexpr std::size_t sym_var_nu = 0;

// Grading weights {0, 1, ..., m} for SymPoly::weighted_* calls.
std::vector<long> y_weights(int m);

// Power sum p_r(x_1..x_m) in the elementary symmetric polynomials y_i.
SymPoly power_sum_in_elementary(int r, int m);

// a_{k,2k-j}: t^j coefficient of sum_i (x_i^{2k} - (x_i - t)^{2k} + t^{2k})
// in the elementary symmetric polynomials; k >= 1, 1 <= j <= 2k-1.
SymPoly a_sym(int k, int j, int m);

// t^k coefficient, y-degree l part, of
// exp(sum_i [Theta(x_i) - Theta(x_i - t) + Theta(t)]) in m variables (l <= m).
SymPoly b_sym(int k, int l, int m);

// Same for the product with exp(-nu Theta(t)).
SymPoly c_sym(int k, int l, int m);

// c_{kl} assembled as sum_j A_j(0,-nu)/j! b_{k-j,l}.
SymPoly c_sym_from_b(int k, int l, int m);

// d_{kj} = k! (-1)^j c_{k-j,j}; k >= 1, 0 <= j <= k-1.
SymPoly d_sym(int k, int j, int m);

inline constexpr int default_q_k_cap = 4;

// q_{kj} = d^{(j)}_{2k,j}; k >= 1, 0 <= j <= 2k-1, k <= k_cap.
SymPoly q_poly(int k, int j, int k_cap = default_q_k_cap);

// Chern numbers of an n-dimensional compact complex manifold, keyed by
// partitions of n written in descending order.
class ChernData
{
public:
    using Partition = std::vector<int>;

    // Keys are normalized to descending order; each must be a partition of
    // n. Throws std::invalid_argument otherwise.
    ChernData(int n, std::map<Partition, Rational> numbers);

    int n() const
    {
        return m_n;
    }
    const std::map<Partition, Rational> &numbers() const
    {
        return m_numbers;
    }
    // Throws std::invalid_argument if the partition has no value.
    const Rational &integral(Partition parts) const;

private:
    int m_n;
    std::map<Partition, Rational> m_numbers;
};

// All partitions of n, each in descending order.
std::vector<ChernData::Partition> partitions(int n);

ChernData chern_data_builtin(const ManifoldSpec &m);

// Gamma_{2k}(V^mfd, nu) = sum_{j <= min(2k-1, n)} int q_{kj}(n - nu, c) c_{n-j},
// and int c_n for k = 0.
Rational gamma_mfd_from_chern(const ChernData &x, const Rational &nu, int k, int k_cap = default_q_k_cap);

// V_{2k} = Gamma_{2k} at nu = 0.
Rational v_mfd_from_chern(const ChernData &x, int k, int k_cap = default_q_k_cap);

} // namespace bernmom
