#include <doctest.h>

#include <bernmom/bernoulli_poly.hpp>
#include <bernmom/chern.hpp>
#include <bernmom/moments.hpp>

#include "test_support.hpp"

using namespace bernmom;
using bernmom::testing::Q;

namespace
{

SymPoly nu()
{
    return SymPoly::variable(sym_var_nu);
}

SymPoly y(int i)
{
    return SymPoly::variable(static_cast<std::size_t>(i));
}

std::vector<ManifoldSpec> hrr_instances()
{
    return {ManifoldSpec::projective(1), ManifoldSpec::projective(2), ManifoldSpec::projective(3),
            ManifoldSpec::k3(),          ManifoldSpec::curve(0),      ManifoldSpec::curve(2),
            ManifoldSpec::curve(3)};
}

} // namespace

TEST_CASE("power sums via Newton identities")
{
    CHECK(power_sum_in_elementary(1, 3) == y(1));
    CHECK(power_sum_in_elementary(2, 3) == y(1) * y(1) - y(2) * Rational(2));
    CHECK(power_sum_in_elementary(3, 3) == pow(y(1), 3) - y(1) * y(2) * Rational(3) + y(3) * Rational(3));
    // Two variables x = 2, 3: y_1 = 5, y_2 = 6, p_4 = 16 + 81.
    CHECK(power_sum_in_elementary(4, 2).eval({0, 5, 6}) == 97);
    CHECK_THROWS_AS(power_sum_in_elementary(0, 2), std::invalid_argument);
}

TEST_CASE("a_sym")
{
    for (int m = 1; m <= 4; ++m) {
        CHECK(a_sym(1, 1, m) == y(1) * Rational(2));
    }
    CHECK(a_sym(2, 1, 3) == a_sym(2, 1, 4));
    CHECK(a_sym(3, 2, 4) == a_sym(3, 2, 6));
    CHECK(a_sym(2, 1, 3).weighted_degree(y_weights(3)) == 3);
    CHECK(a_sym(2, 1, 3).weighted_part(y_weights(3), 3) == a_sym(2, 1, 3));
    // Direct check with x = (1, 2): sum_i (x_i^4 - (x_i - t)^4 + t^4), t^2 coefficient -6 (1 + 4) ... .
    CHECK(a_sym(2, 2, 2).eval({0, 3, 2}) == -30);
    CHECK_THROWS_AS(a_sym(2, 4, 3), std::invalid_argument);
    CHECK_THROWS_AS(a_sym(2, 0, 3), std::invalid_argument);
}

TEST_CASE("c polynomials")
{
    for (int k = 1; k <= 6; ++k) {
        CHECK(c_sym(k, 0, 2).substitute(sym_var_nu, 0).is_zero());
    }
    CHECK(c_sym(2, 0, 2) == nu() * Q("1/24"));
    for (int k = 0; k <= 6; ++k) {
        for (int l = 0; l <= 3; ++l) {
            CHECK(c_sym(k, l, 3) == c_sym_from_b(k, l, 3));
            if (l >= 1) {
                CHECK(c_sym(k, l, 3).degree_in(sym_var_nu) <= (k - 1) / 2);
                if (k == 0) {
                    CHECK(c_sym(0, l, 3).is_zero());
                }
            }
        }
    }
    CHECK(c_sym(6, 0, 1).degree_in(sym_var_nu) == 3);
}

TEST_CASE("stability in m")
{
    for (int m = 1; m <= 4; ++m) {
        for (int k = 1; k <= 6; ++k) {
            for (int l = 0; l <= m; ++l) {
                CHECK(b_sym(k, l, m) == b_sym(k, l, m + 1));
                CHECK(c_sym(k, l, m) == c_sym(k, l, m + 1));
            }
            for (int j = 0; j <= std::min(k - 1, m); ++j) {
                CHECK(d_sym(k, j, m) == d_sym(k, j, m + 1));
            }
        }
    }
}

TEST_CASE("product bookkeeping reproduces d")
{
    const int order = 4;
    for (int m = 1; m <= 3; ++m) {
        const auto w = y_weights(m);
        // (sum_k t^k sum_l c_kl) (sum_i y_{m-i} (-t)^i), y-degree m part.
        for (int k = 0; k <= order; ++k) {
            SymPoly lhs;
            for (int i = 0; i <= std::min(k, m); ++i) {
                const SymPoly yy = m - i == 0 ? SymPoly(Rational(1)) : y(m - i);
                SymPoly ck;
                for (int l = 0; l <= m; ++l) {
                    ck += c_sym(k - i, l, m);
                }
                lhs += (ck * yy * Rational(i % 2 == 0 ? 1 : -1)).weighted_part(w, m);
            }
            SymPoly rhs;
            if (k == 0) {
                rhs = y(m);
            } else {
                for (int j = 0; j <= std::min(k - 1, m); ++j) {
                    const SymPoly yy = m - j == 0 ? SymPoly(Rational(1)) : y(m - j);
                    rhs += yy * d_sym(k, j, m) * frac(1, factorial(k));
                }
            }
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("q polynomials")
{
    CHECK(q_poly(1, 0) == nu() * Q("1/12"));
    CHECK(q_poly(1, 1) == y(1) * Q("1/6"));
    CHECK(q_poly(2, 0) == nu() * nu() * Q("1/48") - nu() * Q("1/120"));
    CHECK(q_poly(2, 1) == (nu() * Q("1/12") - SymPoly(Q("1/30"))) * y(1));
    CHECK(q_poly(2, 2) == y(2) * Q("1/10") + y(1) * y(1) * Q("1/30"));
    CHECK(q_poly(2, 3) == y(1) * y(2) * Q("1/10") - y(3) * Q("1/10") - pow(y(1), 3) * Q("1/30"));
    for (int k = 1; k <= 3; ++k) {
        for (int j = 0; j <= 2 * k - 1; ++j) {
            const auto q = q_poly(k, j);
            CHECK(q.weighted_part(y_weights(j), j) == q);
            if (j == 0) {
                CHECK(q.degree_in(sym_var_nu) == k);
                CHECK(q.substitute(sym_var_nu, Q("5/3")) == SymPoly(a_eval(2 * k, 0, Q("-5/3"))));
            } else {
                CHECK(q.degree_in(sym_var_nu) <= k - 1 - j / 2);
            }
        }
    }
    CHECK_THROWS_AS(q_poly(5, 1), std::invalid_argument);
    CHECK_THROWS_AS(q_poly(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(q_poly(0, 0), std::invalid_argument);
}

TEST_CASE("Chern data")
{
    CHECK(partitions(4).size() == 5);
    CHECK(partitions(1) == std::vector<ChernData::Partition>{{1}});
    const auto p3 = chern_data_builtin(ManifoldSpec::projective(3));
    CHECK(p3.integral({3}) == 4);
    CHECK(p3.integral({1, 2}) == 24);
    CHECK(p3.integral({1, 1, 1}) == 64);
    CHECK(chern_data_builtin(ManifoldSpec::k3()).integral({2}) == 24);
    CHECK(chern_data_builtin(ManifoldSpec::curve(3)).integral({1}) == -4);
    CHECK_THROWS_AS(ChernData(2, {{{3}, Rational(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(ChernData(2, {{{2}, Rational(1)}}).integral({1, 1}), std::invalid_argument);
}

TEST_CASE("Chern route values")
{
    const auto p2 = chern_data_builtin(ManifoldSpec::projective(2));
    CHECK(v_mfd_from_chern(p2, 1) == 2);
    CHECK(v_mfd_from_chern(chern_data_builtin(ManifoldSpec::k3()), 1) == 4);
    CHECK(gamma_mfd_from_chern(chern_data_builtin(ManifoldSpec::k3()), 2, 1) == 0);
    CHECK(gamma_mfd_from_chern(chern_data_builtin(ManifoldSpec::projective(1)), 1, 1) == Q("1/3"));
    for (const auto &m : hrr_instances()) {
        const auto x = chern_data_builtin(m);
        CHECK(v_mfd_from_chern(x, 0) == x.integral({x.n()}));
        for (int k = 0; k <= 3; ++k) {
            CHECK(gamma_mfd_from_chern(x, 0, k) == v_mfd_from_chern(x, k));
        }
    }
}

TEST_CASE("HRR consistency with the chi route")
{
    for (const auto &m : hrr_instances()) {
        CAPTURE(m.name());
        const auto x = chern_data_builtin(m);
        const auto v = v_mfd(chi_vector(m), 6);
        const auto g = gamma_ber(v, m.dimension());
        const auto g_half = gamma_ber(v, Q("1/2"));
        for (int k = 0; k <= 3; ++k) {
            CHECK(v_mfd_from_chern(x, k) == v.moment(2 * k));
            CHECK(gamma_mfd_from_chern(x, m.dimension(), k) == g.moment(2 * k));
            CHECK(gamma_mfd_from_chern(x, Q("1/2"), k) == g_half.moment(2 * k));
        }
    }
}
