#include <thread>

#include <gtest/gtest.h>

#include <qv/errors.hpp>
#include <qv/products.hpp>

using namespace qv;

namespace {

const sym_exps X = symbol_context::standard().unit("x");

rational R(long n, long d = 1)
{
    return make_rational(n, d);
}

monomial Qm(const rational &e)
{
    return monomial::q(e);
}

// sum_{|n| <= 40} (-1)^n q^{m C(n,2)} x^n, summed term by term.
series triple_product_oracle(const monomial &x, long m, const rational &N)
{
    series s = series::zero(N);
    for (long n = -40; n <= 40; ++n) {
        monomial t = monomial(n % 2 ? -1 : 1, R(m * n * (n - 1) / 2)) * x.pow(n);
        if (t.q_exp() < N) {
            s += t.to_series();
        }
    }
    return s.truncated(N);
}

void expect_same(const series &a, const series &b, const rational &order)
{
    auto rep = eq_up_to(a, b, order);
    EXPECT_TRUE(rep.equal) << "first difference at q^" << to_string(rep.first_mismatch->exponent) << ": "
                           << rep.first_mismatch->lhs.to_string() << " vs " << rep.first_mismatch->rhs.to_string();
}

} // namespace

TEST(Products, PartitionNumbers)
{
    const long p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176, 231, 297, 385, 490, 627};
    series inv = invert(poch_infinite(Qm(1), 1, 21), rational(21));
    for (int n = 0; n <= 20; ++n) {
        EXPECT_EQ(inv.coeff(n), coefficient(p[n])) << "p(" << n << ")";
    }
}

TEST(Products, PentagonalNumberTheorem)
{
    rational N = 60;
    series euler = poch_infinite(Qm(1), 1, N);
    series pent = series::zero(N);
    for (long k = -10; k <= 10; ++k) {
        rational e = R(k * (3 * k - 1), 2);
        if (e < N) {
            pent += series::q_power(e, coefficient(k % 2 ? -1 : 1));
        }
    }
    expect_same(euler, pent.truncated(N), N);
}

TEST(Products, FinitePochhammerMatchesProduct)
{
    series direct = series::constant(1);
    for (int k = 0; k < 5; ++k) {
        direct = direct * (series::constant(1) - monomial(-2, R(1, 2) + R(3 * k)).to_series());
    }
    expect_same(poch_finite(monomial(-2, R(1, 2)), 3, 5), direct, 100);
    expect_same(poch_finite(Qm(1), 1, 0), series::constant(1), 100);
}

TEST(Products, InfiniteProductWithFormalSymbol)
{
    rational N = 15;
    series direct = series::constant(1);
    for (int k = 0; k < 15; ++k) {
        direct = (direct * (series::constant(1) - monomial(1, R(2 * k), X).to_series())).truncated(N);
    }
    expect_same(poch_infinite(monomial(1, 0, X), 2, N), direct, N);
    EXPECT_THROW(poch_infinite(Qm(-1), 1, N), divergent_product);
}

struct jtp_case {
    monomial x;
    long m;
};

class TripleProduct : public ::testing::TestWithParam<jtp_case> {};

TEST_P(TripleProduct, ProductEqualsBilateralSum)
{
    const auto &c = GetParam();
    rational N = 60;
    expect_same(j_theta(c.x, c.m, N), triple_product_oracle(c.x, c.m, N), N);
}

INSTANTIATE_TEST_SUITE_P(
    Cases, TripleProduct,
    ::testing::Values(jtp_case{monomial(1, 0, X), 1}, jtp_case{monomial(1, 0, X), 3}, jtp_case{monomial(-1, 2), 5},
                      jtp_case{monomial(2, 1), 3}, jtp_case{monomial(-1, R(1, 2)), 1},
                      jtp_case{monomial(R(1, 3), 4), 3}, jtp_case{monomial(-1, 7), 5}, jtp_case{monomial(1, -3), 2}));

class ThetaLaws : public ::testing::TestWithParam<int> {};

// (j1): j(q^{nm} x, q^m) = (-1)^n q^{-m C(n,2)} x^{-n} j(x, q^m)
TEST_P(ThetaLaws, ShiftLaw)
{
    int n = GetParam();
    rational N = 40;
    for (long m : {1L, 3L, 5L}) {
        for (monomial x : {monomial(-1, 1), monomial(2, R(1, 2)), monomial(1, 0, X)}) {
            monomial shifted = Qm(R(n * m)) * x;
            monomial factor = monomial(n % 2 ? -1 : 1, R(-m * n * (n - 1) / 2)) * x.pow(-n);
            rational pad = factor.q_exp() < 0 ? rational(-factor.q_exp()) : rational(0);
            series rhs = (factor.to_series() * j_theta(x, m, N + pad)).truncated(N);
            expect_same(triple_product_oracle(shifted, m, N), rhs, N);
        }
    }
}

INSTANTIATE_TEST_SUITE_P(Shifts, ThetaLaws, ::testing::Values(-2, -1, 0, 1, 2, 3));

// (j2): j(x, q) = j(q/x, q) = -x j(1/x, q)
TEST(Products, InversionLaw)
{
    rational N = 40;
    for (long m : {1L, 2L, 5L}) {
        for (monomial x : {monomial(1, 0, X), monomial(-3, 1), monomial(1, R(1, 3))}) {
            series jx = j_theta(x, m, N);
            expect_same(jx, j_theta(Qm(m) / x, m, N), N);
            expect_same(jx, (-x).to_series() * j_theta(x.inverse(), m, N + 2), N);
        }
    }
}

TEST(Products, ThetaVanishesAtPowersOfQm)
{
    EXPECT_TRUE(j_theta(Qm(5), 5, 30).is_zero());
    EXPECT_TRUE(j_theta(monomial(1), 3, 30).is_zero());
}

TEST(Products, NamedThetaQuotients)
{
    rational N = 50;
    expect_same(J(5, N), poch_infinite(Qm(5), 5, N), N);
    expect_same(J(2, 5, N), j_theta(Qm(2), 5, N), N);
    expect_same(Jbar(0, 4, N), j_theta(monomial(-1), 4, N), N);
    // J_{1,2} = (q;q)_inf^2 / (q^2;q^2)_inf
    series lhs = J(1, 2, N) * poch_infinite(Qm(2), 2, N);
    expect_same(lhs, poch_infinite(Qm(1), 1, N) * poch_infinite(Qm(1), 1, N), N);
}

TEST(Products, ConcurrentCacheUse)
{
    clear_product_caches();
    std::vector<series> results(8);
    std::vector<std::thread> pool;
    for (int t = 0; t < 8; ++t) {
        pool.emplace_back([t, &results] { results[t] = j_theta(monomial(-1, 2), 5, 80) * J(1, 80); });
    }
    for (auto &th : pool) {
        th.join();
    }
    for (int t = 1; t < 8; ++t) {
        expect_same(results[0], results[t], 80);
    }
}
