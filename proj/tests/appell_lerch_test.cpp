#include <random>

#include <gtest/gtest.h>

#include <qv/appell_lerch.hpp>
#include <qv/bilateral.hpp>
#include <qv/errors.hpp>
#include <qv/precision.hpp>
#include <qv/products.hpp>

using namespace qv;

namespace {

rational R(long n, long d = 1)
{
    return make_rational(n, d);
}

void expect_same(const series &a, const series &b, const rational &order)
{
    auto rep = eq_up_to(a, b, order);
    EXPECT_TRUE(rep.equal) << "first difference at q^" << to_string(rep.first_mismatch->exponent) << ": "
                           << rep.first_mismatch->lhs.to_string() << " vs " << rep.first_mismatch->rhs.to_string();
}

// c / (1 - mu) expanded geometrically on whichever side converges; terms past N dropped.
series geometric(const monomial &c, const monomial &mu, const rational &N)
{
    series s = series::zero(N);
    if (mu.q_exp() == 0) {
        return (c.to_series() * series::constant(rational(1 / (1 - mu.scalar())))).truncated(N);
    }
    monomial step = mu.q_exp() > 0 ? mu : mu.inverse();
    monomial t = mu.q_exp() > 0 ? c : -c * step;
    while (t.q_exp() < N) {
        s += t.to_series();
        t = t * step;
    }
    return s.truncated(N);
}

// sum_{|n| <= 30} (-1)^{l n} q^{l n(n+1)/2} b^n / (1 - a q^n)
series appell_oracle(long l, const monomial &a, const monomial &b, const rational &N)
{
    series s = series::zero(N);
    for (long n = -30; n <= 30; ++n) {
        monomial c = monomial((l * n) % 2 ? -1 : 1, R(l * n * (n + 1), 2)) * b.pow(n);
        s += geometric(c, a * monomial::q(n), N);
    }
    return s.truncated(N);
}

monomial random_param(std::mt19937 &rng)
{
    static const rational scalars[] = {R(-1), R(2), R(-1, 2), R(3), R(-2)};
    std::uniform_int_distribution<int> pick(0, 4);
    std::uniform_int_distribution<int> expo(-3, 9);
    return monomial(scalars[pick(rng)], expo(rng));
}

bool generic_at(const monomial &w, long m)
{
    return !(w.scalar() == 1 && is_integer(w.q_exp() / m));
}

} // namespace

struct appell_case {
    long level;
    monomial a;
    monomial b;
};

class AppellOracle : public ::testing::TestWithParam<appell_case> {};

TEST_P(AppellOracle, MatchesDirectExpansion)
{
    const auto &c = GetParam();
    rational N = 40;
    expect_same(appell_unnormalized(c.level, c.a, c.b, N), appell_oracle(c.level, c.a, c.b, N), N);
}

INSTANTIATE_TEST_SUITE_P(Cases, AppellOracle,
                         ::testing::Values(appell_case{3, monomial(-1), monomial::q(-1)},
                                           appell_case{5, monomial(-1), monomial::q(-2)},
                                           appell_case{2, monomial(-1), monomial(-1, R(-1, 2))},
                                           appell_case{1, monomial(2), monomial(-3)},
                                           appell_case{1, monomial(-1, 1), monomial(-1, -1)},
                                           appell_case{4, monomial(R(1, 2), 2), monomial(1, -1)}));

TEST(Appell, WidenedTailsDoNotChangeTheResult)
{
    bilateral_options wide;
    wide.extra_indices = 12;
    rational N = 50;
    expect_same(appell_unnormalized(3, monomial(-1), monomial::q(-1), N),
                appell_unnormalized(3, monomial(-1), monomial::q(-1), N, wide), N);
    expect_same(m_numerator(monomial(-1, 1), 5, monomial::q(4), N),
                m_numerator(monomial(-1, 1), 5, monomial::q(4), N, wide), N);
}

TEST(Appell, NonGenericAndFormalPoles)
{
    EXPECT_THROW(appell_unnormalized(1, monomial(1), monomial(-1), 10), non_generic_parameters);
    EXPECT_THROW(appell_unnormalized(1, monomial::q(2), monomial(-1), 10), non_generic_parameters);
    monomial x(1, 0, symbol_context::standard().unit("x"));
    EXPECT_THROW(appell_unnormalized(1, x, monomial(-1), 10), formal_pole);
}

class MLaws : public ::testing::TestWithParam<int> {};

TEST_P(MLaws, HoldOnRandomGenericParameters)
{
    std::mt19937 rng(GetParam());
    rational N = 30;
    int checked = 0;
    while (checked < 6) {
        long m = (checked % 2) ? 5 : 1;
        monomial x = random_param(rng);
        monomial z = random_param(rng);
        monomial z0 = random_param(rng);
        if (!generic_at(z, m) || !generic_at(x * z, m) || !generic_at(z0, m) || !generic_at(x * z0, m)) {
            continue;
        }
        ++checked;
        series mz = m_sum(x, m, z, N);
        // (m1)
        series rhs1 = at_order(N, [&](const rational &W) {
            return x.inverse().to_series() * m_sum(x.inverse(), m, z.inverse(), W);
        });
        expect_same(mz, rhs1, N);
        // (m1.5)
        expect_same(mz, m_sum(x, m, monomial::q(m) * z, N), N);
        // (m2)
        expect_same(mz, m_sum(x, m, z0, N) + delta_correction(x, m, z, z0, N), N);
    }
}

INSTANTIATE_TEST_SUITE_P(Seeds, MLaws, ::testing::Values(11, 12, 13));

TEST(MSum, TenthOrderRepresentations)
{
    rational N = 40;
    // X(q) = 2 m(-q^2, q^5, q^4) - J_{3,10} J_{5,10} / J_{1,5}, checked against the defining sum.
    series X = series::zero(N);
    for (long n = 0; n * n < 40; ++n) {
        series den = series::constant(1);
        for (long k = 1; k <= 2 * n; ++k) {
            den = den * (series::constant(1) + monomial::q(k).to_series());
        }
        X += (monomial(n % 2 ? -1 : 1, R(n * n)).to_series() * invert(den, N)).truncated(N);
    }
    series theta = at_order(N, [&](const rational &W) { return J(3, 10, W) * J(5, 10, W) * invert(J(1, 5, W), W); });
    expect_same(X.truncated(N), m_sum(monomial(-1, 2), 5, monomial::q(4), N).scaled(2) - theta, N);
}
