#include <random>

#include <gtest/gtest.h>

#include <qv/errors.hpp>
#include <qv/indefinite_theta.hpp>
#include <qv/precision.hpp>

using namespace qv;

namespace {

const sym_exps X = symbol_context::standard().unit("x");

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

constexpr long box = 45;

// Plain double loop over the box |r|, |s| <= box.
series f_brute(const quad_form &form, const monomial &x, const monomial &y, const rational &N)
{
    series s = series::zero(N);
    for (long r = -box; r <= box; ++r) {
        for (long t = -box; t <= box; ++t) {
            if ((r >= 0) != (t >= 0)) {
                continue;
            }
            monomial term = monomial((r + t) % 2 ? -1 : 1, form.exponent(r, t)) * x.pow(r) * y.pow(t);
            if (r < 0) {
                term = -term;
            }
            if (term.q_exp() < N) {
                // Terms on the box edge would mean the box is too small for this form.
                EXPECT_LT(std::max(std::abs(r), std::abs(t)), box);
                s += term.to_series();
            }
        }
    }
    return s.truncated(N);
}

} // namespace

class IndefOracle : public ::testing::TestWithParam<int> {};

TEST_P(IndefOracle, AntidiagonalStreamMatchesDoubleLoop)
{
    std::mt19937 rng(GetParam());
    std::uniform_int_distribution<int> coef(1, 4);
    std::uniform_int_distribution<int> expo(0, 4);
    std::uniform_int_distribution<int> sign(0, 2);
    static const rational scalars[] = {R(1), R(-1), R(2)};
    rational N = 30;
    for (int round = 0; round < 4; ++round) {
        quad_form form{coef(rng), coef(rng), coef(rng)};
        monomial x(scalars[sign(rng)], 1 + expo(rng));
        monomial y(scalars[sign(rng)], 1 + expo(rng));
        SCOPED_TRACE("f_{" + std::to_string(form.a) + "," + std::to_string(form.b) + "," + std::to_string(form.c)
                     + "}(" + x.to_string() + ", " + y.to_string() + ")");
        expect_same(f_indef(form, x, y, N), f_brute(form, x, y, N), N);
    }
}

INSTANTIATE_TEST_SUITE_P(Seeds, IndefOracle, ::testing::Values(21, 22, 23, 24, 25));

TEST(IndefiniteTheta, FormalSymbolArgument)
{
    rational N = 20;
    quad_form form{3, 2, 1};
    monomial x = monomial::q(3);
    monomial y(1, 1, X);
    expect_same(f_indef(form, x, y, N), f_brute(form, x, y, N), N);
}

TEST(IndefiniteTheta, BaseChange)
{
    rational N = 40;
    quad_form form{3, 2, 1};
    series direct = f_indef(form, monomial::q(6), monomial::q(3), N, 2);
    expect_same(direct, substitute(f_indef(form, monomial::q(3), monomial(1, R(3, 2)), N / 2), 1, 2), N);
}

class QuadrantSymmetry : public ::testing::TestWithParam<quad_form> {};

// f_{a,b,c}(x, y) = f_{c,b,a}(y, x) = -q^{a+b+c}/(x y) f_{a,b,c}(q^{2a+b}/x, q^{2c+b}/y)
TEST_P(QuadrantSymmetry, Holds)
{
    const quad_form form = GetParam();
    rational N = 30;
    for (auto [x, y] : {std::pair{monomial::q(2), monomial(-1, 3)}, std::pair{monomial(2, 1), monomial(1, 2)},
                        std::pair{monomial(-1, 4), monomial(1, 0, X) * monomial::q(2)}}) {
        series f = f_indef(form, x, y, N);
        expect_same(f, f_indef(quad_form{form.c, form.b, form.a}, y, x, N), N);
        monomial pre = -monomial::q(form.a + form.b + form.c) / (x * y);
        monomial x2 = monomial::q(2 * form.a + form.b) / x;
        monomial y2 = monomial::q(2 * form.c + form.b) / y;
        series reflected = at_order(N, [&](const rational &W) { return pre.to_series() * f_indef(form, x2, y2, W); });
        expect_same(f, reflected, N);
    }
}

INSTANTIATE_TEST_SUITE_P(Forms, QuadrantSymmetry,
                         ::testing::Values(quad_form{1, 2, 1}, quad_form{3, 7, 3}, quad_form{1, 4, 6},
                                           quad_form{2, 3, 2}, quad_form{3, 2, 1}));

TEST(IndefiniteTheta, DivergentWhenNoValuationGrowth)
{
    EXPECT_THROW(f_indef(quad_form{0, 1, 0}, monomial(2), monomial::q(1), 10), divergent_sum);
}

struct hm_case {
    std::int64_t n;
    std::int64_t p;
};

class HmDecomposition : public ::testing::TestWithParam<hm_case> {};

TEST_P(HmDecomposition, FEqualsGPlusTheta)
{
    auto [n, p] = GetParam();
    auto rep = hm_check(n, p, monomial(-1, 2), monomial(-1, 3), 40);
    EXPECT_TRUE(rep.equal) << "first difference at q^" << to_string(rep.first_mismatch->exponent);
}

INSTANTIATE_TEST_SUITE_P(Pairs, HmDecomposition,
                         ::testing::Values(hm_case{1, 1}, hm_case{2, 1}, hm_case{3, 1}, hm_case{1, 2},
                                           hm_case{3, 2}));

TEST(IndefiniteTheta, HmAtOtherGenericPoint)
{
    auto rep = hm_check(1, 2, monomial(2, 1), monomial(-1, 2), 30);
    EXPECT_TRUE(rep.equal);
}

// f is integral; g and theta separately need not be, but their sum is.
TEST(IndefiniteTheta, IntegralityOfTheDecomposition)
{
    rational N = 30;
    quad_form form{3, 5, 3};
    monomial x(-1, 2), y(-1, 3);
    EXPECT_TRUE(f_indef(form, x, y, N).is_integral());
    series sum = g_hm(form, x, y, monomial(-1), monomial(-1), N) + theta_hm(3, 2, x, y, N);
    EXPECT_TRUE(sum.is_integral());
    EXPECT_FALSE(theta_hm(3, 2, x, y, N).is_integral());
}
