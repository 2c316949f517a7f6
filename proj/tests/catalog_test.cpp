#include <set>

#include <gtest/gtest.h>

#include <qv/appell_lerch.hpp>
#include <qv/catalog.hpp>
#include <qv/errors.hpp>
#include <qv/precision.hpp>
#include <qv/products.hpp>
#include <qv/registry.hpp>

using namespace qv;

namespace {

void expect_same(const series &a, const series &b, const rational &order)
{
    auto rep = eq_up_to(a, b, order);
    EXPECT_TRUE(rep.equal) << "first difference at q^" << to_string(rep.first_mismatch->exponent) << ": "
                           << rep.first_mismatch->lhs.to_string() << " vs " << rep.first_mismatch->rhs.to_string();
}

series Q(long e)
{
    return series::q_power(e);
}

// sum q^{n^2} / (-q)_n^2
series f3_direct(const rational &N)
{
    series s = series::zero(N);
    for (long n = 0; n * n < N; ++n) {
        series den = poch_finite(monomial(-1, 1), 1, n);
        s += (Q(n * n) * invert(den * den, N)).truncated(N);
    }
    return s.truncated(N);
}

// sum q^{C(n+1,2)} / (q;q^2)_{n+1}
series phi10_direct(const rational &N)
{
    series s = series::zero(N);
    for (long n = 0; n * (n + 1) / 2 < N; ++n) {
        s += (Q(n * (n + 1) / 2) * invert(poch_finite(monomial::q(1), 2, n + 1), N)).truncated(N);
    }
    return s.truncated(N);
}

catalog_args args(std::initializer_list<monomial> ms)
{
    catalog_args out;
    for (const auto &m : ms) {
        out.emplace_back(m);
    }
    return out;
}

} // namespace

TEST(Catalog, EntriesAreDocumented)
{
    const auto &all = list_entries();
    EXPECT_GE(all.size(), 18u);
    std::set<std::string> names;
    for (const auto &e : all) {
        EXPECT_FALSE(e.ref.empty()) << e.name;
        EXPECT_FALSE(e.definition.empty()) << e.name;
        EXPECT_TRUE(names.insert(e.name).second) << "duplicate " << e.name;
    }
}

TEST(Catalog, EveryEntryIsExercisedByTheBuiltinRegistry)
{
    std::string text = builtin_suite_text();
    for (const auto &e : list_entries()) {
        EXPECT_NE(text.find(e.name + "("), std::string::npos) << e.name;
    }
}

TEST(Catalog, AnchorsAgainstDirectSums)
{
    rational N = 60;
    series f3 = f3_direct(N);
    expect_same(eval_named("f3", {}, N), f3, N);
    expect_same(eval_named("B", args({monomial(1)}), N), f3, N);
    series phi = phi10_direct(N);
    expect_same(eval_named("phi10", {}, N), phi, N);
    expect_same(eval_named("M", args({monomial(1)}), N), phi, N);
}

// f(q) = 2/(q)_inf A_3(-1, q^{-1})
TEST(Catalog, ThirdOrderFAsAppellSum)
{
    rational N = 40;
    series rhs = at_order(N, [](const rational &W) {
        return (appell_unnormalized(3, monomial(-1), monomial::q(-1), W) * invert(poch_infinite(monomial::q(1), 1, W), W))
            .scaled(2);
    });
    expect_same(eval_named("f3", {}, N), rhs, N);
}

TEST(Catalog, HigherBStartsAtOne)
{
    series b2 = eval_named("B", args({monomial(2)}), 20);
    EXPECT_EQ(b2.coeff(0), coefficient(1));
    EXPECT_TRUE(b2.is_integral());
}

TEST(Catalog, UAtMinusOneIsNonnegativeAndIntegral)
{
    rational N = 40;
    series u = eval_named("U", args({monomial(-1)}), N);
    EXPECT_TRUE(u.is_integral());
    for (long n = 0; n < 40; ++n) {
        EXPECT_GE(u.coeff(n).constant_value(), 0) << "q^" << n;
    }
    EXPECT_EQ(u.coeff(1), coefficient(4));
}

TEST(Catalog, SIsSymmetricUnderInversion)
{
    rational N = 30;
    for (monomial x : {monomial(2), monomial(-1, 1), monomial(3, 2)}) {
        expect_same(eval_named("S", args({x}), N), eval_named("S", args({x.inverse()}), N), N);
    }
}

TEST(Catalog, IntegralEntries)
{
    rational N = 30;
    for (std::string name : {"f3", "chi10", "X10", "chi3", "mu", "f1", "phi10", "T1", "T2", "Y", "hikami", "J1gf",
                             "S_negomega", "sspec_sum", "pent"}) {
        EXPECT_TRUE(eval_named(name, {}, N).is_integral()) << name;
    }
}

TEST(Catalog, Errors)
{
    EXPECT_THROW(find_entry("no_such_entry"), unknown_entry);
    EXPECT_THROW(eval_named("no_such_entry", {}, 10), unknown_entry);
    EXPECT_THROW(eval_named("f3", args({monomial(1)}), 10), std::invalid_argument);
    EXPECT_THROW(eval_named("B", args({monomial(0)}), 10), std::invalid_argument);
    EXPECT_THROW(eval_named("B", args({monomial::q(1)}), 10), std::invalid_argument);
    EXPECT_THROW(eval_named("S", {rho_spec::infinity()}, 10), std::invalid_argument);
}
