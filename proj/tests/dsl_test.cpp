#include <random>

#include <gtest/gtest.h>

#include <qv/appell_lerch.hpp>
#include <qv/dsl.hpp>
#include <qv/errors.hpp>
#include <qv/indefinite_theta.hpp>
#include <qv/products.hpp>
#include <qv/registry.hpp>

using namespace qv;
using namespace qv::dsl;

namespace {

void expect_same(const series &a, const series &b, const rational &order)
{
    auto rep = eq_up_to(a, b, order);
    EXPECT_TRUE(rep.equal) << "first difference at q^" << to_string(rep.first_mismatch->exponent) << ": "
                           << rep.first_mismatch->lhs.to_string() << " vs " << rep.first_mismatch->rhs.to_string();
}

void expect_round_trip(const node_ptr &e)
{
    std::string text = print(e);
    node_ptr again = parse_expr(text);
    EXPECT_TRUE(same(e, again)) << text << " reparsed as " << print(again);
    EXPECT_EQ(print(again), text);
}

// Random expression text over a small slice of the grammar.
std::string random_text(std::mt19937 &rng, int depth)
{
    std::uniform_int_distribution<int> pick(0, depth > 0 ? 11 : 4);
    std::uniform_int_distribution<int> small(-3, 5);
    switch (pick(rng)) {
    case 0:
        return std::to_string(small(rng));
    case 1:
        return "q^" + std::to_string(small(rng));
    case 2:
        return "q^(" + std::to_string(small(rng)) + "/" + std::to_string(2 + small(rng) % 2 * small(rng) % 2) + ")";
    case 3:
        return "x";
    case 4:
        return "(" + std::to_string(small(rng)) + "/7)";
    case 5:
        return random_text(rng, depth - 1) + " + " + random_text(rng, depth - 1);
    case 6:
        return random_text(rng, depth - 1) + " - " + random_text(rng, depth - 1);
    case 7:
        return random_text(rng, depth - 1) + "*" + random_text(rng, depth - 1);
    case 8:
        return random_text(rng, depth - 1) + "/" + random_text(rng, depth - 1);
    case 9:
        return "-" + random_text(rng, depth - 1);
    case 10:
        return "(" + random_text(rng, depth - 1) + ")^" + std::to_string(small(rng));
    default:
        return "pinf(" + random_text(rng, depth - 1) + ", " + std::to_string(1 + (small(rng) + 3) % 4) + ")";
    }
}

} // namespace

TEST(Dsl, ParsesSimpleCalls)
{
    node_ptr e = parse_expr("pinf(q,1)");
    ASSERT_EQ(e->kind, op::call);
    EXPECT_EQ(e->name, "pinf");
    ASSERT_EQ(e->args.size(), 2u);
    EXPECT_EQ(e->args[0]->kind, op::q_power);
    EXPECT_EQ(e->args[0]->value, 1);
    EXPECT_EQ(e->args[1]->kind, op::number);
    EXPECT_EQ(print(e), "pinf(q, 1)");

    node_ptr m = parse_expr("m(-q, 5, q^4)");
    ASSERT_EQ(m->kind, op::call);
    EXPECT_EQ(m->args[0]->kind, op::neg);
    EXPECT_EQ(m->args[2]->value, 4);
}

TEST(Dsl, PrecedenceAndFolding)
{
    node_ptr e = parse_expr("1 + 2*3 - q^2/4");
    ASSERT_EQ(e->kind, op::sub);
    EXPECT_EQ(e->args[0]->kind, op::number);
    EXPECT_EQ(e->args[0]->value, 7);
    EXPECT_TRUE(same(parse_expr("(1/2)"), parse_expr("2/4")));
    EXPECT_EQ(parse_expr("q^(-1/2)")->value, make_rational(-1, 2));
    EXPECT_EQ(parse_expr("(q^2)^-1")->kind, op::pow);
    EXPECT_EQ(parse_expr("-2^2")->value, -4);
}

TEST(Dsl, MainTheoremLeftSideParses)
{
    const identity_spec *main = nullptr;
    for (const auto &id : builtin_identities()) {
        if (id.name == "thm-main") {
            main = &id;
        }
    }
    ASSERT_NE(main, nullptr);
    expect_round_trip(main->lhs);
    expect_round_trip(main->rhs);
    EXPECT_EQ(main->order, 100);
}

TEST(Dsl, ParseErrorsCarryPositions)
{
    try {
        parse_expr("1 + * q");
        FAIL() << "no throw";
    } catch (const parse_error &e) {
        EXPECT_EQ(e.position(), 4u);
    }
    EXPECT_THROW(parse_expr("pinf(q,1"), parse_error);
    EXPECT_THROW(parse_expr("q^2^3"), parse_error);
    EXPECT_THROW(parse_expr(""), parse_error);
    EXPECT_THROW(parse_expr("1 2"), parse_error);
    EXPECT_THROW(parse_expr("x^(1/2)"), parse_error);
}

TEST(Dsl, UnknownNames)
{
    EXPECT_THROW(parse_expr("nosuchfn(q)"), unknown_function);
    EXPECT_THROW(parse_expr("w + 1"), undeclared_symbol);
    symbol_context ctx({"w"});
    EXPECT_NO_THROW(parse_expr("w + 1", ctx));
}

TEST(Dsl, RegistryExpressionsRoundTrip)
{
    for (const auto &id : builtin_identities()) {
        SCOPED_TRACE(id.name);
        EXPECT_TRUE(same(id.lhs, parse_expr(print(id.lhs), *id.symbols)));
        EXPECT_TRUE(same(id.rhs, parse_expr(print(id.rhs), *id.symbols)));
        auto again = parse_suite(id.to_record());
        ASSERT_EQ(again.size(), 1u);
        EXPECT_EQ(again[0].to_record(), id.to_record());
    }
}

class RandomRoundTrip : public ::testing::TestWithParam<int> {};

TEST_P(RandomRoundTrip, PrintThenParseIsIdentity)
{
    std::mt19937 rng(GetParam());
    int parsed = 0;
    for (int i = 0; i < 200; ++i) {
        std::string text = random_text(rng, 4);
        node_ptr e;
        try {
            e = parse_expr(text);
        } catch (const error &) {
            continue;
        }
        ++parsed;
        SCOPED_TRACE(text);
        expect_round_trip(e);
    }
    EXPECT_GT(parsed, 100);
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomRoundTrip, ::testing::Values(1, 2, 3, 4));

TEST(Dsl, EvaluatesAgainstTheLibrary)
{
    rational N = 30;
    expect_same(evaluate(parse_expr("pinf(q,1)"), N), poch_infinite(monomial::q(1), 1, N), N);
    expect_same(evaluate(parse_expr("j(-q^2, 5)"), N), j_theta(monomial(-1, 2), 5, N), N);
    expect_same(evaluate(parse_expr("m(-q^2, 5, q^4)"), N), m_sum(monomial(-1, 2), 5, monomial::q(4), N), N);
    expect_same(evaluate(parse_expr("f(3,5,3,-q^2,-q^3)"), N),
                f_indef(quad_form{3, 5, 3}, monomial(-1, 2), monomial(-1, 3), N), N);
    series one_over = evaluate(parse_expr("1/(1 - q)"), N);
    for (int k = 0; k < 30; ++k) {
        EXPECT_EQ(one_over.coeff(k), coefficient(1));
    }
    EXPECT_EQ(*evaluate(parse_expr("1/(1 - q)"), N).trunc(), N);
}

TEST(Dsl, SubstitutionBuiltin)
{
    rational N = 20;
    expect_same(evaluate(parse_expr("sub(pinf(q,1), 1, 2)"), N), poch_infinite(monomial::q(2), 2, N), N);
    // (q;q)_inf at q -> -q is (-q;q^2)_inf (q^2;q^2)_inf
    expect_same(evaluate(parse_expr("sub(pinf(q,1), -1, 1)"), N),
                poch_infinite(monomial(-1, 1), 2, N) * poch_infinite(monomial::q(2), 2, N), N);
}

TEST(Dsl, SymbolsEvaluateFormally)
{
    series s = evaluate(parse_expr("x*(1/x) + y - y"), 10);
    EXPECT_EQ(s.coeff(0), coefficient(1));
}

TEST(Dsl, ArityErrorsAtEvaluation)
{
    EXPECT_THROW(evaluate(parse_expr("pinf(q)"), 10), error);
    EXPECT_THROW(evaluate(parse_expr("B(q)"), 10), std::exception);
}

TEST(Dsl, FunctionTableIncludesCatalog)
{
    EXPECT_TRUE(is_function("pinf"));
    EXPECT_TRUE(is_function("f3"));
    EXPECT_FALSE(is_function("q"));
    EXPECT_GT(function_names().size(), 30u);
}
