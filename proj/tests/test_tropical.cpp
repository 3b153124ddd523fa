#include <gtest/gtest.h>

#include <random>

#include "d5crystal/formula_corpus.hpp"
#include "d5crystal/tropical.hpp"

using namespace d5;

namespace {
using K = Expr::Kind;

// Random subtraction-free expression over x, y, z.
ExprPtr random_expr(std::mt19937_64& g, int depth) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 5);
    switch (pick(g)) {
        case 0: return Expr::var(std::string(1, "xyz"[g() % 3]));
        case 1: return Expr::constant(1 + static_cast<std::int64_t>(g() % 3));
        case 2: return Expr::binary(K::sum, random_expr(g, depth - 1), random_expr(g, depth - 1));
        case 3: return Expr::binary(K::product, random_expr(g, depth - 1), random_expr(g, depth - 1));
        case 4: return Expr::binary(K::quotient, random_expr(g, depth - 1), random_expr(g, depth - 1));
        default: {
            std::int64_t n = static_cast<std::int64_t>(g() % 5) - 2;
            return Expr::power(random_expr(g, depth - 1), n == 0 ? 2 : n);
        }
    }
}
}  // namespace

TEST(Parser, Structure) {
    auto const e = parse("x*y + z");
    ASSERT_EQ(e->kind, K::sum);
    EXPECT_EQ(e->lhs->kind, K::product);
    EXPECT_EQ(e->rhs->kind, K::var);
    auto const q = parse("x/ (y+1)");
    ASSERT_EQ(q->kind, K::quotient);
    EXPECT_EQ(q->rhs->kind, K::sum);
    EXPECT_EQ(q->rhs->rhs->kind, K::constant);
    EXPECT_TRUE(structurally_equal(*parse("a/b/c"), *parse("(a/b)/c")));
    EXPECT_TRUE(structurally_equal(*parse("x^-2"), *Expr::power(Expr::var("x"), -2)));
}

TEST(Parser, Rejections) {
    EXPECT_THROW(parse("x - y"), ParseError);
    EXPECT_THROW(parse("x -"), ParseError);
    EXPECT_THROW(parse("0*x"), ParseError);
    EXPECT_THROW(parse("(x + y"), ParseError);
    EXPECT_THROW(parse(""), ParseError);
    EXPECT_THROW(parse("x y"), ParseError);
    EXPECT_THROW(parse("99999999999999999999999"), ParseError);
    try {
        parse("x - y");
        FAIL();
    } catch (ParseError const& e) {
        EXPECT_NE(std::string(e.what()).find("subtraction"), std::string::npos);
    }
    try {
        parse("x + - y");
        FAIL();
    } catch (ParseError const& e) {
        EXPECT_EQ(e.position, 4u);
    }
}

TEST(Parser, PrintParseRoundTrip) {
    std::mt19937_64 g(5);
    for (int n = 0; n < 500; ++n) {
        auto const e = random_expr(g, 4);
        auto const text = to_string(*e);
        EXPECT_TRUE(structurally_equal(*parse(text), *e)) << text;
    }
    for (auto const& f : formula_corpus()) {
        auto const e = parse(f.text);
        EXPECT_TRUE(structurally_equal(*parse(to_string(*e)), *e)) << f.name;
    }
}

TEST(Tropicalize, Display) {
    EXPECT_EQ(to_string(*tropicalize(*parse("x*y"))), "x + y");
    EXPECT_EQ(to_string(*tropicalize(*parse("x/y"))), "x - y");
    EXPECT_EQ(to_string(*tropicalize(*parse("x + y"))), "max(x, y)");
    EXPECT_EQ(to_string(*tropicalize(*parse("c + x"))), "max(c, x)");
    EXPECT_EQ(to_string(*tropicalize(*parse("x^2*y"))), "2*x + y");
    EXPECT_EQ(to_string(*tropicalize(*parse("x + y + z"))), "max(x, y, z)");
    EXPECT_EQ(to_string(*tropicalize(*parse("2*x"))), "0 + x");
}

TEST(Evaluate, Rational) {
    RationalEnv env{{"x", 2}, {"y", 3}};
    EXPECT_EQ(eval_rational(*parse("x*y"), env), 6);
    EXPECT_EQ(eval_rational(*parse("(x+y)/x"), RationalEnv{{"x", 1}, {"y", 1}}), 2);
    EXPECT_EQ(eval_rational(*parse("x^3"), env), 8);
    EXPECT_EQ(eval_rational(*parse("x^-1"), env), Rational(1, 2));
    EXPECT_THROW(eval_rational(*parse("w"), env), std::out_of_range);
}

TEST(Evaluate, Tropical) {
    auto const m = TropExpr::max({TropExpr::var("x"), TropExpr::var("y")});
    EXPECT_EQ(eval_trop(*m, IntEnv{{"x", 1}, {"y", 5}}), 5);
    EXPECT_EQ(eval_trop(*tropicalize(*parse("x*y + z")), IntEnv{{"x", 1}, {"y", 2}, {"z", 4}}), 4);
}

// Tropicalization is the leading exponent: e(t^n) / t^{trop(e)(n)} stays within
// fixed bounds as t grows, since all coefficients are positive.
TEST(Tropicalize, LeadingExponentOfPositiveExpressions) {
    std::mt19937_64 g(77);
    std::uniform_int_distribution<std::int64_t> d(-3, 3);
    Rational const t = rpow(Rational(2), 200);
    Rational const lo = rpow(Rational(2), -60), hi = rpow(Rational(2), 60);
    for (int n = 0; n < 300; ++n) {
        auto const e = random_expr(g, 3);
        auto const tr = tropicalize(*e);
        IntEnv ie;
        RationalEnv re;
        for (char const* v : {"x", "y", "z"}) {
            ie[v] = d(g);
            re[v] = rpow(t, static_cast<int>(ie[v]));
        }
        Rational const ratio = eval_rational(*e, re) / rpow(t, static_cast<int>(eval_trop(*tr, ie)));
        EXPECT_TRUE(ratio > lo && ratio < hi) << to_string(*e);
    }
}

TEST(Compare, OnBox) {
    auto const x = TropExpr::var("x"), y = TropExpr::var("y");
    EXPECT_TRUE(trop_equal_on_box(*TropExpr::max({x, y}), *TropExpr::max({y, x}), 5, 1000, 1).equal);
    auto const dom = TropExpr::max({x, TropExpr::minus(x, TropExpr::constant(1))});
    auto r = trop_equal_on_box(*x, *dom, 5, 1000, 1);
    EXPECT_TRUE(r.equal);
    EXPECT_TRUE(r.exhaustive);
    auto bad = trop_equal_on_box(*TropExpr::max({x, y}), *x, 2, 1000, 1);
    ASSERT_FALSE(bad.equal);
    ASSERT_TRUE(bad.witness);
    EXPECT_LT(bad.witness->at("x"), bad.witness->at("y"));
    auto big = trop_equal_on_box(*tropicalize(*parse("a*b*c*d*e*f*g")), *tropicalize(*parse("g*f*e*d*c*b*a")), 5,
                                 200, 3);
    EXPECT_TRUE(big.equal);
    EXPECT_FALSE(big.exhaustive);
    EXPECT_EQ(big.points, 200);
}
