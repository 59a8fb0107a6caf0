#include <random>
#include <vector>

#include "doctest.h"
#include "ivi/expr.hpp"

using namespace ivi;

TEST_CASE("parsing respects precedence and builds the expected tree") {
    Expr e = parse_expr("x*x + 1/100");
    Expr expected = Expr::add(Expr::mul(Expr::var_x(), Expr::var_x()),
                              Expr::lit(Rational(1, 100)));
    CHECK(structurally_equal(e, expected));

    Expr pw = parse_expr("pw(x<=1/2, x, 1 - x)");
    Expr pw_expected = Expr::piecewise(
        Rational(1, 2), Expr::var_x(),
        Expr::sub(Expr::lit(Rational(1)), Expr::var_x()));
    CHECK(structurally_equal(pw, pw_expected));

    // unary minus binds tighter than '^': -x^2 is (-x)^2
    CHECK(structurally_equal(parse_expr("-x^2"),
                             Expr::pow(Expr::neg(Expr::var_x()), 2)));
    // left associativity
    CHECK(structurally_equal(parse_expr("1 - 2 - 3"),
                             parse_expr("(1 - 2) - 3")));
    CHECK(!structurally_equal(parse_expr("1 - 2 - 3"),
                              parse_expr("1 - (2 - 3)")));
}

TEST_CASE("syntax errors carry the byte offset of the offending token") {
    try {
        parse_expr("1 +* 2");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset == 3);
        CHECK(!e.expected.empty());
    }
    CHECK_THROWS_AS(parse_expr("x^-1"), ParseError);
    try {
        parse_expr("x^-1");
    } catch (const ParseError& e) {
        CHECK(e.offset == 2);
    }
    CHECK_THROWS_AS(parse_expr("x^(2)"), ParseError);
    CHECK_THROWS_AS(parse_expr(""), ParseError);
    CHECK_THROWS_AS(parse_expr("x +"), ParseError);
    CHECK_THROWS_AS(parse_expr("(x"), ParseError);
    CHECK_THROWS_AS(parse_expr("x 1"), ParseError);
    // unknown identifier
    try {
        parse_expr("y + 1");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset == 0);
    }
    // piecewise cut must be a constant
    try {
        parse_expr("pw(x<=x, 1, 2)");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset == 6);
    }
}

TEST_CASE("decimal literals convert exactly") {
    CHECK(eval_rat(parse_expr("0.25"), {}) == Rational(1, 4));
    CHECK(eval_rat(parse_expr("0.3"), {}) == Rational(3, 10));
    CHECK(eval_rat(parse_expr("1.5 * 2"), {}) == Rational(3));
    CHECK(eval_rat(parse_expr("-0.125"), {}) == Rational(-1, 8));
}

TEST_CASE("exact point evaluation") {
    EvalEnv at_zero{Rational(0), {}};
    CHECK(eval_rat(parse_expr("x*x + 1/100"), at_zero) == Rational(1, 100));
    CHECK(eval_rat(parse_expr("x/n"), EvalEnv{Rational(1), Rational(11)}) ==
          Rational(1, 11));
    CHECK_THROWS_AS(eval_rat(parse_expr("1/x"), at_zero), UndefinedValueError);
    CHECK_THROWS_AS(eval_rat(parse_expr("x + 1"), {}), UnboundVariableError);
    CHECK_THROWS_AS(eval_rat(parse_expr("x/n"), EvalEnv{Rational(1), {}}),
                    UnboundVariableError);

    CHECK(eval_rat(parse_expr("abs(x - 1/3)"), EvalEnv{Rational(0), {}}) ==
          Rational(1, 3));
    CHECK(eval_rat(parse_expr("pw(x<=1/2, x, 1 - x)"), EvalEnv{Rational(1, 2), {}}) ==
          Rational(1, 2));
    CHECK(eval_rat(parse_expr("pw(x<=1/2, x, 1 - x)"), EvalEnv{Rational(3, 4), {}}) ==
          Rational(1, 4));
    CHECK(eval_rat(parse_expr("min(x, 1-x)"), EvalEnv{Rational(1, 4), {}}) ==
          Rational(1, 4));
    CHECK(eval_rat(parse_expr("x^3"), EvalEnv{Rational(-2), {}}) == Rational(-8));
}

TEST_CASE("range evaluation is sound; naive products are loose, powers tight") {
    Enclosure sym(Rational(-1), Rational(1));
    auto naive = eval_enclosure(parse_expr("x*x"), sym);
    REQUIRE(naive.has_value());
    CHECK(*naive == Enclosure(Rational(-1), Rational(1)));  // dependency effect

    auto tight = eval_enclosure(parse_expr("x^2 + 1"), sym);
    REQUIRE(tight.has_value());
    CHECK(*tight == Enclosure(Rational(1), Rational(2)));
    CHECK(tight->sign_definite());

    // the naive form still contains the true range [1,2]
    auto loose = eval_enclosure(parse_expr("x*x + 1"), sym);
    REQUIRE(loose.has_value());
    CHECK(loose->contains(Enclosure(Rational(1), Rational(2))));

    CHECK(!eval_enclosure(parse_expr("1/x"), sym).has_value());
}

TEST_CASE("piecewise enclosures split at the cut and hull the branches") {
    Expr tent = parse_expr("pw(x<=1/2, x, 1 - x)");
    auto whole = eval_enclosure(tent, Enclosure(Rational(0), Rational(1)));
    REQUIRE(whole.has_value());
    CHECK(whole->contains(Rational(1, 2)));
    CHECK(whole->contains(Rational(0)));
    auto left = eval_enclosure(tent, Enclosure(Rational(0), Rational(1, 4)));
    REQUIRE(left.has_value());
    CHECK(*left == Enclosure(Rational(0), Rational(1, 4)));
    auto right = eval_enclosure(tent, Enclosure(Rational(3, 4), Rational(1)));
    REQUIRE(right.has_value());
    CHECK(*right == Enclosure(Rational(0), Rational(1, 4)));
}

TEST_CASE("print/parse round-trip reproduces the tree") {
    const char* samples[] = {
        "x*x + 1/100",
        "pw(x<=1/2, x, 1 - x)",
        "-x^2",
        "-(x + 1)",
        "x - -1",
        "abs(x - 1/3)",
        "min(x, max(1, 1 - x))",
        "1/(x^2 + 1/100)",
        "x/n",
        "x^n",
        "(x + 1)^n",
        "0.25*x",
        "x^0",
        "1 - 2 - 3",
        "2*(x - 1/2)^3",
    };
    for (const char* s : samples) {
        Expr parsed = parse_expr(s);
        std::string printed = print_expr(parsed);
        CAPTURE(s);
        CAPTURE(printed);
        CHECK(structurally_equal(parse_expr(printed), parsed));
    }
}

TEST_CASE("point evaluations land inside determinate enclosures (1000 samples)") {
    std::mt19937 rng(20240818);
    std::uniform_int_distribution<long> num(-64, 64);
    const Expr exprs[] = {
        parse_expr("x*x + 1/100"),
        parse_expr("pw(x<=1/2, x, 1 - x)"),
        parse_expr("abs(x - 1/3) * (x + 2)"),
        parse_expr("1/(x^2 + 1/100)"),
        parse_expr("x^3 - x"),
        parse_expr("x/n + n"),
    };
    int checked = 0;
    while (checked < 1000) {
        for (const Expr& e : exprs) {
            Rational a(num(rng), 32), b(num(rng), 32);
            if (b < a) std::swap(a, b);
            Enclosure window(a, b);
            std::optional<Rational> nv = Rational(1 + (num(rng) + 64) % 9);
            auto range = eval_enclosure(e, window, nv);
            if (!range) continue;
            std::uniform_int_distribution<long> t(0, 16);
            Rational x = a + (b - a) * Rational(t(rng), 16);
            Rational v = eval_rat(e, EvalEnv{x, nv});
            CAPTURE(print_expr(e));
            CAPTURE(window.str());
            CHECK(range->contains(v));
            ++checked;
        }
    }
}

TEST_CASE("refinement: split-and-hull never widens the enclosure") {
    std::mt19937 rng(20240819);
    std::uniform_int_distribution<long> num(-48, 48);
    const Expr exprs[] = {
        parse_expr("x*x - x"),
        parse_expr("pw(x<=1/2, x, 1 - x)"),
        parse_expr("abs(x) * x + 1/7"),
        parse_expr("x^4 - x^2"),
    };
    for (int trial = 0; trial < 250; ++trial) {
        for (const Expr& e : exprs) {
            Rational a(num(rng), 16), b(num(rng), 16);
            if (b < a) std::swap(a, b);
            Enclosure window(a, b);
            auto whole = eval_enclosure(e, window);
            if (!whole) continue;
            Rational m = (a + b) / Rational(2);
            auto lo_half = eval_enclosure(e, Enclosure(a, m));
            auto hi_half = eval_enclosure(e, Enclosure(m, b));
            REQUIRE(lo_half.has_value());
            REQUIRE(hi_half.has_value());
            CHECK(whole->contains(hull(*lo_half, *hi_half)));
        }
    }
}

TEST_CASE("variable exponents bind through the evaluation environment") {
    Expr f = parse_expr("x^n");
    CHECK(print_expr(f) == "x^n");
    CHECK(structurally_equal(f, Expr::pow_n(Expr::var_x())));
    CHECK(!structurally_equal(f, parse_expr("x^2")));

    CHECK(eval_rat(f, EvalEnv{Rational(1, 2), Rational(3)}) == Rational(1, 8));
    CHECK(eval_rat(f, EvalEnv{Rational(1, 2), Rational(0)}) == Rational(1));
    CHECK_THROWS_AS(eval_rat(f, EvalEnv{Rational(1, 2), {}}), UnboundVariableError);
    CHECK_THROWS_AS(eval_rat(f, EvalEnv{Rational(1, 2), Rational(1, 2)}),
                    UndefinedValueError);
    CHECK_THROWS_AS(eval_rat(f, EvalEnv{Rational(1, 2), Rational(-1)}),
                    UndefinedValueError);

    auto range = eval_enclosure(f, Enclosure(Rational(0), Rational(1, 2)), Rational(7));
    REQUIRE(range.has_value());
    CHECK(*range == Enclosure(Rational(0), Rational(1, 128)));
    CHECK_THROWS_AS(eval_enclosure(f, Enclosure(Rational(0), Rational(1))),
                    UnboundVariableError);
}
