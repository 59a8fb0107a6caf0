#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "ivi/enclosure.hpp"
#include "ivi/rational.hpp"

namespace ivi {

// Immutable expression tree over one point variable `x` and one index
// variable `n`. Grammar (function-call style for the named forms):
//
//   e := e + e | e - e | e * e | e / e | e ^ k | -e
//      | abs(e) | min(e, e) | max(e, e) | pw(x <= c, e, e)
//      | x | n | integer | decimal | p/q
//
// Precedence: unary minus > ^ > * / > + - , all left-associative; `^`
// exponents are literal non-negative integers or the bare index variable
// `n` (so families like x^n are expressible); `pw` conditions compare x
// against a constant folded exactly at parse time.
class Expr {
public:
    enum class Kind {
        lit, var_x, var_n, neg, abs, add, sub, mul, div, min, max, pow, pow_n,
        piecewise
    };

    struct Node {
        Kind kind;
        Rational value;         // lit payload; piecewise cut point
        unsigned long exponent = 0;  // pow payload
        std::shared_ptr<const Node> a, b;
    };

    Expr() = default;
    explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    static Expr lit(Rational r);
    static Expr var_x();
    static Expr var_n();
    static Expr neg(Expr e);
    static Expr abs(Expr e);
    static Expr add(Expr l, Expr r);
    static Expr sub(Expr l, Expr r);
    static Expr mul(Expr l, Expr r);
    static Expr div(Expr l, Expr r);
    static Expr min(Expr l, Expr r);
    static Expr max(Expr l, Expr r);
    static Expr pow(Expr base, unsigned long k);
    static Expr pow_n(Expr base);  // base^n, exponent bound at evaluation
    static Expr piecewise(Rational cut, Expr then_e, Expr else_e);

    const Node* node() const { return node_.get(); }
    bool empty() const { return node_ == nullptr; }

private:
    std::shared_ptr<const Node> node_;
};

// Throws ParseError (with byte offset and expected-token set) on bad input.
Expr parse_expr(std::string_view text);

// Rendering with minimal parentheses; parsing the result of printing a
// parsed tree reproduces that tree.
std::string print_expr(const Expr& e);

bool structurally_equal(const Expr& a, const Expr& b);

struct EvalEnv {
    std::optional<Rational> x;
    std::optional<Rational> n;
};

// Exact point evaluation. Throws UnboundVariableError if the expression
// uses a variable the env does not bind, UndefinedValueError on division
// by zero.
Rational eval_rat(const Expr& e, const EvalEnv& env);

// Range evaluation over x in `xs` (with n bound exactly when present).
// Sound by inclusion; nullopt means indeterminate (a divisor enclosure
// contains zero) and the caller should refine `xs`.
std::optional<Enclosure> eval_enclosure(const Expr& e, const Enclosure& xs,
                                        const std::optional<Rational>& n = {});

}  // namespace ivi
