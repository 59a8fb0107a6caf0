#include "ivi/expr.hpp"

#include <cctype>
#include <utility>
#include <vector>

namespace ivi {

namespace {

using Node = Expr::Node;
using Kind = Expr::Kind;
using Ptr = std::shared_ptr<const Node>;

Ptr mk(Node n) { return std::make_shared<const Node>(std::move(n)); }

}  // namespace

Expr Expr::lit(Rational r) {
    return Expr(mk({Kind::lit, std::move(r), 0, nullptr, nullptr}));
}
Expr Expr::var_x() { return Expr(mk({Kind::var_x, Rational(0), 0, nullptr, nullptr})); }
Expr Expr::var_n() { return Expr(mk({Kind::var_n, Rational(0), 0, nullptr, nullptr})); }
Expr Expr::neg(Expr e) {
    return Expr(mk({Kind::neg, Rational(0), 0, e.node_, nullptr}));
}
Expr Expr::abs(Expr e) {
    return Expr(mk({Kind::abs, Rational(0), 0, e.node_, nullptr}));
}
Expr Expr::add(Expr l, Expr r) {
    return Expr(mk({Kind::add, Rational(0), 0, l.node_, r.node_}));
}
Expr Expr::sub(Expr l, Expr r) {
    return Expr(mk({Kind::sub, Rational(0), 0, l.node_, r.node_}));
}
Expr Expr::mul(Expr l, Expr r) {
    return Expr(mk({Kind::mul, Rational(0), 0, l.node_, r.node_}));
}
Expr Expr::div(Expr l, Expr r) {
    return Expr(mk({Kind::div, Rational(0), 0, l.node_, r.node_}));
}
Expr Expr::min(Expr l, Expr r) {
    return Expr(mk({Kind::min, Rational(0), 0, l.node_, r.node_}));
}
Expr Expr::max(Expr l, Expr r) {
    return Expr(mk({Kind::max, Rational(0), 0, l.node_, r.node_}));
}
Expr Expr::pow(Expr base, unsigned long k) {
    return Expr(mk({Kind::pow, Rational(0), k, base.node_, nullptr}));
}
Expr Expr::pow_n(Expr base) {
    return Expr(mk({Kind::pow_n, Rational(0), 0, base.node_, nullptr}));
}
Expr Expr::piecewise(Rational cut, Expr then_e, Expr else_e) {
    return Expr(mk({Kind::piecewise, std::move(cut), 0, then_e.node_, else_e.node_}));
}

// ---------------------------------------------------------------- lexer --

namespace {

enum class Tok {
    number, ident, plus, minus, star, slash, caret, lparen, rparen, comma,
    le, end
};

struct Token {
    Tok kind;
    std::size_t offset;
    std::string text;    // ident name / number spelling
    Rational value;      // number payload
    bool is_integer = false;
};

const char* tok_name(Tok t) {
    switch (t) {
        case Tok::number: return "number";
        case Tok::ident: return "identifier";
        case Tok::plus: return "'+'";
        case Tok::minus: return "'-'";
        case Tok::star: return "'*'";
        case Tok::slash: return "'/'";
        case Tok::caret: return "'^'";
        case Tok::lparen: return "'('";
        case Tok::rparen: return "')'";
        case Tok::comma: return "','";
        case Tok::le: return "'<='";
        case Tok::end: return "end of input";
    }
    return "?";
}

std::vector<Token> lex(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                digits += s[i++];
            std::string frac;
            if (i < s.size() && s[i] == '.') {
                ++i;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                    frac += s[i++];
                if (frac.empty())
                    throw ParseError(i, {"digit"},
                                     "expected digits after decimal point");
            }
            // decimals convert exactly: d.f == (d*10^|f| + f) / 10^|f|
            mpz_class num(digits.empty() ? "0" : digits);
            mpz_class den(1);
            for (char fc : frac) {
                num = num * 10 + (fc - '0');
                den *= 10;
            }
            Token t{Tok::number, start, std::string(s.substr(start, i - start)),
                    Rational(mpq_class(num, den)), frac.empty()};
            out.push_back(std::move(t));
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name;
            while (i < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
                name += s[i++];
            out.push_back({Tok::ident, start, std::move(name), Rational(0), false});
            continue;
        }
        if (c == '<') {
            if (i + 1 < s.size() && s[i + 1] == '=') {
                out.push_back({Tok::le, start, "<=", Rational(0), false});
                i += 2;
                continue;
            }
            throw ParseError(start, {"'<='"}, "stray '<' (only '<=' is valid)");
        }
        Tok k;
        switch (c) {
            case '+': k = Tok::plus; break;
            case '-': k = Tok::minus; break;
            case '*': k = Tok::star; break;
            case '/': k = Tok::slash; break;
            case '^': k = Tok::caret; break;
            case '(': k = Tok::lparen; break;
            case ')': k = Tok::rparen; break;
            case ',': k = Tok::comma; break;
            default:
                throw ParseError(start, {"operator", "number", "identifier"},
                                 std::string("unexpected character '") + c + "'");
        }
        out.push_back({k, start, std::string(1, c), Rational(0), false});
        ++i;
    }
    out.push_back({Tok::end, s.size(), "", Rational(0), false});
    return out;
}

// --------------------------------------------------------------- parser --

class Parser {
public:
    explicit Parser(std::string_view text) : toks_(lex(text)) {}

    Expr parse() {
        Expr e = additive();
        expect(Tok::end);
        return e;
    }

private:
    const Token& cur() const { return toks_[pos_]; }
    void advance() { ++pos_; }

    [[noreturn]] void fail(std::vector<std::string> expected) {
        const Token& t = cur();
        std::string msg = "syntax error at byte " + std::to_string(t.offset) +
                          ": unexpected " + tok_name(t.kind);
        if (!expected.empty()) {
            msg += ", expected ";
            for (std::size_t i = 0; i < expected.size(); ++i)
                msg += (i ? " or " : "") + expected[i];
        }
        throw ParseError(t.offset, std::move(expected), msg);
    }

    void expect(Tok k) {
        if (cur().kind != k) fail({tok_name(k)});
        advance();
    }

    Expr additive() {
        Expr e = multiplicative();
        while (cur().kind == Tok::plus || cur().kind == Tok::minus) {
            bool plus = cur().kind == Tok::plus;
            advance();
            Expr r = multiplicative();
            e = plus ? Expr::add(e, r) : Expr::sub(e, r);
        }
        return e;
    }

    Expr multiplicative() {
        Expr e = power();
        while (cur().kind == Tok::star || cur().kind == Tok::slash) {
            bool mul = cur().kind == Tok::star;
            advance();
            Expr r = power();
            // `p/q` over literal operands is the rational-literal spelling;
            // fold it so "1/100" denotes one constant (zero divisors stay
            // symbolic and surface as undefined-value at evaluation).
            if (!mul && e.node()->kind == Kind::lit &&
                r.node()->kind == Kind::lit && r.node()->value.sign() != 0) {
                e = Expr::lit(e.node()->value / r.node()->value);
            } else {
                e = mul ? Expr::mul(e, r) : Expr::div(e, r);
            }
        }
        return e;
    }

    // '^' binds between unary minus and '*': -x^2 is (-x)^2.
    Expr power() {
        Expr e = unary();
        while (cur().kind == Tok::caret) {
            advance();
            const Token& t = cur();
            if (t.kind == Tok::ident && t.text == "n") {
                advance();
                e = Expr::pow_n(e);
                continue;
            }
            if (t.kind != Tok::number || !t.is_integer || t.value.sign() < 0)
                fail({"non-negative integer exponent", "'n'"});
            if (!t.value.num().fits_ulong_p())
                fail({"exponent small enough to fit a machine word"});
            unsigned long k = t.value.num().get_ui();
            advance();
            e = Expr::pow(e, k);
        }
        return e;
    }

    Expr unary() {
        if (cur().kind == Tok::minus) {
            advance();
            return Expr::neg(unary());
        }
        return atom();
    }

    Expr atom() {
        const Token& t = cur();
        switch (t.kind) {
            case Tok::number: {
                Rational v = t.value;
                advance();
                return Expr::lit(std::move(v));
            }
            case Tok::lparen: {
                advance();
                Expr e = additive();
                expect(Tok::rparen);
                return e;
            }
            case Tok::ident:
                return named();
            default:
                fail({"number", "'('", "identifier", "'-'"});
        }
    }

    Expr named() {
        const Token t = cur();
        advance();
        if (t.text == "x") return Expr::var_x();
        if (t.text == "n") return Expr::var_n();
        if (t.text == "abs") {
            expect(Tok::lparen);
            Expr e = additive();
            expect(Tok::rparen);
            return Expr::abs(e);
        }
        if (t.text == "min" || t.text == "max") {
            expect(Tok::lparen);
            Expr l = additive();
            expect(Tok::comma);
            Expr r = additive();
            expect(Tok::rparen);
            return t.text == "min" ? Expr::min(l, r) : Expr::max(l, r);
        }
        if (t.text == "pw") return piecewise_tail(t.offset);
        pos_--;  // report at the identifier itself
        fail({"'x'", "'n'", "'abs'", "'min'", "'max'", "'pw'"});
    }

    Expr piecewise_tail(std::size_t kw_offset) {
        expect(Tok::lparen);
        if (cur().kind != Tok::ident || cur().text != "x")
            fail({"'x' (piecewise conditions test x)"});
        advance();
        expect(Tok::le);
        std::size_t cut_offset = cur().offset;
        Expr cut_e = additive();
        Rational cut;
        try {
            cut = eval_rat(cut_e, EvalEnv{});
        } catch (const UnboundVariableError&) {
            throw ParseError(cut_offset, {"constant expression"},
                             "piecewise cut must be constant (no variables)");
        }
        expect(Tok::comma);
        Expr then_e = additive();
        expect(Tok::comma);
        Expr else_e = additive();
        expect(Tok::rparen);
        (void)kw_offset;
        return Expr::piecewise(std::move(cut), then_e, else_e);
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expr(std::string_view text) { return Parser(text).parse(); }

// -------------------------------------------------------------- printer --

namespace {

// precedence levels: 1 add/sub, 2 mul/div, 3 pow, 4 unary, 5 atoms
int precedence(Kind k) {
    switch (k) {
        case Kind::add:
        case Kind::sub: return 1;
        case Kind::mul:
        case Kind::div: return 2;
        case Kind::pow:
        case Kind::pow_n: return 3;
        case Kind::neg: return 4;
        default: return 5;
    }
}

// Finite decimals reprint as decimals so parser-built literals round-trip
// structurally (a re-lex yields one number token, not a division).
std::string print_lit(const Rational& r) {
    if (r.is_integer()) return r.str();
    mpz_class den = r.den();
    unsigned long twos = 0, fives = 0;
    while (den % 2 == 0) { den /= 2; ++twos; }
    while (den % 5 == 0) { den /= 5; ++fives; }
    if (den != 1) return r.str();  // not a finite decimal: p/q spelling
    unsigned long digits = std::max(twos, fives);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    mpz_class num = r.num() * (scale / r.den());
    bool negative = num < 0;
    std::string ds = ivi::abs(Rational(mpq_class(num))).str();
    if (ds.size() <= digits) ds.insert(0, digits + 1 - ds.size(), '0');
    ds.insert(ds.size() - digits, ".");
    return (negative ? "-" : "") + ds;
}

void print_node(const Node* n, int parent_prec, std::string& out) {
    if (!n) {
        out += "<empty>";
        return;
    }
    int prec = precedence(n->kind);
    bool parens = prec < parent_prec;
    auto open = [&] { if (parens) out += "("; };
    auto close = [&] { if (parens) out += ")"; };
    switch (n->kind) {
        case Kind::lit:
            if (n->value.sign() < 0) {
                // negative literals print as negations so a reparse stays stable
                open();
                out += "-";
                out += print_lit(-n->value);
                close();
            } else {
                out += print_lit(n->value);
            }
            break;
        case Kind::var_x: out += "x"; break;
        case Kind::var_n: out += "n"; break;
        case Kind::neg:
            open();
            out += "-";
            print_node(n->a.get(), 4, out);
            close();
            break;
        case Kind::abs:
        case Kind::min:
        case Kind::max: {
            out += n->kind == Kind::abs ? "abs" : (n->kind == Kind::min ? "min" : "max");
            out += "(";
            print_node(n->a.get(), 0, out);
            if (n->kind != Kind::abs) {
                out += ", ";
                print_node(n->b.get(), 0, out);
            }
            out += ")";
            break;
        }
        case Kind::add:
        case Kind::sub:
            open();
            print_node(n->a.get(), 1, out);
            out += n->kind == Kind::add ? " + " : " - ";
            print_node(n->b.get(), 2, out);
            close();
            break;
        case Kind::mul:
        case Kind::div:
            open();
            print_node(n->a.get(), 2, out);
            out += n->kind == Kind::mul ? "*" : "/";
            print_node(n->b.get(), 3, out);
            close();
            break;
        case Kind::pow:
            open();
            print_node(n->a.get(), 4, out);
            out += "^" + std::to_string(n->exponent);
            close();
            break;
        case Kind::pow_n:
            open();
            print_node(n->a.get(), 4, out);
            out += "^n";
            close();
            break;
        case Kind::piecewise:
            out += "pw(x <= " + print_lit(n->value) + ", ";
            print_node(n->a.get(), 0, out);
            out += ", ";
            print_node(n->b.get(), 0, out);
            out += ")";
            break;
    }
}

}  // namespace

std::string print_expr(const Expr& e) {
    std::string out;
    print_node(e.node(), 0, out);
    return out;
}

bool structurally_equal(const Expr& a, const Expr& b) {
    const Node *x = a.node(), *y = b.node();
    if (!x || !y) return x == y;
    if (x->kind != y->kind) return false;
    switch (x->kind) {
        case Kind::lit: return x->value == y->value;
        case Kind::var_x:
        case Kind::var_n: return true;
        case Kind::pow:
            return x->exponent == y->exponent &&
                   structurally_equal(Expr(x->a), Expr(y->a));
        case Kind::neg:
        case Kind::abs:
        case Kind::pow_n:
            return structurally_equal(Expr(x->a), Expr(y->a));
        case Kind::piecewise:
            if (x->value != y->value) return false;
            [[fallthrough]];
        default:
            return structurally_equal(Expr(x->a), Expr(y->a)) &&
                   structurally_equal(Expr(x->b), Expr(y->b));
    }
}

// ------------------------------------------------------------ evaluators --

namespace {
// A `^n` exponent must be bound to a non-negative integer small enough to
// iterate; anything else has no defined value.
unsigned long bound_exponent(const std::optional<Rational>& n_val) {
    if (!n_val) throw UnboundVariableError("n");
    if (!n_val->is_integer() || n_val->sign() < 0)
        throw UndefinedValueError("exponent n = " + n_val->str() +
                                  " is not a non-negative integer");
    if (!n_val->num().fits_ulong_p())
        throw UndefinedValueError("exponent n = " + n_val->str() +
                                  " does not fit a machine word");
    return n_val->num().get_ui();
}
}  // namespace

Rational eval_rat(const Expr& e, const EvalEnv& env) {
    const Node* n = e.node();
    if (!n) throw std::logic_error("eval of empty expression");
    switch (n->kind) {
        case Kind::lit: return n->value;
        case Kind::var_x:
            if (!env.x) throw UnboundVariableError("x");
            return *env.x;
        case Kind::var_n:
            if (!env.n) throw UnboundVariableError("n");
            return *env.n;
        case Kind::neg: return -eval_rat(Expr(n->a), env);
        case Kind::abs: return abs(eval_rat(Expr(n->a), env));
        case Kind::add: return eval_rat(Expr(n->a), env) + eval_rat(Expr(n->b), env);
        case Kind::sub: return eval_rat(Expr(n->a), env) - eval_rat(Expr(n->b), env);
        case Kind::mul: return eval_rat(Expr(n->a), env) * eval_rat(Expr(n->b), env);
        case Kind::div: return eval_rat(Expr(n->a), env) / eval_rat(Expr(n->b), env);
        case Kind::min: return min(eval_rat(Expr(n->a), env), eval_rat(Expr(n->b), env));
        case Kind::max: return max(eval_rat(Expr(n->a), env), eval_rat(Expr(n->b), env));
        case Kind::pow: return pow_nat(eval_rat(Expr(n->a), env), n->exponent);
        case Kind::pow_n:
            return pow_nat(eval_rat(Expr(n->a), env), bound_exponent(env.n));
        case Kind::piecewise:
            if (!env.x) throw UnboundVariableError("x");
            return *env.x <= n->value ? eval_rat(Expr(n->a), env)
                                      : eval_rat(Expr(n->b), env);
    }
    throw std::logic_error("unreachable expression kind");
}

std::optional<Enclosure> eval_enclosure(const Expr& e, const Enclosure& xs,
                                        const std::optional<Rational>& n_val) {
    const Node* n = e.node();
    if (!n) throw std::logic_error("eval of empty expression");
    auto sub = [&](const std::shared_ptr<const Node>& c) {
        return eval_enclosure(Expr(c), xs, n_val);
    };
    switch (n->kind) {
        case Kind::lit: return Enclosure::point(n->value);
        case Kind::var_x: return xs;
        case Kind::var_n:
            if (!n_val) throw UnboundVariableError("n");
            return Enclosure::point(*n_val);
        case Kind::neg: {
            auto a = sub(n->a);
            if (!a) return std::nullopt;
            return -*a;
        }
        case Kind::abs: {
            auto a = sub(n->a);
            if (!a) return std::nullopt;
            return abs(*a);
        }
        case Kind::pow: {
            auto a = sub(n->a);
            if (!a) return std::nullopt;
            return pow_nat(*a, n->exponent);
        }
        case Kind::pow_n: {
            unsigned long k = bound_exponent(n_val);
            auto a = sub(n->a);
            if (!a) return std::nullopt;
            return pow_nat(*a, k);
        }
        case Kind::piecewise: {
            // split at the cut and hull whatever branches remain reachable;
            // the else branch is widened to a closed range, which is sound
            if (xs.hi() <= n->value) return sub(n->a);
            if (xs.lo() > n->value) return sub(n->b);
            Enclosure then_in(xs.lo(), min(xs.hi(), n->value));
            Enclosure else_in(max(xs.lo(), n->value), xs.hi());
            auto t = eval_enclosure(Expr(n->a), then_in, n_val);
            auto f = eval_enclosure(Expr(n->b), else_in, n_val);
            if (!t || !f) return std::nullopt;
            return hull(*t, *f);
        }
        default: break;
    }
    auto a = sub(n->a), b = sub(n->b);
    if (!a || !b) return std::nullopt;
    switch (n->kind) {
        case Kind::add: return *a + *b;
        case Kind::sub: return *a - *b;
        case Kind::mul: return *a * *b;
        case Kind::div: return div(*a, *b);
        case Kind::min: return min(*a, *b);
        case Kind::max: return max(*a, *b);
        default: throw std::logic_error("unreachable expression kind");
    }
}

}  // namespace ivi
