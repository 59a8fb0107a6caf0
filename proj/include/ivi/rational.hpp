#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

#include "ivi/errors.hpp"

namespace ivi {

// Arbitrary-precision rational scalar.
//
// Invariant (canonical form): gcd(num, den) == 1 and den > 0, on every
// construction path. All arithmetic is exact; division by zero throws
// UndefinedValueError carrying both operands.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // implicit: integers embed
    Rational(long num, long den);
    explicit Rational(const mpq_class& v);

    // Accepts "p" and "p/q" (optional leading '-'); exact decimal strings
    // like "0.25" are the expression lexer's job, not this parser's.
    static Rational from_string(std::string_view s);

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    // "p/q", with "/q" omitted when the denominator is 1.
    std::string str() const;

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);  // throws UndefinedValueError

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) == 0;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) < 0;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

private:
    void canonicalize();
    mpq_class v_;
};

Rational abs(const Rational& r);
const Rational& min(const Rational& a, const Rational& b);
const Rational& max(const Rational& a, const Rational& b);

// r^k for a natural exponent; pow_nat(r, 0) == 1.
Rational pow_nat(const Rational& r, unsigned long k);

// 2^-k as a rational, handy for dyadic thresholds and grids.
Rational dyadic(unsigned long k);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace ivi
