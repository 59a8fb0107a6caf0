#include "ivi/rational.hpp"

#include <cctype>
#include <ostream>

namespace ivi {

Rational::Rational(long num, long den) : v_(num, den == 0 ? 1 : den) {
    if (den == 0)
        throw UndefinedValueError("rational with zero denominator: " +
                                  std::to_string(num) + "/0");
    canonicalize();
}

Rational::Rational(const mpq_class& v) : v_(v) { canonicalize(); }

void Rational::canonicalize() { v_.canonicalize(); }

Rational Rational::from_string(std::string_view s) {
    auto bad = [&] {
        return InputError("malformed rational '" + std::string(s) +
                          "' (expected p or p/q)");
    };
    if (s.empty()) throw bad();
    auto digits_ok = [](std::string_view t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    std::string_view num = s, den = "1";
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
        if (!den.empty() && den[0] == '-')
            throw bad();  // sign lives on the numerator
    }
    if (!digits_ok(num) || !digits_ok(den)) throw bad();
    mpz_class n{std::string(num)}, d{std::string(den)};
    if (d == 0)
        throw UndefinedValueError("rational with zero denominator: " +
                                  std::string(s));
    return Rational(mpq_class(n, d));
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
}
Rational& Rational::operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
}
Rational& Rational::operator*=(const Rational& o) {
    // mpq arithmetic preserves canonical form, no re-normalization needed
    v_ *= o.v_;
    return *this;
}
Rational& Rational::operator/=(const Rational& o) {
    if (o.sign() == 0)
        throw UndefinedValueError("division by zero: (" + str() + ") / (" +
                                  o.str() + ")");
    v_ /= o.v_;
    return *this;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

Rational pow_nat(const Rational& r, unsigned long k) {
    Rational acc(1), base = r;
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

Rational dyadic(unsigned long k) {
    mpz_class d;
    mpz_ui_pow_ui(d.get_mpz_t(), 2, k);
    return Rational(mpq_class(mpz_class(1), d));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace ivi
