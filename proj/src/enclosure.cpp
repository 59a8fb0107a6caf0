#include "ivi/enclosure.hpp"

#include <algorithm>
#include <stdexcept>

namespace ivi {

Enclosure::Enclosure(Rational lo, Rational hi)
    : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (hi_ < lo_)
        throw std::logic_error("enclosure with hi < lo: " + str());
}

Enclosure operator-(const Enclosure& x) { return {-x.hi(), -x.lo()}; }

Enclosure operator+(const Enclosure& x, const Enclosure& y) {
    return {x.lo() + y.lo(), x.hi() + y.hi()};
}

Enclosure operator-(const Enclosure& x, const Enclosure& y) {
    return {x.lo() - y.hi(), x.hi() - y.lo()};
}

Enclosure operator*(const Enclosure& x, const Enclosure& y) {
    const Rational p1 = x.lo() * y.lo(), p2 = x.lo() * y.hi();
    const Rational p3 = x.hi() * y.lo(), p4 = x.hi() * y.hi();
    return {min(min(p1, p2), min(p3, p4)), max(max(p1, p2), max(p3, p4))};
}

std::optional<Enclosure> div(const Enclosure& x, const Enclosure& y) {
    if (y.contains(Rational(0))) return std::nullopt;
    const Rational p1 = x.lo() / y.lo(), p2 = x.lo() / y.hi();
    const Rational p3 = x.hi() / y.lo(), p4 = x.hi() / y.hi();
    return Enclosure(min(min(p1, p2), min(p3, p4)),
                     max(max(p1, p2), max(p3, p4)));
}

Enclosure abs(const Enclosure& x) {
    if (x.lo().sign() >= 0) return x;
    if (x.hi().sign() <= 0) return -x;
    return {Rational(0), max(-x.lo(), x.hi())};
}

Enclosure min(const Enclosure& x, const Enclosure& y) {
    return {min(x.lo(), y.lo()), min(x.hi(), y.hi())};
}

Enclosure max(const Enclosure& x, const Enclosure& y) {
    return {max(x.lo(), y.lo()), max(x.hi(), y.hi())};
}

Enclosure pow_nat(const Enclosure& x, unsigned long k) {
    if (k == 0) return Enclosure::point(Rational(1));
    if (k % 2 == 1 || x.lo().sign() >= 0)
        return {pow_nat(x.lo(), k), pow_nat(x.hi(), k)};
    if (x.hi().sign() <= 0) return {pow_nat(x.hi(), k), pow_nat(x.lo(), k)};
    // even power over a zero-straddling range
    return {Rational(0), max(pow_nat(x.lo(), k), pow_nat(x.hi(), k))};
}

Enclosure hull(const Enclosure& x, const Enclosure& y) {
    return {min(x.lo(), y.lo()), max(x.hi(), y.hi())};
}

std::optional<Enclosure> intersect(const Enclosure& x, const Enclosure& y) {
    const Rational& lo = max(x.lo(), y.lo());
    const Rational& hi = min(x.hi(), y.hi());
    if (hi < lo) return std::nullopt;
    return Enclosure(lo, hi);
}

}  // namespace ivi
