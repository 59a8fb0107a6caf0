#pragma once

#include <optional>
#include <string>

#include "ivi/rational.hpp"

namespace ivi {

// Closed interval of rationals used as a value range: every real the
// enclosed computation could produce lies inside [lo, hi]. Endpoints are
// exact, so arithmetic needs no rounding; soundness is inclusion, tightness
// is not promised (multiplication is dependency-naive by design).
class Enclosure {
public:
    Enclosure() : lo_(0), hi_(0) {}
    Enclosure(Rational lo, Rational hi);
    static Enclosure point(const Rational& r) { return Enclosure(r, r); }

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Rational width() const { return hi_ - lo_; }
    bool contains(const Rational& r) const { return lo_ <= r && r <= hi_; }
    bool contains(const Enclosure& o) const {
        return lo_ <= o.lo_ && o.hi_ <= hi_;
    }
    bool is_point() const { return lo_ == hi_; }

    // Strictly excludes zero on one side; the basis of sign certificates.
    bool sign_definite() const { return lo_.sign() > 0 || hi_.sign() < 0; }

    std::string str() const { return "[" + lo_.str() + ", " + hi_.str() + "]"; }

    friend bool operator==(const Enclosure& a, const Enclosure& b) {
        return a.lo_ == b.lo_ && a.hi_ == b.hi_;
    }

private:
    Rational lo_, hi_;
};

Enclosure operator-(const Enclosure& x);
Enclosure operator+(const Enclosure& x, const Enclosure& y);
Enclosure operator-(const Enclosure& x, const Enclosure& y);
Enclosure operator*(const Enclosure& x, const Enclosure& y);

// nullopt when 0 lies in the divisor: the enclosure is indeterminate and
// the caller is expected to refine its input window.
std::optional<Enclosure> div(const Enclosure& x, const Enclosure& y);

Enclosure abs(const Enclosure& x);
Enclosure min(const Enclosure& x, const Enclosure& y);
Enclosure max(const Enclosure& x, const Enclosure& y);

// Tight integer power (monotone on the relevant pieces), unlike x*x.
Enclosure pow_nat(const Enclosure& x, unsigned long k);

Enclosure hull(const Enclosure& x, const Enclosure& y);
std::optional<Enclosure> intersect(const Enclosure& x, const Enclosure& y);

}  // namespace ivi
