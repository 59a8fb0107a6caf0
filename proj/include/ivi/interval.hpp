#pragma once

#include <string>

#include "ivi/enclosure.hpp"
#include "ivi/rational.hpp"

namespace ivi {

// Closed subinterval [lo, hi] of the ambient line, lo <= hi. Distinct from
// Enclosure on purpose: an Interval is a region being searched or covered,
// an Enclosure is a computed value range.
struct Interval {
    Rational lo, hi;

    Interval() = default;
    Interval(Rational lo_, Rational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
        if (hi < lo)
            throw InputError("interval with hi < lo: [" + lo.str() + ", " +
                             hi.str() + "]");
    }

    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / Rational(2); }
    bool degenerate() const { return lo == hi; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }

    Enclosure as_enclosure() const { return Enclosure(lo, hi); }

    std::string str() const { return "[" + lo.str() + ", " + hi.str() + "]"; }

    friend bool operator==(const Interval& a, const Interval& b) {
        return a.lo == b.lo && a.hi == b.hi;
    }
};

}  // namespace ivi
