#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ivi/interval.hpp"

namespace ivi {

// Finite union of closed intervals in canonical form: components sorted,
// pairwise disjoint and non-adjacent (prev.hi < next.lo strictly). The
// canonical form is unique, so equality is component-wise.
class ClosedSet {
public:
    ClosedSet() = default;  // empty set

    // Canonicalizes: sorts and merges overlapping or touching intervals.
    static ClosedSet from_intervals(std::vector<Interval> parts);

    const std::vector<Interval>& components() const { return components_; }
    bool empty() const { return components_.empty(); }

    bool contains(const Rational& x) const;

    // Hull [min lo, max hi]; requires non-empty.
    Interval hull() const;

    // Exact distance from x to the set; nullopt for the empty set.
    std::optional<Rational> distance_to(const Rational& x) const;

    // Some point of the set nearest to x; requires non-empty.
    Rational nearest_point(const Rational& x) const;

    bool subset_of(const ClosedSet& other) const;

    friend bool operator==(const ClosedSet& a, const ClosedSet& b) {
        return a.components_ == b.components_;
    }

private:
    std::vector<Interval> components_;
};

// C ∩ [I], exact; the result is again canonical.
ClosedSet closed_set_intersect(const ClosedSet& c, const Interval& i);

// Open interval ]lo, hi[, lo < hi. Membership is strict on both sides.
struct OpenIntervalSpec {
    Rational lo, hi;

    OpenIntervalSpec(Rational lo_, Rational hi_)
        : lo(std::move(lo_)), hi(std::move(hi_)) {
        if (!(lo < hi))
            throw InputError("open interval needs lo < hi, got ]" + lo.str() +
                             ", " + hi.str() + "[");
    }
    bool contains(const Rational& x) const { return lo < x && x < hi; }

    friend bool operator==(const OpenIntervalSpec& a, const OpenIntervalSpec& b) {
        return a.lo == b.lo && a.hi == b.hi;
    }
};

struct OpenCover {
    std::vector<OpenIntervalSpec> members;
};

// First member (by index) strictly containing s, together with the
// containment margin min(s - lo, hi - s) > 0; nullopt when no member
// contains s.
std::optional<std::pair<std::size_t, Rational>> cover_member_containing(
    const OpenCover& cover, const Rational& s);

// Finite set of points, strictly increasing.
class PointSet {
public:
    PointSet() = default;
    static PointSet from_list(std::vector<Rational> points);  // sorts, dedups

    const std::vector<Rational>& points() const { return points_; }
    bool empty() const { return points_.empty(); }
    bool contains(const Rational& x) const;

    friend bool operator==(const PointSet& a, const PointSet& b) {
        return a.points_ == b.points_;
    }

private:
    std::vector<Rational> points_;
};

// Half the distance from s to the nearest point of F \ {s}, or 1 when
// F \ {s} is empty. Postcondition: [s-r, s+r] ∩ F ⊆ {s}.
Rational separation_radius(const PointSet& f, const Rational& s);

}  // namespace ivi
