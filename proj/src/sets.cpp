#include "ivi/sets.hpp"

#include <algorithm>

namespace ivi {

ClosedSet ClosedSet::from_intervals(std::vector<Interval> parts) {
    std::sort(parts.begin(), parts.end(), [](const Interval& a, const Interval& b) {
        if (a.lo != b.lo) return a.lo < b.lo;
        return a.hi < b.hi;
    });
    ClosedSet out;
    for (auto& p : parts) {
        // touching components ([0,1],[1,2]) merge: their union is one
        // closed interval, and canonical form requires prev.hi < next.lo
        if (!out.components_.empty() && p.lo <= out.components_.back().hi) {
            if (out.components_.back().hi < p.hi)
                out.components_.back().hi = p.hi;
        } else {
            out.components_.push_back(std::move(p));
        }
    }
    return out;
}

bool ClosedSet::contains(const Rational& x) const {
    for (const auto& c : components_)
        if (c.contains(x)) return true;
    return false;
}

Interval ClosedSet::hull() const {
    if (empty()) throw EmptyDomainError("hull of an empty closed set");
    return Interval(components_.front().lo, components_.back().hi);
}

std::optional<Rational> ClosedSet::distance_to(const Rational& x) const {
    if (empty()) return std::nullopt;
    std::optional<Rational> best;
    for (const auto& c : components_) {
        Rational d(0);
        if (x < c.lo)
            d = c.lo - x;
        else if (x > c.hi)
            d = x - c.hi;
        if (!best || d < *best) best = d;
        if (best->sign() == 0) break;
    }
    return best;
}

Rational ClosedSet::nearest_point(const Rational& x) const {
    if (empty()) throw EmptyDomainError("nearest point in an empty closed set");
    std::optional<Rational> best_d;
    Rational best_p(0);
    for (const auto& c : components_) {
        Rational p = x < c.lo ? c.lo : (x > c.hi ? c.hi : x);
        Rational d = abs(p - x);
        if (!best_d || d < *best_d) {
            best_d = d;
            best_p = p;
        }
    }
    return best_p;
}

bool ClosedSet::subset_of(const ClosedSet& other) const {
    for (const auto& c : components_) {
        bool covered = false;
        for (const auto& o : other.components_)
            if (o.contains(c)) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    return true;
}

ClosedSet closed_set_intersect(const ClosedSet& c, const Interval& i) {
    std::vector<Interval> parts;
    for (const auto& comp : c.components()) {
        const Rational& lo = max(comp.lo, i.lo);
        const Rational& hi = min(comp.hi, i.hi);
        if (lo <= hi) parts.emplace_back(lo, hi);
    }
    return ClosedSet::from_intervals(std::move(parts));
}

std::optional<std::pair<std::size_t, Rational>> cover_member_containing(
    const OpenCover& cover, const Rational& s) {
    for (std::size_t i = 0; i < cover.members.size(); ++i) {
        const auto& m = cover.members[i];
        if (m.contains(s)) return std::make_pair(i, min(s - m.lo, m.hi - s));
    }
    return std::nullopt;
}

PointSet PointSet::from_list(std::vector<Rational> points) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    PointSet out;
    out.points_ = std::move(points);
    return out;
}

bool PointSet::contains(const Rational& x) const {
    return std::binary_search(points_.begin(), points_.end(), x);
}

Rational separation_radius(const PointSet& f, const Rational& s) {
    std::optional<Rational> nearest;
    for (const auto& p : f.points()) {
        if (p == s) continue;
        Rational d = abs(p - s);
        if (!nearest || d < *nearest) nearest = d;
    }
    if (!nearest) return Rational(1);
    return *nearest / Rational(2);
}

}  // namespace ivi
