#pragma once

#include <functional>
#include <vector>

#include "ivi/interval.hpp"

namespace ivi {

// Positive callable delta: x -> radius of the interval allowed around a tag
// at x. Positivity is enforced at every call; a non-positive return throws
// InvalidGaugeError naming the point.
class Gauge {
public:
    using Fn = std::function<Rational(const Rational&)>;

    explicit Gauge(Fn fn) : fn_(std::move(fn)) {}
    static Gauge constant(const Rational& r) {
        return Gauge([r](const Rational&) { return r; });
    }

    Rational operator()(const Rational& x) const {
        Rational v = fn_(x);
        if (v.sign() <= 0) throw InvalidGaugeError(x.str());
        return v;
    }

private:
    Fn fn_;
};

// Tagged partition of [cuts.front(), cuts.back()]: cuts strictly increasing,
// one tag per cell, every tag inside its closed cell. A single cut with no
// tags is the degenerate partition of a one-point interval.
struct TaggedPartition {
    std::vector<Rational> cuts;
    std::vector<Rational> tags;

    void validate() const;  // throws std::logic_error on malformed data

    const Rational& lo() const { return cuts.front(); }
    const Rational& hi() const { return cuts.back(); }
    std::size_t cells() const { return tags.size(); }

    friend bool operator==(const TaggedPartition& a, const TaggedPartition& b) {
        return a.cuts == b.cuts && a.tags == b.tags;
    }
};

// Concatenation of partitions of adjacent intervals; a.hi() must equal
// b.lo(). Degenerate halves act as identities.
TaggedPartition concat(const TaggedPartition& a, const TaggedPartition& b);

// Exact check of Definition-style fineness: every cell [a_{i-1}, a_i] sits
// inside [x_i - g(x_i), x_i + g(x_i)] for its tag x_i.
bool is_delta_fine(const TaggedPartition& p, const Gauge& g);

}  // namespace ivi
