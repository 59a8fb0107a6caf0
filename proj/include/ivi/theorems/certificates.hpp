#pragma once

#include <cstddef>
#include <vector>

#include "ivi/interval.hpp"
#include "ivi/rational.hpp"
#include "ivi/sets.hpp"

namespace ivi {

// Finite, independently checkable witnesses. Every field is exact data;
// each has a verifier in its instance header that re-checks the claim
// against the original inputs without trusting the producing run.

// |f| <= M everywhere on interval.
struct BoundCertificate {
    Rational M;
    Interval interval;
};

// f has this sign at every point of interval.
struct SignCertificate {
    enum class Sign { positive, negative };
    Sign sign;
    Interval interval;
};

// No point examined under the stated search budget (a dyadic grid of
// density 2^grid_exponent over the domain) has a strictly larger value.
struct ArgmaxCandidate {
    Rational point;
    Rational value;
    unsigned long grid_exponent;
};

// a = points[0] < ... < points.back() = b with strictly increasing values;
// each adjacent pair was certified by an oracle call.
struct MonotoneChain {
    std::vector<Rational> points;
    std::vector<Rational> values;
};

// f(a) <= f(b) + eps * (b - a), derived from a strictly increasing chain of
// the tilted function f(x) + eps * x.
struct TiltCertificate {
    Rational eps;
    Interval interval;
    Rational lhs;  // f(a)
    Rational rhs;  // f(b) + eps * (b - a)
    MonotoneChain chain;  // chain of the tilted function
};

// x, y in set with |x - y| <= delta implies |f(x) - f(y)| < epsilon.
struct UniformModulus {
    Rational epsilon;
    Rational delta;
    ClosedSet set;
};

// dini: 0 <= f_n(x) < eps on the set; cantor: C_n ∩ I is empty.
struct IndexCertificate {
    enum class Role { dini, cantor };
    unsigned long n;
    Role role;
};

// The union of the indexed open cover members contains the closed set.
struct SubcoverCertificate {
    std::vector<std::size_t> member_indices;
};

// One-sided difference-quotient bound at `at` over a dyadic grid:
//   lower-left : (f(at)-f(x))/(at-x) >= bound for every grid x in [w, at[
//   upper-right: some grid x in ]at, w] attains (f(x)-f(at))/(x-at) = bound
// where w = witness_r_or_t. grid_only records that the bound is certified
// at grid resolution, not by enclosure.
struct DiniDerivateBound {
    enum class Kind { lower_left, upper_right };
    Kind kind;
    Rational at;
    Rational bound;
    Rational witness_r_or_t;
    bool grid_only;
};

}  // namespace ivi
