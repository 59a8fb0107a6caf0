#include <random>

#include "doctest.h"
#include "ivi/enclosure.hpp"

using namespace ivi;

namespace {

Rational rand_rat(std::mt19937& rng, long lo, long hi, long max_den = 64) {
    std::uniform_int_distribution<long> num(lo * max_den, hi * max_den);
    std::uniform_int_distribution<long> den(1, max_den);
    long d = den(rng);
    std::uniform_int_distribution<long> n(lo * d, hi * d);
    (void)num;
    return Rational(n(rng), d);
}

Enclosure rand_encl(std::mt19937& rng, long lo, long hi) {
    Rational a = rand_rat(rng, lo, hi), b = rand_rat(rng, lo, hi);
    return a <= b ? Enclosure(a, b) : Enclosure(b, a);
}

Rational rand_point_in(std::mt19937& rng, const Enclosure& x) {
    std::uniform_int_distribution<long> pick(0, 64);
    return x.lo() + x.width() * Rational(pick(rng), 64);
}

}  // namespace

TEST_CASE("range multiplication by a scalar interval") {
    Enclosure r = Enclosure(Rational(-1), Rational(2)) * Enclosure(Rational(3), Rational(3));
    CHECK(r == Enclosure(Rational(-3), Rational(6)));
}

TEST_CASE("division with zero inside the divisor is indeterminate") {
    auto r = div(Enclosure(Rational(1), Rational(1)), Enclosure(Rational(-1), Rational(1)));
    CHECK(!r.has_value());
    auto ok = div(Enclosure(Rational(1), Rational(1)), Enclosure(Rational(1, 2), Rational(2)));
    REQUIRE(ok.has_value());
    CHECK(*ok == Enclosure(Rational(1, 2), Rational(2)));
}

TEST_CASE("addition is exact and tight over the operand boxes") {
    Enclosure x(Rational(0), Rational(1)), y(Rational(0), Rational(1));
    Enclosure s = x + y;
    CHECK(s == Enclosure(Rational(0), Rational(2)));
    // Brute-force corner check on a 10x10 grid of the operand boxes:
    // every pointwise sum is contained, and the extreme sums attain the
    // endpoints, so the result is tight.
    Rational seen_lo = s.hi(), seen_hi = s.lo();
    for (int i = 0; i <= 9; ++i)
        for (int j = 0; j <= 9; ++j) {
            Rational px = x.lo() + x.width() * Rational(i, 9);
            Rational py = y.lo() + y.width() * Rational(j, 9);
            Rational v = px + py;
            CHECK(s.contains(v));
            seen_lo = min(seen_lo, v);
            seen_hi = max(seen_hi, v);
        }
    CHECK(seen_lo == s.lo());
    CHECK(seen_hi == s.hi());
}

TEST_CASE("width is hi minus lo") {
    CHECK(Enclosure(Rational(1, 2), Rational(1, 2)).width() == Rational(0));
    CHECK(Enclosure(Rational(-1), Rational(2)).width() == Rational(3));
    Enclosure x(Rational(0), Rational(1, 3)), y(Rational(0), Rational(1, 6));
    CHECK((x + y).width() == x.width() + y.width());
    CHECK((x + y).width() == Rational(1, 2));
}

TEST_CASE("inclusion isotonicity under randomized nesting") {
    std::mt19937 rng(20240812);
    for (int trial = 0; trial < 200; ++trial) {
        Enclosure xp = rand_encl(rng, -3, 3), yp = rand_encl(rng, -3, 3);
        // inner boxes: random subranges
        Rational xl = rand_point_in(rng, xp), xr = rand_point_in(rng, xp);
        Rational yl = rand_point_in(rng, yp), yr = rand_point_in(rng, yp);
        Enclosure x = xl <= xr ? Enclosure(xl, xr) : Enclosure(xr, xl);
        Enclosure y = yl <= yr ? Enclosure(yl, yr) : Enclosure(yr, yl);
        CHECK(xp.contains(x));
        CHECK(yp.contains(y));
        CHECK((xp + yp).contains(x + y));
        CHECK((xp - yp).contains(x - y));
        CHECK((xp * yp).contains(x * y));
        CHECK(min(xp, yp).contains(min(x, y)));
        CHECK(max(xp, yp).contains(max(x, y)));
        CHECK(abs(xp).contains(abs(x)));
        auto dp = div(xp, yp);
        auto d = div(x, y);
        if (dp && d) CHECK(dp->contains(*d));
        // determinate on the outer box forces determinate on the inner
        if (dp) CHECK(d.has_value());
    }
}

TEST_CASE("containment soundness at 1000 random points") {
    std::mt19937 rng(20240813);
    for (int trial = 0; trial < 1000; ++trial) {
        Enclosure x = rand_encl(rng, -4, 4), y = rand_encl(rng, -4, 4);
        Rational px = rand_point_in(rng, x), py = rand_point_in(rng, y);
        CHECK((x + y).contains(px + py));
        CHECK((x - y).contains(px - py));
        CHECK((x * y).contains(px * py));
        CHECK(min(x, y).contains(min(px, py)));
        CHECK(max(x, y).contains(max(px, py)));
        CHECK(abs(x).contains(abs(px)));
        auto d = div(x, y);
        if (d) CHECK(d->contains(px / py));
        CHECK(pow_nat(x, 3).contains(pow_nat(px, 3)));
    }
}

TEST_CASE("integer power is tight where naive products are loose") {
    Enclosure x(Rational(-1), Rational(1));
    CHECK(x * x == Enclosure(Rational(-1), Rational(1)));       // dependency-naive
    CHECK(pow_nat(x, 2) == Enclosure(Rational(0), Rational(1)));  // tight
    CHECK(pow_nat(x, 3) == Enclosure(Rational(-1), Rational(1)));
    CHECK(pow_nat(x, 0) == Enclosure::point(Rational(1)));
    CHECK(pow_nat(Enclosure(Rational(-2), Rational(-1)), 2) ==
          Enclosure(Rational(1), Rational(4)));
}

TEST_CASE("sign definiteness excludes zero strictly") {
    CHECK(Enclosure(Rational(1), Rational(2)).sign_definite());
    CHECK(Enclosure(Rational(-2), Rational(-1, 100)).sign_definite());
    CHECK(!Enclosure(Rational(0), Rational(2)).sign_definite());
    CHECK(!Enclosure(Rational(-1), Rational(1)).sign_definite());
}

TEST_CASE("hull and intersect") {
    Enclosure a(Rational(0), Rational(1)), b(Rational(2), Rational(3));
    CHECK(hull(a, b) == Enclosure(Rational(0), Rational(3)));
    CHECK(!intersect(a, b).has_value());
    auto m = intersect(Enclosure(Rational(0), Rational(2)), Enclosure(Rational(1), Rational(3)));
    REQUIRE(m.has_value());
    CHECK(*m == Enclosure(Rational(1), Rational(2)));
}
