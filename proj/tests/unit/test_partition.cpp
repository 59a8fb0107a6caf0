#include <random>

#include "doctest.h"
#include "ivi/partition.hpp"

using namespace ivi;

namespace {
TaggedPartition unit_cell(Rational tag) {
    return TaggedPartition{{Rational(0), Rational(1)}, {std::move(tag)}};
}
}  // namespace

TEST_CASE("fineness is an exact per-cell ball containment check") {
    CHECK(is_delta_fine(unit_cell(Rational(1, 2)), Gauge::constant(Rational(2))));
    CHECK(!is_delta_fine(unit_cell(Rational(0)), Gauge::constant(Rational(1, 4))));

    TaggedPartition steps{{Rational(0), Rational(3, 10), Rational(6, 10), Rational(9, 10), Rational(1)},
                          {Rational(0), Rational(3, 10), Rational(6, 10), Rational(9, 10)}};
    steps.validate();
    CHECK(is_delta_fine(steps, Gauge::constant(Rational(3, 10))));
}

TEST_CASE("a non-positive gauge value is an input defect, not falsity") {
    CHECK_THROWS_AS(is_delta_fine(unit_cell(Rational(1, 2)), Gauge::constant(Rational(0))),
                    InvalidGaugeError);
    Gauge vanishing([](const Rational& x) { return x - Rational(1); });
    CHECK_THROWS_AS(is_delta_fine(unit_cell(Rational(1)), vanishing), InvalidGaugeError);
}

TEST_CASE("fineness is monotone in the gauge") {
    std::mt19937 rng(20240816);
    std::uniform_int_distribution<long> num(1, 64);
    for (int trial = 0; trial < 100; ++trial) {
        // random partition of [0,1] with 1..5 cells, tags at midpoints
        std::uniform_int_distribution<int> cells(1, 5);
        int k = cells(rng);
        std::vector<Rational> cuts{Rational(0)};
        for (int i = 1; i < k; ++i) cuts.emplace_back(i, k);
        cuts.emplace_back(1);
        std::vector<Rational> tags;
        for (int i = 0; i < k; ++i) tags.push_back((cuts[i] + cuts[i + 1]) / Rational(2));
        TaggedPartition p{cuts, tags};
        p.validate();
        Rational g1(num(rng), 64), bump(num(rng), 64);
        Gauge small = Gauge::constant(g1);
        Gauge large = Gauge::constant(g1 + bump);
        if (is_delta_fine(p, small)) CHECK(is_delta_fine(p, large));
    }
}

TEST_CASE("malformed partitions are rejected by validate") {
    CHECK_THROWS_AS((TaggedPartition{{}, {}}.validate()), std::logic_error);
    CHECK_THROWS_AS((TaggedPartition{{Rational(0), Rational(1)}, {}}.validate()),
                    std::logic_error);
    CHECK_THROWS_AS((TaggedPartition{{Rational(0), Rational(0)}, {Rational(0)}}.validate()),
                    std::logic_error);
    CHECK_THROWS_AS((TaggedPartition{{Rational(0), Rational(1)}, {Rational(2)}}.validate()),
                    std::logic_error);
    // tags may sit on cut points (closed-cell membership)
    TaggedPartition boundary{{Rational(0), Rational(1)}, {Rational(1)}};
    boundary.validate();
}

TEST_CASE("concatenation glues adjacent partitions and honors identities") {
    TaggedPartition left{{Rational(0), Rational(1, 2)}, {Rational(0)}};
    TaggedPartition right{{Rational(1, 2), Rational(1)}, {Rational(1)}};
    TaggedPartition whole = concat(left, right);
    whole.validate();
    CHECK(whole.cuts == std::vector<Rational>{Rational(0), Rational(1, 2), Rational(1)});
    CHECK(whole.tags == std::vector<Rational>{Rational(0), Rational(1)});

    TaggedPartition degenerate_left{{Rational(0)}, {}};
    TaggedPartition degenerate_right{{Rational(1)}, {}};
    CHECK(concat(degenerate_left, left) == left);
    CHECK(concat(right, degenerate_right) == right);

    CHECK_THROWS_AS(concat(left, left), std::logic_error);  // 1/2 != 0
}

TEST_CASE("concatenation is associative on random adjacent triples") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<long> num(1, 16);
    for (int trial = 0; trial < 100; ++trial) {
        Rational a(0), b = Rational(num(rng), 16), c0 = b + Rational(num(rng), 16),
                 d = c0 + Rational(num(rng), 16);
        TaggedPartition p{{a, b}, {a}};
        TaggedPartition q{{b, c0}, {b}};
        TaggedPartition r{{c0, d}, {c0}};
        CHECK(concat(concat(p, q), r) == concat(p, concat(q, r)));
    }
}
