#include <functional>
#include <vector>

#include "doctest.h"
#include "ivi/engine.hpp"
#include "ivi/partition.hpp"

using namespace ivi;

namespace {

// Hand-built partition-assembling algebra over a gauge: the canonical
// client of both strategies. Counters observe the engine's contract.
struct PartitionAlgebra {
    WitnessAlgebra<TaggedPartition> alg;
    int adjacent_calls = 0;
    int right_calls = 0;
    int left_calls = 0;
    int ball_calls = 0;

    PartitionAlgebra(Gauge g, Interval I, bool with_left = true) {
        alg.point_witness = [](const Rational& x) {
            return TaggedPartition{{x}, {}};
        };
        alg.combine_adjacent = [this](const TaggedPartition& a, const TaggedPartition& b) {
            ++adjacent_calls;
            return concat(a, b);
        };
        alg.right_oracle = [this, g, I](const Rational& s) -> std::optional<RightStep<TaggedPartition>> {
            ++right_calls;
            Rational to = min(I.hi, s + g(s));
            return RightStep<TaggedPartition>{to, TaggedPartition{{s, to}, {s}}};
        };
        if (with_left) {
            alg.left_oracle = [this, g](const Rational& sigma)
                -> std::optional<LeftRecovery<TaggedPartition>> {
                ++left_calls;
                Rational window_lo = sigma - g(sigma);
                return LeftRecovery<TaggedPartition>{
                    window_lo, [sigma](const Rational& x) -> std::optional<TaggedPartition> {
                        if (!(x < sigma)) return std::nullopt;
                        return TaggedPartition{{x, sigma}, {sigma}};
                    }};
            };
        } else {
            alg.left_oracle = [this](const Rational&)
                -> std::optional<LeftRecovery<TaggedPartition>> {
                ++left_calls;
                return std::nullopt;
            };
        }
        alg.ball_oracle = [this, g, I](const Rational& s) -> std::optional<Ball<TaggedPartition>> {
            ++ball_calls;
            Rational radius = g(s);
            Rational lo = max(I.lo, s - radius), hi = min(I.hi, s + radius);
            return Ball<TaggedPartition>{radius, TaggedPartition{{lo, hi}, {s}}};
        };
        alg.combine_overlap = [](const std::optional<TaggedPartition>& acc,
                                 const TaggedPartition& piece, const Rational&,
                                 const Rational& s, const Rational& t) {
            Rational tag = piece.tags.empty() ? s : piece.tags.front();
            TaggedPartition cell =
                s == t ? TaggedPartition{{s}, {}} : TaggedPartition{{s, t}, {tag}};
            return acc ? concat(*acc, cell) : cell;
        };
    }
};

Gauge adversarial_gauge() {
    // shrinks toward the right endpoint, but the endpoint itself has slack
    return Gauge([](const Rational& x) {
        return x == Rational(1) ? Rational(1, 4) : (Rational(1) - x) / Rational(2);
    });
}

std::vector<Rational> reach_sequence(const Trace& t) {
    std::vector<Rational> reaches;
    for (const auto& e : t.events)
        if (e.kind == TraceEvent::Kind::right_step || e.kind == TraceEvent::Kind::left_jump)
            reaches.push_back(*e.to);
    return reaches;
}

}  // namespace

TEST_CASE("constant-gauge creep steps greedily and folds once per step") {
    Interval unit(Rational(0), Rational(1));
    PartitionAlgebra pa(Gauge::constant(Rational(3, 10)), unit);
    auto out = creep(unit, pa.alg);
    REQUIRE(out.ok());
    CHECK(pa.adjacent_calls == 4);
    std::vector<Rational> expect{Rational(3, 10), Rational(3, 5), Rational(9, 10), Rational(1)};
    CHECK(reach_sequence(out.trace) == expect);
    CHECK(out.witness->cuts ==
          std::vector<Rational>{Rational(0), Rational(3, 10), Rational(3, 5),
                                Rational(9, 10), Rational(1)});
    CHECK(out.witness->tags ==
          std::vector<Rational>{Rational(0), Rational(3, 10), Rational(3, 5), Rational(9, 10)});
    CHECK(is_delta_fine(*out.witness, Gauge::constant(Rational(3, 10))));
}

TEST_CASE("degenerate intervals succeed without consulting any oracle") {
    Interval point(Rational(2, 3), Rational(2, 3));
    PartitionAlgebra pa(Gauge::constant(Rational(1)), point);
    auto out = creep(point, pa.alg);
    REQUIRE(out.ok());
    CHECK(pa.right_calls == 0);
    CHECK(pa.left_calls == 0);
    CHECK(pa.ball_calls == 0);
    CHECK(out.trace.events.empty());
    CHECK(out.witness->cuts == std::vector<Rational>{Rational(2, 3)});
    CHECK(out.witness->cells() == 0);
}

TEST_CASE("geometric stalls recover through the left window") {
    Interval unit(Rational(0), Rational(1));
    Gauge g = adversarial_gauge();
    PartitionAlgebra pa(g, unit);
    auto out = creep(unit, pa.alg);
    REQUIRE(out.ok());
    CHECK(out.trace.count(TraceEvent::Kind::left_jump) >= 1);
    CHECK(out.trace.count(TraceEvent::Kind::stall) >= 1);
    CHECK(is_delta_fine(*out.witness, g));
    CHECK(out.witness->lo() == Rational(0));
    CHECK(out.witness->hi() == Rational(1));

    auto reaches = reach_sequence(out.trace);
    Rational prev(0);
    for (const Rational& r : reaches) {
        CHECK(prev < r);
        prev = r;
    }
    CHECK(prev == Rational(1));
}

TEST_CASE("a declined recovery yields a stall report with the exact supremum") {
    Interval unit(Rational(0), Rational(1));
    PartitionAlgebra pa(adversarial_gauge(), unit, /*with_left=*/false);
    auto out = creep(unit, pa.alg);
    REQUIRE(!out.ok());
    CHECK(out.failure->reason == "stall-no-recovery");
    REQUIRE(out.failure->sup_estimate.has_value());
    CHECK(*out.failure->sup_estimate == Rational(1));  // extrapolation is exact here
    CHECK(*out.failure->at < Rational(1));
}

TEST_CASE("a right oracle that fails to advance is a contract violation") {
    Interval unit(Rational(0), Rational(1));
    WitnessAlgebra<int> alg;
    alg.point_witness = [](const Rational&) { return 0; };
    alg.combine_adjacent = [](int a, int) { return a; };
    alg.left_oracle = [](const Rational&) -> std::optional<LeftRecovery<int>> {
        return std::nullopt;
    };
    alg.right_oracle = [](const Rational& s) -> std::optional<RightStep<int>> {
        return RightStep<int>{s, 0};  // no progress
    };
    CHECK_THROWS_AS(creep(unit, alg), std::logic_error);
}

TEST_CASE("a right oracle with no answer reports oracle-failure at the reach") {
    Interval unit(Rational(0), Rational(1));
    WitnessAlgebra<int> alg;
    alg.point_witness = [](const Rational&) { return 0; };
    alg.combine_adjacent = [](int a, int) { return a; };
    alg.left_oracle = [](const Rational&) -> std::optional<LeftRecovery<int>> {
        return std::nullopt;
    };
    alg.right_oracle = [](const Rational&) -> std::optional<RightStep<int>> {
        return std::nullopt;
    };
    auto out = creep(unit, alg);
    REQUIRE(!out.ok());
    CHECK(out.failure->reason == "oracle-failure");
    CHECK(*out.failure->at == Rational(0));
}

TEST_CASE("the step budget turns slow progress into a reported outcome") {
    Interval unit(Rational(0), Rational(1));
    PartitionAlgebra pa(Gauge::constant(Rational(1, 10)), unit);
    EngineConfig cfg;
    cfg.max_steps = 3;
    auto out = creep(unit, pa.alg, cfg);
    REQUIRE(!out.ok());
    CHECK(out.failure->reason == "step-limit");
    CHECK(*out.failure->at == Rational(3, 10));
}

TEST_CASE("one dominating ball accepts the root with no splits") {
    Interval I(Rational(-1), Rational(2));
    WitnessAlgebra<int> alg;
    alg.ball_oracle = [&I](const Rational&) -> std::optional<Ball<int>> {
        return Ball<int>{I.width() + Rational(1), 7};
    };
    alg.combine_overlap = [](const std::optional<int>&, const int& piece, const Rational&,
                             const Rational&, const Rational&) { return piece; };
    auto out = bisect_cover(I, alg);
    REQUIRE(out.ok());
    CHECK(*out.witness == 7);
    CHECK(out.trace.count(TraceEvent::Kind::ball_accept) == 1);
    CHECK(out.trace.count(TraceEvent::Kind::split) == 0);
}

TEST_CASE("a sign oracle around a zero forces depth-limited localization") {
    Interval unit(Rational(0), Rational(1));
    const Rational root(1, 2);
    WitnessAlgebra<int> alg;
    alg.ball_oracle = [&root](const Rational& s) -> std::optional<Ball<int>> {
        if (s == root) return std::nullopt;  // no sign-definite ball exists
        return Ball<int>{abs(s - root), s < root ? -1 : +1};
    };
    alg.combine_overlap = [](const std::optional<int>& acc, const int& piece,
                             const Rational&, const Rational&, const Rational&) {
        if (acc && *acc != piece) throw std::logic_error("sign mismatch across fold");
        return piece;
    };
    EngineConfig cfg;
    cfg.max_bisect_depth = 20;
    auto out = bisect_cover(unit, alg, cfg);
    REQUIRE(!out.ok());
    CHECK(out.failure->reason == "depth-limit");
    REQUIRE(out.failure->leaf.has_value());
    CHECK(out.failure->leaf->width() == dyadic(20));
    CHECK(out.failure->leaf->contains(root));
    CHECK(out.trace.count(TraceEvent::Kind::oracle_fail) >= 1);
}

TEST_CASE("a ball oracle may abort the whole run at a probe") {
    Interval unit(Rational(0), Rational(1));
    WitnessAlgebra<int> alg;
    alg.ball_oracle = [](const Rational& s) -> std::optional<Ball<int>> {
        if (s == Rational(1)) throw OracleAbort{s};
        return std::nullopt;
    };
    alg.combine_overlap = [](const std::optional<int>&, const int& piece, const Rational&,
                             const Rational&, const Rational&) { return piece; };
    auto out = bisect_cover(unit, alg);
    REQUIRE(!out.ok());
    CHECK(out.failure->reason == "oracle-failure");
    CHECK(*out.failure->at == Rational(1));
}

TEST_CASE("accepted leaves tile the interval exactly") {
    Interval I(Rational(0), Rational(1));
    Gauge g = Gauge([](const Rational& x) { return Rational(1, 5) + x / Rational(7); });
    using Leaves = std::vector<Interval>;
    WitnessAlgebra<Leaves> alg;
    alg.ball_oracle = [&g](const Rational& s) -> std::optional<Ball<Leaves>> {
        return Ball<Leaves>{g(s), Leaves{}};
    };
    alg.combine_overlap = [](const std::optional<Leaves>& acc, const Leaves&,
                             const Rational&, const Rational& s, const Rational& t) {
        Leaves out = acc ? *acc : Leaves{};
        out.emplace_back(s, t);
        return out;
    };
    auto out = bisect_cover(I, alg);
    REQUIRE(out.ok());
    const Leaves& leaves = *out.witness;
    REQUIRE(!leaves.empty());
    CHECK(leaves.front().lo == I.lo);
    CHECK(leaves.back().hi == I.hi);
    for (std::size_t i = 1; i < leaves.size(); ++i)
        CHECK(leaves[i - 1].hi == leaves[i].lo);

    // the trace records the same leaves in the same order
    Leaves traced;
    for (const auto& e : out.trace.events)
        if (e.kind == TraceEvent::Kind::ball_accept) traced.push_back(*e.leaf);
    CHECK(traced == leaves);
}

TEST_CASE("identical inputs produce identical traces") {
    Interval unit(Rational(0), Rational(1));
    Gauge g = adversarial_gauge();
    PartitionAlgebra a1(g, unit), a2(g, unit);
    auto r1 = creep(unit, a1.alg);
    auto r2 = creep(unit, a2.alg);
    CHECK(r1.trace == r2.trace);
    REQUIRE(r1.ok());
    REQUIRE(r2.ok());
    CHECK(*r1.witness == *r2.witness);

    PartitionAlgebra b1(g, unit), b2(g, unit);
    auto s1 = bisect_cover(unit, b1.alg);
    auto s2 = bisect_cover(unit, b2.alg);
    CHECK(s1.trace == s2.trace);
    REQUIRE(s1.ok());
    CHECK(*s1.witness == *s2.witness);
}

TEST_CASE("replaying a trace through the algebra reproduces the witness") {
    Interval unit(Rational(0), Rational(1));
    Gauge g = adversarial_gauge();

    PartitionAlgebra creeper(g, unit);
    auto c = creep(unit, creeper.alg);
    REQUIRE(c.ok());
    CHECK(c.trace.count(TraceEvent::Kind::left_jump) >= 1);
    CHECK(replay_creep(unit, creeper.alg, c.trace) == *c.witness);

    PartitionAlgebra cover(g, unit);
    auto b = bisect_cover(unit, cover.alg);
    REQUIRE(b.ok());
    CHECK(replay_bisect(unit, cover.alg, b.trace) == *b.witness);
    CHECK(is_delta_fine(*b.witness, g));
}

TEST_CASE("both strategies satisfy the same verifier on the same gauge") {
    Interval unit(Rational(0), Rational(1));
    Gauge g = Gauge::constant(Rational(3, 10));
    PartitionAlgebra creeper(g, unit), cover(g, unit);
    auto c = creep(unit, creeper.alg);
    auto b = bisect_cover(unit, cover.alg);
    REQUIRE(c.ok());
    REQUIRE(b.ok());
    CHECK(is_delta_fine(*c.witness, g));
    CHECK(is_delta_fine(*b.witness, g));
}
