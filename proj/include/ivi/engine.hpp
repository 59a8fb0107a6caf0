#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ivi/interval.hpp"
#include "ivi/rational.hpp"
#include "ivi/trace.hpp"

namespace ivi {

// ---------------------------------------------------------------------------
// Interval induction engine.
//
// A theorem instance supplies a WitnessAlgebra: local oracles that certify a
// property on small pieces of [a, b], plus combinators that glue certified
// pieces into larger ones. The engine then assembles a witness for all of
// [a, b] by one of two strategies:
//
//   creep        — grow a certified prefix [a, s] rightward (right_oracle),
//                  escaping geometric stalls by jumping over the stall point
//                  with a window from left_oracle;
//   bisect_cover — recursively subdivide [a, b] until each leaf fits inside
//                  a certified ball (ball_oracle), then fold the leaves
//                  left-to-right with the overlap combinator.
//
// Every decision is logged to a Trace; replaying the trace through the same
// algebra reproduces the witness (replay_creep / replay_bisect below).
// ---------------------------------------------------------------------------

enum class ProbePolicy { midpoint, endpoints_then_midpoint };

struct EngineConfig {
    // Upper bound on right-steps (creep) / node visits (bisect).
    unsigned long max_steps = 1000000;
    // Minimum acceptable advance per creep step; three consecutive smaller
    // advances trigger stall recovery. Default: width(I) / 2^20.
    std::optional<Rational> stall_threshold;
    unsigned long max_bisect_depth = 64;
    ProbePolicy probe_policy = ProbePolicy::endpoints_then_midpoint;
};

template <class W>
struct RightStep {
    Rational to;  // strictly right of the query point, <= b
    W piece;      // witness for [query, to]
};

template <class W>
struct LeftRecovery {
    // Any reach x with max(a, window_lo) <= x < sigma may jump to sigma —
    // provided the factory agrees: it re-checks its condition at the exact
    // jump-off point and may decline (nullopt).
    Rational window_lo;
    std::function<std::optional<W>(const Rational&)> piece_for;
};

template <class W>
struct Ball {
    Rational radius;  // strictly positive
    W piece;          // witness for [a,b] ∩ [probe - radius, probe + radius]
};

// The bundle an instance hands the engine. creep uses point_witness,
// combine_adjacent, right_oracle, left_oracle; bisect_cover uses
// combine_overlap and ball_oracle. An instance may provide both.
//
// combine_overlap(acc, piece, r, s, t): acc is the fold so far (nullopt on
// the first leaf) covering [a, s]; piece covers at least [r, t] with r <= s
// (r < s strictly except on the first leaf); the result must cover [a, t].
// r is the known overlap point and t the leaf end — passed explicitly so
// combinators that depend on them (Heine's s - r margin, partition cut
// placement) stay exact.
template <class W>
struct WitnessAlgebra {
    std::function<W(const Rational&)> point_witness;
    std::function<W(const W&, const W&)> combine_adjacent;
    std::function<W(const std::optional<W>&, const W&, const Rational& r,
                    const Rational& s, const Rational& t)>
        combine_overlap;
    std::function<std::optional<RightStep<W>>(const Rational&)> right_oracle;
    std::function<std::optional<LeftRecovery<W>>(const Rational&)> left_oracle;
    std::function<std::optional<Ball<W>>(const Rational&)> ball_oracle;
};

// A ball oracle may throw this to abort the entire run with reason
// "oracle-failure" at `at` — e.g. the maximum search concluding that no
// examined point improves on the probe.
struct OracleAbort {
    Rational at;
};

struct EngineFailure {
    std::string reason;  // stall-no-recovery | step-limit | depth-limit | oracle-failure
    std::optional<Rational> at;         // stall point / probe / reach
    std::optional<Interval> leaf;       // smallest uncovered leaf (bisect)
    std::optional<Rational> sup_estimate;  // extrapolated supremum at a stall
};

template <class W>
struct EngineOutcome {
    std::optional<W> witness;
    std::optional<EngineFailure> failure;
    Trace trace;
    bool ok() const { return witness.has_value(); }
};

namespace detail {

// Geometric (Aitken) extrapolation of the reach limit from the last three
// reaches s0 < s1 < s2: s2 + (s2-s1)^2 / ((s1-s0) - (s2-s1)), the exact
// limit when advances shrink geometrically. Returns nullopt when the
// history is short or the denominator is not positive.
inline std::optional<Rational> extrapolate_reach(const std::vector<Rational>& recent) {
    if (recent.size() < 3) return std::nullopt;
    const Rational& s0 = recent[recent.size() - 3];
    const Rational& s1 = recent[recent.size() - 2];
    const Rational& s2 = recent[recent.size() - 1];
    Rational d1 = s1 - s0, d2 = s2 - s1;
    Rational denom = d1 - d2;
    if (!(denom.sign() > 0)) return std::nullopt;
    return s2 + d2 * d2 / denom;
}

}  // namespace detail

// Grow a certified prefix of I = [a, b] from the left end. The accumulated
// witness always covers [a, reach]; right_oracle extends it step by step.
// When three consecutive advances fall below the stall threshold the engine
// extrapolates the stall supremum and attempts a left-window jump over it —
// first to b, then to the extrapolated point.
template <class W>
EngineOutcome<W> creep(const Interval& I, const WitnessAlgebra<W>& alg,
                       const EngineConfig& cfg = {}) {
    EngineOutcome<W> out;
    const Rational &a = I.lo, &b = I.hi;

    W acc = alg.point_witness(a);
    Rational reach = a;
    if (reach == b) {
        out.witness = std::move(acc);
        return out;
    }

    const Rational threshold =
        cfg.stall_threshold ? *cfg.stall_threshold : I.width() * dyadic(20);

    std::vector<Rational> recent{reach};  // rolling window of recent reaches
    auto remember = [&recent](const Rational& r) {
        recent.push_back(r);
        if (recent.size() > 3) recent.erase(recent.begin());
    };

    // A jump to sigma succeeds when the oracle's window reaches back to the
    // current reach and its factory accepts the exact jump-off point.
    auto attempt_jump = [&](const Rational& sigma) -> bool {
        if (!(reach < sigma) || b < sigma) return false;
        auto recovery = alg.left_oracle(sigma);
        if (!recovery) return false;
        if (!(max(a, recovery->window_lo) <= reach)) return false;
        auto piece = recovery->piece_for(reach);
        if (!piece) return false;
        acc = alg.combine_adjacent(acc, *piece);
        out.trace.left_jump(reach, sigma);
        reach = sigma;
        return true;
    };

    unsigned long steps = 0;
    int small_advances = 0;
    while (true) {
        if (steps >= cfg.max_steps) {
            out.failure = EngineFailure{"step-limit", reach, {}, {}};
            return out;
        }
        ++steps;

        auto step = alg.right_oracle(reach);
        if (!step) {
            out.failure = EngineFailure{"oracle-failure", reach, {}, {}};
            return out;
        }
        if (!(reach < step->to) || b < step->to)
            throw std::logic_error("right_oracle must return a point in (s, b]");

        Rational advance = step->to - reach;
        acc = alg.combine_adjacent(acc, step->piece);
        out.trace.right_step(reach, step->to);
        reach = step->to;
        remember(reach);
        if (reach == b) {
            out.witness = std::move(acc);
            return out;
        }

        small_advances = advance < threshold ? small_advances + 1 : 0;
        if (small_advances < 3) continue;

        // Stalled. Estimate the supremum the reaches are converging to.
        std::optional<Rational> extrapolated = detail::extrapolate_reach(recent);
        if (extrapolated && b < *extrapolated) extrapolated = b;  // clamp
        Rational estimate = extrapolated ? *extrapolated : reach;
        out.trace.stall(reach, estimate);

        bool jumped = attempt_jump(b);
        if (!jumped && extrapolated && *extrapolated != b)
            jumped = attempt_jump(*extrapolated);
        if (!jumped) {
            out.failure = EngineFailure{"stall-no-recovery", reach, {}, estimate};
            return out;
        }
        small_advances = 0;
        recent.assign({reach});
        if (reach == b) {
            out.witness = std::move(acc);
            return out;
        }
    }
}

// Recursively subdivide I until every leaf fits inside a certified ball,
// then fold the accepted leaves in order with combine_overlap.
//
// Acceptance rule: a probe s with radius δ accepts leaf [u, v] when
// [u, v] ⊆ [s-δ, s+δ] and, unless u is the left end of I, s-δ < u strictly.
// The strict left margin makes the overlap point r = max(a, s-δ) satisfy
// r < u on every non-initial leaf, which combinators may rely on (Heine's
// s - r term must be positive).
template <class W>
EngineOutcome<W> bisect_cover(const Interval& I, const WitnessAlgebra<W>& alg,
                              const EngineConfig& cfg = {}) {
    EngineOutcome<W> out;
    std::optional<W> acc;
    unsigned long visits = 0;

    struct Abort {
        EngineFailure failure;
    };

    std::function<void(const Interval&, unsigned long)> visit =
        [&](const Interval& node, unsigned long depth) {
            if (++visits > cfg.max_steps)
                throw Abort{{"step-limit", node.lo, node, {}}};

            Rational mid = node.midpoint();
            std::vector<Rational> probes;
            if (cfg.probe_policy == ProbePolicy::endpoints_then_midpoint) {
                probes.push_back(node.lo);
                if (node.hi != node.lo) probes.push_back(node.hi);
                if (mid != node.lo && mid != node.hi) probes.push_back(mid);
            } else {
                probes.push_back(mid);
            }

            for (const Rational& s : probes) {
                auto ball = alg.ball_oracle(s);
                if (!ball) {
                    out.trace.oracle_fail(s);
                    continue;
                }
                if (!(ball->radius.sign() > 0))
                    throw std::logic_error("ball_oracle must return a positive radius");
                Rational ball_lo = s - ball->radius;
                bool contains = ball_lo <= node.lo && node.hi <= s + ball->radius;
                bool left_margin = node.lo == I.lo || ball_lo < node.lo;
                if (contains && left_margin) {
                    out.trace.ball_accept(s, ball->radius, node);
                    Rational r = max(I.lo, ball_lo);
                    acc = alg.combine_overlap(acc, ball->piece, r, node.lo, node.hi);
                    return;
                }
            }

            if (depth >= cfg.max_bisect_depth)
                throw Abort{{"depth-limit", node.lo, node, {}}};
            out.trace.split(node, mid);
            visit(Interval(node.lo, mid), depth + 1);
            visit(Interval(mid, node.hi), depth + 1);
        };

    try {
        visit(I, 0);
    } catch (Abort& abort) {
        out.failure = std::move(abort.failure);
        return out;
    } catch (const OracleAbort& abort) {
        out.failure = EngineFailure{"oracle-failure", abort.at, {}, {}};
        return out;
    }
    if (!acc) throw std::logic_error("bisect_cover finished without a witness");
    out.witness = std::move(*acc);
    return out;
}

// ---------------------------------------------------------------------------
// Trace replay: re-query the algebra at the recorded decision points and
// re-fold. The result must equal the original run's witness — the audit
// property for success traces.
// ---------------------------------------------------------------------------

template <class W>
W replay_creep(const Interval& I, const WitnessAlgebra<W>& alg, const Trace& trace) {
    W acc = alg.point_witness(I.lo);
    for (const auto& e : trace.events) {
        switch (e.kind) {
            case TraceEvent::Kind::right_step: {
                auto step = alg.right_oracle(*e.from);
                if (!step || step->to != *e.to)
                    throw std::logic_error("replay: right_oracle diverged from trace");
                acc = alg.combine_adjacent(acc, step->piece);
                break;
            }
            case TraceEvent::Kind::left_jump: {
                auto recovery = alg.left_oracle(*e.to);
                if (!recovery)
                    throw std::logic_error("replay: left_oracle diverged from trace");
                auto piece = recovery->piece_for(*e.from);
                if (!piece)
                    throw std::logic_error("replay: recovery factory declined");
                acc = alg.combine_adjacent(acc, *piece);
                break;
            }
            case TraceEvent::Kind::stall:
                break;  // informational
            default:
                throw std::logic_error("replay: foreign event in creep trace");
        }
    }
    return acc;
}

template <class W>
W replay_bisect(const Interval& I, const WitnessAlgebra<W>& alg, const Trace& trace) {
    std::optional<W> acc;
    for (const auto& e : trace.events) {
        switch (e.kind) {
            case TraceEvent::Kind::ball_accept: {
                auto ball = alg.ball_oracle(*e.at);
                if (!ball || ball->radius != *e.delta)
                    throw std::logic_error("replay: ball_oracle diverged from trace");
                Rational r = max(I.lo, *e.at - ball->radius);
                acc = alg.combine_overlap(acc, ball->piece, r, e.leaf->lo, e.leaf->hi);
                break;
            }
            case TraceEvent::Kind::split:
            case TraceEvent::Kind::oracle_fail:
                break;  // informational
            default:
                throw std::logic_error("replay: foreign event in bisect trace");
        }
    }
    if (!acc) throw std::logic_error("replay: trace contains no accepted leaves");
    return *acc;
}

}  // namespace ivi
