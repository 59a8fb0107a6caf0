#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ivi/interval.hpp"
#include "ivi/rational.hpp"

namespace ivi {

// One engine decision. Which optional fields are populated depends on the
// kind:
//   right_step / left_jump : from, to
//   ball_accept            : at (probe), delta (radius), leaf (accepted)
//   split                  : leaf, mid
//   stall                  : at (reach), estimate (extrapolated supremum)
//   oracle_fail            : at (probe that returned no answer)
struct TraceEvent {
    enum class Kind { right_step, left_jump, ball_accept, split, stall, oracle_fail };

    Kind kind;
    std::optional<Rational> from, to;
    std::optional<Rational> at, delta, mid, estimate;
    std::optional<Interval> leaf;
};

const char* trace_event_name(TraceEvent::Kind k);

bool operator==(const TraceEvent& a, const TraceEvent& b);
inline bool operator!=(const TraceEvent& a, const TraceEvent& b) { return !(a == b); }

// Append-only log of one engine run. Replaying a trace through the same
// witness algebra reproduces the run's witness (see replay helpers in
// engine.hpp), and identical inputs yield identical traces — the basis of
// the audit and determinism guarantees.
struct Trace {
    std::vector<TraceEvent> events;

    void right_step(const Rational& from, const Rational& to);
    void left_jump(const Rational& from, const Rational& to);
    void ball_accept(const Rational& at, const Rational& delta, const Interval& leaf);
    void split(const Interval& leaf, const Rational& mid);
    void stall(const Rational& at, const Rational& estimate);
    void oracle_fail(const Rational& at);

    std::size_t count(TraceEvent::Kind k) const;
};

bool operator==(const Trace& a, const Trace& b);
inline bool operator!=(const Trace& a, const Trace& b) { return !(a == b); }

// One JSON object per line, fixed key order, no trailing newline after the
// final event's newline (i.e. the string is "" for an empty trace).
std::string trace_to_json_lines(const Trace& t);

}  // namespace ivi
