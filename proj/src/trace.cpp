#include "ivi/trace.hpp"

#include <json.hpp>

namespace ivi {

const char* trace_event_name(TraceEvent::Kind k) {
    switch (k) {
        case TraceEvent::Kind::right_step: return "right-step";
        case TraceEvent::Kind::left_jump: return "left-jump";
        case TraceEvent::Kind::ball_accept: return "ball-accept";
        case TraceEvent::Kind::split: return "split";
        case TraceEvent::Kind::stall: return "stall";
        case TraceEvent::Kind::oracle_fail: return "oracle-fail";
    }
    return "?";
}

bool operator==(const TraceEvent& a, const TraceEvent& b) {
    return a.kind == b.kind && a.from == b.from && a.to == b.to && a.at == b.at &&
           a.delta == b.delta && a.mid == b.mid && a.estimate == b.estimate &&
           a.leaf == b.leaf;
}

void Trace::right_step(const Rational& from, const Rational& to) {
    TraceEvent e{};
    e.kind = TraceEvent::Kind::right_step;
    e.from = from;
    e.to = to;
    events.push_back(std::move(e));
}

void Trace::left_jump(const Rational& from, const Rational& to) {
    TraceEvent e{};
    e.kind = TraceEvent::Kind::left_jump;
    e.from = from;
    e.to = to;
    events.push_back(std::move(e));
}

void Trace::ball_accept(const Rational& at, const Rational& delta, const Interval& leaf) {
    TraceEvent e{};
    e.kind = TraceEvent::Kind::ball_accept;
    e.at = at;
    e.delta = delta;
    e.leaf = leaf;
    events.push_back(std::move(e));
}

void Trace::split(const Interval& leaf, const Rational& mid) {
    TraceEvent e{};
    e.kind = TraceEvent::Kind::split;
    e.leaf = leaf;
    e.mid = mid;
    events.push_back(std::move(e));
}

void Trace::stall(const Rational& at, const Rational& estimate) {
    TraceEvent e{};
    e.kind = TraceEvent::Kind::stall;
    e.at = at;
    e.estimate = estimate;
    events.push_back(std::move(e));
}

void Trace::oracle_fail(const Rational& at) {
    TraceEvent e{};
    e.kind = TraceEvent::Kind::oracle_fail;
    e.at = at;
    events.push_back(std::move(e));
}

std::size_t Trace::count(TraceEvent::Kind k) const {
    std::size_t n = 0;
    for (const auto& e : events)
        if (e.kind == k) ++n;
    return n;
}

bool operator==(const Trace& a, const Trace& b) { return a.events == b.events; }

std::string trace_to_json_lines(const Trace& t) {
    std::string out;
    for (const auto& e : t.events) {
        nlohmann::ordered_json j;
        j["event"] = trace_event_name(e.kind);
        auto put = [&j](const char* key, const std::optional<Rational>& v) {
            if (v) j[key] = v->str();
        };
        put("from", e.from);
        put("to", e.to);
        put("at", e.at);
        put("delta", e.delta);
        if (e.leaf) j["leaf"] = {{"lo", e.leaf->lo.str()}, {"hi", e.leaf->hi.str()}};
        put("mid", e.mid);
        put("estimate", e.estimate);
        out += j.dump();
        out += '\n';
    }
    return out;
}

}  // namespace ivi
