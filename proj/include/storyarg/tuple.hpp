#pragma once
// Argument tuples: a unit argument applied at a head time, forwards or
// backwards by contradiction, yielding one timed conclusion.

#include <string>
#include <vector>

#include "story.hpp"

namespace storyarg {

enum class Direction : std::uint8_t { Forward, Backward };

struct ArgumentTuple {
    int unit = -1;  // index into StoryRepresentation::units
    TimePoint head_time = 0;
    Direction dir = Direction::Forward;
    TimedLiteral conclusion;

    auto operator<=>(const ArgumentTuple&) const = default;
};

// Time at which the tuple's body side lives: the head time for property
// rules, one step earlier for everything else.
inline TimePoint body_time(const UnitArgument& u, TimePoint head_time) {
    return u.same_time() ? head_time : head_time - 1;
}

// The timed literals that must already be supported for the tuple to fire.
// Forwards: the whole body. Backwards: the negated head at the head time plus
// the rest of the body at the conclusion time.
inline std::vector<TimedLiteral> activation_condition(const StoryRepresentation& sr,
                                                      const ArgumentTuple& t) {
    const UnitArgument& u = sr.unit(t.unit);
    const TimePoint tb = body_time(u, t.head_time);
    std::vector<TimedLiteral> cond;
    if (t.dir == Direction::Forward) {
        cond.reserve(u.body.size());
        for (const Literal& y : u.body) cond.push_back({y, tb});
    } else {
        cond.push_back({negate(u.head), t.head_time});
        const Literal excluded = negate(t.conclusion.lit);
        for (const Literal& y : u.body)
            if (y != excluded) cond.push_back({y, tb});
    }
    return cond;
}

inline bool well_formed(const StoryRepresentation& sr, const ArgumentTuple& t) {
    if (t.unit < 0 || t.unit >= static_cast<int>(sr.units.size())) return false;
    const UnitArgument& u = sr.unit(t.unit);
    const TimePoint tb = body_time(u, t.head_time);
    if (t.head_time < 0 || t.head_time > sr.horizon || tb < 0) return false;
    if (t.dir == Direction::Forward)
        return t.conclusion.lit == u.head && t.conclusion.time == t.head_time;
    const Literal member = negate(t.conclusion.lit);
    bool in_body = false;
    for (const Literal& y : u.body) in_body = in_body || y == member;
    return in_body && t.conclusion.time == tb;
}

inline std::string tuple_str(const StoryRepresentation& sr, const ArgumentTuple& t) {
    return "<" + sr.unit(t.unit).name + "," + std::to_string(t.head_time) + "," +
           (t.dir == Direction::Forward ? "F" : "B") + ";" + t.conclusion.str() + ">";
}

// All well-formed tuples of one unit at one head time, in a fixed order:
// the forward tuple first, then backward tuples by conclusion literal.
inline std::vector<ArgumentTuple> tuples_at(const StoryRepresentation& sr, int unit,
                                            TimePoint head_time) {
    std::vector<ArgumentTuple> out;
    const UnitArgument& u = sr.unit(unit);
    const TimePoint tb = body_time(u, head_time);
    if (head_time < 0 || head_time > sr.horizon || tb < 0) return out;
    out.push_back({unit, head_time, Direction::Forward, {u.head, head_time}});
    for (const Literal& y : u.body)  // body is sorted, so conclusions are ordered
        out.push_back({unit, head_time, Direction::Backward, {negate(y), tb}});
    return out;
}

}  // namespace storyarg
