#pragma once
// Unit arguments: the defeasible premises stories are built from.
// Property rules relate same-time facts, precondition rules block an event's
// effect at the next time-point, causal rules produce one, and persistence
// is the schematic inertia premise generated per fluent literal.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "literal.hpp"

namespace storyarg {

enum class UnitKind : std::uint8_t { Property, Precondition, Causal, Persistence };

inline const char* kind_name(UnitKind k) {
    switch (k) {
        case UnitKind::Property: return "pro";
        case UnitKind::Precondition: return "prc";
        case UnitKind::Causal: return "cau";
        case UnitKind::Persistence: return "per";
    }
    return "?";
}

struct UnitArgument {
    std::string name;  // unique instance name, e.g. "c(1)[turkey]"
    std::string base;  // rule family the instance came from; priorities attach here
    UnitKind kind = UnitKind::Property;
    Literal head;
    std::vector<Literal> body;  // kept sorted and deduplicated

    auto operator<=>(const UnitArgument&) const = default;

    // Property bodies hold at the head's own time-point; all other kinds
    // read their body one step earlier.
    bool same_time() const { return kind == UnitKind::Property; }

    void normalize() {
        std::sort(body.begin(), body.end());
        body.erase(std::unique(body.begin(), body.end()), body.end());
    }

    std::string str() const {
        std::string s = std::string(kind_name(kind)) + "(" + head.str() + " | {";
        for (std::size_t i = 0; i < body.size(); ++i) {
            if (i) s += ',';
            s += body[i].str();
        }
        return s + "})";
    }
};

// Schematic inertia premise for a fluent literal; events do not persist.
inline UnitArgument persistence_argument(const Literal& l) {
    if (l.kind != AtomKind::Fluent)
        throw std::invalid_argument("persistence argument over event literal " + l.str());
    UnitArgument u;
    u.name = "per(" + l.str() + ")";
    u.base = u.name;
    u.kind = UnitKind::Persistence;
    u.head = l;
    u.body = {l};
    return u;
}

}  // namespace storyarg
