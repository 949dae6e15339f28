#pragma once
// Ground terms, literals and timed literals over fluent/event atoms.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace storyarg {

// Discrete story time; natural numbers only, -1 never denotes a valid point.
using TimePoint = int;

enum class AtomKind : std::uint8_t { Fluent, Event };

// First-order term: constant, variable (uppercase-initial functor, no args)
// or compound such as in(pj,forest).
struct Term {
    std::string functor;
    std::vector<Term> args;

    bool operator==(const Term& o) const { return functor == o.functor && args == o.args; }

    // Recursive member prevents a defaulted spaceship; spelled out instead.
    std::strong_ordering operator<=>(const Term& o) const {
        if (auto c = functor <=> o.functor; c != 0) return c;
        if (auto c = args.size() <=> o.args.size(); c != 0) return c;
        for (std::size_t i = 0; i < args.size(); ++i)
            if (auto c = args[i] <=> o.args[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }

    bool is_variable() const {
        return args.empty() && !functor.empty() &&
               (functor[0] >= 'A' && functor[0] <= 'Z');
    }

    bool is_ground() const {
        if (is_variable()) return false;
        for (const Term& t : args)
            if (!t.is_ground()) return false;
        return true;
    }

    std::string str() const {
        std::string s = functor;
        if (!args.empty()) {
            s += '(';
            for (std::size_t i = 0; i < args.size(); ++i) {
                if (i) s += ',';
                s += args[i].str();
            }
            s += ')';
        }
        return s;
    }
};

inline Term constant(std::string name) { return Term{std::move(name), {}}; }

// Atom: predicate applied to argument terms.
struct Atom {
    std::string predicate;
    std::vector<Term> args;

    auto operator<=>(const Atom&) const = default;

    bool is_ground() const {
        for (const Term& t : args)
            if (!t.is_ground()) return false;
        return true;
    }

    std::string str() const {
        Term t{predicate, args};
        return t.str();
    }
};

struct Literal {
    Atom atom;
    bool positive = true;
    AtomKind kind = AtomKind::Fluent;

    auto operator<=>(const Literal&) const = default;

    std::string str() const { return positive ? atom.str() : "-" + atom.str(); }
};

inline Literal negate(Literal l) {
    l.positive = !l.positive;
    return l;
}

// Conflict: same atom of the same kind with opposite polarity.
inline bool conflicting(const Literal& a, const Literal& b) {
    return a.atom == b.atom && a.kind == b.kind && a.positive != b.positive;
}

struct TimedLiteral {
    Literal lit;
    TimePoint time = 0;

    auto operator<=>(const TimedLiteral&) const = default;

    std::string str() const { return lit.str() + "@" + std::to_string(time); }
};

inline Literal fluent(Atom a, bool positive = true) {
    return Literal{std::move(a), positive, AtomKind::Fluent};
}

inline Literal event(Atom a, bool positive = true) {
    return Literal{std::move(a), positive, AtomKind::Event};
}

}  // namespace storyarg
