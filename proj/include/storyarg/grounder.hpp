#pragma once
// Grounding: instantiates rule templates over the Herbrand domain of the
// story, assigns fluent/event kinds from the event directives, lifts
// priorities to instances pointwise, and assembles the story representation
// together with the session plan and question table.

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "parser.hpp"
#include "qa.hpp"
#include "story.hpp"

namespace storyarg {

class GroundingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Session {
    int block = 1;
    std::vector<std::string> questions;
    bool all_visible = true;
    std::vector<Term> visible;
};

struct GroundStory {
    StoryRepresentation sr;
    std::vector<Session> sessions;
    std::vector<Question> questions;

    const Question* question(const std::string& name) const {
        for (const Question& q : questions)
            if (q.name == name) return &q;
        return nullptr;
    }
};

namespace detail {

inline void collect_variables(const Term& t, std::vector<std::string>& out) {
    if (t.is_variable()) {
        for (const std::string& v : out)
            if (v == t.functor) return;
        out.push_back(t.functor);
        return;
    }
    for (const Term& a : t.args) collect_variables(a, out);
}

inline Term substitute(const Term& t, const std::map<std::string, Term>& binding) {
    if (t.is_variable()) {
        auto it = binding.find(t.functor);
        return it == binding.end() ? t : it->second;
    }
    Term out{t.functor, {}};
    out.args.reserve(t.args.size());
    for (const Term& a : t.args) out.args.push_back(substitute(a, binding));
    return out;
}

}  // namespace detail

// Ground variables range over every ground top-level argument term occurring
// in a statement, rule literal, or question choice. Adding a constant never
// removes an instance.
inline std::vector<Term> herbrand_domain(const ParsedStory& p) {
    std::set<Term> dom;
    auto take = [&](const Term& atom) {
        for (const Term& a : atom.args)
            if (a.is_ground()) dom.insert(a);
    };
    for (const ParsedStatement& st : p.statements) take(st.lit.term);
    for (const ParsedRule& r : p.rules) {
        take(r.head.term);
        for (const TemplateLiteral& b : r.body) take(b.term);
    }
    for (const ParsedQuestion& q : p.questions)
        for (const auto& conj : q.choices)
            for (const auto& [lit, time] : conj) take(lit.term);
    return {dom.begin(), dom.end()};
}

inline GroundStory ground_story(const ParsedStory& p, int stride = 1,
                                std::optional<TimePoint> horizon_override = {}) {
    if (stride < 1) throw GroundingError("stride must be positive");

    std::set<std::pair<std::string, std::size_t>> event_atoms;
    for (const EventDecl& e : p.events)
        event_atoms.insert({e.predicate, static_cast<std::size_t>(e.arity)});

    auto to_literal = [&](const TemplateLiteral& tl) {
        if (!tl.term.is_ground())
            throw GroundingError("literal " + tl.str() + " is not ground");
        Literal l;
        l.atom.predicate = tl.term.functor;
        l.atom.args = tl.term.args;
        l.positive = tl.positive;
        l.kind = event_atoms.count({tl.term.functor, tl.term.args.size()})
                     ? AtomKind::Event
                     : AtomKind::Fluent;
        return l;
    };

    const std::vector<Term> domain = herbrand_domain(p);

    std::vector<UnitArgument> rules;
    for (const ParsedRule& r : p.rules) {
        std::vector<std::string> vars;
        for (const TemplateLiteral& b : r.body) detail::collect_variables(b.term, vars);
        detail::collect_variables(r.head.term, vars);
        std::sort(vars.begin(), vars.end());
        if (!vars.empty() && domain.empty())
            throw GroundingError("rule " + r.name + " has variables but the story names no terms");

        std::vector<std::map<std::string, Term>> bindings{{}};
        for (const std::string& v : vars) {
            std::vector<std::map<std::string, Term>> next;
            for (const auto& b : bindings)
                for (const Term& value : domain) {
                    auto nb = b;
                    nb[v] = value;
                    next.push_back(std::move(nb));
                }
            bindings = std::move(next);
        }
        for (const auto& binding : bindings) {
            UnitArgument u;
            u.base = r.name;
            u.kind = r.kind;
            if (binding.empty()) {
                u.name = r.name;
            } else {
                u.name = r.name + "[";
                bool first = true;
                for (const auto& [v, value] : binding) {
                    if (!first) u.name += ',';
                    first = false;
                    u.name += v + "=" + value.str();
                }
                u.name += "]";
            }
            u.head = to_literal({detail::substitute(r.head.term, binding), r.head.positive});
            for (const TemplateLiteral& b : r.body)
                u.body.push_back(to_literal({detail::substitute(b.term, binding), b.positive}));
            u.normalize();
            rules.push_back(std::move(u));
        }
    }

    std::vector<Observation> narrative;
    for (const ParsedStatement& st : p.statements)
        narrative.push_back({to_literal(st.lit), st.time * stride, st.block});

    PriorityRelation prio;
    for (const ParsedPriority& pr : p.priorities) prio.declare(pr.stronger, pr.weaker);

    GroundStory out;
    std::vector<Literal> question_literals;
    for (const ParsedQuestion& q : p.questions) {
        Question question;
        question.name = q.name;
        for (const auto& conj : q.choices) {
            if (conj.empty()) throw GroundingError("empty choice in " + q.name);
            std::vector<TimedLiteral> ground_conj;
            for (const auto& [lit, time] : conj) {
                Literal l = to_literal(lit);
                question_literals.push_back(l);
                ground_conj.push_back({std::move(l), time * stride});
            }
            question.choices.push_back(std::move(ground_conj));
        }
        if (question.choices.size() < 2)
            throw GroundingError(q.name + " needs at least two choices");
        out.questions.push_back(std::move(question));
    }

    out.sr = assemble_story(std::move(rules), std::move(narrative), std::move(prio),
                            horizon_override, question_literals);
    for (const ParsedSession& s : p.sessions)
        out.sessions.push_back({s.block, s.questions, s.all_visible, s.visible});
    return out;
}

// Pattern match for session visibility: variables match any ground term.
inline bool matches_pattern(const Term& pattern, const Term& value) {
    if (pattern.is_variable()) return true;
    if (pattern.functor != value.functor || pattern.args.size() != value.args.size())
        return false;
    for (std::size_t i = 0; i < pattern.args.size(); ++i)
        if (!matches_pattern(pattern.args[i], value.args[i])) return false;
    return true;
}

inline bool visible_in(const Session& s, const Literal& lit) {
    if (lit.kind != AtomKind::Fluent) return false;
    if (s.all_visible) return true;
    Term value{lit.atom.predicate, lit.atom.args};
    for (const Term& pat : s.visible)
        if (matches_pattern(pat, value)) return true;
    return false;
}

}  // namespace storyarg
