#pragma once
// Multiple-choice question evaluation against a comprehension model.
// A choice is accepted when every conjunct is supported, rejected as soon as
// one conjunct's negation is supported, and possible otherwise.

#include <string>
#include <vector>

#include "engine.hpp"

namespace storyarg {

struct Question {
    std::string name;
    std::vector<std::vector<TimedLiteral>> choices;  // each a non-empty conjunction

    static std::string choice_str(const std::vector<TimedLiteral>& conj) {
        std::string s;
        for (std::size_t i = 0; i < conj.size(); ++i) {
            if (i) s += ", ";
            s += conj[i].lit.str() + " at " + std::to_string(conj[i].time);
        }
        return s;
    }
};

enum class ChoiceStatus : std::uint8_t { Accepted, Rejected, Possible };

inline const char* status_name(ChoiceStatus s) {
    switch (s) {
        case ChoiceStatus::Accepted: return "accepted";
        case ChoiceStatus::Rejected: return "rejected";
        case ChoiceStatus::Possible: return "possible";
    }
    return "?";
}

struct ChoiceVerdict {
    int index = 0;
    ChoiceStatus status = ChoiceStatus::Possible;
    std::vector<int> support;  // model tuples backing the verdict (-1 marks an observation)
};

struct QuestionReport {
    std::string question;
    std::vector<ChoiceVerdict> verdicts;
    std::string summary;
};

inline ChoiceVerdict evaluate_choice(const SupportGraph& g, const std::vector<int>& model,
                                     const std::set<TimedLiteral>& observed,
                                     const std::vector<TimedLiteral>& conj, int index) {
    ChoiceVerdict v;
    v.index = index;
    auto supporters = [&](const TimedLiteral& goal, std::vector<int>& out) {
        bool any = false;
        if (observed.count(goal)) {
            out.push_back(-1);
            any = true;
        }
        for (int m : model)
            if (g.vertices[static_cast<std::size_t>(m)].conclusion == goal) {
                out.push_back(m);
                any = true;
            }
        return any;
    };
    // Rejection fires on any single refuted conjunct.
    for (const TimedLiteral& c : conj) {
        std::vector<int> against;
        if (supporters({negate(c.lit), c.time}, against)) {
            v.status = ChoiceStatus::Rejected;
            v.support = against;
            return v;
        }
    }
    bool all = true;
    std::vector<int> backing;
    for (const TimedLiteral& c : conj) all = all && supporters(c, backing);
    if (all) {
        v.status = ChoiceStatus::Accepted;
        v.support = backing;
    }
    return v;
}

inline QuestionReport answer_question(const SupportGraph& g, const std::vector<int>& model,
                                      const std::set<TimedLiteral>& observed, const Question& q) {
    QuestionReport rep;
    rep.question = q.name;
    std::vector<int> accepted;
    std::vector<int> possible;
    for (std::size_t i = 0; i < q.choices.size(); ++i) {
        ChoiceVerdict v = evaluate_choice(g, model, observed, q.choices[i], static_cast<int>(i));
        if (v.status == ChoiceStatus::Accepted) accepted.push_back(v.index);
        if (v.status == ChoiceStatus::Possible) possible.push_back(v.index);
        rep.verdicts.push_back(std::move(v));
    }
    if (accepted.size() == 1) {
        rep.summary = "accepted " + Question::choice_str(q.choices[static_cast<std::size_t>(
                                        accepted.front())]);
    } else if (accepted.size() > 1) {
        rep.summary = "inconsistent question: " + std::to_string(accepted.size()) +
                      " choices accepted";
    } else {
        rep.summary = "variability{";
        for (std::size_t i = 0; i < possible.size(); ++i) {
            if (i) rep.summary += "; ";
            rep.summary += Question::choice_str(q.choices[static_cast<std::size_t>(possible[i])]);
        }
        rep.summary += "}";
    }
    return rep;
}

}  // namespace storyarg
