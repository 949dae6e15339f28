#pragma once
// Attack relations of the corresponding argumentation framework: story
// conflicts, direct and indirect conflict witnesses, disputes, undercuts,
// defence, and the sceptical acceptability test.
//
// Conventions fixed here and relied on everywhere:
//  * An indirect witness needs conflicting unit heads at equal head times and
//    at least one backward tuple. Two persistence units never form one (their
//    contrapositives coincide, and no priority can ever separate them).
//  * Indirect conflicts act only against the backward side: both disputes and
//    attacking undercuts require the attacked tuple to be backward. The reply
//    undercut inside a defence carries no such restriction; it only needs the
//    priority between the witness units.
//  * A direct-case undercut is anchored to its witness: the priority pair
//    must connect the support chains of the two conflicting tuples, at equal
//    conclusion or head times. Unanchored pairs picked from elsewhere in the
//    sets prove nothing about the conflict at hand.
//  * An attacking chain must be free of direct self-conflict. A chain that
//    concludes both sides of a timed literal defeats itself; it can neither
//    dispute nor undercut anything.
//  * Attackers that must not undercut the model come from the pruned graph
//    (the minimality revision); disputers that must be defended against come
//    from the raw graph, each taken as the support closure of its disputing
//    tuple.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"

namespace storyarg {

struct ConflictWitness {
    enum class Kind : std::uint8_t { Story, Direct, Indirect };
    Kind kind = Kind::Direct;
    int left = -1;   // tuple id in the first argument (absent for story conflicts)
    int right = -1;  // tuple id in the second argument
};

inline bool conflicts_with_story(const SupportGraph& g, int id,
                                 const std::set<TimedLiteral>& observed) {
    const ArgumentTuple& t = g.vertices[static_cast<std::size_t>(id)];
    return observed.count({negate(t.conclusion.lit), t.conclusion.time}) > 0;
}

inline bool direct_pair(const SupportGraph& g, int i, int j) {
    const ArgumentTuple& a = g.vertices[static_cast<std::size_t>(i)];
    const ArgumentTuple& b = g.vertices[static_cast<std::size_t>(j)];
    return a.conclusion.time == b.conclusion.time &&
           conflicting(a.conclusion.lit, b.conclusion.lit);
}

inline bool indirect_pair(const StoryRepresentation& sr, const SupportGraph& g, int i, int j) {
    const ArgumentTuple& a = g.vertices[static_cast<std::size_t>(i)];
    const ArgumentTuple& b = g.vertices[static_cast<std::size_t>(j)];
    if (a.head_time != b.head_time) return false;
    if (a.dir != Direction::Backward && b.dir != Direction::Backward) return false;
    const UnitArgument& ua = sr.unit(a.unit);
    const UnitArgument& ub = sr.unit(b.unit);
    if (ua.kind == UnitKind::Persistence && ub.kind == UnitKind::Persistence) return false;
    return conflicting(ua.head, ub.head);
}

// All conflict witnesses between two tuple sets; a1 may equal a2.
inline std::vector<ConflictWitness> find_conflicts(const StoryRepresentation& sr,
                                                   const SupportGraph& g,
                                                   const std::vector<int>& a1,
                                                   const std::vector<int>& a2) {
    std::vector<ConflictWitness> out;
    for (int i : a1)
        for (int j : a2) {
            if (direct_pair(g, i, j))
                out.push_back({ConflictWitness::Kind::Direct, i, j});
            if (indirect_pair(sr, g, i, j))
                out.push_back({ConflictWitness::Kind::Indirect, i, j});
        }
    return out;
}

inline bool is_backward(const SupportGraph& g, int id) {
    return g.vertices[static_cast<std::size_t>(id)].dir == Direction::Backward;
}

// Raw dispute witnesses, ignoring chain legitimacy; used where the caller
// vets the attacking chain itself.
inline bool has_dispute_witness(const StoryRepresentation& sr, const SupportGraph& g,
                                const std::vector<int>& attacker,
                                const std::vector<int>& target) {
    for (int a : attacker)
        for (int t : target) {
            if (direct_pair(g, a, t)) return true;
            if (indirect_pair(sr, g, a, t) && is_backward(g, t)) return true;
        }
    return false;
}

inline bool consistent(const SupportGraph& g, const std::vector<int>& chain) {
    for (std::size_t i = 0; i < chain.size(); ++i)
        for (std::size_t j = i + 1; j < chain.size(); ++j)
            if (direct_pair(g, chain[i], chain[j])) return false;
    return true;
}

// Grounded replay restricted to an allowed vertex set: which allowed tuples
// still activate from the narrative alone, with acyclic sources re-derived in
// wave order. Tuples outside `in` have lost their ground.
struct RestrictedSupport {
    std::vector<char> in;
    std::vector<std::vector<int>> src;  // per vertex, per condition element; -1 for observation
};

inline RestrictedSupport restricted_support(const StoryRepresentation& sr, const SupportGraph& g,
                                            const std::set<TimedLiteral>& observed,
                                            const std::vector<char>& allowed) {
    const std::size_t n = g.vertices.size();
    RestrictedSupport r;
    r.in.assign(n, 0);
    r.src.assign(n, {});
    std::map<TimedLiteral, int> first_concluder;  // earliest replay-added concluder
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t i = 0; i < n; ++i) {
            if (r.in[i] || !allowed[i]) continue;
            std::vector<int> src;
            bool ok = true;
            for (const TimedLiteral& need : activation_condition(sr, g.vertices[i])) {
                if (observed.count(need)) {
                    src.push_back(kObservationSource);
                    continue;
                }
                auto it = first_concluder.find(need);
                if (it == first_concluder.end()) {
                    ok = false;
                    break;
                }
                src.push_back(it->second);
            }
            if (!ok) continue;
            r.in[i] = 1;
            r.src[i] = std::move(src);
            first_concluder.try_emplace(g.vertices[i].conclusion, static_cast<int>(i));
            progress = true;
        }
    }
    return r;
}

inline std::optional<std::vector<int>> closure_in(const RestrictedSupport& r, int id) {
    if (!r.in[static_cast<std::size_t>(id)]) return std::nullopt;
    std::vector<int> out;
    std::set<int> seen;
    std::vector<int> work{id};
    while (!work.empty()) {
        int v = work.back();
        work.pop_back();
        if (!seen.insert(v).second) continue;
        out.push_back(v);
        for (int s : r.src[static_cast<std::size_t>(v)])
            if (s != kObservationSource) work.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// A tuple set viewed as an argument: its members plus the support structure
// used to extract each member's chain. Chains are cached per view.
struct ArgView {
    std::vector<int> members;
    const RestrictedSupport* rs = nullptr;
    mutable std::map<int, std::vector<int>> chains;

    const std::vector<int>& chain(int m) const {
        auto it = chains.find(m);
        if (it != chains.end()) return it->second;
        auto c = rs ? closure_in(*rs, m) : std::nullopt;
        return chains.emplace(m, c ? *c : std::vector<int>{m}).first->second;
    }
};

inline ArgView view_of(const std::vector<int>& members, const RestrictedSupport& rs) {
    ArgView v;
    v.members = members;
    v.rs = &rs;
    return v;
}

// A2 disputes A1: some direct witness, or an indirect witness whose A1-side
// tuple is backward, raised by a self-consistent attacking chain. Indirect
// conflicts of a backward tuple against a forward one produce no dispute.
inline bool disputes(const StoryRepresentation& sr, const SupportGraph& g,
                     const ArgView& attacker, const std::vector<int>& target) {
    for (int a : attacker.members)
        for (int t : target) {
            if (!direct_pair(g, a, t) &&
                !(indirect_pair(sr, g, a, t) && is_backward(g, t)))
                continue;
            if (consistent(g, attacker.chain(a))) return true;
        }
    return false;
}

inline bool priority_pair_with_time_match(const StoryRepresentation& sr, const SupportGraph& g,
                                          const std::vector<int>& a, const std::vector<int>& b) {
    for (int i : a)
        for (int j : b) {
            const ArgumentTuple& ti = g.vertices[static_cast<std::size_t>(i)];
            const ArgumentTuple& tj = g.vertices[static_cast<std::size_t>(j)];
            if (ti.conclusion.time != tj.conclusion.time && ti.head_time != tj.head_time)
                continue;
            if (stronger(sr, ti.unit, tj.unit)) return true;
        }
    return false;
}

// The attacking undercut. Direct case: a conflict witness whose two support
// chains carry a priority pair at matching conclusion or head times. Indirect
// case: the attacked tuple must be backward and the witness units
// priority-ordered.
inline bool undercuts(const StoryRepresentation& sr, const SupportGraph& g, const ArgView& attacker,
                      const ArgView& target) {
    for (int a : attacker.members)
        for (int t : target.members) {
            const bool direct = direct_pair(g, a, t);
            const bool indirect = indirect_pair(sr, g, a, t) && is_backward(g, t);
            if (!direct && !indirect) continue;
            const std::vector<int>& chain = attacker.chain(a);
            if (!consistent(g, chain)) continue;
            if (direct && priority_pair_with_time_match(sr, g, chain, target.chain(t)))
                return true;
            if (indirect) {
                const ArgumentTuple& ta = g.vertices[static_cast<std::size_t>(a)];
                const ArgumentTuple& tt = g.vertices[static_cast<std::size_t>(t)];
                if (stronger(sr, ta.unit, tt.unit)) return true;
            }
        }
    return false;
}

// The reply undercut used when defending: as above, but an indirect witness
// works in either direction.
inline bool defence_undercuts(const StoryRepresentation& sr, const SupportGraph& g,
                              const ArgView& defender, const ArgView& target) {
    for (int d : defender.members)
        for (int t : target.members) {
            if (direct_pair(g, d, t) &&
                priority_pair_with_time_match(sr, g, defender.chain(d), target.chain(t)))
                return true;
            if (indirect_pair(sr, g, d, t)) {
                const ArgumentTuple& td = g.vertices[static_cast<std::size_t>(d)];
                const ArgumentTuple& tt = g.vertices[static_cast<std::size_t>(t)];
                if (stronger(sr, td.unit, tt.unit)) return true;
            }
        }
    return false;
}

// Def. 7 defence: for some conflicting tuple of the attacker, the defender
// undercuts back its support closure inside the attacker.
inline bool defends_against(const StoryRepresentation& sr, const SupportGraph& g,
                            const std::set<TimedLiteral>& observed, const ArgView& defender,
                            const std::vector<int>& attacker) {
    std::vector<char> allowed(g.vertices.size(), 0);
    for (int a : attacker) allowed[static_cast<std::size_t>(a)] = 1;
    const RestrictedSupport inside = restricted_support(sr, g, observed, allowed);
    for (int a : attacker) {
        bool witnesses = false;
        for (int d : defender.members)
            witnesses = witnesses || direct_pair(g, a, d) || indirect_pair(sr, g, a, d);
        if (!witnesses) continue;
        auto chain = closure_in(inside, a);
        if (!chain) continue;
        ArgView target = view_of(*chain, inside);
        if (defence_undercuts(sr, g, defender, target)) return true;
    }
    return false;
}

inline std::vector<int> live_ids_of(const std::vector<char>& live) {
    std::vector<int> out;
    for (std::size_t i = 0; i < live.size(); ++i)
        if (live[i]) out.push_back(static_cast<int>(i));
    return out;
}

struct PruneResult {
    std::vector<char> live;
    std::vector<std::pair<int, std::string>> removed;  // (vertex id, reason)
};

// The minimality revision of the graph: drop tuples in conflict with the
// narrative, tuples whose surviving support chain is undercut by the
// surviving graph, and everything that depended on them. One pass in
// insertion order, iterated until stable; kills are never revisited.
inline PruneResult prune_graph(const StoryRepresentation& sr, const SupportGraph& g, int block) {
    const std::set<TimedLiteral> observed = observation_set(sr, block);
    const std::size_t n = g.vertices.size();
    PruneResult r;
    r.live.assign(n, 1);

    bool changed = true;
    while (changed) {
        changed = false;
        const RestrictedSupport rs = restricted_support(sr, g, observed, r.live);
        ArgView live_view = view_of(live_ids_of(r.live), rs);
        for (std::size_t i = 0; i < n; ++i) {
            if (!r.live[i]) continue;
            auto chain = closure_in(rs, static_cast<int>(i));
            if (!chain) {
                r.live[i] = 0;
                r.removed.push_back({static_cast<int>(i), "cascade"});
                changed = true;
                continue;
            }
            if (conflicts_with_story(g, static_cast<int>(i), observed)) {
                r.live[i] = 0;
                r.removed.push_back({static_cast<int>(i), "narrative-conflict"});
                changed = true;
                continue;
            }
            ArgView target = view_of(*chain, rs);
            if (undercuts(sr, g, live_view, target)) {
                r.live[i] = 0;
                r.removed.push_back({static_cast<int>(i), "undercut"});
                changed = true;
            }
        }
    }
    return r;
}

struct AcceptabilityReport {
    bool accepted = true;
    std::vector<std::string> certificate;
};

// Def. 8 against the graph: (a) no conclusion contradicts an observation,
// (b) no direct self-conflict, (c) the surviving graph does not undercut the
// model, (d) every raw disputer, taken as the support closure of its
// disputing tuple, is undercut back by the model.
inline AcceptabilityReport is_acceptable(const StoryRepresentation& sr, const SupportGraph& g,
                                         const std::vector<char>& live,
                                         const std::vector<int>& model, int block) {
    const std::set<TimedLiteral> observed = observation_set(sr, block);
    AcceptabilityReport rep;
    auto fail = [&](std::string why) {
        rep.accepted = false;
        rep.certificate.push_back("FAIL " + std::move(why));
    };

    for (int m : model)
        if (conflicts_with_story(g, m, observed))
            fail("story conflict at " + tuple_str(sr, g.vertices[static_cast<std::size_t>(m)]));
    for (std::size_t i = 0; i < model.size() && rep.accepted; ++i)
        for (std::size_t j = i + 1; j < model.size(); ++j)
            if (direct_pair(g, model[i], model[j])) {
                fail("direct self-conflict between " +
                     tuple_str(sr, g.vertices[static_cast<std::size_t>(model[i])]) + " and " +
                     tuple_str(sr, g.vertices[static_cast<std::size_t>(model[j])]));
                break;
            }
    if (!rep.accepted) return rep;

    std::vector<char> model_flags(g.vertices.size(), 0);
    for (int m : model) model_flags[static_cast<std::size_t>(m)] = 1;
    const RestrictedSupport rs_model = restricted_support(sr, g, observed, model_flags);
    const RestrictedSupport rs_live = restricted_support(sr, g, observed, live);
    ArgView model_view = view_of(model, rs_model);
    ArgView live_view = view_of(live_ids_of(live), rs_live);

    if (undercuts(sr, g, live_view, model_view)) {
        fail("undercut by the surviving graph");
        return rep;
    }
    rep.certificate.push_back("no undercut from " +
                              std::to_string(live_view.members.size()) + " surviving tuples");

    std::vector<char> all(g.vertices.size(), 1);
    const RestrictedSupport raw = restricted_support(sr, g, observed, all);
    for (int j = 0; j < static_cast<int>(g.vertices.size()); ++j) {
        bool disputing = false;
        for (int m : model) {
            if (direct_pair(g, j, m) || (indirect_pair(sr, g, j, m) && is_backward(g, m))) {
                disputing = true;
                break;
            }
        }
        if (!disputing) continue;
        auto chain = closure_in(raw, j);
        if (!chain) continue;  // never groundable against this narrative
        if (!consistent(g, *chain)) continue;  // self-defeating chain
        ArgView attacker = view_of(*chain, raw);
        if (defence_undercuts(sr, g, model_view, attacker)) {
            rep.certificate.push_back(
                "defended against " + tuple_str(sr, g.vertices[static_cast<std::size_t>(j)]));
        } else {
            fail("undefended dispute from " +
                 tuple_str(sr, g.vertices[static_cast<std::size_t>(j)]));
        }
    }
    return rep;
}

}  // namespace storyarg
