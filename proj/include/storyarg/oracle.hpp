#pragma once
// Brute-force reference for small instances. Exponential by design: it
// enumerates grounded interpretations outright and quantifies attackers over
// all of them, instead of the engine's per-witness closures. Test use only;
// every entry point is guarded by explicit caps.

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "semantics.hpp"

namespace storyarg {

struct OracleLimits {
    std::size_t universe_cap = 20000;
    std::size_t enumeration_cap = 100000;
};

class OracleCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Every well-formed tuple over the story's units, head times and directions,
// in the canonical enumeration order.
inline std::vector<ArgumentTuple> tuple_universe(const StoryRepresentation& sr,
                                                 const OracleLimits& limits = {}) {
    std::vector<ArgumentTuple> out;
    for (int u = 0; u < static_cast<int>(sr.units.size()); ++u)
        for (TimePoint th = 0; th <= sr.horizon; ++th)
            for (const ArgumentTuple& t : tuples_at(sr, u, th)) {
                out.push_back(t);
                if (out.size() > limits.universe_cap)
                    throw OracleCapExceeded("tuple universe beyond cap of " +
                                            std::to_string(limits.universe_cap));
            }
    return out;
}

// The oracle's own saturation pass over the universe; deliberately a separate
// loop from build_graph, agreeing on the canonical order.
inline SupportGraph oracle_graph(const StoryRepresentation& sr, int block,
                                 const OracleLimits& limits = {}) {
    const std::vector<ArgumentTuple> universe = tuple_universe(sr, limits);
    const std::set<TimedLiteral> observed = observation_set(sr, block);
    SupportGraph g;
    g.built_block = block;
    std::set<TimedLiteral> supported = observed;
    bool progress = true;
    while (progress) {
        progress = false;
        for (const ArgumentTuple& t : universe) {
            if (g.contains(t)) continue;
            bool ok = true;
            for (const TimedLiteral& need : activation_condition(sr, t))
                ok = ok && supported.count(need) > 0;
            if (ok) {
                g.add(sr, t, observed);
                supported.insert(t.conclusion);
                progress = true;
            }
        }
    }
    return g;
}

struct GroundedEnumeration {
    std::vector<std::vector<int>> sets;  // each sorted ascending; includes the empty set
    bool truncated = false;
};

// All grounded subsets of the maximal grounded interpretation, by breadth-
// first downward-closure extension: a set is emitted exactly when it can be
// built one activatable tuple at a time.
inline GroundedEnumeration enumerate_grounded(const StoryRepresentation& sr,
                                              const SupportGraph& g, int block,
                                              const OracleLimits& limits = {}) {
    const std::set<TimedLiteral> observed = observation_set(sr, block);
    GroundedEnumeration out;
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> frontier{{}};
    seen.insert({});
    out.sets.push_back({});
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const std::vector<int>& s : frontier) {
            std::set<TimedLiteral> have = observed;
            for (int m : s) have.insert(g.vertices[static_cast<std::size_t>(m)].conclusion);
            for (int id = 0; id < static_cast<int>(g.vertices.size()); ++id) {
                if (std::binary_search(s.begin(), s.end(), id)) continue;
                bool ok = true;
                for (const TimedLiteral& need :
                     activation_condition(sr, g.vertices[static_cast<std::size_t>(id)]))
                    ok = ok && have.count(need) > 0;
                if (!ok) continue;
                std::vector<int> grown = s;
                grown.insert(std::lower_bound(grown.begin(), grown.end(), id), id);
                if (!seen.insert(grown).second) continue;
                if (out.sets.size() >= limits.enumeration_cap) {
                    out.truncated = true;
                    return out;
                }
                out.sets.push_back(grown);
                next.push_back(std::move(grown));
            }
        }
        frontier = std::move(next);
    }
    return out;
}

// Acceptability with attackers drawn from the enumeration: no enumerated
// grounded subset of the surviving graph may undercut the candidate, and
// every enumerated disputer must be defended against.
inline bool brute_force_acceptable(const StoryRepresentation& sr, const SupportGraph& g,
                                   const std::vector<char>& live,
                                   const GroundedEnumeration& en, const std::vector<int>& model,
                                   int block) {
    if (en.truncated) throw OracleCapExceeded("grounded enumeration was truncated");
    const std::set<TimedLiteral> observed = observation_set(sr, block);
    for (int m : model)
        if (conflicts_with_story(g, m, observed)) return false;
    for (std::size_t i = 0; i < model.size(); ++i)
        for (std::size_t j = i + 1; j < model.size(); ++j)
            if (direct_pair(g, model[i], model[j])) return false;

    std::vector<char> model_flags(g.vertices.size(), 0);
    for (int m : model) model_flags[static_cast<std::size_t>(m)] = 1;
    const RestrictedSupport rs_model = restricted_support(sr, g, observed, model_flags);
    ArgView model_view = view_of(model, rs_model);

    for (const std::vector<int>& a : en.sets) {
        bool in_live = true;
        for (int t : a) in_live = in_live && live[static_cast<std::size_t>(t)];
        if (!in_live || !consistent(g, a)) continue;
        bool touches = false;
        for (int i : a)
            for (int m : model)
                touches = touches || direct_pair(g, i, m) || indirect_pair(sr, g, i, m);
        if (!touches) continue;
        std::vector<char> flags(g.vertices.size(), 0);
        for (int t : a) flags[static_cast<std::size_t>(t)] = 1;
        const RestrictedSupport rs_a = restricted_support(sr, g, observed, flags);
        ArgView attacker = view_of(a, rs_a);
        if (undercuts(sr, g, attacker, model_view)) return false;
    }
    for (const std::vector<int>& a : en.sets) {
        if (!consistent(g, a)) continue;
        if (!has_dispute_witness(sr, g, a, model)) continue;
        if (!defends_against(sr, g, observed, model_view, a)) return false;
    }
    return true;
}

// Convenience wrapper running the full oracle pipeline for one block.
struct OracleRun {
    SupportGraph graph;
    std::vector<char> live;
    GroundedEnumeration grounded;
    int block = 1;
};

inline OracleRun run_oracle(const StoryRepresentation& sr, int block,
                            const OracleLimits& limits = {}) {
    OracleRun r;
    r.block = block;
    r.graph = oracle_graph(sr, block, limits);
    r.live = prune_graph(sr, r.graph, block).live;
    r.grounded = enumerate_grounded(sr, r.graph, block, limits);
    return r;
}

// Sceptical cross-check: a supported timed literal is refuted if some
// enumerated acceptable argument supports its negation. Returns the
// offending literals.
inline std::vector<std::string> sceptical_violations(const StoryRepresentation& sr,
                                                     const OracleRun& o,
                                                     const std::vector<int>& model) {
    std::vector<std::string> out;
    const std::set<TimedLiteral> observed = observation_set(sr, o.block);
    std::vector<std::optional<bool>> verdict(o.grounded.sets.size());
    auto acceptable = [&](std::size_t idx) {
        if (!verdict[idx])
            verdict[idx] = brute_force_acceptable(sr, o.graph, o.live, o.grounded,
                                                  o.grounded.sets[idx], o.block);
        return *verdict[idx];
    };

    std::set<TimedLiteral> supported = observed;
    for (int m : model) supported.insert(o.graph.vertices[static_cast<std::size_t>(m)].conclusion);
    for (const TimedLiteral& goal : supported) {
        const TimedLiteral counter{negate(goal.lit), goal.time};
        for (std::size_t i = 0; i < o.grounded.sets.size(); ++i) {
            bool concludes = false;
            for (int t : o.grounded.sets[i])
                concludes =
                    concludes ||
                    o.graph.vertices[static_cast<std::size_t>(t)].conclusion == counter;
            if (!concludes) continue;
            if (acceptable(i)) {
                out.push_back("counter-model for " + goal.str());
                break;
            }
        }
    }
    return out;
}

}  // namespace storyarg
