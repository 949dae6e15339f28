#pragma once
// Story representations: declared world/narrative rules, observations,
// the declared priority relation, and the schematic persistence premises
// for every fluent atom the story ever mentions.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "literal.hpp"
#include "unit_argument.hpp"

namespace storyarg {

struct Observation {
    Literal lit;
    TimePoint time = 0;
    int block = 1;

    auto operator<=>(const Observation&) const = default;

    std::string str() const {
        return "obs(" + lit.str() + "," + std::to_string(time) + ")";
    }
};

// Declared strict priorities between rule families (by base name).
struct PriorityRelation {
    std::set<std::pair<std::string, std::string>> pairs;  // (stronger, weaker)

    void declare(std::string stronger, std::string weaker) {
        pairs.insert({std::move(stronger), std::move(weaker)});
    }

    bool declares(const std::string& stronger, const std::string& weaker) const {
        return pairs.count({stronger, weaker}) > 0;
    }

    // Cycle detection over the declared edges (irreflexivity is the 1-cycle case).
    bool has_cycle() const {
        std::map<std::string, std::vector<std::string>> adj;
        std::set<std::string> nodes;
        for (const auto& [s, w] : pairs) {
            adj[s].push_back(w);
            nodes.insert(s);
            nodes.insert(w);
        }
        std::map<std::string, int> state;  // 0 unvisited, 1 on stack, 2 done
        std::vector<std::pair<std::string, std::size_t>> stack;
        for (const auto& start : nodes) {
            if (state[start]) continue;
            stack.push_back({start, 0});
            state[start] = 1;
            while (!stack.empty()) {
                auto& [node, next] = stack.back();
                auto& out = adj[node];
                if (next < out.size()) {
                    const std::string& to = out[next++];
                    if (state[to] == 1) return true;
                    if (state[to] == 0) {
                        state[to] = 1;
                        stack.push_back({to, 0});
                    }
                } else {
                    state[node] = 2;
                    stack.pop_back();
                }
            }
        }
        return false;
    }
};

struct StoryRepresentation {
    // Declared rules first (file order), then schematic persistence units
    // sorted by literal; indices into this vector identify units everywhere.
    std::vector<UnitArgument> units;
    std::size_t declared_count = 0;
    std::vector<Observation> narrative;  // sorted by (block, time, literal)
    PriorityRelation priorities;
    TimePoint horizon = 0;

    const UnitArgument& unit(int i) const { return units[static_cast<std::size_t>(i)]; }

    TimePoint max_observation_time() const {
        TimePoint m = 0;
        for (const Observation& o : narrative)
            if (o.time > m) m = o.time;
        return m;
    }

    int max_block() const {
        int m = 0;
        for (const Observation& o : narrative)
            if (o.block > m) m = o.block;
        return m;
    }

    std::vector<Observation> observations_up_to(int block) const {
        std::vector<Observation> out;
        for (const Observation& o : narrative)
            if (o.block <= block) out.push_back(o);
        return out;
    }
};

// Builds a story representation from declared rules and observations.
// Persistence premises are instantiated for both polarities of every fluent
// atom occurring in an observation, rule head, rule body, or extra literal
// (question conjuncts), never for the full atom universe.
inline StoryRepresentation assemble_story(std::vector<UnitArgument> rules,
                                          std::vector<Observation> narrative,
                                          PriorityRelation priorities,
                                          std::optional<TimePoint> horizon_override = {},
                                          const std::vector<Literal>& extra_literals = {}) {
    StoryRepresentation sr;
    sr.units = std::move(rules);
    for (UnitArgument& u : sr.units) u.normalize();
    sr.declared_count = sr.units.size();
    sr.narrative = std::move(narrative);
    std::sort(sr.narrative.begin(), sr.narrative.end(),
              [](const Observation& a, const Observation& b) {
                  return std::tie(a.block, a.time, a.lit) < std::tie(b.block, b.time, b.lit);
              });
    sr.priorities = std::move(priorities);

    std::set<Atom> fluent_atoms;
    auto note = [&](const Literal& l) {
        if (l.kind == AtomKind::Fluent) fluent_atoms.insert(l.atom);
    };
    for (const Observation& o : sr.narrative) note(o.lit);
    for (std::size_t i = 0; i < sr.declared_count; ++i) {
        note(sr.units[i].head);
        for (const Literal& b : sr.units[i].body) note(b);
    }
    for (const Literal& l : extra_literals) note(l);

    std::vector<UnitArgument> pers;
    for (const Atom& a : fluent_atoms) {
        pers.push_back(persistence_argument(fluent(a, true)));
        pers.push_back(persistence_argument(fluent(a, false)));
    }
    std::sort(pers.begin(), pers.end(),
              [](const UnitArgument& a, const UnitArgument& b) { return a.name < b.name; });
    for (UnitArgument& p : pers) sr.units.push_back(std::move(p));

    sr.horizon = horizon_override ? *horizon_override : sr.max_observation_time() + 2;
    return sr;
}

// Priority between ground unit instances: a declared pair between their rule
// families, or one of the two structural conditions. Causal beats the
// persistence of the contrary fluent; persistence beats a contrary-headed
// property rule (pro form only, preconditions must be prioritized explicitly).
inline bool stronger(const StoryRepresentation& sr, int a, int b) {
    const UnitArgument& ua = sr.unit(a);
    const UnitArgument& ub = sr.unit(b);
    if (sr.priorities.declares(ua.base, ub.base)) return true;
    if (ua.kind == UnitKind::Causal && ub.kind == UnitKind::Persistence &&
        conflicting(ua.head, ub.head))
        return true;
    if (ua.kind == UnitKind::Persistence && ub.kind == UnitKind::Property &&
        conflicting(ua.head, ub.head))
        return true;
    return false;
}

struct Diagnostic {
    std::string message;
};

// Structural checks; diagnostics are data, an empty list means a clean story.
inline std::vector<Diagnostic> validate(const StoryRepresentation& sr) {
    std::vector<Diagnostic> out;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < sr.declared_count; ++i) {
        const UnitArgument& u = sr.units[i];
        if (!seen.insert(u.name).second)
            out.push_back({"duplicate unit argument name " + u.name});
        if (u.kind == UnitKind::Persistence)
            out.push_back({"persistence argument declared explicitly: " + u.name +
                           " (persistence is schematic)"});
    }
    std::set<std::string> bases;
    for (std::size_t i = 0; i < sr.declared_count; ++i) bases.insert(sr.units[i].base);
    for (const auto& [s, w] : sr.priorities.pairs) {
        if (s == w) out.push_back({"reflexive priority " + s});
        if (!bases.count(s) || !bases.count(w))
            out.push_back({"priority references unknown rule: " + s + " >> " + w});
    }
    if (sr.priorities.has_cycle()) out.push_back({"priority cycle among declared rules"});
    for (const Observation& o : sr.narrative) {
        if (o.time < 0 || o.time > sr.horizon)
            out.push_back({"observation beyond horizon: " + o.str()});
        if (o.block < 1) out.push_back({"observation with non-positive block: " + o.str()});
    }
    if (sr.horizon < sr.max_observation_time())
        out.push_back({"horizon below the latest observation"});
    return out;
}

}  // namespace storyarg
