#pragma once
// The support graph: a DAG over argument tuples that encodes the maximal
// grounded interpretation of the story read so far. Vertices carry their
// insertion order; each activation-condition element records the source it
// was first supported by (an earlier conclusion, or an observation).

#include <map>
#include <set>
#include <string>
#include <vector>

#include "tuple.hpp"

namespace storyarg {

constexpr int kObservationSource = -1;

struct SupportGraph {
    std::vector<ArgumentTuple> vertices;         // insertion order == vertex id
    std::vector<std::vector<int>> sources;       // per vertex, per condition element
    std::map<ArgumentTuple, int> index;
    std::map<TimedLiteral, std::vector<int>> concluders;  // ids in insertion order
    int built_block = 0;

    bool contains(const ArgumentTuple& t) const { return index.count(t) > 0; }

    int id_of(const ArgumentTuple& t) const {
        auto it = index.find(t);
        return it == index.end() ? -1 : it->second;
    }

    int add(const StoryRepresentation& sr, const ArgumentTuple& t,
            const std::set<TimedLiteral>& observed) {
        const int id = static_cast<int>(vertices.size());
        vertices.push_back(t);
        std::vector<int> src;
        for (const TimedLiteral& need : activation_condition(sr, t)) {
            auto it = concluders.find(need);
            if (it != concluders.end() && !it->second.empty())
                src.push_back(it->second.front());
            else
                src.push_back(kObservationSource);  // guaranteed by the caller
            (void)observed;
        }
        sources.push_back(std::move(src));
        index[t] = id;
        concluders[t.conclusion].push_back(id);
        return id;
    }
};

inline std::set<TimedLiteral> observation_set(const StoryRepresentation& sr, int block) {
    std::set<TimedLiteral> out;
    for (const Observation& o : sr.narrative)
        if (o.block <= block) out.insert({o.lit, o.time});
    return out;
}

// Def. 4 support: an interpretation (set of graph vertices) together with the
// narrative supports a timed literal if some member concludes it or it is
// observed.
inline bool supports(const SupportGraph& g, const std::vector<int>& members,
                     const std::set<TimedLiteral>& observed, const TimedLiteral& goal) {
    if (observed.count(goal)) return true;
    for (int m : members)
        if (g.vertices[static_cast<std::size_t>(m)].conclusion == goal) return true;
    return false;
}

// Grounding check by iterative peeling: some total order must exist in which
// every tuple's activation condition is supported by its predecessors or the
// narrative.
inline bool is_grounded(const StoryRepresentation& sr, const std::vector<ArgumentTuple>& tuples,
                        const std::set<TimedLiteral>& observed) {
    std::set<TimedLiteral> supported = observed;
    std::vector<bool> placed(tuples.size(), false);
    std::size_t remaining = tuples.size();
    bool progress = true;
    while (remaining > 0 && progress) {
        progress = false;
        for (std::size_t i = 0; i < tuples.size(); ++i) {
            if (placed[i]) continue;
            bool ok = true;
            for (const TimedLiteral& need : activation_condition(sr, tuples[i]))
                ok = ok && supported.count(need) > 0;
            if (ok) {
                placed[i] = true;
                supported.insert(tuples[i].conclusion);
                --remaining;
                progress = true;
            }
        }
    }
    return remaining == 0;
}

// Saturation to a least fixpoint: every well-formed tuple whose activation
// condition is supported by current vertices or observations is added, in a
// fixed enumeration order (unit index, head time, forward before backward,
// conclusion literal). Extends the previous block's graph in place; vertex
// ids of earlier blocks are stable.
inline SupportGraph build_graph(const StoryRepresentation& sr, SupportGraph prev, int block) {
    SupportGraph g = std::move(prev);
    g.built_block = block;
    const std::set<TimedLiteral> observed = observation_set(sr, block);

    std::set<TimedLiteral> supported = observed;
    for (const ArgumentTuple& v : g.vertices) supported.insert(v.conclusion);

    std::vector<ArgumentTuple> universe;
    for (int u = 0; u < static_cast<int>(sr.units.size()); ++u)
        for (TimePoint th = 0; th <= sr.horizon; ++th)
            for (const ArgumentTuple& t : tuples_at(sr, u, th))
                if (!g.contains(t)) universe.push_back(t);

    std::vector<bool> added(universe.size(), false);
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t i = 0; i < universe.size(); ++i) {
            if (added[i]) continue;
            bool ok = true;
            for (const TimedLiteral& need : activation_condition(sr, universe[i]))
                ok = ok && supported.count(need) > 0;
            if (ok) {
                g.add(sr, universe[i], observed);
                supported.insert(universe[i].conclusion);
                added[i] = true;
                progress = true;
            }
        }
    }
    return g;
}

// Deterministic one-line-per-vertex listing in insertion order. Backward
// precondition tuples are flagged: the derivation is legal but rarely
// exercised, so traces call them out.
inline std::string dump_graph(const StoryRepresentation& sr, const SupportGraph& g) {
    std::string out;
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        const ArgumentTuple& t = g.vertices[i];
        const UnitArgument& u = sr.unit(t.unit);
        out += "<" + u.name + "," + std::to_string(t.head_time) + "," +
               (t.dir == Direction::Forward ? "F" : "B") + "> |- " + t.conclusion.str() +
               " <- {";
        for (std::size_t j = 0; j < g.sources[i].size(); ++j) {
            if (j) out += ',';
            int s = g.sources[i][j];
            out += s == kObservationSource ? "obs" : std::to_string(s);
        }
        out += "}";
        if (t.dir == Direction::Backward && u.kind == UnitKind::Precondition)
            out += " [prc-backward]";
        out += "\n";
    }
    return out;
}

}  // namespace storyarg
