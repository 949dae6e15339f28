#pragma once
// The incremental comprehension procedure: block-by-block graph growth,
// retraction of invalidated inferences, and elaboration to a comprehension
// model. One run is sequential; distinct stories share no state.

#include <string>
#include <vector>

#include "semantics.hpp"

namespace storyarg {

struct RevisionEntry {
    int block = 0;
    bool added = false;  // false: retracted
    ArgumentTuple tuple;
    std::string reason;  // narrative-conflict | undercut | undefended-dispute | cascade | expand

    std::string str(const StoryRepresentation& sr) const {
        return "block " + std::to_string(block) + " " + (added ? "add    " : "retract") + " " +
               tuple_str(sr, tuple) + " [" + reason + "]";
    }
};

namespace detail {

// Shared retraction pass. Attack sweep first, in insertion order: drop
// members in conflict with the narrative, members whose support chain inside
// the surviving model is undercut by the surviving graph, and members with an
// undefended raw dispute (the defence may come from any current survivor).
// Then cascade members whose activation no longer holds. `ban` collects
// attack-dropped members so the block's expansion will not reinstate them.
inline std::vector<int> retract_pass(const StoryRepresentation& sr, const SupportGraph& g,
                                     const std::vector<char>& live,
                                     const std::set<TimedLiteral>& observed, int block,
                                     const std::vector<int>& model,
                                     std::vector<RevisionEntry>* log, std::set<int>* ban,
                                     const RestrictedSupport& raw) {
    const RestrictedSupport rs_live = restricted_support(sr, g, observed, live);
    ArgView live_view = view_of(live_ids_of(live), rs_live);

    std::vector<int> survivors = model;
    auto drop = [&](std::size_t pos, const std::string& reason) {
        int id = survivors[pos];
        if (log)
            log->push_back({block, false, g.vertices[static_cast<std::size_t>(id)], reason});
        if (ban && reason != "cascade" && reason != "narrative-conflict") ban->insert(id);
        survivors.erase(survivors.begin() + static_cast<std::ptrdiff_t>(pos));
    };

    // Attack sweep.
    for (std::size_t pos = 0; pos < survivors.size();) {
        const int id = survivors[pos];
        if (conflicts_with_story(g, id, observed)) {
            drop(pos, "narrative-conflict");
            continue;
        }
        std::vector<char> flags(g.vertices.size(), 0);
        for (int s : survivors) flags[static_cast<std::size_t>(s)] = 1;
        const RestrictedSupport within = restricted_support(sr, g, observed, flags);
        auto chain = closure_in(within, id);
        ArgView target = view_of(chain ? *chain : std::vector<int>{id}, within);
        ArgView survivor_view = view_of(survivors, within);
        if (undercuts(sr, g, live_view, target)) {
            drop(pos, "undercut");
            continue;
        }
        bool undefended = false;
        for (int j = 0; j < static_cast<int>(g.vertices.size()) && !undefended; ++j) {
            if (!direct_pair(g, j, id) &&
                !(indirect_pair(sr, g, j, id) && is_backward(g, id)))
                continue;
            auto attacker_chain = closure_in(raw, j);
            if (!attacker_chain || !consistent(g, *attacker_chain)) continue;
            ArgView attacker = view_of(*attacker_chain, raw);
            if (!defence_undercuts(sr, g, survivor_view, attacker)) undefended = true;
        }
        if (undefended) {
            drop(pos, "undefended-dispute");
            continue;
        }
        ++pos;
    }

    // Cascade sweep: survivors must stay grounded as a set, so mutual support
    // without an observational base does not count.
    {
        std::vector<char> flags(g.vertices.size(), 0);
        for (int s : survivors) flags[static_cast<std::size_t>(s)] = 1;
        const RestrictedSupport grounded = restricted_support(sr, g, observed, flags);
        for (std::size_t pos = 0; pos < survivors.size();) {
            if (grounded.in[static_cast<std::size_t>(survivors[pos])])
                ++pos;
            else
                drop(pos, "cascade");
        }
    }
    return survivors;
}

}  // namespace detail

// Revision of the previous block's model against the new graph (the first
// step of each block). Returns the provisional model.
inline std::vector<int> retract(const StoryRepresentation& sr, const SupportGraph& g,
                                const std::vector<char>& live, int block,
                                const std::vector<int>& prev_model,
                                std::vector<RevisionEntry>* log = nullptr) {
    const std::set<TimedLiteral> observed = observation_set(sr, block);
    std::vector<char> all(g.vertices.size(), 1);
    const RestrictedSupport raw = restricted_support(sr, g, observed, all);
    return detail::retract_pass(sr, g, live, observed, block, prev_model, log, nullptr, raw);
}

// One expansion sweep: adds every graph tuple, in insertion order, that
// activates under the model and narrative, does not contradict the story or
// the model directly, is not undercut by the surviving graph once added, and
// can answer every dispute the surviving graph still raises against it.
inline bool expand(const StoryRepresentation& sr, const SupportGraph& g,
                   const std::vector<char>& live, const std::set<TimedLiteral>& observed,
                   int block, std::vector<int>& model, const std::set<int>& banned,
                   std::vector<RevisionEntry>* log) {
    const RestrictedSupport rs_live = restricted_support(sr, g, observed, live);
    ArgView live_view = view_of(live_ids_of(live), rs_live);
    bool added_any = false;
    std::set<int> in_model(model.begin(), model.end());

    std::set<TimedLiteral> have = observed;
    for (int m : model) have.insert(g.vertices[static_cast<std::size_t>(m)].conclusion);

    bool progress = true;
    while (progress) {
        progress = false;
        for (int id = 0; id < static_cast<int>(g.vertices.size()); ++id) {
            if (in_model.count(id) || banned.count(id)) continue;
            const ArgumentTuple& t = g.vertices[static_cast<std::size_t>(id)];
            bool activates = true;
            for (const TimedLiteral& need : activation_condition(sr, t))
                activates = activates && have.count(need) > 0;
            if (!activates) continue;
            if (conflicts_with_story(g, id, observed)) continue;
            bool clash = false;
            for (int m : model) clash = clash || direct_pair(g, m, id);
            if (clash) continue;

            std::vector<int> extended = model;
            extended.push_back(id);
            std::vector<char> flags(g.vertices.size(), 0);
            for (int m : extended) flags[static_cast<std::size_t>(m)] = 1;
            const RestrictedSupport rs_ext = restricted_support(sr, g, observed, flags);
            ArgView extended_view = view_of(extended, rs_ext);
            if (undercuts(sr, g, live_view, extended_view)) continue;

            // Disputes still standing in the surviving graph must be
            // answerable right away; raw disputers are settled by the cleanup
            // pass once the whole round is in.
            bool blocked = false;
            for (int j : live_view.members) {
                if (!direct_pair(g, j, id) &&
                    !(indirect_pair(sr, g, j, id) && is_backward(g, id)))
                    continue;
                auto attacker_chain = closure_in(rs_live, j);
                if (!attacker_chain || !consistent(g, *attacker_chain)) continue;
                ArgView attacker = view_of(*attacker_chain, rs_live);
                if (!defence_undercuts(sr, g, extended_view, attacker)) {
                    blocked = true;
                    break;
                }
            }
            if (blocked) continue;

            model.push_back(id);
            in_model.insert(id);
            have.insert(t.conclusion);
            if (log) log->push_back({block, true, t, "expand"});
            added_any = true;
            progress = true;
        }
    }
    return added_any;
}

// Alg. 2 as a fixpoint: expand optimistically, then retract whatever the raw
// graph still defeats, banning attack-dropped tuples, until stable. The
// printed pseudocode swaps its working sets; this is the evident reading.
inline std::vector<int> elaborate(const StoryRepresentation& sr, const SupportGraph& g,
                                  const std::vector<char>& live, int block,
                                  std::vector<int> provisional,
                                  std::vector<RevisionEntry>* log = nullptr) {
    const std::set<TimedLiteral> observed = observation_set(sr, block);
    std::vector<char> all(g.vertices.size(), 1);
    const RestrictedSupport raw = restricted_support(sr, g, observed, all);
    std::set<int> banned;
    std::vector<int> model = std::move(provisional);
    const std::size_t iteration_cap = 2 * g.vertices.size() + 4;
    for (std::size_t round = 0;; ++round) {
        if (round > iteration_cap)
            throw std::logic_error("elaboration did not converge");  // bounded by the universe
        expand(sr, g, live, observed, block, model, banned, log);
        const std::size_t before = model.size();
        model = detail::retract_pass(sr, g, live, observed, block, model, log, &banned, raw);
        if (model.size() == before) break;
    }
    return model;
}

struct BlockState {
    int block = 0;
    std::vector<int> model;  // vertex ids in model insertion order
    std::vector<char> live;  // surviving-graph flags at this block
    std::size_t graph_size = 0;
};

struct ComprehensionRun {
    SupportGraph graph;
    std::vector<BlockState> blocks;
    std::vector<RevisionEntry> log;

    const BlockState* state_for(int block) const {
        for (const BlockState& b : blocks)
            if (b.block == block) return &b;
        return nullptr;
    }
};

// Whether the block's model together with the narrative read so far supports
// a timed literal.
inline bool model_supports(const StoryRepresentation& sr, const ComprehensionRun& run,
                           const BlockState& st, const TimedLiteral& goal) {
    const std::set<TimedLiteral> observed = observation_set(sr, st.block);
    return supports(run.graph, st.model, observed, goal);
}

// Alg. 1: read the story block by block, growing the graph, revising the
// previous model and elaborating it.
inline ComprehensionRun comprehend(const StoryRepresentation& sr) {
    ComprehensionRun run;
    std::vector<int> model;
    const int last = sr.max_block();
    for (int b = 1; b <= last; ++b) {
        run.graph = build_graph(sr, std::move(run.graph), b);
        const PruneResult pruned = prune_graph(sr, run.graph, b);
        model = retract(sr, run.graph, pruned.live, b, model, &run.log);
        model = elaborate(sr, run.graph, pruned.live, b, std::move(model), &run.log);
        run.blocks.push_back({b, model, pruned.live, run.graph.vertices.size()});
    }
    return run;
}

}  // namespace storyarg
