#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace anc {

// Visited-state sequences are canonicalized by order of first visit: the
// first state is 0 and each step may exceed the running maximum by at most 1.
inline bool is_restricted_growth(const std::vector<int>& seq) {
    if (seq.empty())
        return false;
    if (seq[0] != 0)
        return false;
    int max_seen = 0;
    for (std::size_t i = 1; i < seq.size(); ++i) {
        if (seq[i] < 0 || seq[i] > max_seen + 1)
            return false;
        max_seen = std::max(max_seen, seq[i]);
    }
    return true;
}

// Thrown when a run re-enters a completed cycle's state set through a new
// edge: such a run always admits a second accepting walk of the same length
// (swap the two segments between the repeated states), so it is pruned.
struct LumpRuleViolation : std::runtime_error {
    std::size_t position;
    explicit LumpRuleViolation(std::size_t pos)
        : std::runtime_error("new edge into an existing lump at run position " +
                             std::to_string(pos)),
          position(pos) {}
};

// A lump: the sub-automaton generated by one cycle of the run. Repetitions
// of a cycle regenerate the same lump. Children are sub-digraphs.
struct Lump {
    std::vector<std::pair<int, int>> edges; // sorted unique (from, to)
    std::vector<int> states;                // sorted unique
    std::vector<std::size_t> children;      // in creation order
    std::size_t window_begin = 0;           // run position of the base state
    std::size_t window_end = 0;             // run position closing the cycle
};

struct LumpTree {
    std::vector<Lump> lumps;                // in creation order
    std::vector<std::size_t> top_level;     // roots, in creation order
    std::map<int, std::vector<std::size_t>> membership; // state -> lumps

    bool contains_state(int s) const { return membership.count(s) != 0; }
};

// Processes the run left to right. A new edge into an unvisited state just
// extends the spine; a new edge into a visited state closes a cycle and
// creates a lump whose children are exactly the top-level lumps begun after
// that state's first visit (a final segment of the sibling list). A new edge
// into a state already inside some lump is the pruned configuration.
inline LumpTree build_lump_tree(const std::vector<int>& run) {
    if (!is_restricted_growth(run))
        throw std::invalid_argument("build_lump_tree: run must satisfy restricted growth");

    LumpTree tree;
    std::set<std::pair<int, int>> edges;
    std::map<int, std::size_t> first_pos;
    std::set<int> in_lump;
    first_pos[run[0]] = 0;

    for (std::size_t i = 0; i + 1 < run.size(); ++i) {
        int u = run[i], v = run[i + 1];
        std::pair<int, int> e{u, v};
        if (edges.count(e))
            continue; // reuse of an existing edge never creates a lump
        auto seen = first_pos.find(v);
        if (seen == first_pos.end()) {
            first_pos[v] = i + 1;
            edges.insert(e);
            continue;
        }
        if (in_lump.count(v))
            throw LumpRuleViolation(i + 1);

        // close the cycle running from v's first visit to here
        std::size_t begin = seen->second;
        Lump lump;
        lump.window_begin = begin;
        lump.window_end = i + 1;
        std::set<std::pair<int, int>> lump_edges;
        std::set<int> lump_states;
        for (std::size_t j = begin; j <= i; ++j) {
            int a = run[j];
            int b = j == i ? v : run[j + 1];
            lump_edges.insert({a, b});
            lump_states.insert(a);
        }
        lump_states.insert(v);
        lump.edges.assign(lump_edges.begin(), lump_edges.end());
        lump.states.assign(lump_states.begin(), lump_states.end());

        // top-level lumps begun inside the window become children
        std::size_t keep = tree.top_level.size();
        while (keep > 0 &&
               tree.lumps[tree.top_level[keep - 1]].window_begin >= begin)
            --keep;
        lump.children.assign(tree.top_level.begin() + keep,
                             tree.top_level.end());
        tree.top_level.resize(keep);

        in_lump.insert(lump_states.begin(), lump_states.end());
        tree.lumps.push_back(std::move(lump));
        tree.top_level.push_back(tree.lumps.size() - 1);
        edges.insert(e);
    }

    for (std::size_t id = 0; id < tree.lumps.size(); ++id)
        for (int s : tree.lumps[id].states)
            tree.membership[s].push_back(id);
    return tree;
}

// Legal next states for a partial run: the next fresh state while states
// remain, reuse of any existing edge from the current state, and new edges
// to visited states that are in no lump. New edges into lumps are excluded.
inline std::set<int> admissible_extensions(const std::vector<int>& run,
                                           const LumpTree& tree,
                                           int max_states) {
    if (!is_restricted_growth(run))
        throw std::invalid_argument("admissible_extensions: run must satisfy restricted growth");
    std::set<std::pair<int, int>> edges;
    int max_seen = 0;
    for (std::size_t i = 0; i + 1 < run.size(); ++i)
        edges.insert({run[i], run[i + 1]});
    for (int s : run)
        max_seen = std::max(max_seen, s);

    std::set<int> result;
    int cur = run.back();
    for (int t = 0; t <= max_seen; ++t) {
        if (edges.count({cur, t}) || !tree.contains_state(t))
            result.insert(t);
    }
    if (max_seen + 1 < max_states)
        result.insert(max_seen + 1);
    return result;
}

} // namespace anc
