#pragma once

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <vector>

#include "anc/nfa.hpp"

namespace anc {

// A detour: two distinct nontrivial state sequences sharing first and last
// states. Minimal when the interiors are disjoint.
struct Detour {
    std::vector<int> alpha;
    std::vector<int> beta;

    bool minimal() const {
        std::set<int> a(alpha.begin() + 1, alpha.end() - 1);
        for (std::size_t i = 1; i + 1 < beta.size(); ++i)
            if (a.count(beta[i]))
                return false;
        return true;
    }
};

// Relative position of two alternate routes attached to the trunk path at
// normalized index spans (i,j) and (k,l): precedes when j <= k, encompasses
// when k <= i and j <= l, overlaps when i <= k <= j <= l.
enum class RouteRelation { precedes, encompasses, overlaps };

// A simple directed path, edge-disjoint from the trunk, joining two trunk
// vertices. `forward` means it runs in trunk direction; a backward or
// single-vertex attachment closes a cycle.
struct AlternateRoute {
    std::vector<int> states;            // first and last lie on the trunk
    std::vector<Transition> transitions;
    int from_index = 0;                 // trunk index of states.front()
    int to_index = 0;                   // trunk index of states.back()
    bool forward = false;
};

struct RoutePair {
    std::size_t first = 0;              // route index; for encompasses this
    std::size_t second = 0;             // is the inner route
    int i = 0, j = 0;                   // normalized span of `first`
    int k = 0, l = 0;                   // normalized span of `second`
    RouteRelation relation = RouteRelation::precedes;
    // 1: both one-shot; 2: one route repeatable; 3: two independently
    // repeatable cycles (never present in an optimal witness).
    int category = 1;
};

struct RouteAnalysis {
    std::vector<int> trunk;             // a shortest initial->accepting path
    std::vector<Transition> trunk_transitions;
    std::vector<AlternateRoute> routes;
    std::vector<RoutePair> pairs;
};

namespace detail {

// Shortest path from initial to accepting; at each step the lowest-index
// next state (then lowest symbol) that still lies on a shortest path wins.
inline std::vector<Transition> bfs_trunk(const Nfa& m) {
    std::vector<int> rdist(m.state_count, -1);
    std::queue<int> q;
    rdist[m.accepting] = 0;
    q.push(m.accepting);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (const Transition& t : m.transitions)
            if (t.to == u && rdist[t.from] == -1) {
                rdist[t.from] = rdist[u] + 1;
                q.push(t.from);
            }
    }
    if (rdist[m.initial] == -1)
        throw std::runtime_error("no path from initial to accepting state");

    std::vector<Transition> path;
    int u = m.initial;
    while (rdist[u] > 0) {
        const Transition* best = nullptr;
        for (const Transition& t : m.transitions) {
            if (t.from != u || rdist[t.to] != rdist[u] - 1)
                continue;
            if (!best || std::tie(t.to, t.symbol) < std::tie(best->to, best->symbol))
                best = &t;
        }
        path.push_back(*best);
        u = best->to;
    }
    return path;
}

} // namespace detail

// Enumerates every simple directed path that is edge-disjoint from a fixed
// shortest trunk path and joins two trunk vertices (routes stop at the first
// trunk vertex reached, so interiors are off-trunk). Classifies every pair.
inline RouteAnalysis find_alternate_routes(const Nfa& m) {
    RouteAnalysis res;
    res.trunk_transitions = detail::bfs_trunk(m);
    res.trunk.push_back(m.initial);
    for (const Transition& t : res.trunk_transitions)
        res.trunk.push_back(t.to);

    std::vector<int> trunk_index(m.state_count, -1);
    for (std::size_t i = 0; i < res.trunk.size(); ++i)
        trunk_index[res.trunk[i]] = static_cast<int>(i);
    std::set<Transition> trunk_set(res.trunk_transitions.begin(),
                                   res.trunk_transitions.end());

    std::vector<Transition> stack_trans;
    std::vector<int> stack_states;
    std::vector<char> on_path(m.state_count, 0);

    auto dfs = [&](auto&& self, int u, int origin) -> void {
        for (const Transition& t : m.transitions) {
            if (t.from != u || trunk_set.count(t))
                continue;
            if (trunk_index[t.to] >= 0) {
                AlternateRoute r;
                r.states = stack_states;
                r.states.push_back(t.to);
                r.transitions = stack_trans;
                r.transitions.push_back(t);
                r.from_index = trunk_index[origin];
                r.to_index = trunk_index[t.to];
                r.forward = r.from_index < r.to_index;
                res.routes.push_back(std::move(r));
                continue; // routes terminate at trunk vertices
            }
            if (on_path[t.to])
                continue; // keep the path simple
            on_path[t.to] = 1;
            stack_states.push_back(t.to);
            stack_trans.push_back(t);
            self(self, t.to, origin);
            stack_trans.pop_back();
            stack_states.pop_back();
            on_path[t.to] = 0;
        }
    };

    for (int u : res.trunk) {
        stack_states.assign(1, u);
        stack_trans.clear();
        std::fill(on_path.begin(), on_path.end(), 0);
        on_path[u] = 1;
        dfs(dfs, u, u);
    }

    auto span = [&](std::size_t idx) {
        const AlternateRoute& r = res.routes[idx];
        return std::pair<int, int>{std::min(r.from_index, r.to_index),
                                   std::max(r.from_index, r.to_index)};
    };

    for (std::size_t a = 0; a < res.routes.size(); ++a) {
        for (std::size_t b = a + 1; b < res.routes.size(); ++b) {
            std::size_t qa = a, qb = b;
            if (span(qb) < span(qa))
                std::swap(qa, qb);
            auto [i, j] = span(qa);
            auto [k, l] = span(qb);
            RoutePair p;
            if (j <= k) {
                p.relation = RouteRelation::precedes;
            } else if (l <= j) {
                // second span inside first: the lex-larger route is inner
                std::swap(qa, qb);
                std::swap(i, k);
                std::swap(j, l);
                p.relation = RouteRelation::encompasses;
            } else if (i == k) {
                p.relation = RouteRelation::encompasses;
            } else {
                p.relation = RouteRelation::overlaps;
            }
            p.first = qa;
            p.second = qb;
            p.i = i;
            p.j = j;
            p.k = k;
            p.l = l;
            bool first_cycle = !res.routes[qa].forward;
            bool second_cycle = !res.routes[qb].forward;
            // An inner forward shortcut inside an outer cycle yields a second
            // independent cycle, just like two plain cycles do.
            bool inner_shortcut_in_cycle =
                p.relation == RouteRelation::encompasses && !first_cycle &&
                second_cycle;
            if ((first_cycle && second_cycle) || inner_shortcut_in_cycle)
                p.category = 3;
            else if (first_cycle || second_cycle)
                p.category = 2;
            else
                p.category = 1;
            res.pairs.push_back(p);
        }
    }
    return res;
}

} // namespace anc
