#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "anc/nfa.hpp"
#include "anc/word.hpp"

// Reference implementations for verification: plain enumerations with no
// pruning and no shared machinery with the search or the counting DP. Slow
// on purpose; usable up to desk-scale lengths only.
namespace anc::oracle {

// Exact number of length-n walks from the initial to the accepting state,
// by explicit walk-tree recursion.
inline std::uint64_t naive_walk_count(const Nfa& m, std::size_t n) {
    std::uint64_t total = 0;
    auto rec = [&](auto&& self, int state, std::size_t depth) -> void {
        if (depth == n) {
            total += state == m.accepting ? 1 : 0;
            return;
        }
        for (const Transition& t : m.transitions)
            if (t.from == state)
                self(self, t.to, depth + 1);
    };
    rec(rec, m.initial, 0);
    return total;
}

// Arrival counts per (depth, state), again by walking the full tree.
inline std::vector<std::vector<std::uint64_t>>
naive_walk_profile(const Nfa& m, std::size_t n) {
    std::vector<std::vector<std::uint64_t>> counts(
        n + 1, std::vector<std::uint64_t>(m.state_count, 0));
    auto rec = [&](auto&& self, int state, std::size_t depth) -> void {
        ++counts[depth][state];
        if (depth == n)
            return;
        for (const Transition& t : m.transitions)
            if (t.from == state)
                self(self, t.to, depth + 1);
    };
    rec(rec, m.initial, 0);
    return counts;
}

namespace detail {

// Walk count capped at 2, early exit; enough to decide uniqueness. The
// incoming transition list may repeat entries (reused edges); walks are
// counted over the deduplicated set.
inline int walk_count_capped(std::vector<Transition> trans, int initial,
                             int accepting, std::size_t n) {
    std::sort(trans.begin(), trans.end());
    trans.erase(std::unique(trans.begin(), trans.end()), trans.end());
    int total = 0;
    auto rec = [&](auto&& self, int state, std::size_t depth) -> bool {
        if (depth == n) {
            if (state == accepting && ++total >= 2)
                return true;
            return false;
        }
        for (const Transition& t : trans)
            if (t.from == state && self(self, t.to, depth + 1))
                return true;
        return false;
    };
    rec(rec, initial, 0);
    return total;
}

} // namespace detail

// A_N by brute force: enumerate every visited-state sequence in canonical
// (first-visit) numbering, induce the automaton it traces, and test unique
// acceptance by naive walk counting. Minimal witnesses use exactly the
// transitions of their accepting run, so this sweep is exhaustive.
inline int brute_force_complexity(const Word& x) {
    std::size_t n = x.length();
    if (n == 0)
        return 1;
    int best = static_cast<int>(n) + 1; // chain automaton fallback
    std::vector<int> run(n + 1, 0);
    std::vector<Transition> trans;
    auto rec = [&](auto&& self, std::size_t pos, int max_state) -> void {
        if (pos == n + 1) {
            if (detail::walk_count_capped(trans, 0, run[n], n) == 1)
                best = std::min(best, max_state + 1);
            return;
        }
        int limit = std::min(max_state + 1, best - 2); // fewer states than best
        for (int next = 0; next <= limit; ++next) {
            run[pos] = next;
            trans.push_back({run[pos - 1], x.bit(pos - 1), next});
            self(self, pos + 1, std::max(max_state, next));
            trans.pop_back();
        }
    };
    rec(rec, 1, 0);
    return best;
}

} // namespace anc::oracle
