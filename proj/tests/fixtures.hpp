#pragma once

#include <vector>

#include "anc/nfa.hpp"
#include "anc/word.hpp"

namespace fixtures {

// The 11-state witness for 0^5 1 0^5 1^6 0 1 0^3: a chain carrying two
// attached cycles, one through q6/q7/q10 and one through q8/q9, plus the
// long return edge q5 -> q0.
inline anc::Nfa two_cycle_witness() {
    return anc::Nfa(11, 0, 3,
                    {{0, 0, 1},
                     {1, 0, 2},
                     {2, 0, 3},
                     {3, 0, 4},
                     {4, 0, 5},
                     {5, 1, 6},
                     {6, 0, 7},
                     {7, 0, 10},
                     {10, 0, 6},
                     {7, 0, 8},
                     {5, 1, 0},
                     {8, 1, 9},
                     {9, 1, 8},
                     {9, 1, 4}});
}

inline anc::Word two_cycle_word() {
    return anc::Word::parse("0000010000011111101000");
}

// chain accepting exactly one word
inline anc::Nfa chain_nfa(const anc::Word& x) {
    std::vector<anc::Transition> trans;
    for (std::size_t i = 0; i < x.length(); ++i)
        trans.push_back({static_cast<int>(i), x.bit(i), static_cast<int>(i) + 1});
    return anc::Nfa(static_cast<int>(x.length()) + 1, 0,
                    static_cast<int>(x.length()), std::move(trans));
}

} // namespace fixtures
