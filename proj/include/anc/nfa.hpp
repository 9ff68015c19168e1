#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "anc/counting.hpp"
#include "anc/word.hpp"

namespace anc {

// One labeled transition. Symbols are 0 or 1; there are no epsilon moves.
struct Transition {
    int from = 0;
    int symbol = 0;
    int to = 0;

    friend bool operator==(const Transition&, const Transition&) = default;
    friend auto operator<=>(const Transition&, const Transition&) = default;
};

// Nondeterministic automaton with one initial and one accepting state.
// Transitions are kept sorted and duplicate-free, so identical automata
// compare equal and serialize identically.
struct Nfa {
    int state_count = 1;
    int initial = 0;
    int accepting = 0;
    std::vector<Transition> transitions;

    Nfa() = default;
    Nfa(int states, int init, int accept, std::vector<Transition> trans)
        : state_count(states), initial(init), accepting(accept),
          transitions(std::move(trans)) {
        normalize();
        validate();
    }

    void normalize() {
        std::sort(transitions.begin(), transitions.end());
        transitions.erase(std::unique(transitions.begin(), transitions.end()),
                          transitions.end());
    }

    void validate() const {
        if (state_count < 1)
            throw std::invalid_argument("Nfa: state_count must be positive");
        if (initial < 0 || initial >= state_count)
            throw std::invalid_argument("Nfa: initial state out of range");
        if (accepting < 0 || accepting >= state_count)
            throw std::invalid_argument("Nfa: accepting state out of range");
        for (const Transition& t : transitions) {
            if (t.from < 0 || t.from >= state_count || t.to < 0 ||
                t.to >= state_count)
                throw std::invalid_argument("Nfa: transition state out of range");
            if (t.symbol != 0 && t.symbol != 1)
                throw std::invalid_argument("Nfa: symbol must be 0 or 1");
        }
    }

    friend bool operator==(const Nfa&, const Nfa&) = default;
};

// Walk counts from the initial state, indexed by target state. Two walks are
// distinct if they differ in any (state, symbol, state) step.
struct PathCountProfile {
    std::size_t length = 0;
    std::vector<BigInt> counts_by_state;
};

inline PathCountProfile path_count_profile(const Nfa& m, std::size_t n) {
    PathCountProfile p;
    p.length = 0;
    p.counts_by_state.assign(m.state_count, 0);
    p.counts_by_state[m.initial] = 1;
    std::vector<BigInt> next(m.state_count);
    while (p.length < n) {
        std::fill(next.begin(), next.end(), 0);
        for (const Transition& t : m.transitions)
            next[t.to] += p.counts_by_state[t.from];
        p.counts_by_state.swap(next);
        ++p.length;
    }
    return p;
}

// Number of length-n walks from the initial to the accepting state.
inline BigInt count_accepting_paths(const Nfa& m, std::size_t n) {
    return path_count_profile(m, n).counts_by_state[m.accepting];
}

// Every profile level 0..n at once.
inline std::vector<std::vector<BigInt>> path_count_levels(const Nfa& m,
                                                          std::size_t n) {
    std::vector<std::vector<BigInt>> levels(n + 1);
    levels[0].assign(m.state_count, 0);
    levels[0][m.initial] = 1;
    for (std::size_t i = 0; i < n; ++i) {
        levels[i + 1].assign(m.state_count, 0);
        for (const Transition& t : m.transitions)
            levels[i + 1][t.to] += levels[i][t.from];
    }
    return levels;
}

// Same recurrence with counts saturated at 2; only 0 / 1 / "many" matter for
// uniqueness checks and saturation avoids big-integer work on hot paths.
inline std::vector<std::vector<std::uint8_t>>
saturated_profiles(const Nfa& m, std::size_t n) {
    std::vector<std::vector<std::uint8_t>> levels(n + 1);
    levels[0].assign(m.state_count, 0);
    levels[0][m.initial] = 1;
    for (std::size_t i = 0; i < n; ++i) {
        levels[i + 1].assign(m.state_count, 0);
        for (const Transition& t : m.transitions) {
            int c = levels[i + 1][t.to] + levels[i][t.from];
            levels[i + 1][t.to] = static_cast<std::uint8_t>(std::min(c, 2));
        }
    }
    return levels;
}

// Label sequence of the unique length-n accepting walk, or nullopt when the
// walk count differs from one. Recovered by walking the count profile
// backwards from the accepting state.
inline std::optional<Word> unique_word(const Nfa& m, std::size_t n) {
    auto levels = saturated_profiles(m, n);
    if (levels[n][m.accepting] != 1)
        return std::nullopt;
    std::string bits(n, '0');
    int state = m.accepting;
    for (std::size_t i = n; i > 0; --i) {
        for (const Transition& t : m.transitions) {
            if (t.to == state && levels[i - 1][t.from] > 0) {
                bits[i - 1] = static_cast<char>('0' + t.symbol);
                state = t.from;
                break;
            }
        }
    }
    return Word::parse(bits);
}

inline Nfa reverse_nfa(const Nfa& m) {
    std::vector<Transition> rev;
    rev.reserve(m.transitions.size());
    for (const Transition& t : m.transitions)
        rev.push_back({t.to, t.symbol, t.from});
    return Nfa(m.state_count, m.accepting, m.initial, std::move(rev));
}

inline Nfa complement_nfa(const Nfa& m) {
    std::vector<Transition> flipped;
    flipped.reserve(m.transitions.size());
    for (const Transition& t : m.transitions)
        flipped.push_back({t.from, 1 - t.symbol, t.to});
    return Nfa(m.state_count, m.initial, m.accepting, std::move(flipped));
}

// Subset simulation: does some walk spelling x end in the accepting state?
inline bool accepts(const Nfa& m, const Word& x) {
    std::vector<char> cur(m.state_count, 0), next(m.state_count, 0);
    cur[m.initial] = 1;
    for (std::size_t i = 0; i < x.length(); ++i) {
        std::fill(next.begin(), next.end(), 0);
        for (const Transition& t : m.transitions)
            if (t.symbol == x.bit(i) && cur[t.from])
                next[t.to] = 1;
        cur.swap(next);
    }
    return cur[m.accepting] != 0;
}

} // namespace anc
