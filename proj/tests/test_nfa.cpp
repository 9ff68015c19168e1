#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "anc/nfa.hpp"
#include "anc/oracle.hpp"
#include "fixtures.hpp"

using anc::BigInt;
using anc::Nfa;
using anc::Transition;
using anc::Word;

TEST_CASE("nfa validation") {
    CHECK_THROWS_AS(Nfa(0, 0, 0, {}), std::invalid_argument);
    CHECK_THROWS_AS(Nfa(2, 2, 0, {}), std::invalid_argument);
    CHECK_THROWS_AS(Nfa(2, 0, 0, {{0, 2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Nfa(2, 0, 0, {{0, 0, 5}}), std::invalid_argument);

    // duplicates collapse
    Nfa m(2, 0, 1, {{0, 0, 1}, {0, 0, 1}});
    CHECK(m.transitions.size() == 1);
}

TEST_CASE("count_accepting_paths on simple machines") {
    Nfa both_loops(1, 0, 0, {{0, 0, 0}, {0, 1, 0}});
    CHECK(anc::count_accepting_paths(both_loops, 2) == 4);

    Nfa one_loop(1, 0, 0, {{0, 0, 0}});
    CHECK(anc::count_accepting_paths(one_loop, 5) == 1);

    // profile starts as the unit vector at the initial state
    anc::PathCountProfile p0 = anc::path_count_profile(both_loops, 0);
    CHECK(p0.counts_by_state == std::vector<BigInt>{1});
}

TEST_CASE("count_accepting_paths on the two-cycle witness") {
    Nfa m = fixtures::two_cycle_witness();
    CHECK(m.state_count == 11);
    CHECK(m.transitions.size() == 14);
    CHECK(anc::count_accepting_paths(m, 22) == 1);
    CHECK(anc::oracle::naive_walk_count(m, 22) == 1);
    CHECK(anc::unique_word(m, 22) == fixtures::two_cycle_word());
    CHECK(anc::accepts(m, fixtures::two_cycle_word()));
}

TEST_CASE("unique_word") {
    Nfa loop(1, 0, 0, {{0, 0, 0}});
    CHECK(anc::unique_word(loop, 3) == Word::parse("000"));

    Nfa both(1, 0, 0, {{0, 0, 0}, {0, 1, 0}});
    CHECK(anc::unique_word(both, 1) == std::nullopt);

    Nfa cycle(2, 0, 1, {{0, 0, 1}, {1, 1, 0}});
    CHECK(anc::unique_word(cycle, 3) == Word::parse("010"));

    // no accepting walk at all
    Nfa chain = fixtures::chain_nfa(Word::parse("01"));
    CHECK(anc::unique_word(chain, 1) == std::nullopt);
    CHECK(anc::unique_word(chain, 2) == Word::parse("01"));
}

TEST_CASE("reverse and complement transforms") {
    Nfa m = fixtures::two_cycle_witness();
    CHECK(anc::complement_nfa(anc::complement_nfa(m)) == m);
    CHECK(anc::reverse_nfa(anc::reverse_nfa(m)) == m);

    for (std::size_t n = 0; n <= 24; ++n)
        REQUIRE(anc::count_accepting_paths(anc::reverse_nfa(m), n) ==
                anc::count_accepting_paths(m, n));

    auto w = anc::unique_word(m, 22);
    REQUIRE(w);
    CHECK(anc::unique_word(anc::reverse_nfa(m), 22) == w->reverse());
    CHECK(anc::unique_word(anc::complement_nfa(m), 22) == w->complement());
}

TEST_CASE("path-count DP equals naive enumeration on small automata") {
    // all 3-state automata over a fixed 6-transition pool, every subset
    std::vector<Transition> pool = {{0, 0, 1}, {1, 1, 2}, {2, 0, 0},
                                    {0, 1, 0}, {1, 0, 1}, {2, 1, 1}};
    for (std::uint32_t mask = 0; mask < (1u << pool.size()); ++mask) {
        std::vector<Transition> trans;
        for (std::size_t b = 0; b < pool.size(); ++b)
            if (mask & (1u << b))
                trans.push_back(pool[b]);
        for (int accepting = 0; accepting < 3; ++accepting) {
            Nfa m(3, 0, accepting, trans);
            for (std::size_t n = 0; n <= 6; ++n)
                REQUIRE(anc::count_accepting_paths(m, n) ==
                        BigInt(anc::oracle::naive_walk_count(m, n)));
        }
    }
}

TEST_CASE("adding a transition never decreases a count") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        int states = 1 + static_cast<int>(rng() % 4);
        std::vector<Transition> trans;
        int edges = static_cast<int>(rng() % 6);
        for (int e = 0; e < edges; ++e)
            trans.push_back({static_cast<int>(rng() % states),
                             static_cast<int>(rng() % 2),
                             static_cast<int>(rng() % states)});
        Nfa m(states, 0, static_cast<int>(rng() % states), trans);

        Transition extra{static_cast<int>(rng() % states),
                         static_cast<int>(rng() % 2),
                         static_cast<int>(rng() % states)};
        auto more = trans;
        more.push_back(extra);
        Nfa m2(states, m.initial, m.accepting, more);

        for (std::size_t n = 0; n <= 6; ++n) {
            auto a = anc::path_count_profile(m, n);
            auto b = anc::path_count_profile(m2, n);
            for (int s = 0; s < states; ++s)
                REQUIRE(b.counts_by_state[s] >= a.counts_by_state[s]);
        }
    }
}
