#include <catch2/catch_amalgamated.hpp>

#include "anc/lump_tree.hpp"
#include "anc/nfa.hpp"
#include "anc/search.hpp"

using anc::build_lump_tree;
using anc::LumpRuleViolation;
using anc::LumpTree;

TEST_CASE("restricted growth validity") {
    CHECK(anc::is_restricted_growth({0}));
    CHECK(anc::is_restricted_growth({0, 1, 2, 0}));
    CHECK_FALSE(anc::is_restricted_growth({1}));
    CHECK_FALSE(anc::is_restricted_growth({0, 2}));
    CHECK_FALSE(anc::is_restricted_growth({}));

    // exactly 000, 001, 010, 011, 012 at length three
    int valid = 0;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                valid += anc::is_restricted_growth({a, b, c}) ? 1 : 0;
    CHECK(valid == 5);
}

TEST_CASE("runs without revisits give an empty tree") {
    LumpTree tree = build_lump_tree({0, 1, 2, 3});
    CHECK(tree.lumps.empty());
    CHECK(tree.top_level.empty());
    CHECK_FALSE(tree.contains_state(0));
}

TEST_CASE("repetitive cycles regenerate the same lump") {
    LumpTree tree = build_lump_tree({0, 1, 0, 1, 0});
    REQUIRE(tree.lumps.size() == 1);
    CHECK(tree.lumps[0].edges ==
          std::vector<std::pair<int, int>>{{0, 1}, {1, 0}});
    CHECK(tree.contains_state(0));
    CHECK(tree.contains_state(1));
}

TEST_CASE("chained parents: the worked 20-step run") {
    // 0 1 2 3 4 5 6 7 3 4 5 6 7 3 4 5 6 7 2 0
    LumpTree tree =
        build_lump_tree({0, 1, 2, 3, 4, 5, 6, 7, 3, 4, 5, 6, 7, 3, 4, 5, 6, 7, 2, 0});
    REQUIRE(tree.lumps.size() == 3);

    const anc::Lump& l1 = tree.lumps[0];
    const anc::Lump& l2 = tree.lumps[1];
    const anc::Lump& l3 = tree.lumps[2];

    CHECK(l1.edges == std::vector<std::pair<int, int>>{
                          {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 3}});
    CHECK(l2.edges == std::vector<std::pair<int, int>>{
                          {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 2}, {7, 3}});
    CHECK(l3.edges.size() == 10);
    CHECK(l3.states == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7});

    // chain l1 -> l2 -> l3
    CHECK(l1.children.empty());
    CHECK(l2.children == std::vector<std::size_t>{0});
    CHECK(l3.children == std::vector<std::size_t>{1});
    CHECK(tree.top_level == std::vector<std::size_t>{2});

    // membership includes every lump containing the state
    CHECK(tree.membership.at(3) == std::vector<std::size_t>{0, 1, 2});
    CHECK(tree.membership.at(0) == std::vector<std::size_t>{2});
}

TEST_CASE("sibling then parent of a final segment") {
    // lump {1->1}, then fresh 2, 3, lump {3->3}, then 3 -> 2 wraps only the
    // second lump
    LumpTree tree = build_lump_tree({0, 1, 1, 2, 3, 3, 2});
    REQUIRE(tree.lumps.size() == 3);
    CHECK(tree.lumps[0].edges == std::vector<std::pair<int, int>>{{1, 1}});
    CHECK(tree.lumps[1].edges == std::vector<std::pair<int, int>>{{3, 3}});
    CHECK(tree.lumps[2].edges ==
          std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {3, 3}});
    CHECK(tree.lumps[2].children == std::vector<std::size_t>{1});
    CHECK(tree.top_level == std::vector<std::size_t>{0, 2});
}

TEST_CASE("new edge into an existing lump is rejected") {
    // after the cycle 0 1 2 0 closes, a new edge into state 2 is the pruned
    // configuration
    CHECK_THROWS_AS(build_lump_tree({0, 1, 2, 0, 2}), LumpRuleViolation);

    // and the exchange argument really does produce a second accepting walk
    anc::Nfa m = anc::induced_nfa(anc::Word::parse("0110"), {0, 1, 2, 0, 2});
    CHECK(anc::count_accepting_paths(m, 4) == 2);

    // self-loop on the lump base state is likewise a new edge into the lump
    CHECK_THROWS_AS(build_lump_tree({0, 1, 2, 0, 0}), LumpRuleViolation);
    anc::Nfa m2 = anc::induced_nfa(anc::Word::parse("0110"), {0, 1, 2, 0, 0});
    CHECK(anc::count_accepting_paths(m2, 4) >= 2);
}

TEST_CASE("non-canonical runs are rejected") {
    CHECK_THROWS_AS(build_lump_tree({0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(build_lump_tree({1, 0}), std::invalid_argument);
}

TEST_CASE("admissible extensions") {
    LumpTree empty_tree;
    CHECK(anc::admissible_extensions({0}, empty_tree, 3) == std::set<int>{0, 1});
    CHECK(anc::admissible_extensions({0, 1, 2}, build_lump_tree({0, 1, 2}), 3) ==
          std::set<int>{0, 1, 2});

    // after closing the lump on 0 1 2 0: reuse of 0->1 stays legal, new
    // edges into the lump are not, and a fresh state is available at 4
    LumpTree tree = build_lump_tree({0, 1, 2, 0});
    CHECK(anc::admissible_extensions({0, 1, 2, 0}, tree, 3) == std::set<int>{1});
    CHECK(anc::admissible_extensions({0, 1, 2, 0}, tree, 4) == std::set<int>{1, 3});
}

TEST_CASE("every search witness run admits a lump tree") {
    anc::ComplexitySearcher searcher;
    for (int n = 1; n <= 7; ++n) {
        for (std::uint64_t v = 0; v < (1ull << n); ++v) {
            anc::WitnessResult w =
                searcher.complexity(anc::Word::from_bits(v, n));
            CHECK_NOTHROW(build_lump_tree(w.run));
        }
    }
}
