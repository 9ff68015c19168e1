#include <catch2/catch_amalgamated.hpp>

#include "anc/dot.hpp"
#include "fixtures.hpp"

using anc::Nfa;

namespace {

std::size_t count_lines_containing(const std::string& text, const std::string& needle) {
    std::size_t count = 0, pos = 0;
    while ((pos = text.find(needle, pos)) != std::string::npos) {
        ++count;
        pos += needle.size();
    }
    return count;
}

} // namespace

TEST_CASE("dot export of a one-state loop") {
    Nfa loop(1, 0, 0, {{0, 0, 0}});
    std::string dot = anc::export_dot(loop);
    CHECK(dot.find("q0 -> q0 [label=\"0\"]") != std::string::npos);
    CHECK(dot.find("doublecircle") != std::string::npos);
    CHECK(dot.find("__start -> q0") != std::string::npos);
}

TEST_CASE("dot export is deterministic") {
    Nfa m = fixtures::two_cycle_witness();
    CHECK(anc::export_dot(m) == anc::export_dot(m));

    // same automaton assembled in a different transition order
    auto shuffled = m.transitions;
    std::reverse(shuffled.begin(), shuffled.end());
    Nfa m2(m.state_count, m.initial, m.accepting, shuffled);
    CHECK(anc::export_dot(m2) == anc::export_dot(m));
}

TEST_CASE("dot export of the two-cycle witness") {
    Nfa m = fixtures::two_cycle_witness();
    std::string dot = anc::export_dot(m);
    // 14 transition edges plus the start stub
    CHECK(count_lines_containing(dot, " -> ") == 15);
    for (int s = 0; s < 11; ++s)
        CHECK(dot.find("q" + std::to_string(s) + " [label=") != std::string::npos);
}

TEST_CASE("dot export highlights a run") {
    Nfa cycle(2, 0, 1, {{0, 0, 1}, {1, 1, 0}});
    std::string plain = anc::export_dot(cycle);
    std::string hot = anc::export_dot(cycle, {0, 1, 0, 1});
    CHECK(plain.find("color=red") == std::string::npos);
    CHECK(count_lines_containing(hot, "color=red") == 2);
}
